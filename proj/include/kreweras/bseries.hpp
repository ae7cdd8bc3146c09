#pragma once

#include <map>
#include <utility>
#include <vector>

#include "kreweras/tseries.hpp"

namespace kreweras {

/// Bivariate Laurent polynomial in x, y over Rat.
class BPoly {
public:
    using Key = std::pair<int, int>;  // (x-exponent, y-exponent)
    using Map = std::map<Key, Rat>;

    BPoly() = default;
    BPoly(const Rat& c) { set(0, 0, c); }
    static BPoly monomial(const Rat& c, int i, int j) {
        BPoly p;
        p.set(i, j, c);
        return p;
    }

    bool zero() const { return terms_.empty(); }
    const Map& terms() const { return terms_; }
    Rat coeff(int i, int j) const {
        auto it = terms_.find({i, j});
        return it == terms_.end() ? Rat(0) : it->second;
    }
    void set(int i, int j, const Rat& c) {
        if (c == 0)
            terms_.erase({i, j});
        else
            terms_[{i, j}] = c;
    }
    void add(int i, int j, const Rat& c) { set(i, j, coeff(i, j) + c); }

    BPoly& operator+=(const BPoly& o);
    BPoly& operator-=(const BPoly& o);
    friend BPoly operator+(BPoly a, const BPoly& b) { return a += b; }
    friend BPoly operator-(BPoly a, const BPoly& b) { return a -= b; }
    friend BPoly operator*(const BPoly& a, const BPoly& b);

    BPoly scaled(const Rat& c) const;
    BPoly swapped_xy() const;
    /// x := a*x, y := b*y (a, b nonzero when negative exponents occur).
    BPoly vars_scaled(const Rat& a, const Rat& b) const;

    friend bool operator==(const BPoly& a, const BPoly& b) { return a.terms_ == b.terms_; }
    std::string str() const;

private:
    Map terms_;
};

/// Truncated series in t with bivariate Laurent-polynomial coefficients,
/// with the same reliable-window bookkeeping as TSeries.
class BSeries {
public:
    BSeries() = default;

    static BSeries zero(int order);
    static BSeries monomial(const BPoly& c, int t_exp, int end);
    /// Embed a TSeries whose LPoly coefficients are read as powers of x
    /// (use_y = false) or of y (use_y = true).
    static BSeries embed(const TSeries& s, bool use_y);

    int valuation() const { return val_; }
    int order() const { return static_cast<int>(c_.size()); }
    int end() const { return val_ + order(); }
    bool is_zero() const;
    const BPoly& coeff(int e) const;
    Rat coeff(int t_exp, int i, int j) const { return coeff(t_exp).coeff(i, j); }

    BSeries truncated(int new_end) const;
    BSeries shifted_t(int k) const;

    BSeries& operator+=(const BSeries& o);
    BSeries& operator-=(const BSeries& o);
    friend BSeries operator+(BSeries a, const BSeries& b) { return a += b; }
    friend BSeries operator-(BSeries a, const BSeries& b) { return a -= b; }
    friend BSeries operator*(const BSeries& a, const BSeries& b);

    BSeries scaled(const Rat& c) const;
    BSeries scaled(const BPoly& c) const;
    BSeries swapped_xy() const;
    BSeries vars_scaled(const Rat& a, const Rat& b) const;

    /// The y-degree-0 slice, as a TSeries in t with x-Laurent coefficients.
    TSeries y_slice0() const;
    /// Diagonal: sum over i of [x^i y^i] mapped to x^i.
    TSeries diagonal() const;

private:
    int val_ = 0;
    std::vector<BPoly> c_;
    int effective_val() const;
    void canonicalize();
};

bool agree(const BSeries& a, const BSeries& b, int upto);
std::optional<std::pair<int, std::string>> first_mismatch(const BSeries& a,
                                                          const BSeries& b, int upto);

}  // namespace kreweras

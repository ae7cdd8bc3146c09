#pragma once

#include <map>
#include <string>

#include "kreweras/rat.hpp"

namespace kreweras {

enum class XPart { positive, negative, nonnegative, nonpositive };

/// Laurent polynomial in one formal variable x over Rat.
/// Invariant: no explicitly stored zero coefficient.
class LPoly {
public:
    using Map = std::map<int, Rat>;

    LPoly() = default;
    LPoly(int c) { set(0, c); }
    LPoly(const Rat& c) { set(0, c); }
    static LPoly monomial(const Rat& c, int e) {
        LPoly p;
        p.set(e, c);
        return p;
    }

    bool zero() const { return terms_.empty(); }
    const Map& terms() const { return terms_; }

    Rat coeff(int e) const {
        auto it = terms_.find(e);
        return it == terms_.end() ? Rat(0) : it->second;
    }
    void set(int e, const Rat& c) {
        if (c == 0)
            terms_.erase(e);
        else
            terms_[e] = c;
    }
    void add(int e, const Rat& c) { set(e, coeff(e) + c); }

    int min_exp() const {
        if (zero()) throw std::domain_error("LPoly::min_exp of zero");
        return terms_.begin()->first;
    }
    int max_exp() const {
        if (zero()) throw std::domain_error("LPoly::max_exp of zero");
        return terms_.rbegin()->first;
    }
    /// True for the zero polynomial or a pure x^0 term.
    bool constant() const {
        return zero() || (terms_.size() == 1 && terms_.begin()->first == 0);
    }
    Rat constant_value() const { return coeff(0); }

    LPoly& operator+=(const LPoly& o);
    LPoly& operator-=(const LPoly& o);
    friend LPoly operator+(LPoly a, const LPoly& b) { return a += b; }
    friend LPoly operator-(LPoly a, const LPoly& b) { return a -= b; }
    friend LPoly operator*(const LPoly& a, const LPoly& b);
    LPoly operator-() const { return scaled(-1); }

    LPoly scaled(const Rat& c) const;
    LPoly shifted(int k) const;  // multiply by x^k
    LPoly part(XPart mode) const;

    /// Exact division by c*x^e; throws if any term is not divisible.
    LPoly divided_by_monomial(const Rat& c, int e) const;

    /// Substitute x := c (c != 0 if negative exponents occur).
    Rat eval(const Rat& c) const;

    friend bool operator==(const LPoly& a, const LPoly& b) { return a.terms_ == b.terms_; }

    std::string str() const;

private:
    Map terms_;
};

}  // namespace kreweras

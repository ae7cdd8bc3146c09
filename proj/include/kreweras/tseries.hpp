#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "kreweras/lpoly.hpp"

namespace kreweras {

/// Truncated Laurent series in t with LPoly coefficients.
///
/// The series is known exactly for all t-exponents below end(). Stored
/// coefficients cover [valuation(), end()); everything below the valuation is
/// exactly zero. Binary operations align valuations and truncate to the
/// shorter reliable window, so the reliable order of a result is never
/// overstated.
class TSeries {
public:
    TSeries() = default;  // zero, empty window

    static TSeries zero(int order);
    static TSeries constant(const Rat& v, int order);
    /// c * t^t_exp, reliable up to (excluding) `end`.
    static TSeries monomial(const LPoly& c, int t_exp, int end);
    /// Power series from explicit t^0.. coefficients, reliable up to `end`.
    static TSeries from_coeffs(std::vector<LPoly> coeffs, int end);

    int valuation() const { return val_; }
    int order() const { return static_cast<int>(c_.size()); }
    int end() const { return val_ + order(); }
    bool is_zero() const;

    /// Coefficient of t^e; zero below the valuation, throws at or beyond end().
    const LPoly& coeff(int e) const;

    TSeries truncated(int new_end) const;
    TSeries shifted_t(int k) const;  // multiply by t^k

    TSeries& operator+=(const TSeries& o);
    TSeries& operator-=(const TSeries& o);
    friend TSeries operator+(TSeries a, const TSeries& b) { return a += b; }
    friend TSeries operator-(TSeries a, const TSeries& b) { return a -= b; }
    friend TSeries operator*(const TSeries& a, const TSeries& b);
    TSeries operator-() const { return scaled(Rat(-1)); }

    TSeries scaled(const Rat& c) const;
    TSeries scaled(const LPoly& c) const;

    TSeries x_part(XPart mode) const;

    /// Substitute x := c * t^k. `x_exp_bound` is a structural bound on the
    /// x-exponents of the (unseen) tail: a lower bound when k > 0, an upper
    /// bound when k < 0. Without it the observed exponents are used and the
    /// reliable window is never extended.
    TSeries substitute_monomial(const Rat& c, int k,
                                std::optional<int> x_exp_bound = std::nullopt) const;

    std::string str(int max_terms = 16) const;

private:
    int val_ = 0;
    std::vector<LPoly> c_;
    // valuation used for product bookkeeping: end() for the zero series
    int effective_val() const;
    void canonicalize();
};

TSeries invert(const TSeries& a);
TSeries sqrt_series(const TSeries& a);
TSeries pow_series(const TSeries& a, int e);

/// Unique fixed point u = phi(u) of a t-adically contracting map.
TSeries solve_valuation_fixed_point(const std::function<TSeries(const TSeries&)>& phi,
                                    int order);

/// Substitute x := g into f, whose coefficients must be polynomials in x.
TSeries compose_x(const TSeries& f, const TSeries& g);

/// The t-series of the x^m coefficient of s (coefficients constant in x).
TSeries x_coefficient(const TSeries& s, int m);

/// True iff a and b coincide on all t-exponents below `upto`; requires both
/// windows to reach that far.
bool agree(const TSeries& a, const TSeries& b, int upto);

/// First t-exponent below `upto` where a and b differ, with a description.
std::optional<std::pair<int, std::string>> first_mismatch(const TSeries& a,
                                                          const TSeries& b, int upto);

}  // namespace kreweras

#include "kreweras/tseries.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace kreweras {

namespace {
const LPoly kZeroPoly;
}

TSeries TSeries::zero(int order) {
    TSeries s;
    s.val_ = 0;
    s.c_.assign(std::max(order, 0), LPoly());
    return s;
}

TSeries TSeries::constant(const Rat& v, int order) {
    return monomial(LPoly(v), 0, order);
}

TSeries TSeries::monomial(const LPoly& c, int t_exp, int end) {
    TSeries s;
    s.val_ = t_exp;
    if (end <= t_exp || c.zero()) return zero(end);
    s.c_.assign(end - t_exp, LPoly());
    s.c_[0] = c;
    return s;
}

TSeries TSeries::from_coeffs(std::vector<LPoly> coeffs, int end) {
    TSeries s;
    s.val_ = 0;
    s.c_ = std::move(coeffs);
    s.c_.resize(std::max(end, 0));
    s.canonicalize();
    return s;
}

bool TSeries::is_zero() const {
    for (const auto& p : c_)
        if (!p.zero()) return false;
    return true;
}

int TSeries::effective_val() const { return is_zero() ? end() : val_; }

void TSeries::canonicalize() {
    while (!c_.empty() && c_.front().zero()) {
        c_.erase(c_.begin());
        ++val_;
    }
    if (c_.empty() || is_zero()) {
        int e = end();
        val_ = 0;
        c_.assign(std::max(e, 0), LPoly());
    }
}

const LPoly& TSeries::coeff(int e) const {
    if (e >= end())
        throw std::out_of_range("TSeries: coefficient of t^" + std::to_string(e) +
                                " beyond reliable window (end " + std::to_string(end()) + ")");
    if (e < val_) return kZeroPoly;
    return c_[e - val_];
}

TSeries TSeries::truncated(int new_end) const {
    if (new_end >= end()) return *this;
    TSeries s;
    s.val_ = val_;
    if (new_end > val_) s.c_.assign(c_.begin(), c_.begin() + (new_end - val_));
    if (s.c_.empty()) return zero(new_end);
    s.canonicalize();
    return s;
}

TSeries TSeries::shifted_t(int k) const {
    TSeries s = *this;
    if (!s.c_.empty()) s.val_ += k;
    return s;
}

TSeries& TSeries::operator+=(const TSeries& o) {
    int nend = std::min(end(), o.end());
    int nval = std::min(val_, o.val_);
    TSeries r;
    r.val_ = nval;
    r.c_.assign(std::max(nend - nval, 0), LPoly());
    for (int e = nval; e < nend; ++e) {
        LPoly s;
        if (e >= val_ && e < end()) s += c_[e - val_];
        if (e >= o.val_ && e < o.end()) s += o.c_[e - o.val_];
        r.c_[e - nval] = std::move(s);
    }
    r.canonicalize();
    *this = std::move(r);
    return *this;
}

TSeries& TSeries::operator-=(const TSeries& o) { return *this += o.scaled(Rat(-1)); }

TSeries operator*(const TSeries& a, const TSeries& b) {
    int nend = std::min(a.end() + b.effective_val(), b.end() + a.effective_val());
    if (a.is_zero() || b.is_zero()) return TSeries::zero(nend);
    int nval = a.val_ + b.val_;
    TSeries r;
    r.val_ = nval;
    r.c_.assign(std::max(nend - nval, 0), LPoly());
    for (int i = 0; i < a.order(); ++i) {
        if (a.c_[i].zero()) continue;
        for (int j = 0; j < b.order(); ++j) {
            if (b.c_[j].zero()) continue;
            int e = a.val_ + i + b.val_ + j;
            if (e >= nend) break;
            r.c_[e - nval] += a.c_[i] * b.c_[j];
        }
    }
    r.canonicalize();
    return r;
}

TSeries TSeries::scaled(const Rat& c) const { return scaled(LPoly(c)); }

TSeries TSeries::scaled(const LPoly& c) const {
    if (c.zero()) return zero(end());
    TSeries r = *this;
    for (auto& p : r.c_) p = p * c;
    r.canonicalize();
    return r;
}

TSeries TSeries::x_part(XPart mode) const {
    TSeries r = *this;
    for (auto& p : r.c_) p = p.part(mode);
    r.canonicalize();
    return r;
}

TSeries TSeries::substitute_monomial(const Rat& c, int k,
                                     std::optional<int> x_exp_bound) const {
    if (c == 0) throw std::invalid_argument("substitute_monomial: c must be nonzero");
    if (is_zero() && k == 0) return zero(end());

    int new_end = end();
    if (k != 0) {
        std::optional<int> observed;
        for (const auto& p : c_) {
            if (p.zero()) continue;
            int e = k > 0 ? p.min_exp() : p.max_exp();
            observed = observed ? (k > 0 ? std::min(*observed, e) : std::max(*observed, e))
                                : e;
        }
        int bound;
        if (x_exp_bound) {
            bound = *x_exp_bound;
        } else {
            bound = observed.value_or(0);
            // without a structural bound, never extend the window
            if (k > 0 && bound > 0) bound = 0;
            if (k < 0 && bound < 0) bound = 0;
        }
        new_end = end() + k * bound;
    }

    std::map<int, Rat> out;
    bool had_terms = false;
    for (int i = 0; i < order(); ++i) {
        for (const auto& [e, v] : c_[i].terms()) {
            had_terms = true;
            int texp = val_ + i + k * e;
            if (texp >= new_end) continue;
            auto [it, inserted] = out.emplace(texp, v * rat_pow(c, e));
            if (!inserted) it->second += v * rat_pow(c, e);
        }
    }
    if (had_terms && out.empty() && new_end <= val_)
        throw std::runtime_error(
            "substitute_monomial: no reliable coefficients remain (window shrank to t^" +
            std::to_string(new_end) + "); recompute the input at higher order");
    TSeries r;
    if (out.empty()) return zero(new_end);
    r.val_ = out.begin()->first;
    r.c_.assign(new_end - r.val_, LPoly());
    for (const auto& [e, v] : out)
        if (v != 0) r.c_[e - r.val_].set(0, v);
    r.canonicalize();
    return r;
}

TSeries invert(const TSeries& a) {
    if (a.is_zero() || a.order() == 0)
        throw std::domain_error("invert: zero series");
    const LPoly& lead = a.coeff(a.valuation());
    if (!lead.constant())
        throw std::domain_error("invert: leading coefficient depends on x: " + lead.str());
    Rat l0 = lead.constant_value();
    int n = a.order();
    std::vector<LPoly> b(n);
    Rat inv_l0 = Rat(1) / l0;
    b[0] = LPoly(inv_l0);
    for (int j = 1; j < n; ++j) {
        LPoly s;
        for (int i = 1; i <= j; ++i) s += a.coeff(a.valuation() + i) * b[j - i];
        b[j] = s.scaled(-inv_l0);
    }
    TSeries r = TSeries::from_coeffs(std::move(b), n);
    return r.shifted_t(-a.valuation());
}

TSeries sqrt_series(const TSeries& a) {
    if (a.is_zero()) return TSeries::zero(a.end());
    if (a.valuation() % 2 != 0)
        throw std::domain_error("sqrt_series: odd t-valuation");
    const LPoly& lead = a.coeff(a.valuation());
    if (!lead.constant())
        throw std::domain_error("sqrt_series: leading coefficient depends on x");
    Rat root;
    if (!rat_sqrt(lead.constant_value(), root))
        throw std::domain_error("sqrt_series: leading coefficient " +
                                rat_str(lead.constant_value()) + " is not a rational square");
    int half_val = a.valuation() / 2;
    int res_end = a.end() - half_val;
    // Newton iteration b <- (b + a/b)/2, starting from the leading monomial.
    TSeries b = TSeries::monomial(LPoly(root), half_val, res_end);
    for (int it = 0; it < 64; ++it) {
        TSeries next = (b + a * invert(b)).scaled(Rat(1, 2)).truncated(res_end);
        if (agree(next, b, std::min(next.end(), b.end())) && next.end() >= res_end) {
            b = next;
            break;
        }
        b = next;
    }
    if (!agree(b * b, a, std::min((b * b).end(), a.end())))
        throw std::runtime_error("sqrt_series: Newton iteration failed to converge");
    return b;
}

TSeries pow_series(const TSeries& a, int e) {
    if (e < 0) return invert(pow_series(a, -e));
    TSeries r = TSeries::constant(1, a.end());
    for (int i = 0; i < e; ++i) r = r * a;
    return r;
}

TSeries solve_valuation_fixed_point(const std::function<TSeries(const TSeries&)>& phi,
                                    int order) {
    TSeries u = TSeries::zero(order);
    int last_progress = INT32_MIN;
    for (int it = 0; it <= order + 2; ++it) {
        TSeries v = phi(u).truncated(order);
        TSeries diff = v - u;
        int win = std::min(diff.end(), order);
        if (diff.truncated(win).is_zero() && v.end() >= order) return v;
        int progress = diff.is_zero() ? diff.end() : diff.valuation();
        if (progress <= last_progress)
            throw std::runtime_error(
                "solve_valuation_fixed_point: update is not contracting (no valuation "
                "progress at t^" + std::to_string(progress) + ")");
        last_progress = progress;
        u = std::move(v);
    }
    throw std::runtime_error("solve_valuation_fixed_point: did not converge");
}

TSeries compose_x(const TSeries& f, const TSeries& g) {
    TSeries result = TSeries::zero(f.end());
    for (int m = f.valuation(); m < f.end(); ++m) {
        const LPoly& layer = f.coeff(m);
        if (layer.zero()) continue;
        if (layer.min_exp() < 0)
            throw std::domain_error("compose_x: coefficient has negative x-exponent");
        int deg = layer.max_exp();
        TSeries h = TSeries::constant(layer.coeff(deg), g.end());
        for (int k = deg - 1; k >= 0; --k)
            h = h * g + TSeries::constant(layer.coeff(k), g.end());
        result += h.shifted_t(m).truncated(result.end());
    }
    return result;
}

TSeries x_coefficient(const TSeries& s, int m) {
    TSeries r = TSeries::zero(s.end());
    for (int e = s.valuation(); e < s.end(); ++e) {
        Rat c = s.coeff(e).coeff(m);
        if (c != 0) r += TSeries::monomial(LPoly(c), e, s.end());
    }
    return r;
}

bool agree(const TSeries& a, const TSeries& b, int upto) {
    return !first_mismatch(a, b, upto).has_value();
}

std::optional<std::pair<int, std::string>> first_mismatch(const TSeries& a,
                                                          const TSeries& b, int upto) {
    if (a.end() < upto || b.end() < upto)
        throw std::out_of_range("series comparison beyond reliable window (ends " +
                                std::to_string(a.end()) + ", " + std::to_string(b.end()) +
                                ", want " + std::to_string(upto) + ")");
    int lo = std::min(a.valuation(), b.valuation());
    for (int e = lo; e < upto; ++e) {
        if (!(a.coeff(e) == b.coeff(e))) {
            return std::make_pair(
                e, "t^" + std::to_string(e) + ": " + a.coeff(e).str() + " vs " +
                       b.coeff(e).str());
        }
    }
    return std::nullopt;
}

std::string TSeries::str(int max_terms) const {
    std::ostringstream os;
    int printed = 0;
    for (int e = val_; e < end() && printed < max_terms; ++e) {
        if (coeff(e).zero()) continue;
        if (printed) os << " + ";
        os << "(" << coeff(e).str() << ")*t^" << e;
        ++printed;
    }
    if (printed == 0) os << "0";
    os << " + O(t^" << end() << ")";
    return os.str();
}

}  // namespace kreweras

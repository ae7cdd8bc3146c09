#include "kreweras/bseries.hpp"

#include <algorithm>
#include <sstream>

namespace kreweras {

namespace {
const BPoly kZeroBPoly;
}

BPoly& BPoly::operator+=(const BPoly& o) {
    for (const auto& [k, c] : o.terms_) add(k.first, k.second, c);
    return *this;
}

BPoly& BPoly::operator-=(const BPoly& o) {
    for (const auto& [k, c] : o.terms_) add(k.first, k.second, -c);
    return *this;
}

BPoly operator*(const BPoly& a, const BPoly& b) {
    BPoly r;
    for (const auto& [ka, ca] : a.terms_)
        for (const auto& [kb, cb] : b.terms_)
            r.add(ka.first + kb.first, ka.second + kb.second, ca * cb);
    return r;
}

BPoly BPoly::scaled(const Rat& c) const {
    BPoly r;
    if (c == 0) return r;
    for (const auto& [k, v] : terms_) r.terms_[k] = v * c;
    return r;
}

BPoly BPoly::swapped_xy() const {
    BPoly r;
    for (const auto& [k, v] : terms_) r.terms_[{k.second, k.first}] = v;
    return r;
}

BPoly BPoly::vars_scaled(const Rat& a, const Rat& b) const {
    BPoly r;
    for (const auto& [k, v] : terms_)
        r.add(k.first, k.second, v * rat_pow(a, k.first) * rat_pow(b, k.second));
    return r;
}

std::string BPoly::str() const {
    if (zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [k, v] : terms_) {
        if (!first) os << " + ";
        first = false;
        os << rat_str(v) << "*x^" << k.first << "*y^" << k.second;
    }
    return os.str();
}

BSeries BSeries::zero(int order) {
    BSeries s;
    s.c_.assign(std::max(order, 0), BPoly());
    return s;
}

BSeries BSeries::monomial(const BPoly& c, int t_exp, int end) {
    BSeries s;
    s.val_ = t_exp;
    if (end <= t_exp || c.zero()) return zero(end);
    s.c_.assign(end - t_exp, BPoly());
    s.c_[0] = c;
    return s;
}

BSeries BSeries::embed(const TSeries& s, bool use_y) {
    BSeries r;
    r.val_ = s.valuation();
    r.c_.assign(s.order(), BPoly());
    for (int e = s.valuation(); e < s.end(); ++e)
        for (const auto& [xe, v] : s.coeff(e).terms())
            r.c_[e - r.val_].set(use_y ? 0 : xe, use_y ? xe : 0, v);
    r.canonicalize();
    return r;
}

bool BSeries::is_zero() const {
    for (const auto& p : c_)
        if (!p.zero()) return false;
    return true;
}

int BSeries::effective_val() const { return is_zero() ? end() : val_; }

void BSeries::canonicalize() {
    while (!c_.empty() && c_.front().zero()) {
        c_.erase(c_.begin());
        ++val_;
    }
    if (c_.empty() || is_zero()) {
        int e = end();
        val_ = 0;
        c_.assign(std::max(e, 0), BPoly());
    }
}

const BPoly& BSeries::coeff(int e) const {
    if (e >= end())
        throw std::out_of_range("BSeries: coefficient of t^" + std::to_string(e) +
                                " beyond reliable window (end " + std::to_string(end()) + ")");
    if (e < val_) return kZeroBPoly;
    return c_[e - val_];
}

BSeries BSeries::truncated(int new_end) const {
    if (new_end >= end()) return *this;
    BSeries s;
    s.val_ = val_;
    if (new_end > val_) s.c_.assign(c_.begin(), c_.begin() + (new_end - val_));
    if (s.c_.empty()) return zero(new_end);
    s.canonicalize();
    return s;
}

BSeries BSeries::shifted_t(int k) const {
    BSeries s = *this;
    if (!s.c_.empty()) s.val_ += k;
    return s;
}

BSeries& BSeries::operator+=(const BSeries& o) {
    int nend = std::min(end(), o.end());
    int nval = std::min(val_, o.val_);
    BSeries r;
    r.val_ = nval;
    r.c_.assign(std::max(nend - nval, 0), BPoly());
    for (int e = nval; e < nend; ++e) {
        BPoly s;
        if (e >= val_ && e < end()) s += c_[e - val_];
        if (e >= o.val_ && e < o.end()) s += o.c_[e - o.val_];
        r.c_[e - nval] = std::move(s);
    }
    r.canonicalize();
    *this = std::move(r);
    return *this;
}

BSeries& BSeries::operator-=(const BSeries& o) { return *this += o.scaled(Rat(-1)); }

BSeries operator*(const BSeries& a, const BSeries& b) {
    int nend = std::min(a.end() + b.effective_val(), b.end() + a.effective_val());
    if (a.is_zero() || b.is_zero()) return BSeries::zero(nend);
    int nval = a.val_ + b.val_;
    BSeries r;
    r.val_ = nval;
    r.c_.assign(std::max(nend - nval, 0), BPoly());
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

BSeries BSeries::scaled(const Rat& c) const { return scaled(BPoly(c)); }

BSeries BSeries::scaled(const BPoly& c) const {
    if (c.zero()) return zero(end());
    BSeries r = *this;
    for (auto& p : r.c_) p = p * c;
    r.canonicalize();
    return r;
}

BSeries BSeries::swapped_xy() const {
    BSeries r = *this;
    for (auto& p : r.c_) p = p.swapped_xy();
    return r;
}

BSeries BSeries::vars_scaled(const Rat& a, const Rat& b) const {
    BSeries r = *this;
    for (auto& p : r.c_) p = p.vars_scaled(a, b);
    return r;
}

TSeries BSeries::y_slice0() const {
    TSeries r = TSeries::zero(end());
    for (int e = val_; e < end(); ++e) {
        LPoly layer;
        for (const auto& [k, v] : coeff(e).terms())
            if (k.second == 0) layer.set(k.first, v);
        if (!layer.zero()) r += TSeries::monomial(layer, e, end());
    }
    return r;
}

TSeries BSeries::diagonal() const {
    TSeries r = TSeries::zero(end());
    for (int e = val_; e < end(); ++e) {
        LPoly layer;
        for (const auto& [k, v] : coeff(e).terms())
            if (k.first == k.second) layer.set(k.first, v);
        if (!layer.zero()) r += TSeries::monomial(layer, e, end());
    }
    return r;
}

bool agree(const BSeries& a, const BSeries& b, int upto) {
    return !first_mismatch(a, b, upto).has_value();
}

std::optional<std::pair<int, std::string>> first_mismatch(const BSeries& a,
                                                          const BSeries& b, int upto) {
    if (a.end() < upto || b.end() < upto)
        throw std::out_of_range("BSeries comparison beyond reliable window");
    int lo = std::min(a.valuation(), b.valuation());
    for (int e = lo; e < upto; ++e) {
        if (!(a.coeff(e) == b.coeff(e))) {
            BPoly d = a.coeff(e) - b.coeff(e);
            auto& [k, v] = *d.terms().begin();
            return std::make_pair(e, "t^" + std::to_string(e) + " x^" +
                                         std::to_string(k.first) + " y^" +
                                         std::to_string(k.second) + ": diff " + rat_str(v));
        }
    }
    return std::nullopt;
}

}  // namespace kreweras

#include "kreweras/lpoly.hpp"

#include <sstream>

namespace kreweras {

LPoly& LPoly::operator+=(const LPoly& o) {
    for (const auto& [e, c] : o.terms_) add(e, c);
    return *this;
}

LPoly& LPoly::operator-=(const LPoly& o) {
    for (const auto& [e, c] : o.terms_) add(e, -c);
    return *this;
}

LPoly operator*(const LPoly& a, const LPoly& b) {
    LPoly r;
    for (const auto& [ea, ca] : a.terms_)
        for (const auto& [eb, cb] : b.terms_) r.add(ea + eb, ca * cb);
    return r;
}

LPoly LPoly::scaled(const Rat& c) const {
    LPoly r;
    if (c == 0) return r;
    for (const auto& [e, v] : terms_) r.terms_[e] = v * c;
    return r;
}

LPoly LPoly::shifted(int k) const {
    LPoly r;
    for (const auto& [e, v] : terms_) r.terms_[e + k] = v;
    return r;
}

LPoly LPoly::part(XPart mode) const {
    LPoly r;
    for (const auto& [e, v] : terms_) {
        bool keep = false;
        switch (mode) {
            case XPart::positive: keep = e > 0; break;
            case XPart::negative: keep = e < 0; break;
            case XPart::nonnegative: keep = e >= 0; break;
            case XPart::nonpositive: keep = e <= 0; break;
        }
        if (keep) r.terms_[e] = v;
    }
    return r;
}

LPoly LPoly::divided_by_monomial(const Rat& c, int e) const {
    if (c == 0) throw std::domain_error("LPoly: division by zero monomial");
    return shifted(-e).scaled(Rat(1) / c);
}

Rat LPoly::eval(const Rat& c) const {
    Rat r = 0;
    for (const auto& [e, v] : terms_) r += v * rat_pow(c, e);
    return r;
}

std::string LPoly::str() const {
    if (zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, v] : terms_) {
        if (!first) os << " + ";
        first = false;
        os << rat_str(v);
        if (e != 0) os << "*x^" << e;
    }
    return os.str();
}

}  // namespace kreweras

#include "kreweras/series_json.hpp"

namespace kreweras {

using nlohmann::json;

json to_json(const TSeries& s) {
    json coeffs = json::array();
    for (int e = s.valuation(); e < s.end(); ++e) {
        json layer = json::array();
        for (const auto& [xe, v] : s.coeff(e).terms())
            layer.push_back(json::array({json::array({xe}), rat_str(v)}));
        coeffs.push_back(layer);
    }
    return json{{"valuation", s.valuation()}, {"coeffs", coeffs}};
}

json to_json(const BSeries& s) {
    json coeffs = json::array();
    for (int e = s.valuation(); e < s.end(); ++e) {
        json layer = json::array();
        for (const auto& [k, v] : s.coeff(e).terms())
            layer.push_back(json::array({json::array({k.first, k.second}), rat_str(v)}));
        coeffs.push_back(layer);
    }
    return json{{"valuation", s.valuation()}, {"coeffs", coeffs}};
}

TSeries tseries_from_json(const json& j) {
    int val = j.at("valuation").get<int>();
    const json& coeffs = j.at("coeffs");
    TSeries r = TSeries::zero(val + static_cast<int>(coeffs.size()));
    int e = val;
    for (const auto& layer : coeffs) {
        LPoly p;
        for (const auto& term : layer)
            p.add(term.at(0).at(0).get<int>(), parse_rat(term.at(1).get<std::string>()));
        if (!p.zero()) r += TSeries::monomial(p, e, val + static_cast<int>(coeffs.size()));
        ++e;
    }
    return r;
}

BSeries bseries_from_json(const json& j) {
    int val = j.at("valuation").get<int>();
    const json& coeffs = j.at("coeffs");
    int end = val + static_cast<int>(coeffs.size());
    BSeries r = BSeries::zero(end);
    int e = val;
    for (const auto& layer : coeffs) {
        BPoly p;
        for (const auto& term : layer)
            p.add(term.at(0).at(0).get<int>(), term.at(0).at(1).get<int>(),
                  parse_rat(term.at(1).get<std::string>()));
        if (!p.zero()) r += BSeries::monomial(p, e, end);
        ++e;
    }
    return r;
}

}  // namespace kreweras

#include "sp6/json_io.hpp"

#include <sstream>
#include <stdexcept>

namespace sp6 {

nlohmann::json weight_to_json(const Weight& w) {
    return nlohmann::json::array({w.k[0], w.k[1], w.k[2]});
}

nlohmann::json gauss_to_json(const GaussRat& g) {
    return {{"re", g.re.str()}, {"im", g.im.str()}};
}

nlohmann::json matrix_to_json(const GaussRatMatrix& m) {
    nlohmann::json rows = nlohmann::json::array();
    for (int r = 0; r < 6; ++r) {
        nlohmann::json row = nlohmann::json::array();
        for (int c = 0; c < 6; ++c) row.push_back(gauss_to_json(m.at(r, c)));
        rows.push_back(std::move(row));
    }
    return rows;
}

nlohmann::json decomp_to_json(const DecompTable& table) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& [hw, mult] : table.entries)  // already descending lex
        arr.push_back({{"hw", weight_to_json(hw)}, {"mult", mult}});
    return arr;
}

std::string root_label(int side, int idx) {
    static const char* names[6] = {"2e1", "2e2", "2e3", "e1+e2", "e1+e3", "e2+e3"};
    if (idx < 0 || idx > 5) throw std::invalid_argument("root index out of range");
    if (side > 0) return names[idx];
    std::string s = names[idx];
    for (std::size_t i = 0; i < s.size(); ++i)
        if (s[i] == '+') s[i] = '-';
    return "-" + s;
}

nlohmann::json wedge_to_json(const WedgeVector& v) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& [idx, c] : v.coeffs) {
        nlohmann::json pos = nlohmann::json::array(), neg = nlohmann::json::array();
        for (int i : idx.pos) pos.push_back(root_label(+1, i));
        for (int i : idx.neg) neg.push_back(root_label(-1, i));
        arr.push_back({{"pos", std::move(pos)}, {"neg", std::move(neg)}, {"coeff", gauss_to_json(c)}});
    }
    return arr;
}

nlohmann::json descriptor_to_json(const DiscreteSeriesDescriptor& d) {
    return {{"index", d.index},
            {"hc_param", weight_to_json(d.hc_param)},
            {"min_ktype", weight_to_json(d.min_ktype)},
            {"hodge", nlohmann::json::array({d.hodge_p, d.hodge_q})},
            {"holomorphic", d.holomorphic},
            {"antiholomorphic", d.antiholomorphic}};
}

nlohmann::json gamma_list_to_json(const GammaFactorList& factors) {
    nlohmann::json arr = nlohmann::json::array();
    for (const GammaFactor& f : factors)
        arr.push_back({{"kind", f.kind == GammaKind::C ? "C" : "R"},
                       {"shift", f.shift},
                       {"exponent", f.exponent}});
    return arr;
}

Weight parse_weight(const std::string& text) {
    Weight w{};
    std::istringstream in(text);
    for (int i = 0; i < 3; ++i) {
        if (!(in >> w.k[static_cast<std::size_t>(i)]))
            throw std::invalid_argument("expected three comma-separated integers, got '" + text + "'");
        if (i < 2) {
            char comma = 0;
            if (!(in >> comma) || comma != ',')
                throw std::invalid_argument("expected three comma-separated integers, got '" + text + "'");
        }
    }
    char extra = 0;
    if (in >> extra)
        throw std::invalid_argument("trailing characters in weight '" + text + "'");
    return w;
}

namespace {

UnitCharLabel label_from_json(const nlohmann::json& j) {
    if (!j.is_object() || !j.contains("m") || !j.contains("r"))
        throw std::invalid_argument("unit label must be an object with keys m and r");
    UnitCharLabel label;
    label.modulus = j.at("m").get<std::int64_t>();
    label.residue = j.at("r").get<std::int64_t>();
    label.normalize();
    return label;
}

SatakeChar char_from_json(const nlohmann::json& j) {
    if (!j.is_object() || !j.contains("value"))
        throw std::invalid_argument("Satake character entry must have a value");
    SatakeChar c;
    const nlohmann::json& v = j.at("value");
    if (v.is_string()) {
        c.exact = true;
        c.exact_value = Rat::parse(v.get<std::string>());
    } else if (v.is_number()) {
        c.exact = false;
        c.float_value = {v.get<double>(), 0.0};
    } else if (v.is_array() && v.size() == 2 && v[0].is_number() && v[1].is_number()) {
        c.exact = false;
        c.float_value = {v[0].get<double>(), v[1].get<double>()};
    } else {
        throw std::invalid_argument(
            "Satake value must be a fraction string, a number, or an [re,im] pair");
    }
    if (j.contains("label")) c.label = label_from_json(j.at("label"));
    return c;
}

}  // namespace

SatakeData satake_from_json(const nlohmann::json& j) {
    if (!j.is_object() || !j.contains("prime") || !j.contains("chi"))
        throw std::invalid_argument("Satake datum must have prime and chi");
    SatakeData d;
    d.prime = j.at("prime").get<std::int64_t>();
    const nlohmann::json& chi = j.at("chi");
    if (!chi.is_array() || chi.size() != 4)
        throw std::invalid_argument("chi must list exactly four characters");
    for (std::size_t i = 0; i < 4; ++i) d.chi[i] = char_from_json(chi[i]);
    d.validate();
    return d;
}

std::vector<SatakeData> satake_list_from_json(const nlohmann::json& j) {
    std::vector<SatakeData> out;
    if (j.is_array()) {
        for (const nlohmann::json& e : j) out.push_back(satake_from_json(e));
    } else {
        out.push_back(satake_from_json(j));
    }
    return out;
}

HodgeNumbers hodge_from_json(const nlohmann::json& j) {
    if (!j.is_object() || !j.contains("h") || !j.contains("h3plus") || !j.contains("h3minus"))
        throw std::invalid_argument("Hodge data must have keys h, h3plus, h3minus");
    const nlohmann::json& h = j.at("h");
    if (!h.is_array() || h.size() != 7)
        throw std::invalid_argument("h must list the seven numbers h(0,6) … h(6,0)");
    HodgeNumbers out;
    for (std::size_t p = 0; p < 7; ++p) out.h[p] = h[p].get<int>();
    out.h3plus = j.at("h3plus").get<int>();
    out.h3minus = j.at("h3minus").get<int>();
    out.validate();
    return out;
}

}  // namespace sp6

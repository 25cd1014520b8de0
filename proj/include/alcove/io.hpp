#ifndef ALCOVE_IO_HPP
#define ALCOVE_IO_HPP

#include <string>
#include <vector>

#include "json.hpp"

#include "alcove/alcove.hpp"
#include "alcove/cyclo.hpp"
#include "alcove/errors.hpp"
#include "alcove/fusion.hpp"
#include "alcove/modular.hpp"

namespace alcove {

using json = nlohmann::json;

inline json toJson(const Cyclotomic& c) {
    json terms = json::array();
    const auto& coeffs = c.coefficients();
    for (size_t i = 0; i < coeffs.size(); ++i)
        if (coeffs[i] != 0) terms.push_back({i, rat_str(coeffs[i])});
    auto z = c.approx();
    return {{"order", c.order()}, {"terms", terms}, {"approx", {z.real(), z.imag()}}};
}

inline Cyclotomic cycloFromJson(const json& j) {
    Int order = j.at("order").get<Int>();
    Cyclotomic out = Cyclotomic::zero(order);
    for (const auto& term : j.at("terms")) {
        Int e = term.at(0).get<Int>();
        Rational coeff(term.at(1).get<std::string>());
        out = out + Cyclotomic::zeta(order, e) * coeff;
    }
    return out;
}

inline std::string weightStr(const Weight& w) {
    std::string s;
    for (size_t i = 0; i < w.size(); ++i) s += (i ? "," : "") + std::to_string(w[i]);
    return s;
}

inline Weight parseWeight(const std::string& s, int rank) {
    Weight w;
    std::string cur;
    for (char ch : s + ",") {
        if (ch == ',') {
            if (cur.empty()) throw parameter_error("bad weight '" + s + "'");
            try {
                w.push_back(std::stoll(cur));
            } catch (const std::exception&) {
                throw parameter_error("bad weight '" + s + "'");
            }
            cur.clear();
        } else {
            cur += ch;
        }
    }
    if (static_cast<int>(w.size()) != rank)
        throw parameter_error("weight '" + s + "' has wrong rank (expected " +
                              std::to_string(rank) + " labels)");
    return w;
}

inline json toJson(const QSpec& q) {
    return {{"type", q.datum.lieType.str()}, {"qNum", q.qNum},    {"qDen", q.qDen},
            {"ell", q.ell},                  {"level", rat_str(q.level)},
            {"validated", q.validated}};
}

inline json toJson(const FusionTable& table) {
    const QSpec& qs = table.alcove.qspec;
    json simples = json::array();
    for (size_t i = 0; i < table.alcove.simples.size(); ++i) {
        const auto& w = table.alcove.simples[i];
        simples.push_back({{"id", i},
                           {"labels", w},
                           {"qdim", toJson(quantumDimension(qs, w))}});
    }
    json fusion = json::array();
    for (const auto& [key, row] : table.coefficients) {
        json cell = json::array();
        for (const auto& [k, n] : row) cell.push_back({k, n});
        fusion.push_back({key.first, key.second, cell});
    }
    return {{"qspec", toJson(qs)}, {"simples", simples}, {"fusion", fusion}};
}

inline FusionTable fusionTableFromJson(const json& j) {
    const auto& jq = j.at("qspec");
    QSpec qs = makeQSpec(buildRootDatum(jq.at("type").get<std::string>()),
                         jq.at("qNum").get<Int>(), jq.at("qDen").get<Int>());
    FusionTable table;
    table.alcove.qspec = qs;
    for (const auto& js : j.at("simples")) {
        Weight w = js.at("labels").get<Weight>();
        table.alcove.index[w] = static_cast<int>(table.alcove.simples.size());
        table.alcove.simples.push_back(std::move(w));
    }
    for (const auto& cell : j.at("fusion")) {
        int i = cell.at(0).get<int>(), jj = cell.at(1).get<int>();
        std::vector<std::pair<int, Int>> row;
        for (const auto& e : cell.at(2)) row.emplace_back(e.at(0).get<int>(), e.at(1).get<Int>());
        table.coefficients[{i, jj}] = std::move(row);
    }
    table.complete = true;
    return table;
}

inline bool sameTable(const FusionTable& a, const FusionTable& b) {
    return a.alcove.simples == b.alcove.simples && a.coefficients == b.coefficients &&
           a.alcove.qspec.key() == b.alcove.qspec.key();
}

inline json toJson(const ModularData& md, bool modular, const std::vector<GaloisData>& galois) {
    json S = json::array();
    for (const auto& row : md.S) {
        json r = json::array();
        for (const auto& v : row) r.push_back(toJson(v));
        S.push_back(r);
    }
    json T = json::array();
    for (const auto& v : md.T) T.push_back(toJson(v));
    json g = json::array();
    for (const auto& gd : galois)
        g.push_back({{"p", gd.p}, {"perm", gd.permutation}, {"signs", gd.signs}});
    return {{"S", S}, {"T", T}, {"modular", modular}, {"galois", g}};
}

}  // namespace alcove

#endif

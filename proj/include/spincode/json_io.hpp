#pragma once

#include "spincode/families.hpp"
#include "spincode/kl_engine.hpp"

#include <nlohmann/json.hpp>

#include <cstdio>
#include <optional>
#include <string>

namespace spincode {

using Json = nlohmann::ordered_json;

namespace detail {

inline std::string amp_str(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

inline Json codeword_json(const std::map<int, double>& amps, const std::map<int, SignedSqrtRational>& exact) {
    Json arr = Json::array();
    for (const auto& [w, a] : amps) {
        Json term;
        term["weight"] = w;
        term["amplitude"] = amp_str(a);
        if (auto it = exact.find(w); it != exact.end())
            term["exact"] = it->second.exact_str();
        arr.push_back(term);
    }
    return arr;
}

} // namespace detail

inline Json group_json(const Irrep& rep) {
    Json g;
    const int degree = effective_degree(rep);
    g["degree"] = degree;
    g["faithful"] = is_faithful(rep);
    g["exotic"] = is_exotic_degree(degree / 2);
    g["generators"] = Json::array({"X", "Z", "Ph(pi/" + std::to_string(rep.b) + ")^" + std::to_string(2 * rep.a - 1)});
    return g;
}

/// Code file schema: n, K, d, group, rep, labeling, codewords (two term
/// lists, weights ascending, amplitudes as 17-significant-digit strings with
/// exact forms when known), residuals.
inline Json code_to_json(const MultiqubitCode& code, const Json& residuals = Json::object()) {
    Json j;
    j["n"] = code.n;
    j["K"] = 2;
    j["d"] = code.d;
    if (code.rep) {
        j["group"] = group_json(*code.rep);
        j["rep"] = Json{{"b", code.rep->b}, {"a", code.rep->a}};
    }
    j["labeling"] = labeling_name(code.labeling);
    j["codewords"] = Json::array(
        {detail::codeword_json(code.amp0, code.exact0), detail::codeword_json(code.amp1, code.exact1)});
    j["residuals"] = residuals;
    return j;
}

inline MultiqubitCode code_from_json(const Json& j) {
    MultiqubitCode code;
    code.n = j.at("n").get<int>();
    if (j.contains("d"))
        code.d = j.at("d").get<int>();
    if (j.contains("rep"))
        code.rep = Irrep(j.at("rep").at("b").get<int>(), j.at("rep").at("a").get<int>());
    if (j.contains("labeling") && j.at("labeling").get<std::string>() == "swapped")
        code.labeling = Labeling::Swapped;
    const auto& words = j.at("codewords");
    if (!words.is_array() || words.size() != 2)
        throw std::invalid_argument("code_from_json: expected two codewords");
    auto parse_word = [](const Json& arr) {
        std::map<int, double> amps;
        for (const auto& term : arr)
            amps[term.at("weight").get<int>()] = std::strtod(term.at("amplitude").get<std::string>().c_str(), nullptr);
        return amps;
    };
    code.amp0 = parse_word(words[0]);
    code.amp1 = parse_word(words[1]);
    return code;
}

/// KLReport schema: conditions (k/q for spin tensors, label for multiqubit
/// errors), max_residual, tolerance, pass.
inline Json kl_report_to_json(const KLReport& report) {
    Json j;
    Json conds = Json::array();
    for (const auto& c : report.conditions) {
        Json e;
        if (c.k >= 0) {
            e["k"] = c.k;
            e["q"] = c.q;
        } else {
            e["label"] = c.label;
        }
        e["kind"] = kind_name(c.kind);
        e["residual"] = c.residual;
        conds.push_back(e);
    }
    j["conditions"] = conds;
    j["max_residual"] = report.max_residual;
    j["tolerance"] = report.tolerance;
    j["pass"] = report.pass;
    return j;
}

inline Json atlas_to_json(const std::vector<AtlasCell>& cells) {
    Json arr = Json::array();
    for (const auto& c : cells)
        arr.push_back(Json{{"b", c.b},
                           {"a", c.a},
                           {"d", c.d},
                           {"n", c.n},
                           {"faithful", c.faithful},
                           {"group_degree", c.group_degree},
                           {"conjectured", c.conjectured},
                           {"group_min", c.group_min}});
    return arr;
}

} // namespace spincode

#include "lgm/serialize.hpp"

namespace lgm {

using nlohmann::json;

json to_json(const LaurentPoly& f) {
    json terms = json::array();
    for (const auto& [exponents, coeff] : f.terms)
        terms.push_back({{"exponents", exponents},
                         {"re", coeff.real()},
                         {"im", coeff.imag()}});
    return terms;
}

LaurentPoly laurent_from_json(const json& j) {
    if (!j.is_array())
        throw ParseError("expected a list of {exponents, re, im} terms");
    LaurentPoly f;
    bool first = true;
    for (const auto& term : j) {
        if (!term.is_object() || !term.contains("exponents") ||
            !term.contains("re") || !term.contains("im") ||
            !term["exponents"].is_array() || !term["re"].is_number() ||
            !term["im"].is_number())
            throw ParseError("malformed term in Laurent polynomial");
        IntVec exponents;
        for (const auto& e : term["exponents"]) {
            if (!e.is_number_integer())
                throw ParseError("non-integer exponent in Laurent polynomial");
            exponents.push_back(e.get<long long>());
        }
        if (first)
            f.dim = (int)exponents.size();
        else if ((int)exponents.size() != f.dim)
            throw ParseError("inconsistent exponent lengths");
        first = false;
        f.add_term(exponents,
                   Cx(term["re"].get<double>(), term["im"].get<double>()));
    }
    return f;
}

json to_json(const CritSet& cs) {
    json points = json::array();
    for (const auto& p : cs.points) {
        json coords = json::array();
        for (const Cx& z : p.coords)
            coords.push_back({z.real(), z.imag()});
        points.push_back({{"coords", coords},
                          {"residual", p.residual},
                          {"min_singular", p.min_singular}});
    }
    return {{"points", points}};
}

CritSet critset_from_json(const json& j) {
    if (!j.is_object() || !j.contains("points") || !j["points"].is_array())
        throw ParseError("expected {points: [...]}");
    CritSet cs;
    for (const auto& jp : j["points"]) {
        if (!jp.is_object() || !jp.contains("coords") ||
            !jp["coords"].is_array())
            throw ParseError("malformed critical point");
        CritPoint p;
        for (const auto& c : jp["coords"]) {
            if (!c.is_array() || c.size() != 2 || !c[0].is_number() ||
                !c[1].is_number())
                throw ParseError("coordinates must be [re, im] pairs");
            p.coords.emplace_back(c[0].get<double>(), c[1].get<double>());
        }
        if (jp.contains("residual")) p.residual = jp["residual"].get<double>();
        if (jp.contains("min_singular"))
            p.min_singular = jp["min_singular"].get<double>();
        cs.points.push_back(std::move(p));
    }
    return cs;
}

json to_json(const MonodromyPermutation& perm,
             const std::vector<std::string>& ray_names) {
    json mapping = json::object();
    for (size_t i = 0; i < perm.mapping.size(); ++i)
        mapping[std::to_string(i)] = perm.mapping[i];
    return {{"divisor", divisor_string(perm.divisor, ray_names)},
            {"epsilon", perm.epsilon},
            {"mapping", mapping},
            {"cycles", index_cycle_string(perm.mapping)}};
}

json to_json(const LabeledQuiver& q) {
    json edges = json::array();
    for (const auto& e : q.edges)
        edges.push_back({{"source", e.source},
                         {"target", e.target},
                         {"label", e.label.coeffs},
                         {"name", e.name}});
    return {{"vertices", q.vertices}, {"edges", edges}};
}

json to_json(const AlignmentReport& report) {
    json divisors = json::array();
    for (const auto& row : report.divisors)
        divisors.push_back({{"divisor", row.divisor_name},
                            {"cycles", row.cycles},
                            {"in_quiver", row.in_quiver},
                            {"has_fixture", row.has_fixture},
                            {"matches_fixture", row.matches_fixture},
                            {"contained", row.contained},
                            {"violations", row.violations}});
    return {{"entry", report.entry_id},
            {"pass", report.pass},
            {"divisors", divisors}};
}

}  // namespace lgm

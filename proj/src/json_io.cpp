#include "riesz/json_io.hpp"

namespace riesz {

Json rational_to_json(const Rational& r) { return r.str(); }

Rational rational_from_json(const Json& j) {
    if (!j.is_string()) throw std::invalid_argument("expected rational string \"p/q\"");
    return Rational::parse(j.get<std::string>());
}

Json vec_to_json(const Vec& v) {
    Json out = Json::array();
    for (const auto& c : v) out.push_back(rational_to_json(c));
    return out;
}

Vec vec_from_json(const Json& j) {
    if (!j.is_array()) throw std::invalid_argument("expected array of rational strings");
    Vec out;
    out.reserve(j.size());
    for (const auto& c : j) out.push_back(rational_from_json(c));
    return out;
}

Json lex_to_json(const LexElement& x) {
    return Json::array({rational_to_json(x.first), rational_to_json(x.second)});
}

LexElement lex_from_json(const Json& j) {
    if (!j.is_array() || j.size() != 2)
        throw std::invalid_argument("expected a two-element array for a lex-plane element");
    return LexElement{rational_from_json(j[0]), rational_from_json(j[1])};
}

Json pl_to_json(const PLFunction& f) {
    Json out;
    out["t"] = vec_to_json(f.breakpoints());
    out["v"] = vec_to_json(f.values());
    return out;
}

PLFunction pl_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("t") || !j.contains("v"))
        throw std::invalid_argument("expected {\"t\": [...], \"v\": [...]}");
    return PLFunction(vec_from_json(j.at("t")), vec_from_json(j.at("v")));
}

Json ideal_to_json(const SupportIdeal& d) {
    Json out;
    out["n"] = d.n;
    out["zero_set"] = d.zero_set;
    return out;
}

SupportIdeal ideal_from_json(const Json& j) {
    SupportIdeal d;
    d.n = j.at("n").get<std::size_t>();
    for (const auto& i : j.at("zero_set")) {
        std::size_t v = i.get<std::size_t>();
        if (v >= d.n) throw std::invalid_argument("SupportIdeal: zero_set index out of range");
        d.zero_set.push_back(v);
    }
    return d;
}

Json finite_space_to_json(const FiniteSpace& x) {
    Json out;
    out["points"] = x.labels();
    return out;
}

FiniteSpace finite_space_from_json(const Json& j) {
    return FiniteSpace(j.at("points").get<std::vector<std::string>>());
}

Json space_map_to_json(const SpaceMap& f) {
    Json map = Json::object();
    for (const auto& l : f.source().labels()) map[l] = f.apply_label(l);
    Json out;
    out["map"] = std::move(map);
    return out;
}

SpaceMap space_map_from_json(const Json& j, FiniteSpace source, FiniteSpace target) {
    std::vector<std::pair<std::string, std::string>> pairs;
    for (const auto& [from, to] : j.at("map").items()) pairs.emplace_back(from, to.get<std::string>());
    return SpaceMap::from_labels(std::move(source), std::move(target), pairs);
}

Json fin_hom_to_json(const FinHom& h) {
    Json assign = Json::array();
    for (const auto& e : h.entries()) {
        Json entry;
        entry["from"] = e.source_index;
        entry["coeff"] = rational_to_json(e.coeff);
        assign.push_back(std::move(entry));
    }
    Json out;
    out["assign"] = std::move(assign);
    return out;
}

FinHom fin_hom_from_json(const Json& j, std::size_t source_dim) {
    std::vector<FinHom::Entry> entries;
    for (const auto& e : j.at("assign"))
        entries.push_back({e.at("from").get<std::size_t>(), rational_from_json(e.at("coeff"))});
    return FinHom(source_dim, std::move(entries));
}

Json spectrum_point_to_json(const SpectrumPoint& p) {
    Json out;
    out["index"] = p.index;
    out["coeff"] = rational_to_json(p.coeff);
    return out;
}

Json expr_to_json(const LatticeExpr& e) {
    Json out;
    switch (e.kind()) {
    case LatticeExpr::Kind::Gen:
        out["op"] = "gen";
        out["index"] = e.gen_index();
        return out;
    case LatticeExpr::Kind::Const:
        out["op"] = "const";
        out["value"] = rational_to_json(e.value());
        return out;
    case LatticeExpr::Kind::Add:
        out["op"] = "add";
        out["left"] = expr_to_json(e.left());
        out["right"] = expr_to_json(e.right());
        return out;
    case LatticeExpr::Kind::Scale:
        out["op"] = "scale";
        out["coeff"] = rational_to_json(e.coeff());
        out["child"] = expr_to_json(e.child());
        return out;
    case LatticeExpr::Kind::Join:
    case LatticeExpr::Kind::Meet: {
        out["op"] = e.kind() == LatticeExpr::Kind::Join ? "join" : "meet";
        Json children = Json::array();
        for (const auto& c : e.children()) children.push_back(expr_to_json(c));
        out["children"] = std::move(children);
        return out;
    }
    }
    throw std::logic_error("expr_to_json: unreachable");
}

LatticeExpr expr_from_json(const Json& j) {
    const std::string op = j.at("op").get<std::string>();
    if (op == "gen") return LatticeExpr::gen(j.at("index").get<std::size_t>());
    if (op == "const") return LatticeExpr::constant(rational_from_json(j.at("value")));
    if (op == "add")
        return LatticeExpr::add(expr_from_json(j.at("left")), expr_from_json(j.at("right")));
    if (op == "scale")
        return LatticeExpr::scale(rational_from_json(j.at("coeff")), expr_from_json(j.at("child")));
    if (op == "join" || op == "meet") {
        std::vector<LatticeExpr> children;
        for (const auto& c : j.at("children")) children.push_back(expr_from_json(c));
        return op == "join" ? LatticeExpr::join(std::move(children))
                            : LatticeExpr::meet(std::move(children));
    }
    throw std::invalid_argument("LatticeExpr: unknown op '" + op + "'");
}

Json generator_set_to_json(const GeneratorSet& d) {
    Json out;
    out["names"] = d.names();
    Json values = Json::object();
    for (std::size_t p = 0; p < d.domain().size(); ++p) {
        Json per_point = Json::array();
        for (std::size_t g = 0; g < d.count(); ++g) per_point.push_back(rational_to_json(d.value(g, p)));
        values[d.domain().label(p)] = std::move(per_point);
    }
    out["values"] = std::move(values);
    return out;
}

GeneratorSet generator_set_from_json(const Json& j, FiniteSpace domain) {
    auto names = j.at("names").get<std::vector<std::string>>();
    std::vector<std::vector<Rational>> values(names.size(),
                                              std::vector<Rational>(domain.size(), Rational(0)));
    const Json& table = j.at("values");
    for (std::size_t p = 0; p < domain.size(); ++p) {
        const Json& per_point = table.at(domain.label(p));
        if (per_point.size() != names.size())
            throw std::invalid_argument("GeneratorSet: value row length mismatch at point '" +
                                        domain.label(p) + "'");
        for (std::size_t g = 0; g < names.size(); ++g) values[g][p] = rational_from_json(per_point[g]);
    }
    return GeneratorSet(std::move(domain), std::move(names), std::move(values));
}

Json target_to_json(const SampledTarget& g) {
    Json out;
    out["points"] = g.domain.labels();
    out["values"] = vec_to_json(g.values);
    return out;
}

SampledTarget target_from_json(const Json& j) {
    FiniteSpace domain(j.at("points").get<std::vector<std::string>>());
    Vec values = vec_from_json(j.at("values"));
    if (values.size() != domain.size())
        throw std::invalid_argument("SampledTarget: need one value per point");
    return SampledTarget{std::move(domain), std::move(values)};
}

Json law_report_to_json(const LawReport& r) {
    Json out;
    out["law"] = r.law;
    out["cases"] = r.cases_run;
    out["passed"] = r.passed;
    if (!r.passed) out["counterexample"] = r.counterexample;
    return out;
}

} // namespace riesz

#include "brauerlab/json_io.hpp"

namespace brauerlab::io {

json integer_to_json(const Integer& n) {
    if (n.fits_slong_p()) return json(n.get_si());
    return json(n.get_str());
}

Integer integer_from_json(const json& j) {
    if (j.is_number_integer()) return to_integer(j.get<long long>());
    if (j.is_string()) return Integer(j.get<std::string>());
    throw std::invalid_argument("expected an integer or a decimal string");
}

json invariant_to_json(const InvariantClass& a) { return json(a.str()); }

InvariantClass invariant_from_json(const json& j) {
    if (!j.is_string()) throw std::invalid_argument("expected an invariant string \"k/n\"");
    return InvariantClass::parse(j.get<std::string>());
}

json place_to_json(const Place& v) { return json(v.str()); }

Place place_from_json(const json& j) {
    if (!j.is_string()) throw std::invalid_argument("expected a place string");
    std::string s = j.get<std::string>();
    if (s == "real") return Place::real();
    return Place::finite(Integer(s));
}

json invariant_map_to_json(const QuaternionSymbol& q,
                           const std::map<Place, InvariantClass>& inv) {
    json places = json::array();
    for (const auto& [place, value] : inv)
        places.push_back({{"place", place_to_json(place)}, {"invariant", invariant_to_json(value)}});
    return json{{"schema", kSchema},
                {"a", integer_to_json(q.a)},
                {"b", integer_to_json(q.b)},
                {"places", places}};
}

json fibre_to_json(const SpecialFibre& fb) {
    json components = json::array();
    for (const auto& c : fb.components)
        components.push_back({{"label", c.label}, {"e", c.e}, {"f", c.f}});
    json out{{"components", components}};
    if (fb.dual_graph) {
        json edges = json::array();
        for (const auto& [u, v] : *fb.dual_graph) edges.push_back(json::array({u, v}));
        out["dual_graph"] = edges;
    }
    return out;
}

SpecialFibre fibre_from_json(const json& j) {
    if (j.is_object() && j.contains("fibre")) return fibre_from_json(j.at("fibre"));
    if (!j.is_object() || !j.contains("components"))
        throw std::invalid_argument("fibre: expected an object with \"components\"");
    SpecialFibre fb;
    size_t idx = 0;
    for (const auto& c : j.at("components")) {
        FibreComponent comp;
        comp.label = c.value("label", "C" + std::to_string(idx++));
        comp.e = c.at("e").get<long long>();
        comp.f = c.at("f").get<long long>();
        fb.components.push_back(std::move(comp));
    }
    if (j.contains("dual_graph")) {
        std::vector<std::pair<std::string, std::string>> edges;
        for (const auto& e : j.at("dual_graph")) {
            if (!e.is_array() || e.size() != 2)
                throw std::invalid_argument("fibre: dual graph edges are label pairs");
            edges.emplace_back(e.at(0).get<std::string>(), e.at(1).get<std::string>());
        }
        fb.dual_graph = std::move(edges);
    }
    validate_fibre(fb);
    return fb;
}

json curve_to_json(const CurveDescriptor& c) {
    if (const auto* d = std::get_if<DiagonalForm>(&c))
        return json{{"kind", "diagonal_form"},
                    {"n", d->n},
                    {"a", integer_to_json(d->a)},
                    {"b", integer_to_json(d->b)}};
    if (const auto* cc = std::get_if<ConicCover>(&c))
        return json{{"kind", "conic_cover"},
                    {"a", integer_to_json(cc->a)},
                    {"b", integer_to_json(cc->b)},
                    {"cover_degree", cc->cover_degree},
                    {"genus", cc->genus}};
    const auto& m = std::get<ModelCurve>(c);
    return json{{"kind", "model_curve"},
                {"genus", m.genus},
                {"place", m.place_prime.get_str()},
                {"fibre", fibre_to_json(m.fibre)}};
}

namespace {

const char* verdict_name(GlobalConclusion c) {
    switch (c) {
        case GlobalConclusion::SectionConjectureHoldsTrivially:
            return "section_conjecture_holds_trivially";
        case GlobalConclusion::GlobalBrauerVanishes:
            return "global_brauer_vanishes";
        case GlobalConclusion::Inconclusive:
            return "inconclusive";
    }
    return "inconclusive";
}

}  // namespace

json global_report_to_json(const GlobalReport& report) {
    json verdicts = json::array();
    for (const auto& pv : report.place_verdicts) {
        json v{{"place", place_to_json(pv.place)},
               {"verdict", pv.verdict == VerdictKind::NoSection ? "no_section" : "no_information"}};
        if (pv.verdict == VerdictKind::NoSection) {
            v["rule"] = pv.rule;
            v["detail"] = pv.detail;
        }
        if (pv.has_local_points_known) v["local_points"] = *pv.has_local_points_known;
        verdicts.push_back(std::move(v));
    }
    json out{{"schema", kSchema},
             {"curve", curve_to_json(report.curve)},
             {"genus", report.genus},
             {"place_verdicts", verdicts},
             {"verdict", verdict_name(report.conclusion)},
             {"global_sections_excluded", report.global_sections_excluded},
             {"global_points_excluded", report.global_points_excluded}};
    if (report.witness) out["witness"] = place_to_json(*report.witness);
    if (report.real_points) out["real_points"] = *report.real_points;
    return out;
}

json deduction_report_to_json(const DeductionReport& report) {
    json conclusions = json::array();
    for (const auto& c : report.conclusions)
        conclusions.push_back({{"statement", c.statement}, {"rule", c.rule}});
    json out{{"schema", kSchema}, {"conclusions", conclusions}};
    if (report.surviving_triples) {
        json triples = json::array();
        for (const auto& t : *report.surviving_triples)
            triples.push_back({{"g", t.g}, {"pe", t.pe}, {"ix", t.ix}});
        out["surviving_triples"] = triples;
    }
    return out;
}

json admissibility_to_json(const PITriple& t, const AdmissibilityResult& r) {
    return json{{"schema", kSchema},         {"g", t.g},
                {"pe", t.pe},                {"ix", t.ix},
                {"admissible", r.admissible}, {"violations", r.violations}};
}

json pairs_to_json(long long g, const std::vector<std::pair<long long, long long>>& pairs) {
    json out_pairs = json::array();
    for (auto [pe, ix] : pairs) out_pairs.push_back({{"pe", pe}, {"ix", ix}});
    return json{{"schema", kSchema}, {"g", g}, {"pairs", out_pairs}};
}

std::vector<std::pair<Place, CyclicSubgroup>> constraints_from_json(const json& j) {
    const json& list = j.is_object() && j.contains("constraints") ? j.at("constraints") : j;
    if (!list.is_array())
        throw std::invalid_argument("constraints: expected an array or {\"constraints\": [...]}");
    std::vector<std::pair<Place, CyclicSubgroup>> out;
    for (const auto& entry : list)
        out.emplace_back(place_from_json(entry.at("place")),
                         CyclicSubgroup(integer_from_json(entry.at("order"))));
    return out;
}

json hbn_vectors_to_json(const std::vector<std::pair<Place, CyclicSubgroup>>& constraints,
                         const std::vector<std::vector<InvariantClass>>& vectors) {
    json places = json::array();
    for (const auto& [place, group] : constraints)
        places.push_back({{"place", place_to_json(place)},
                          {"order", integer_to_json(group.order())}});
    json vecs = json::array();
    for (const auto& v : vectors) {
        json row = json::array();
        for (const auto& inv : v) row.push_back(invariant_to_json(inv));
        vecs.push_back(std::move(row));
    }
    bool only_zero = vectors.size() == 1;
    return json{{"schema", kSchema},
                {"places", places},
                {"vectors", vecs},
                {"only_zero_vector", only_zero}};
}

namespace {

CyclicGaloisAction action_from_json(const json& request) {
    long long m = request.at("group_order").get<long long>();
    const json& mod = request.at("module");
    std::string kind = mod.at("kind").get<std::string>();
    if (kind == "finite_field_units")
        return CyclicGaloisAction::finite_field_units(mod.at("q").get<long long>(), m);
    if (kind == "cyclic")
        return CyclicGaloisAction(m, mod.at("n").get<long long>(),
                                  mod.at("action_exponent").get<long long>());
    throw std::invalid_argument("module kind must be \"finite_field_units\" or \"cyclic\"");
}

}  // namespace

json cocycle_session_to_json(const json& request) {
    CyclicGaloisAction action = action_from_json(request);
    json out{{"schema", kSchema},
             {"group_order", action.group_order()},
             {"module_order", action.module_order()},
             {"action_multiplier", action.multiplier()}};

    H2Description h2 = h2_cyclic(action);
    out["h2"] = {{"invariants_order", h2.invariants_order},
                 {"norms_order", h2.norms_order},
                 {"h2_order", h2.h2_order}};

    if (!request.contains("cochain")) return out;
    const json& cochain = request.at("cochain");

    if (cochain.contains("one_cochain")) {
        OneCochain f(action, cochain.at("one_cochain").get<std::vector<long long>>());
        TwoCochain df = coboundary(action, f);
        json rows = json::array();
        for (long long i = 0; i < action.group_order(); ++i) {
            json row = json::array();
            for (long long j = 0; j < action.group_order(); ++j) row.push_back(df(i, j));
            rows.push_back(std::move(row));
        }
        out["one_cochain"] = {{"coboundary", rows},
                              {"coboundary_is_cocycle", is_cocycle(action, df)}};
    }
    if (cochain.contains("two_cochain")) {
        TwoCochain c(action,
                     cochain.at("two_cochain").get<std::vector<std::vector<long long>>>());
        json result{{"is_cocycle", is_cocycle(action, c)}, {"normalized", c.normalized(action)}};
        size_t monomials = static_cast<size_t>(action.module_order()) *
                           static_cast<size_t>(action.group_order());
        if (monomials <= 500)
            result["associativity_iff_cocycle"] = associativity_iff_cocycle(action, c);
        out["two_cochain"] = std::move(result);
    }
    return out;
}

}  // namespace brauerlab::io

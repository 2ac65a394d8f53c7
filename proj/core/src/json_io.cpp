#include "biamalg/json_io.hpp"

#include "biamalg/error.hpp"

namespace biamalg {

using nlohmann::json;

nlohmann::json ring_to_json(const FiniteRing& r) {
    return json{{"orders", r.orders()}, {"mul", r.structure()}, {"one", r.one().coords}};
}

FiniteRing ring_from_json(const nlohmann::json& j) {
    try {
        return FiniteRing::from_structure(j.at("orders").get<std::vector<std::int64_t>>(),
                                          j.at("mul").get<FiniteRing::Structure>(),
                                          j.at("one").get<std::vector<std::int64_t>>());
    } catch (const json::exception& e) {
        throw Error(Errc::invalid_argument, std::string("malformed ring JSON: ") + e.what());
    }
}

nlohmann::json element_to_json(const Element& x) { return x.coords; }

nlohmann::json ideal_to_json(const Ideal& i, const std::string& ring_id) {
    json gens = json::array(), elems = json::array();
    for (const auto& g : i.generators()) gens.push_back(element_to_json(g));
    for (Index x : i.elements()) elems.push_back(i.ring().coords(x));
    return json{{"ring", ring_id}, {"gens", gens}, {"elements", elems}};
}

nlohmann::json hom_to_json(const RingHom& h, const std::string& source_id, const std::string& target_id) {
    json images = json::array();
    for (const auto& e : h.generator_images()) images.push_back(element_to_json(e));
    return json{{"source", source_id}, {"target", target_id}, {"images", images}};
}

nlohmann::json report_to_json(const Report& r) {
    json checks = json::array();
    for (const auto& c : r.checks) {
        json item{{"check", c.name}, {"pass", c.passed()}, {"status", to_string(c.status)}, {"witness", c.witness}};
        if (c.map) item["map"] = hom_to_json(*c.map, "source", "target");
        checks.push_back(std::move(item));
    }
    return json{{"title", r.title}, {"checks", checks}, {"notes", r.notes}, {"pass", r.all_passed()}};
}

nlohmann::json biamalg_to_json(const BiAmalgamation& w, const ComponentIds& ids) {
    json elems = json::array();
    for (Index x : w.embedded())
        elems.push_back(json::array({w.b.coords(w.bc.first(x)), w.c.coords(w.bc.second(x))}));
    return json{{"A", ids.a},
                {"B", ids.b},
                {"C", ids.c},
                {"f", hom_to_json(w.f, ids.a, ids.b)},
                {"g", hom_to_json(w.g, ids.a, ids.c)},
                {"J", ideal_to_json(w.j, ids.b)},
                {"Jp", ideal_to_json(w.jp, ids.c)},
                {"I0", ideal_to_json(w.i0, ids.a)},
                {"order", w.w.size()},
                {"ring", ring_to_json(w.w)},
                {"elements", elems},
                {"construction", report_to_json(w.construction)}};
}

nlohmann::json spectrum_to_json(const SpecBowtie& s) {
    json entries = json::array();
    for (const auto& e : s.entries) {
        json prime = json::array();
        for (Index x : e.prime.elements()) prime.push_back(e.prime.ring().coords(x));
        json source = json::object();
        if (e.p) source["p"] = ideal_to_json(*e.p, "A");
        if (e.l) source["L"] = ideal_to_json(*e.l, "f(A)+J");
        if (e.lp) source["Lp"] = ideal_to_json(*e.lp, "g(A)+Jp");
        entries.push_back(json{{"prime", prime},
                               {"class", to_string(e.kind)},
                               {"source", source},
                               {"local_factor", ring_to_json(e.local_factor)},
                               {"local_factor_order", e.local_factor.size()}});
    }
    return json{{"entries", entries}, {"report", report_to_json(s.report)}};
}

std::string dump(const nlohmann::json& j) { return j.dump(2) + "\n"; }

}  // namespace biamalg

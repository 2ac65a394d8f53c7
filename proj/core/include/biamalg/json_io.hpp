#pragma once

#include <string>

#include <nlohmann/json.hpp>

#include "biamalg/biamalg.hpp"
#include "biamalg/spectrum.hpp"

namespace biamalg {

inline constexpr const char* json_schema = "biamalg/1";

/// {"orders":[...],"mul":[[[coords]...]...],"one":[coords]}
nlohmann::json ring_to_json(const FiniteRing& r);
/// Inverse of ring_to_json. Throws Errc::invalid_argument on malformed input.
FiniteRing ring_from_json(const nlohmann::json& j);

nlohmann::json element_to_json(const Element& x);

/// {"ring":id,"gens":[[coords]...],"elements":[[coords]...]}
nlohmann::json ideal_to_json(const Ideal& i, const std::string& ring_id);

/// {"source":id,"target":id,"images":[[coords]...]}
nlohmann::json hom_to_json(const RingHom& h, const std::string& source_id, const std::string& target_id);

/// {"title":..,"checks":[{"check":name,"pass":bool,"status":..,"witness":..}...],"notes":[...]}
nlohmann::json report_to_json(const Report& r);

struct ComponentIds {
    std::string a = "A", b = "B", c = "C", f = "f", g = "g", j = "J", jp = "Jp";
};

nlohmann::json biamalg_to_json(const BiAmalgamation& w, const ComponentIds& ids = {});

/// {"entries":[{"prime":[..],"class":..,"source":{..},"local_factor":{ring}}...],"report":{..}}
nlohmann::json spectrum_to_json(const SpecBowtie& s);

/// Stable text rendering: two-space indent, sorted keys, trailing newline.
std::string dump(const nlohmann::json& j);

}  // namespace biamalg

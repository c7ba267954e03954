#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "firstfall/ring.hpp"
#include "firstfall/series.hpp"
#include "firstfall/syzygy.hpp"

namespace firstfall {

/// System file format:
/// {"field":{"p":P}, "blocks":[{"name":N,"vars":K},...], "weights":[[...],...] (optional),
///  "polys":[[[coeff,[e1..en]],...],...], "provenance":{...}}
/// Terms are written in ascending monomial order; weights only when non-default.
nlohmann::json system_to_json(const SystemInstance& sys);
SystemInstance system_from_json(const nlohmann::json& j);

std::string serialize_system(const SystemInstance& sys);
SystemInstance parse_system(const std::string& text);

SystemInstance read_system_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& text);

/// [[[d1..ds], "coefficient"], ...] in deglex order.
nlohmann::json series_to_json(const SeriesTrunc& series);

nlohmann::json to_json(const DegreeAnswer& a);
nlohmann::json to_json(const MultiDegreeAnswer& a);

/// Header `d1,...,ds,syz,ksyz,h1` followed by one line per profile.
std::string profiles_to_csv(const std::vector<SyzygyProfile>& rows, std::size_t s);

}  // namespace firstfall

#ifndef DOTPAIRS_IO_HPP
#define DOTPAIRS_IO_HPP

#include <filesystem>
#include <string>

#include <json.hpp>

#include "dotpairs/bounds.hpp"
#include "dotpairs/geometry.hpp"

namespace dotpairs {

// Point-set file format: UTF-8 JSON with keys `field` ({"kind":"rational"} or
// {"kind":"prime","p":<int>}), `dim`, `label`, `points` (array of arrays of
// scalar strings).  Serialization is canonical, so save/load round-trips are
// byte-stable.
nlohmann::ordered_json point_set_to_json(const PointSet& points);
PointSet point_set_from_json(const nlohmann::json& j);

void save_point_set(const PointSet& points, const std::filesystem::path& path);
PointSet load_point_set(const std::filesystem::path& path);

nlohmann::ordered_json report_to_json(const BoundReport& report);

// Fixed sweep schema: bound_id,n,d,field,s,t,lhs,rhs,ratio,verdict,seed,trial
std::string report_csv_header();
std::string report_csv_row(const BoundReport& report);

} // namespace dotpairs

#endif

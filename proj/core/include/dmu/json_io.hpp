#pragma once

#include <string>

#include <nlohmann/json.hpp>

#include "dmu/carleson.hpp"
#include "dmu/complex_poly.hpp"
#include "dmu/measures.hpp"

namespace dmu {

/// Serialization conventions: complex numbers are [re, im] pairs; a Poly is
/// the array of its coefficient pairs in ascending degree; a BoundaryPoint is
/// its angle in radians. Parsers are strict: unknown object fields are
/// rejected with InputError, as are missing fields and wrong types.

nlohmann::json complex_to_json(Complex z);
Complex complex_from_json(const nlohmann::json& j, const std::string& where);

nlohmann::json poly_to_json(const Poly& p);
Poly poly_from_json(const nlohmann::json& j);

nlohmann::json atomic_measure_to_json(const AtomicBoundaryMeasure& mu);
AtomicBoundaryMeasure atomic_measure_from_json(const nlohmann::json& j);

nlohmann::json planar_measure_to_json(const PlanarMeasure& nu);
PlanarMeasure planar_measure_from_json(const nlohmann::json& j);

nlohmann::json scan_report_to_json(const ScanReport& rep);
std::string scan_report_to_csv(const ScanReport& rep);

nlohmann::json rkt_report_to_json(const RktLevelReport& rep);
std::string rkt_report_to_csv(const RktLevelReport& rep);

/// Parse a JSON document from a file; wraps I/O and syntax failures in
/// InputError naming the path.
nlohmann::json load_json_file(const std::string& path);

} // namespace dmu

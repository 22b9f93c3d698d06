#include "dmu/json_io.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include "dmu/errors.hpp"

namespace dmu {

namespace {

using nlohmann::json;

void require_object(const json& j, const std::string& where,
                    std::initializer_list<const char*> required,
                    std::initializer_list<const char*> optional = {}) {
    if (!j.is_object()) throw InputError(where + ": expected a JSON object");
    for (const char* key : required)
        if (!j.contains(key)) throw InputError(where + ": missing field \"" + key + "\"");
    for (const auto& [key, value] : j.items()) {
        (void)value;
        bool known = false;
        for (const char* k : required) known = known || key == k;
        for (const char* k : optional) known = known || key == k;
        if (!known) throw InputError(where + ": unknown field \"" + key + "\"");
    }
}

double require_number(const json& j, const char* key, const std::string& where) {
    if (!j.at(key).is_number()) throw InputError(where + ": field \"" + key + "\" must be a number");
    return j.at(key).get<double>();
}

std::string format_full(double x) {
    std::ostringstream os;
    os.precision(17);
    os << x;
    return os.str();
}

} // namespace

nlohmann::json complex_to_json(Complex z) { return json::array({z.real(), z.imag()}); }

Complex complex_from_json(const nlohmann::json& j, const std::string& where) {
    if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number())
        throw InputError(where + ": expected a [re, im] pair");
    return {j[0].get<double>(), j[1].get<double>()};
}

nlohmann::json poly_to_json(const Poly& p) {
    json out = json::array();
    for (const auto& c : p.coeffs) out.push_back(complex_to_json(c));
    return out;
}

Poly poly_from_json(const nlohmann::json& j) {
    if (!j.is_array()) throw InputError("polynomial: expected an array of [re, im] pairs");
    std::vector<Complex> c;
    c.reserve(j.size());
    for (std::size_t k = 0; k < j.size(); ++k)
        c.push_back(complex_from_json(j[k], "polynomial coefficient " + std::to_string(k)));
    Poly p{std::move(c)};
    return p.normalize();
}

nlohmann::json atomic_measure_to_json(const AtomicBoundaryMeasure& mu) {
    json atoms = json::array();
    for (const auto& a : mu.atoms) atoms.push_back({{"angle", a.point.angle}, {"mass", a.mass}});
    return {{"atoms", atoms}};
}

AtomicBoundaryMeasure atomic_measure_from_json(const nlohmann::json& j) {
    require_object(j, "boundary measure", {"atoms"});
    const json& atoms = j.at("atoms");
    if (!atoms.is_array() || atoms.empty())
        throw InputError("boundary measure: \"atoms\" must be a nonempty array");
    std::vector<AtomicBoundaryMeasure::Atom> out;
    out.reserve(atoms.size());
    for (const auto& a : atoms) {
        require_object(a, "boundary measure atom", {"angle", "mass"});
        out.push_back({BoundaryPoint(require_number(a, "angle", "boundary measure atom")),
                       require_number(a, "mass", "boundary measure atom")});
    }
    return AtomicBoundaryMeasure(std::move(out));
}

nlohmann::json planar_measure_to_json(const PlanarMeasure& nu) {
    json out;
    switch (nu.family) {
        case PlanarFamily::Atoms: {
            out["family"] = "atoms";
            json atoms = json::array();
            for (const auto& a : nu.atoms)
                atoms.push_back({{"re", a.z.real()}, {"im", a.z.imag()}, {"mass", a.mass}});
            out["atoms"] = atoms;
            break;
        }
        case PlanarFamily::RadialPower:
            out["family"] = "radial_power";
            out["alpha"] = nu.exponent;
            out["theta"] = nu.ray_angle;
            break;
        case PlanarFamily::Area:
            out["family"] = "area";
            out["scale"] = nu.scale;
            break;
    }
    if (!nu.weight_points.empty()) {
        json wp = json::array();
        for (const auto& lam : nu.weight_points) wp.push_back(lam.angle);
        out["weight_points"] = wp;
    }
    return out;
}

PlanarMeasure planar_measure_from_json(const nlohmann::json& j) {
    if (!j.is_object()) throw InputError("planar measure: expected a JSON object");
    if (!j.contains("family") || !j.at("family").is_string())
        throw InputError("planar measure: missing string field \"family\"");
    const std::string family = j.at("family").get<std::string>();

    PlanarMeasure nu;
    if (family == "atoms") {
        require_object(j, "planar measure", {"family", "atoms"}, {"weight_points"});
        const json& atoms = j.at("atoms");
        if (!atoms.is_array() || atoms.empty())
            throw InputError("planar measure: \"atoms\" must be a nonempty array");
        std::vector<PlanarMeasure::Atom> out;
        out.reserve(atoms.size());
        for (const auto& a : atoms) {
            require_object(a, "planar atom", {"re", "im", "mass"});
            out.push_back({Complex{require_number(a, "re", "planar atom"),
                                   require_number(a, "im", "planar atom")},
                           require_number(a, "mass", "planar atom")});
        }
        nu = PlanarMeasure::make_atoms(std::move(out));
    } else if (family == "radial_power") {
        require_object(j, "planar measure", {"family", "alpha", "theta"}, {"weight_points"});
        nu = PlanarMeasure::make_radial_power(require_number(j, "alpha", "planar measure"),
                                              require_number(j, "theta", "planar measure"));
    } else if (family == "area") {
        require_object(j, "planar measure", {"family", "scale"}, {"weight_points"});
        nu = PlanarMeasure::make_area(require_number(j, "scale", "planar measure"));
    } else {
        throw InputError("planar measure: unknown family \"" + family + "\"");
    }

    if (j.contains("weight_points")) {
        const json& wp = j.at("weight_points");
        if (!wp.is_array()) throw InputError("planar measure: \"weight_points\" must be an array");
        std::vector<BoundaryPoint> pts;
        for (const auto& a : wp) {
            if (!a.is_number()) throw InputError("planar measure: weight points must be angles");
            pts.push_back(BoundaryPoint(a.get<double>()));
        }
        nu = weight_by_product(nu, pts);
    }
    return nu;
}

nlohmann::json scan_report_to_json(const ScanReport& rep) {
    json witnesses = json::array();
    for (const auto& w : rep.witnesses)
        witnesses.push_back({{"zeta_angle", w.zeta_angle}, {"h", w.h}, {"ratio", w.ratio}});
    return {{"sup_ratio", rep.sup_ratio},
            {"verdict", to_string(rep.verdict)},
            {"levels", rep.levels},
            {"level_sups", rep.level_sups},
            {"witnesses", witnesses}};
}

std::string scan_report_to_csv(const ScanReport& rep) {
    std::ostringstream os;
    os << "level,h,sup_ratio\n";
    for (std::size_t i = 0; i < rep.levels.size(); ++i)
        os << rep.levels[i] << "," << format_full(std::ldexp(1.0, -rep.levels[i])) << ","
           << format_full(rep.level_sups[i]) << "\n";
    return os.str();
}

nlohmann::json rkt_report_to_json(const RktLevelReport& rep) {
    json witnesses = json::array();
    for (const auto& s : rep.witnesses)
        witnesses.push_back({{"w", complex_to_json(s.w)}, {"ratio", s.ratio}});
    return {{"sup_ratio", rep.sup},
            {"verdict", to_string(rep.verdict)},
            {"levels", rep.levels},
            {"level_sups", rep.level_sups},
            {"witnesses", witnesses}};
}

std::string rkt_report_to_csv(const RktLevelReport& rep) {
    std::ostringstream os;
    os << "level,h,sup_ratio\n";
    for (std::size_t i = 0; i < rep.levels.size(); ++i)
        os << rep.levels[i] << "," << format_full(std::ldexp(1.0, -rep.levels[i])) << ","
           << format_full(rep.level_sups[i]) << "\n";
    return os.str();
}

nlohmann::json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open file: " + path);
    try {
        return json::parse(in);
    } catch (const json::parse_error& e) {
        throw InputError("cannot parse " + path + ": " + e.what());
    }
}

} // namespace dmu

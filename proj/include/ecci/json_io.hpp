#pragma once

#include <json.hpp>

#include "ecci/bounds.hpp"
#include "ecci/enumerate.hpp"
#include "ecci/families.hpp"
#include "ecci/indices.hpp"

namespace ecci {

using Json = nlohmann::ordered_json;

// Flat object with stable field names. Rational indices appear twice: as an
// exact fraction string and as a decimal.
inline Json to_json(const IndexReport& r) {
    Json j;
    j["eci"] = r.eci;
    j["zeta"] = r.zeta;
    j["m1"] = r.m1;
    j["dd"] = r.dd;
    j["eds"] = r.eds;
    j["aeds"] = r.aeds.str();
    j["aeds_decimal"] = r.aeds.to_double();
    j["ac"] = r.ac.str();
    j["ac_decimal"] = r.ac.to_double();
    j["sac"] = r.sac.str();
    j["sac_decimal"] = r.sac.to_double();
    return j;
}

inline Json to_json(const BoundFlag& f) {
    return Json{{"applicable", f.applicable}, {"holds", f.holds}, {"equality", f.equality}};
}

inline Json to_json(const BoundsReport& r) {
    Json j;
    j["n"] = r.n;
    j["m"] = r.m;
    j["eci"] = r.eci_value;
    j["radius"] = r.radius;
    j["diameter"] = r.diameter;
    j["sandwich_lo"] = r.sandwich_lo;
    j["sandwich_hi"] = r.sandwich_hi;
    if (r.k_flag.applicable) {
        j["k_degree_count"] = r.k_degree_count;
        j["k_bound"] = r.k_bound;
    }
    if (r.general_flag.applicable) {
        j["a_nm"] = r.a_value;
        j["general_lower"] = r.general_lower;
    }
    j["zagreb_upper"] = r.zagreb_upper;
    j["dd_lower"] = r.dd_lower.str();
    j["dd_lower_decimal"] = r.dd_lower.to_double();
    j["star_min"] = r.star_min;
    j["diameter_upper"] = r.diameter_upper;
    j["flags"] = Json{{"sandwich_lo", to_json(r.sandwich_lo_flag)},
                      {"sandwich_hi", to_json(r.sandwich_hi_flag)},
                      {"k_bound", to_json(r.k_flag)},
                      {"general_lower", to_json(r.general_flag)},
                      {"zagreb_upper", to_json(r.zagreb_flag)},
                      {"dd_lower", to_json(r.dd_flag)},
                      {"star_min", to_json(r.star_flag)},
                      {"diameter_upper", to_json(r.diameter_flag)}};
    j["all_hold"] = all_bounds_hold(r);
    return j;
}

inline Json to_json(const ExpectedSide& e) {
    Json j;
    j["value"] = e.value;
    if (e.multiplicity >= 0) j["multiplicity"] = e.multiplicity;
    j["family"] = e.family;
    j["witnesses"] = e.witnesses;
    return j;
}

inline Json to_json(const ExtremalReport& r) {
    Json j;
    j["suite"] = r.suite;
    j["n"] = r.n;
    if (r.param >= 0) j["param"] = r.param;
    j["min_value"] = r.min_value;
    j["max_value"] = r.max_value;
    j["min_witnesses"] = r.min_witnesses;
    j["max_witnesses"] = r.max_witnesses;
    if (r.expected_min.present) j["expected_min"] = to_json(r.expected_min);
    if (r.expected_max.present) j["expected_max"] = to_json(r.expected_max);
    if (r.has_second) {
        j["second_min_value"] = r.second_min_value;
        j["second_max_value"] = r.second_max_value;
        j["second_max_witnesses"] = r.second_max_witnesses;
        if (r.expected_second_max.present) {
            j["expected_second_max"] = to_json(r.expected_second_max);
        }
    }
    j["verdict"] = r.match ? "match" : "mismatch";
    if (!r.notes.empty()) j["notes"] = r.notes;
    return j;
}

inline Json to_json(const FormulaCheck& c) {
    return Json{{"oracle", c.oracle}, {"formula", c.formula}, {"agree", c.agree}};
}

} // namespace ecci

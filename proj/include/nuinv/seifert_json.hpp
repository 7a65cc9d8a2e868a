#pragma once

#include <json.hpp>

#include <limits>
#include <stdexcept>
#include <string>

#include "seifert.hpp"

namespace nuinv {

using Json = nlohmann::ordered_json;

inline Json int_to_json(const Int& v) {
    if (v >= std::numeric_limits<std::int64_t>::min() &&
        v <= std::numeric_limits<std::int64_t>::max())
        return v.convert_to<std::int64_t>();
    return v.str();
}

inline Int int_from_json(const Json& v, const char* what) {
    if (v.is_number_unsigned())
        return Int(v.get<std::uint64_t>());
    if (v.is_number_integer())
        return Int(v.get<std::int64_t>());
    if (v.is_string())
        return parse_int(v.get<std::string>());
    throw std::invalid_argument(std::string(what) + ": expected an integer or a decimal string");
}

inline Rational rational_from_json(const Json& v, const char* what) {
    if (v.is_string())
        return Rational::parse(v.get<std::string>());
    if (v.is_number_integer() || v.is_number_unsigned())
        return Rational(int_from_json(v, what));
    throw std::invalid_argument(std::string(what) + ": expected an \"n/d\" string or an integer");
}

// Record format consumed by the CLI:
//   {"degree": "-1/5", "euler": "2/5", "points": [[5, 4, 1], [5, 1, 2]]}
// with optional "allow_nonpseudoconvex": true. Rationals are "n/d" strings
// in lowest terms ("n" when the denominator is 1); integers are accepted on
// input for convenience.
inline SeifertData seifert_from_json(const Json& j, bool force_allow_non_pseudoconvex = false) {
    if (!j.is_object())
        throw std::invalid_argument("seifert record: expected a JSON object");
    if (!j.contains("degree") || !j.contains("euler"))
        throw std::invalid_argument("seifert record: fields 'degree' and 'euler' are required");
    const Rational degree = rational_from_json(j.at("degree"), "degree");
    const Rational euler = rational_from_json(j.at("euler"), "euler");
    std::vector<OrbifoldPoint> points;
    if (j.contains("points")) {
        const Json& pts = j.at("points");
        if (!pts.is_array())
            throw std::invalid_argument("seifert record: 'points' must be an array of triples");
        for (const Json& p : pts) {
            if (!p.is_array() || p.size() != 3)
                throw std::invalid_argument(
                    "seifert record: each point must be an [alpha, beta, gamma] triple");
            points.emplace_back(int_from_json(p[0], "alpha"), int_from_json(p[1], "beta"),
                                int_from_json(p[2], "gamma"));
        }
    }
    bool allow = force_allow_non_pseudoconvex;
    if (j.contains("allow_nonpseudoconvex")) {
        const Json& flag = j.at("allow_nonpseudoconvex");
        if (!flag.is_boolean())
            throw std::invalid_argument("seifert record: 'allow_nonpseudoconvex' must be a boolean");
        allow = allow || flag.get<bool>();
    }
    return SeifertData(degree, euler, std::move(points), allow);
}

inline Json seifert_to_json(const SeifertData& data) {
    Json j;
    j["degree"] = data.degree().str();
    j["euler"] = data.euler().str();
    Json pts = Json::array();
    for (const auto& p : data.points()) {
        Json triple = Json::array();
        triple.push_back(int_to_json(p.alpha));
        triple.push_back(int_to_json(p.beta));
        triple.push_back(int_to_json(p.gamma));
        pts.push_back(std::move(triple));
    }
    j["points"] = std::move(pts);
    if (data.non_pseudoconvex_allowed())
        j["allow_nonpseudoconvex"] = true;
    return j;
}

} // namespace nuinv

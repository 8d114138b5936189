/*
   Copyright 2026 The qrules Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

// JSON documents describing rules and multiplicative families.
//
// Rule spec:
//   { "ring": "ZZ"|"QQ"|"Fp:<p>", "kind": "canonical"|"tabulated"|"zero",
//     "z": "<poly>", "u": {"m,n": "<poly>", ...}, "v": {...}, "bound": N }
// Tabulated keys may use "*" for either index. Unknown keys are rejected.
//
// Family spec:
//   { "ring": ..., "lambda": {"2": "1", "3": "-1"}, "lambda_default": "1",
//     "t0": 1, "exponents": {"1": 1, "2": -1} }

#ifndef QRULES_SPEC_IO_HPP
#define QRULES_SPEC_IO_HPP

#include <fstream>
#include <set>
#include <sstream>
#include <string>
#include <variant>

#include <json.hpp>

#include "qrules/rules.hpp"
#include "qrules/solve.hpp"
#include "qrules/text.hpp"

namespace qrules {

struct RuleSpec {
    Ring ring;
    std::variant<LinearRule, ZeroIdentity> rule;
};

struct FamilySpecFile {
    Ring ring;
    MultFamilySpec spec;
};

namespace detail {

using nlohmann::json;

inline void reject_unknown_keys(const json& doc, const std::set<std::string>& allowed) {
    if (!doc.is_object()) {
        throw Error(Errc::InvalidSpec, "spec document must be a JSON object");
    }
    for (const auto& item : doc.items()) {
        if (!allowed.contains(item.key())) {
            throw Error(Errc::InvalidSpec, "unknown key '" + item.key() + "'");
        }
    }
}

inline const json& require(const json& doc, const char* key) {
    if (!doc.contains(key)) {
        throw Error(Errc::InvalidSpec, std::string("missing key '") + key + "'");
    }
    return doc.at(key);
}

inline std::string require_string(const json& value, const std::string& what) {
    if (!value.is_string()) {
        throw Error(Errc::InvalidSpec, what + " must be a string");
    }
    return value.get<std::string>();
}

inline long require_integer(const json& value, const std::string& what) {
    if (!value.is_number_integer()) {
        throw Error(Errc::InvalidSpec, what + " must be an integer");
    }
    return value.get<long>();
}

inline long parse_index(const std::string& text, const std::string& what) {
    if (text == "*") {
        return 0;
    }
    std::size_t used = 0;
    long v = 0;
    try {
        v = std::stol(text, &used);
    } catch (const std::exception&) {
        used = 0;
    }
    if (used != text.size() || v <= 0) {
        throw Error(Errc::InvalidSpec, what + " '" + text + "' is not a positive integer");
    }
    return v;
}

inline Ring ring_of(const json& doc, const Ring& fallback) {
    return doc.contains("ring") ? parse_ring(require_string(doc.at("ring"), "ring")) : fallback;
}

inline std::map<std::pair<long, long>, Poly> table_side(const json& side, const Ring& ring, const char* name) {
    if (!side.is_object()) {
        throw Error(Errc::InvalidSpec, std::string(name) + " must be an object keyed by \"m,n\"");
    }
    std::map<std::pair<long, long>, Poly> out;
    for (const auto& item : side.items()) {
        const std::string& key = item.key();
        const auto comma = key.find(',');
        if (comma == std::string::npos) {
            throw Error(Errc::InvalidSpec, std::string(name) + " key '" + key + "' is not of the form \"m,n\"");
        }
        const long m = parse_index(key.substr(0, comma), "index");
        const long n = parse_index(key.substr(comma + 1), "index");
        out.insert_or_assign({m, n}, parse_poly(require_string(item.value(), std::string(name) + "[" + key + "]"), ring));
    }
    return out;
}

} // namespace detail

/// The document's "ring" wins over `fallback`.
inline RuleSpec rule_spec_from_json(const nlohmann::json& doc, const Ring& fallback = Ring::integers()) {
    detail::reject_unknown_keys(doc, {"ring", "kind", "z", "u", "v", "bound"});
    const Ring ring = detail::ring_of(doc, fallback);
    const std::string kind = detail::require_string(detail::require(doc, "kind"), "kind");
    auto forbid = [&](std::initializer_list<const char*> keys) {
        for (const char* k : keys) {
            if (doc.contains(k)) {
                throw Error(Errc::InvalidSpec, std::string("key '") + k + "' is not allowed for kind " + kind);
            }
        }
    };
    if (kind == "canonical" || kind == "zero") {
        forbid({"u", "v", "bound"});
        const Poly z = parse_poly(detail::require_string(detail::require(doc, "z"), "z"), ring);
        if (kind == "canonical") {
            return {ring, rule_canonical(z)};
        }
        return {ring, zero_identity(z)};
    }
    if (kind == "tabulated") {
        forbid({"z"});
        LinearRule::Tabulated table{detail::table_side(detail::require(doc, "u"), ring, "u"),
                                    detail::table_side(detail::require(doc, "v"), ring, "v"),
                                    detail::require_integer(detail::require(doc, "bound"), "bound")};
        if (table.bound <= 0) {
            throw Error(Errc::InvalidSpec, "bound must be positive");
        }
        return {ring, LinearRule::tabulated(ring, std::move(table))};
    }
    throw Error(Errc::InvalidSpec, "kind must be canonical, tabulated or zero, got '" + kind + "'");
}

inline FamilySpecFile family_spec_from_json(const nlohmann::json& doc, const Ring& fallback = Ring::rationals()) {
    detail::reject_unknown_keys(doc, {"ring", "lambda", "lambda_default", "t0", "exponents"});
    Ring ring = detail::ring_of(doc, fallback);
    if (ring.kind() == RingKind::Integers) {
        // members are rational functions; integer data is read over QQ
        ring = Ring::rationals();
    }
    MultFamilySpec spec;
    if (doc.contains("lambda")) {
        const auto& lam = doc.at("lambda");
        if (!lam.is_object()) {
            throw Error(Errc::InvalidSpec, "lambda must be an object keyed by primes");
        }
        for (const auto& item : lam.items()) {
            const long p = detail::parse_index(item.key(), "lambda key");
            spec.lambda_on_primes.insert_or_assign(
                p, parse_scalar(detail::require_string(item.value(), "lambda[" + item.key() + "]"), ring));
        }
    }
    if (doc.contains("lambda_default")) {
        spec.lambda_default = parse_scalar(detail::require_string(doc.at("lambda_default"), "lambda_default"), ring);
    }
    if (doc.contains("t0")) {
        spec.t0 = detail::require_integer(doc.at("t0"), "t0");
    }
    if (doc.contains("exponents")) {
        const auto& ex = doc.at("exponents");
        if (!ex.is_object()) {
            throw Error(Errc::InvalidSpec, "exponents must be an object keyed by r");
        }
        for (const auto& item : ex.items()) {
            const long r = detail::parse_index(item.key(), "exponent key");
            spec.exponents.insert_or_assign(r, detail::require_integer(item.value(), "exponents[" + item.key() + "]"));
        }
    }
    validate_family(spec, ring);
    return {ring, std::move(spec)};
}

inline nlohmann::json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw Error(Errc::InvalidSpec, "cannot open '" + path + "'");
    }
    try {
        return nlohmann::json::parse(in);
    } catch (const nlohmann::json::parse_error& e) {
        throw Error(Errc::InvalidSpec, "'" + path + "' is not valid JSON: " + e.what());
    }
}

} // namespace qrules

#endif // QRULES_SPEC_IO_HPP

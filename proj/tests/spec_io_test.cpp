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

#include <gtest/gtest.h>

#include "qrules/spec_io.hpp"
#include "test_support.hpp"

namespace qrules {
namespace {

using nlohmann::json;
using testing::P;

const Ring kZZ = Ring::integers();
const Ring kQQ = Ring::rationals();

Errc spec_error(const json& doc) {
    try {
        rule_spec_from_json(doc);
    } catch (const Error& e) {
        return e.code();
    }
    ADD_FAILURE() << doc.dump();
    return Errc::InvariantViolation;
}

TEST(RuleSpec, Canonical) {
    const auto spec = rule_spec_from_json(json::parse(R"({"ring": "QQ", "kind": "canonical", "z": "1/2 - q"})"));
    EXPECT_EQ(spec.ring, kQQ);
    const auto& rule = std::get<LinearRule>(spec.rule);
    EXPECT_EQ(rule.z(), P(kQQ, "1/2 - q"));
}

TEST(RuleSpec, ZeroAndFallbackRing) {
    const auto spec = rule_spec_from_json(json::parse(R"({"kind": "zero", "z": "1-q"})"), Ring::prime_field(7));
    EXPECT_EQ(spec.ring, Ring::prime_field(7));
    EXPECT_EQ(std::get<ZeroIdentity>(spec.rule).z(), P(Ring::prime_field(7), "1-q"));
}

TEST(RuleSpec, TabulatedWithWildcards) {
    const auto spec = rule_spec_from_json(json::parse(R"({
        "ring": "ZZ", "kind": "tabulated", "bound": 8,
        "u": {"*,*": "1"},
        "v": {"1,*": "q", "2,*": "q^2", "3,*": "q^3", "4,*": "q^4",
              "5,*": "q^5", "6,*": "q^6", "7,*": "q^7", "8,*": "q^8"}
    })"));
    const auto& rule = std::get<LinearRule>(spec.rule);
    EXPECT_FALSE(rule.is_canonical());
    EXPECT_EQ(rule.bound(), 8);
    EXPECT_TRUE(rule_verify(rule, 8, 8).verified);
    EXPECT_EQ(rule_canonicalize(rule).z(), Poly(kZZ));
}

TEST(RuleSpec, Rejections) {
    EXPECT_EQ(spec_error(json::parse(R"({"kind": "canonical", "z": "0", "extra": 1})")), Errc::InvalidSpec);
    EXPECT_EQ(spec_error(json::parse(R"({"kind": "canonical"})")), Errc::InvalidSpec);
    EXPECT_EQ(spec_error(json::parse(R"({"kind": "affine", "z": "0"})")), Errc::InvalidSpec);
    EXPECT_EQ(spec_error(json::parse(R"({"kind": "canonical", "z": 3})")), Errc::InvalidSpec);
    EXPECT_EQ(spec_error(json::parse(R"({"kind": "canonical", "z": "0", "bound": 3})")), Errc::InvalidSpec);
    EXPECT_EQ(spec_error(json::parse(R"({"kind": "tabulated", "u": {}, "v": {}, "bound": 0})")), Errc::InvalidSpec);
    EXPECT_EQ(spec_error(json::parse(R"({"kind": "tabulated", "u": {"1": "1"}, "v": {}, "bound": 2})")),
              Errc::InvalidSpec);
    EXPECT_EQ(spec_error(json::parse(R"({"kind": "tabulated", "u": {"0,1": "1"}, "v": {}, "bound": 2})")),
              Errc::InvalidSpec);
    EXPECT_EQ(spec_error(json::parse(R"({"ring": "Fp:4", "kind": "canonical", "z": "0"})")), Errc::NonPrimeModulus);
    EXPECT_EQ(spec_error(json::parse(R"({"kind": "canonical", "z": "1/2"})")), Errc::RationalOverNonField);
    EXPECT_EQ(spec_error(json::parse(R"([1, 2])")), Errc::InvalidSpec);
}

TEST(FamilySpec, FullDocument) {
    const auto file = family_spec_from_json(json::parse(R"({
        "lambda": {"2": "1", "3": "-1"}, "lambda_default": "2", "t0": 1, "exponents": {"1": 1, "2": -1}
    })"));
    EXPECT_EQ(file.ring, kQQ);
    EXPECT_EQ(file.spec.t0, 1);
    EXPECT_EQ(file.spec.exponents.at(2), -1);
    EXPECT_EQ(family_lambda(file.spec, 30, file.ring), Scalar::from_int(kQQ, -2));
    std::function<RatFunc(long)> f = [&](long n) { return mult_family(file.spec, n, file.ring); };
    EXPECT_TRUE(mult_verify(f, 6, 6, 36).verified);
}

TEST(FamilySpec, IntegerRingIsReadOverRationals) {
    const auto file = family_spec_from_json(json::parse(R"({"ring": "ZZ", "lambda_default": "1"})"));
    EXPECT_EQ(file.ring, kQQ);
}

TEST(FamilySpec, Rejections) {
    auto code = [](const char* text) {
        try {
            family_spec_from_json(json::parse(text));
        } catch (const Error& e) {
            return e.code();
        }
        return Errc::InvariantViolation;
    };
    EXPECT_EQ(code(R"({"lambda": {"4": "1"}})"), Errc::InvalidSpec);
    EXPECT_EQ(code(R"({"lambda": {"2": "0"}})"), Errc::InvalidSpec);
    EXPECT_EQ(code(R"({"t0": "1"})"), Errc::InvalidSpec);
    EXPECT_EQ(code(R"({"exponents": {"x": 1}})"), Errc::InvalidSpec);
    EXPECT_EQ(code(R"({"R": [1]})"), Errc::InvalidSpec);
    EXPECT_EQ(code(R"({"lambda": {"2": "q"}})"), Errc::ParseError);
}

TEST(ReadJsonFile, Errors) {
    EXPECT_THROW(read_json_file("/nonexistent/rule.json"), Error);
    const std::string bad = ::testing::TempDir() + "qrules_bad.json";
    std::ofstream(bad) << "{ not json";
    try {
        read_json_file(bad);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), Errc::InvalidSpec);
    }
}

} // namespace
} // namespace qrules

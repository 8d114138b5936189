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

#include "test_support.hpp"

namespace qrules {
namespace {

using testing::Gen;

Errc code_of(const std::function<void()>& f) {
    try {
        f();
    } catch (const Error& e) {
        return e.code();
    }
    ADD_FAILURE() << "expected an exception";
    return Errc::InvariantViolation;
}

TEST(RingMake, BuildsEachKind) {
    EXPECT_EQ(Ring::make(RingKind::Rationals).kind(), RingKind::Rationals);
    const Ring f5 = Ring::make(RingKind::PrimeField, mpz_class(5));
    EXPECT_EQ(f5.modulus(), 5);
    EXPECT_TRUE(f5.is_field());
    EXPECT_FALSE(Ring::integers().is_field());
    EXPECT_EQ(Ring::extension(Ring::rationals()).name(), "QQ[q]");
}

TEST(RingMake, RejectsCompositeAndMissingModulus) {
    EXPECT_EQ(code_of([] { Ring::make(RingKind::PrimeField, mpz_class(6)); }), Errc::NonPrimeModulus);
    EXPECT_EQ(code_of([] { Ring::make(RingKind::PrimeField, mpz_class(1)); }), Errc::NonPrimeModulus);
    EXPECT_EQ(code_of([] { Ring::make(RingKind::PrimeField); }), Errc::NonPrimeModulus);
}

TEST(RingMake, NestingStopsAtTwo) {
    const Ring one = Ring::extension(Ring::integers(), "q");
    const Ring two = Ring::extension(one, "x");
    EXPECT_EQ(two.depth(), 2);
    EXPECT_EQ(code_of([&] { Ring::extension(two, "y"); }), Errc::UnsupportedNesting);
}

TEST(RingEquality, IsStructural) {
    EXPECT_EQ(Ring::prime_field(7), Ring::prime_field(7));
    EXPECT_FALSE(Ring::prime_field(7) == Ring::prime_field(5));
    EXPECT_FALSE(Ring::integers() == Ring::rationals());
    EXPECT_EQ(Ring::extension(Ring::rationals()), Ring::extension(Ring::rationals()));
}

TEST(ScalarArith, Examples) {
    const Ring qq = Ring::rationals();
    const Scalar a = Scalar::from_rational(qq, mpq_class(2, 3));
    const Scalar b = Scalar::from_rational(qq, mpq_class(1, 6));
    EXPECT_EQ(scalar_arith(ScalarOp::Add, a, b), Scalar::from_rational(qq, mpq_class(5, 6)));

    const Ring f5 = Ring::prime_field(5);
    EXPECT_EQ(scalar_arith(ScalarOp::Inv, Scalar::from_int(f5, 3)), Scalar::from_int(f5, 2));

    const Ring zz = Ring::integers();
    EXPECT_EQ(code_of([&] { scalar_arith(ScalarOp::Inv, Scalar::from_int(zz, 2)); }), Errc::NotInvertible);
    EXPECT_EQ(scalar_arith(ScalarOp::Inv, Scalar::from_int(zz, -1)), Scalar::from_int(zz, -1));
    EXPECT_EQ(code_of([&] { scalar_arith(ScalarOp::Inv, Scalar::from_int(qq, 0)); }), Errc::NotInvertible);
}

TEST(ScalarArith, MixedContextsRejected) {
    EXPECT_EQ(code_of([] { (void)(Scalar::from_int(Ring::integers(), 1) + Scalar::from_int(Ring::rationals(), 1)); }),
              Errc::MixedContexts);
    EXPECT_EQ(
        code_of([] { (void)(Scalar::from_int(Ring::prime_field(5), 1) * Scalar::from_int(Ring::prime_field(7), 1)); }),
        Errc::MixedContexts);
}

TEST(ScalarArith, RationalLiteralsOverRings) {
    EXPECT_EQ(code_of([] { Ring::integers().from_rational(mpq_class(1, 2)); }), Errc::RationalOverNonField);
    // 1/2 = 3 in F_5
    EXPECT_EQ(Scalar::from_rational(Ring::prime_field(5), mpq_class(1, 2)), Scalar::from_int(Ring::prime_field(5), 3));
    EXPECT_EQ(code_of([] { Ring::prime_field(5).from_rational(mpq_class(1, 5)); }), Errc::NotInvertible);
    // 4/2 is an integer
    EXPECT_EQ(Scalar::from_rational(Ring::integers(), mpq_class(4, 2)), Scalar::from_int(Ring::integers(), 2));
}

TEST(ScalarArith, PrimeFieldValuesStayReduced) {
    const Ring f5 = Ring::prime_field(5);
    EXPECT_EQ(std::get<mpz_class>(f5.from_int(-1)), 4);
    EXPECT_EQ(std::get<mpz_class>(f5.from_int(12)), 2);
    EXPECT_TRUE(f5.is_zero(f5.neg(f5.zero())));
}

TEST(ScalarArith, ArbitraryPrecision) {
    const Ring zz = Ring::integers();
    Scalar big = Scalar::from_int(zz, 1);
    const Scalar ten = Scalar::from_int(zz, 10);
    for (int i = 0; i < 40; ++i) {
        big = big * ten;
    }
    EXPECT_EQ(std::get<mpz_class>(big.value).get_str(), "1" + std::string(40, '0'));
}

class RingAxioms : public ::testing::TestWithParam<Ring> {};

TEST_P(RingAxioms, HoldOnRandomTriples) {
    const Ring r = GetParam();
    Gen gen(7);
    for (int i = 0; i < 1000; ++i) {
        const Scalar a = gen.scalar(r);
        const Scalar b = gen.scalar(r);
        const Scalar c = gen.scalar(r);
        ASSERT_EQ((a + b) + c, a + (b + c));
        ASSERT_EQ((a * b) * c, a * (b * c));
        ASSERT_EQ(a + b, b + a);
        ASSERT_EQ(a * b, b * a);
        ASSERT_EQ(a * (b + c), a * b + a * c);
        ASSERT_TRUE(r.is_canonical((a * b + c).value));
        if (r.is_field() && !a.is_zero()) {
            ASSERT_EQ(a * inverse(a), Scalar::from_int(r, 1));
        }
    }
}

INSTANTIATE_TEST_SUITE_P(Domains, RingAxioms, ::testing::ValuesIn(testing::domain_rings()),
                         [](const auto& info) {
                             std::string n = info.param.name();
                             for (auto& ch : n) {
                                 if (!std::isalnum(static_cast<unsigned char>(ch))) {
                                     ch = '_';
                                 }
                             }
                             return n;
                         });

TEST(RationalCanonicalForm, ReducedWithPositiveDenominator) {
    const Ring qq = Ring::rationals();
    Gen gen(11);
    for (int i = 0; i < 1000; ++i) {
        const Elem e = qq.mul(gen.elem(qq, 50), gen.elem(qq, 50));
        const auto& v = std::get<mpq_class>(e);
        mpz_class g;
        mpz_gcd(g.get_mpz_t(), v.get_num_mpz_t(), v.get_den_mpz_t());
        ASSERT_EQ(g, 1);
        ASSERT_GT(v.get_den(), 0);
    }
}

TEST(Degree, SentinelOrdering) {
    EXPECT_LT(Degree::neg_inf(), Degree(0));
    EXPECT_LT(Degree::neg_inf(), Degree(-1000));
    EXPECT_TRUE((Degree::neg_inf() + Degree(5)).is_neg_inf());
    EXPECT_EQ(Degree(2) + Degree(3), 5);
    EXPECT_THROW((void)Degree::neg_inf().value(), Error);
}

} // namespace
} // namespace qrules

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

const Ring kQQ = Ring::rationals();

Matrix make(const Ring& r, std::vector<std::vector<long>> rows) {
    Matrix a(r, rows.size(), rows.empty() ? 0 : rows.front().size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
        for (std::size_t j = 0; j < rows[i].size(); ++j) {
            a.at(i, j) = r.from_int(rows[i][j]);
        }
    }
    return a;
}

Vector vec(const Ring& r, std::vector<long> xs) {
    Vector v;
    for (long x : xs) {
        v.push_back(r.from_int(x));
    }
    return v;
}

// Rank by plain fraction elimination on a copy of the entries.
std::size_t oracle_rank(const Matrix& a) {
    std::vector<std::vector<mpq_class>> m(a.rows(), std::vector<mpq_class>(a.cols()));
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) {
            m[i][j] = std::get<mpq_class>(a.at(i, j));
        }
    }
    std::size_t rank = 0;
    for (std::size_t col = 0; col < a.cols() && rank < a.rows(); ++col) {
        std::size_t p = rank;
        while (p < a.rows() && m[p][col] == 0) {
            ++p;
        }
        if (p == a.rows()) {
            continue;
        }
        std::swap(m[p], m[rank]);
        for (std::size_t i = 0; i < a.rows(); ++i) {
            if (i != rank && m[i][col] != 0) {
                const mpq_class f = m[i][col] / m[rank][col];
                for (std::size_t j = 0; j < a.cols(); ++j) {
                    m[i][j] -= f * m[rank][j];
                }
            }
        }
        ++rank;
    }
    return rank;
}

bool all_zero(const Ring& r, const Vector& v) {
    return std::all_of(v.begin(), v.end(), [&](const Elem& e) { return r.is_zero(e); });
}

TEST(Linsolve, IdentityGivesUniqueSolution) {
    const Matrix id = make(kQQ, {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}});
    const Vector b = vec(kQQ, {4, -2, 7});
    const auto result = linsolve_exact(id, b);
    ASSERT_TRUE(std::holds_alternative<UniqueSolution>(result));
    EXPECT_TRUE(vec_equal(kQQ, std::get<UniqueSolution>(result).x, b));
}

TEST(Linsolve, ZeroMatrixHasFullNullspace) {
    const Matrix zero(kQQ, 2, 3);
    const auto result = linsolve_exact(zero, vec(kQQ, {0, 0}));
    ASSERT_TRUE(std::holds_alternative<AffineSpace>(result));
    const auto& space = std::get<AffineSpace>(result);
    EXPECT_EQ(space.nullspace.size(), 3u);
    EXPECT_TRUE(all_zero(kQQ, space.particular));
}

TEST(Linsolve, InconsistentPairHasCertificate) {
    const Matrix a = make(kQQ, {{1, 1}, {2, 2}});
    const Vector b = vec(kQQ, {1, 3});
    const auto result = linsolve_exact(a, b);
    ASSERT_TRUE(std::holds_alternative<Inconsistent>(result));
    const Vector& c = std::get<Inconsistent>(result).certificate;
    // c1 + 2 c2 = 0 and c1 + 3 c2 != 0: c is a multiple of (2, -1).
    const mpq_class c1 = std::get<mpq_class>(c[0]);
    const mpq_class c2 = std::get<mpq_class>(c[1]);
    EXPECT_EQ(c1 + 2 * c2, 0);
    EXPECT_NE(c1 + 3 * c2, 0);
    EXPECT_TRUE(certificate_holds(a, b, c));
}

TEST(Linsolve, Errors) {
    const Ring zz = Ring::integers();
    try {
        linsolve_exact(make(zz, {{1}}), vec(zz, {1}));
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), Errc::RequiresField);
    }
    try {
        linsolve_exact(make(kQQ, {{1, 2}}), vec(kQQ, {1, 2}));
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), Errc::DimensionMismatch);
    }
}

// Rank-deficient systems built as a product of thin random factors.
Matrix random_low_rank(Gen& gen, const Ring& r, std::size_t rows, std::size_t cols, std::size_t inner) {
    Matrix left(r, rows, inner);
    Matrix right(r, inner, cols);
    for (std::size_t i = 0; i < rows; ++i) {
        for (std::size_t k = 0; k < inner; ++k) {
            left.at(i, k) = gen.elem(r, 4);
        }
    }
    for (std::size_t k = 0; k < inner; ++k) {
        for (std::size_t j = 0; j < cols; ++j) {
            right.at(k, j) = gen.elem(r, 4);
        }
    }
    Matrix a(r, rows, cols);
    for (std::size_t i = 0; i < rows; ++i) {
        for (std::size_t j = 0; j < cols; ++j) {
            Elem acc = r.zero();
            for (std::size_t k = 0; k < inner; ++k) {
                r.add_mul(acc, left.at(i, k), right.at(k, j));
            }
            r.reduce(acc);
            a.at(i, j) = acc;
        }
    }
    return a;
}

TEST(Linsolve, RandomConsistentSystems) {
    Gen gen(51);
    for (int trial = 0; trial < 200; ++trial) {
        const auto rows = static_cast<std::size_t>(gen.integer(1, 7));
        const auto cols = static_cast<std::size_t>(gen.integer(1, 7));
        const auto inner = static_cast<std::size_t>(gen.integer(1, 7));
        const Matrix a = random_low_rank(gen, kQQ, rows, cols, inner);
        Vector x0;
        for (std::size_t j = 0; j < cols; ++j) {
            x0.push_back(gen.elem(kQQ));
        }
        const Vector b = mat_vec(a, x0);
        const auto result = linsolve_exact(a, b);
        const std::size_t nullity = cols - oracle_rank(a);
        ASSERT_FALSE(std::holds_alternative<Inconsistent>(result));
        if (const auto* u = std::get_if<UniqueSolution>(&result)) {
            ASSERT_EQ(nullity, 0u);
            ASSERT_TRUE(vec_equal(kQQ, mat_vec(a, u->x), b));
            ASSERT_TRUE(vec_equal(kQQ, u->x, x0));
        } else {
            const auto& space = std::get<AffineSpace>(result);
            ASSERT_EQ(space.nullspace.size(), nullity);
            ASSERT_TRUE(vec_equal(kQQ, mat_vec(a, space.particular), b));
            for (const auto& v : space.nullspace) {
                ASSERT_TRUE(all_zero(kQQ, mat_vec(a, v)));
            }
        }
    }
}

TEST(Linsolve, RandomInconsistentSystems) {
    Gen gen(52);
    const Ring f7 = Ring::prime_field(7);
    for (const Ring& r : {kQQ, f7}) {
        for (int trial = 0; trial < 200; ++trial) {
            const auto cols = static_cast<std::size_t>(gen.integer(1, 5));
            const auto rows = cols + static_cast<std::size_t>(gen.integer(1, 3));
            const Matrix a = random_low_rank(gen, r, rows, cols, cols);
            Vector b;
            for (std::size_t i = 0; i < rows; ++i) {
                b.push_back(gen.elem(r));
            }
            const auto result = linsolve_exact(a, b);
            if (const auto* bad = std::get_if<Inconsistent>(&result)) {
                ASSERT_TRUE(certificate_holds(a, b, bad->certificate));
                // c^T A and c^T b recomputed entry by entry
                for (std::size_t j = 0; j < cols; ++j) {
                    Elem acc = r.zero();
                    for (std::size_t i = 0; i < rows; ++i) {
                        acc = r.add(acc, r.mul(bad->certificate[i], a.at(i, j)));
                    }
                    ASSERT_TRUE(r.is_zero(acc));
                }
            } else if (const auto* u = std::get_if<UniqueSolution>(&result)) {
                ASSERT_TRUE(vec_equal(r, mat_vec(a, u->x), b));
            } else {
                ASSERT_TRUE(vec_equal(r, mat_vec(a, std::get<AffineSpace>(result).particular), b));
            }
        }
    }
}

TEST(Linsolve, CertificateCheckRejectsNonCertificates) {
    const Matrix a = make(kQQ, {{1, 1}, {2, 2}});
    const Vector b = vec(kQQ, {1, 3});
    EXPECT_FALSE(certificate_holds(a, b, vec(kQQ, {1, 0})));
    EXPECT_FALSE(certificate_holds(a, vec(kQQ, {1, 2}), vec(kQQ, {2, -1})));
    EXPECT_FALSE(certificate_holds(a, b, vec(kQQ, {2})));
}

} // namespace
} // namespace qrules

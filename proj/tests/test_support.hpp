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

// Random generators and independent oracles shared by the test suites.
// Oracles work on plain coefficient vectors of mpq_class and never call the
// library's polynomial arithmetic.

#ifndef QRULES_TEST_SUPPORT_HPP
#define QRULES_TEST_SUPPORT_HPP

#include <ostream>
#include <random>
#include <string>
#include <vector>

#include "qrules/qrules.hpp"

namespace qrules {

inline void PrintTo(const Poly& p, std::ostream* os) { *os << format_poly(p); }
inline void PrintTo(const Scalar& s, std::ostream* os) { *os << format_scalar(s); }
inline void PrintTo(const RatFunc& f, std::ostream* os) { *os << format_ratfunc(f); }
inline void PrintTo(const Ring& r, std::ostream* os) { *os << r.name(); }

} // namespace qrules

namespace qrules::testing {

inline std::vector<Ring> domain_rings() {
    return {Ring::integers(), Ring::rationals(), Ring::prime_field(5)};
}

class Gen {
public:
    explicit Gen(std::uint64_t seed) : rng_(seed) {}

    long integer(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng_); }

    Elem elem(const Ring& r, long span = 9) {
        if (r.kind() == RingKind::Rationals) {
            long den = integer(1, span);
            return r.from_rational(mpq_class(integer(-span, span), den));
        }
        return r.from_int(integer(-span, span));
    }

    Elem nonzero_elem(const Ring& r, long span = 9) {
        for (;;) {
            Elem e = elem(r, span);
            if (!r.is_zero(e)) {
                return e;
            }
        }
    }

    Scalar scalar(const Ring& r) { return {r, elem(r)}; }

    /// Random polynomial of degree <= max_degree (may be zero).
    Poly poly(const Ring& r, long max_degree, long span = 9) {
        const long deg = integer(-1, max_degree);
        std::vector<Elem> c;
        for (long i = 0; i <= deg; ++i) {
            c.push_back(elem(r, span));
        }
        return Poly(r, std::move(c));
    }

    Poly nonzero_poly(const Ring& r, long max_degree, long span = 9) {
        for (;;) {
            Poly p = poly(r, max_degree, span);
            if (!p.is_zero()) {
                return p;
            }
        }
    }

    std::mt19937_64& engine() { return rng_; }

private:
    std::mt19937_64 rng_;
};

using Coeffs = std::vector<mpq_class>;

inline Coeffs trim(Coeffs c) {
    while (!c.empty() && c.back() == 0) {
        c.pop_back();
    }
    return c;
}

/// Schoolbook convolution on raw coefficient vectors.
inline Coeffs oracle_mul(const Coeffs& a, const Coeffs& b) {
    if (a.empty() || b.empty()) {
        return {};
    }
    Coeffs out(a.size() + b.size() - 1, mpq_class(0));
    for (std::size_t i = 0; i < a.size(); ++i) {
        for (std::size_t j = 0; j < b.size(); ++j) {
            out[i + j] += a[i] * b[j];
        }
    }
    return trim(out);
}

inline Coeffs oracle_add(const Coeffs& a, const Coeffs& b) {
    Coeffs out(std::max(a.size(), b.size()), mpq_class(0));
    for (std::size_t i = 0; i < a.size(); ++i) {
        out[i] += a[i];
    }
    for (std::size_t i = 0; i < b.size(); ++i) {
        out[i] += b[i];
    }
    return trim(out);
}

inline Coeffs oracle_scale(const Coeffs& a, const mpq_class& c) {
    Coeffs out = a;
    for (auto& x : out) {
        x *= c;
    }
    return trim(out);
}

inline Coeffs oracle_qint(long n) { return Coeffs(static_cast<std::size_t>(n), mpq_class(1)); }

inline Coeffs oracle_monomial(long k, const mpq_class& c = 1) {
    Coeffs out(static_cast<std::size_t>(k) + 1, mpq_class(0));
    out.back() = c;
    return trim(out);
}

/// Coefficients of a polynomial over ZZ or QQ as rationals.
inline Coeffs to_coeffs(const Poly& p) {
    Coeffs out;
    for (const auto& e : p.coeffs()) {
        if (p.ring().kind() == RingKind::Rationals) {
            out.push_back(std::get<mpq_class>(e));
        } else {
            out.push_back(mpq_class(std::get<mpz_class>(e)));
        }
    }
    return out;
}

/// Builds a polynomial over `r` from rational coefficients (integral for ZZ).
inline Poly from_coeffs(const Ring& r, const Coeffs& c) {
    std::vector<Elem> out;
    for (const auto& x : c) {
        out.push_back(r.from_rational(x));
    }
    return Poly(r, std::move(out));
}

inline Poly P(const Ring& r, const char* text) { return parse_poly(text, r); }

} // namespace qrules::testing

#endif // QRULES_TEST_SUPPORT_HPP

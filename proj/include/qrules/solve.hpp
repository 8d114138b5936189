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

// Functional equations attached to quantum addition and multiplication:
//
//   linear:          f_{m+n} = u_n f_m + v_m f_n
//   multiplicative:  f_m(q) f_n(q^m) = f_{mn}
//   quadratic (1):   f_{m+n} = f_m + f_n - (1-q) f_m f_n
//   quadratic (2):   f_{m+n} = q^n f_m + q^m f_n + (1-q) f_m f_n

#ifndef QRULES_SOLVE_HPP
#define QRULES_SOLVE_HPP

#include <functional>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "qrules/poly.hpp"
#include "qrules/ratfunc.hpp"
#include "qrules/rules.hpp"

namespace qrules {

// ---------------------------------------------------------------------------
// Linear equation

/// h [n]_q, the general solution for any linear quantum addition rule.
inline Poly fe_linear_solution(const Poly& h, long n) { return h * quantum_integer(n, h.ring()); }

/// f_1 ... f_N from f_{n+1} = u_1 f_n + v_n f_1. Element k holds f_{k+1}.
inline std::vector<Poly> fe_linear_recover(const LinearRule& rule, const Poly& f1, long count) {
    if (count <= 0) {
        throw Error(Errc::InvalidIndex, "sequence length must be positive");
    }
    f1.check_same(Poly(rule.ring()));
    if (!rule.is_canonical()) {
        throw Error(Errc::NotCanonical, "recursion needs a canonical rule");
    }
    const Poly u1 = rule.expand(1, 1).first;
    std::vector<Poly> f{f1};
    f.reserve(static_cast<std::size_t>(count));
    for (long n = 1; n < count; ++n) {
        const Poly vn = rule.expand(n, 1).second;
        f.push_back(u1 * f.back() + vn * f1);
    }
    return f;
}

/// Checks f_{m+n} = u f_m + v f_n on the grid; fseq[k] holds f_{k+1}.
inline VerifyReport fe_linear_verify(const LinearRule& rule, const std::vector<Poly>& fseq, long max_m, long max_n) {
    detail::check_range(max_m, max_n);
    if (static_cast<long>(fseq.size()) < max_m + max_n) {
        throw Error(Errc::IndexOutOfBound, "sequence has " + std::to_string(fseq.size()) + " terms, grid needs " +
                                               std::to_string(max_m + max_n));
    }
    if (auto b = rule.bound(); b && *b < std::max(max_m, max_n)) {
        throw Error(Errc::IndexOutOfBound, "tabulated bound " + std::to_string(*b) + " is below the requested range");
    }
    return detail::verify_grid<Poly>(max_m, max_n, [&](long m, long n) {
        auto [u, v] = rule.expand(m, n);
        const auto& fm = fseq[static_cast<std::size_t>(m - 1)];
        const auto& fn = fseq[static_cast<std::size_t>(n - 1)];
        return std::pair{fseq[static_cast<std::size_t>(m + n - 1)], u * fm + v * fn};
    });
}

// ---------------------------------------------------------------------------
// Multiplicative equation

inline Poly subst_power(const Poly& f, long m) { return poly_subst_power(f, m); }
inline RatFunc subst_power(const RatFunc& f, long m) { return rf_subst_power(f, m); }

/// f_m * f_n = f_m(q) f_n(q^m).
template <class T>
T mult_rule_apply(const T& fm, const T& fn, long m) {
    if (!(fm.ring() == fn.ring())) {
        throw Error(Errc::MixedContexts, "operands over " + fm.ring().name() + " and " + fn.ring().name());
    }
    return fm * subst_power(fn, m);
}

/// Checks f_m * f_n = f_{mn} with f supplied by a generator defined on
/// 1..defined_up_to.
template <class T>
BasicVerifyReport<T> mult_verify(const std::function<T(long)>& generator, long max_m, long max_n,
                                 long defined_up_to) {
    detail::check_range(max_m, max_n);
    if (defined_up_to < max_m * max_n) {
        throw Error(Errc::IndexOutOfBound, "generator defined up to " + std::to_string(defined_up_to) +
                                               ", grid needs " + std::to_string(max_m * max_n));
    }
    return detail::verify_grid<T>(max_m, max_n, [&](long m, long n) {
        return std::pair{mult_rule_apply(generator(m), generator(n), m), generator(m * n)};
    });
}

template <class T>
BasicVerifyReport<T> mult_verify(const std::vector<T>& fseq, long max_m, long max_n) {
    return mult_verify<T>([&](long k) { return fseq[static_cast<std::size_t>(k - 1)]; }, max_m, max_n,
                          static_cast<long>(fseq.size()));
}

/// lambda(n) q^(t0 (n-1)) prod_r [n]_{q^r}^(t_r) with lambda completely
/// multiplicative and nonzero on every prime.
struct MultFamilySpec {
    std::map<long, Scalar> lambda_on_primes;
    /// Value used for primes absent from lambda_on_primes, if any.
    std::optional<Scalar> lambda_default;
    long t0 = 0;
    std::map<long, long> exponents;
};

namespace detail {

inline bool is_prime(long p) {
    if (p < 2) {
        return false;
    }
    for (long d = 2; d * d <= p; ++d) {
        if (p % d == 0) {
            return false;
        }
    }
    return true;
}

inline std::vector<long> prime_factors(long n) {
    std::vector<long> out;
    for (long d = 2; d * d <= n; ++d) {
        while (n % d == 0) {
            out.push_back(d);
            n /= d;
        }
    }
    if (n > 1) {
        out.push_back(n);
    }
    return out;
}

inline const Scalar& lambda_at_prime(const MultFamilySpec& spec, long p) {
    if (auto it = spec.lambda_on_primes.find(p); it != spec.lambda_on_primes.end()) {
        return it->second;
    }
    if (spec.lambda_default) {
        return *spec.lambda_default;
    }
    throw Error(Errc::MissingPrimeValue, "no value of lambda at the prime " + std::to_string(p));
}

} // namespace detail

inline void validate_family(const MultFamilySpec& spec, const Ring& ring) {
    auto check_value = [&](const Scalar& s, const std::string& where) {
        if (!(s.ring == ring)) {
            throw Error(Errc::MixedContexts, "lambda" + where + " lives in " + s.ring.name());
        }
        if (s.is_zero()) {
            throw Error(Errc::InvalidSpec, "lambda" + where + " is zero; only full-support families are supported");
        }
    };
    for (const auto& [p, value] : spec.lambda_on_primes) {
        if (!detail::is_prime(p)) {
            throw Error(Errc::InvalidSpec, "lambda key " + std::to_string(p) + " is not prime");
        }
        check_value(value, "(" + std::to_string(p) + ")");
    }
    if (spec.lambda_default) {
        check_value(*spec.lambda_default, " default");
    }
    for (const auto& [r, t] : spec.exponents) {
        if (r <= 0) {
            throw Error(Errc::InvalidSpec, "exponent key " + std::to_string(r) + " must be a positive integer");
        }
    }
}

/// lambda(n), extended completely multiplicatively from the primes.
inline Scalar family_lambda(const MultFamilySpec& spec, long n, const Ring& ring) {
    if (n <= 0) {
        throw Error(Errc::InvalidIndex, "family index must be positive");
    }
    Scalar value = Scalar::from_int(ring, 1);
    for (long p : detail::prime_factors(n)) {
        value = value * detail::lambda_at_prime(spec, p);
    }
    return value;
}

inline RatFunc mult_family(const MultFamilySpec& spec, long n, const Ring& ring) {
    if (!ring.is_field()) {
        throw Error(Errc::RequiresField, "family members are rational functions; " + ring.name() + " is not a field");
    }
    validate_family(spec, ring);
    const Scalar lambda = family_lambda(spec, n, ring);
    const Poly one = Poly::constant(ring, ring.one());
    Poly num = Poly::constant(ring, lambda.value);
    Poly den = one;
    const long shift = spec.t0 * (n - 1);
    if (shift >= 0) {
        num = num.shifted(static_cast<std::size_t>(shift));
    } else {
        den = den.shifted(static_cast<std::size_t>(-shift));
    }
    const Poly qn = quantum_integer(n, ring);
    for (const auto& [r, t] : spec.exponents) {
        const Poly factor = poly_pow(poly_subst_power(qn, r), static_cast<unsigned long>(t < 0 ? -t : t));
        if (t >= 0) {
            num *= factor;
        } else {
            den *= factor;
        }
    }
    return RatFunc(num, den);
}

// ---------------------------------------------------------------------------
// Quadratic equations

namespace detail {

inline void check_variant(int variant) {
    if (variant != 1 && variant != 2) {
        throw Error(Errc::InvalidIndex, "quadratic rule variant must be 1 or 2, got " + std::to_string(variant));
    }
}

inline Poly one_minus_q(const Ring& r) { return Poly::from_ints(r, {1, -1}); }

} // namespace detail

/// Variant 1: fm + fn - (1-q) fm fn. Variant 2: q^n fm + q^m fn + (1-q) fm fn.
inline Poly quad_rule_apply(int variant, const Poly& fm, const Poly& fn, long m, long n) {
    detail::check_variant(variant);
    fm.check_same(fn);
    if (m <= 0 || n <= 0) {
        throw Error(Errc::InvalidIndex, "quadratic rule indices must be positive");
    }
    const Ring& r = fm.ring();
    const Poly cross = detail::one_minus_q(r) * fm * fn;
    if (variant == 1) {
        return fm + fn - cross;
    }
    return fm.shifted(static_cast<std::size_t>(n)) + fn.shifted(static_cast<std::size_t>(m)) + cross;
}

/// Closed-form solution f_n of the quadratic equation with initial value f1.
/// The numerator is expanded binomially and divided by (1-q) exactly; a
/// nonzero remainder is reported as InexactDivision.
inline Poly quad_closed_form(int variant, const Poly& f1, long n) {
    detail::check_variant(variant);
    if (n <= 0) {
        throw Error(Errc::InvalidIndex, "closed form index must be positive");
    }
    const Ring& r = f1.ring();
    const Poly one = Poly::constant(r, r.one());
    const Poly w = variant == 1 ? Poly::from_ints(r, {-1, 1}) * f1 : detail::one_minus_q(r) * f1;
    // sum_{k>=1} C(n,k) q^{(n-k) [variant 2]} w^k
    Poly sum(r);
    Poly wk = one;
    const auto un = static_cast<unsigned long>(n);
    for (unsigned long k = 1; k <= un; ++k) {
        wk *= w;
        mpz_class binom;
        mpz_bin_uiui(binom.get_mpz_t(), un, k);
        Poly term = wk.scaled(r.from_integer(binom));
        if (variant == 2) {
            term = term.shifted(un - k);
        }
        sum += term;
    }
    // variant 1: 1 - (1 + w)^n = -sum;  variant 2: (q + w)^n - q^n = sum
    const Poly numerator = variant == 1 ? -sum : sum;
    return poly_div_exact(numerator, detail::one_minus_q(r));
}

} // namespace qrules

#endif // QRULES_SOLVE_HPP

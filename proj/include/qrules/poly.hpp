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

#ifndef QRULES_POLY_HPP
#define QRULES_POLY_HPP

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "qrules/ring.hpp"

namespace qrules {

/// Raised by poly_div_exact; keeps the nonzero remainder so callers can
/// report it.
class InexactDivisionError : public Error {
public:
    InexactDivisionError(Poly quotient, Poly remainder)
        : Error(Errc::InexactDivision, "division leaves a nonzero remainder"),
          quotient_(std::move(quotient)), remainder_(std::move(remainder)) {}

    const Poly& quotient() const noexcept { return quotient_; }
    const Poly& remainder() const noexcept { return remainder_; }

private:
    Poly quotient_;
    Poly remainder_;
};

/// [n]_q = 1 + q + ... + q^(n-1).
inline Poly quantum_integer(long n, const Ring& ring) {
    if (n <= 0) {
        throw Error(Errc::InvalidIndex, "quantum integer index must be positive, got " + std::to_string(n));
    }
    return Poly(ring, std::vector<Elem>(static_cast<std::size_t>(n), ring.one()));
}

inline Poly poly_add(const Poly& f, const Poly& g) { return f + g; }
inline Poly poly_mul(const Poly& f, const Poly& g) { return f * g; }

inline Poly poly_pow(const Poly& f, unsigned long e) {
    Poly result = Poly::constant(f.ring(), f.ring().one());
    Poly base = f;
    while (e > 0) {
        if (e & 1UL) {
            result *= base;
        }
        e >>= 1;
        if (e > 0) {
            base *= base;
        }
    }
    return result;
}

/// f(q^m).
inline Poly poly_subst_power(const Poly& f, long m) {
    if (m <= 0) {
        throw Error(Errc::InvalidIndex, "substitution power must be positive, got " + std::to_string(m));
    }
    if (f.is_zero() || m == 1) {
        return f;
    }
    const Ring& r = f.ring();
    const auto step = static_cast<std::size_t>(m);
    std::vector<Elem> out((f.coeffs().size() - 1) * step + 1, r.zero());
    for (std::size_t i = 0; i < f.coeffs().size(); ++i) {
        out[i * step] = f.coeffs()[i];
    }
    return Poly(r, std::move(out));
}

/// h with f = g*h; throws InexactDivisionError when g does not divide f.
inline Poly poly_div_exact(const Poly& f, const Poly& g) {
    auto dm = detail::divmod(f, g);
    if (!dm.remainder.is_zero()) {
        throw InexactDivisionError(std::move(dm.quotient), std::move(dm.remainder));
    }
    return std::move(dm.quotient);
}

inline Poly make_monic(const Poly& f) {
    if (f.is_zero()) {
        return f;
    }
    return f.scaled(f.ring().inverse(f.leading()));
}

/// Monic gcd by the Euclidean algorithm.
inline Poly poly_gcd(const Poly& f, const Poly& g) {
    f.check_same(g);
    if (!f.ring().is_field()) {
        throw Error(Errc::RequiresField, "gcd over " + f.ring().name());
    }
    if (f.is_zero() && g.is_zero()) {
        throw Error(Errc::BothZero, "gcd(0, 0) is undefined");
    }
    Poly a = f;
    Poly b = g;
    while (!b.is_zero()) {
        Poly r = detail::divmod(a, b).remainder;
        a = std::move(b);
        b = std::move(r);
    }
    return make_monic(a);
}

inline Elem poly_eval(const Poly& f, const Elem& at) {
    const Ring& r = f.ring();
    Elem acc = r.zero();
    for (auto it = f.coeffs().rbegin(); it != f.coeffs().rend(); ++it) {
        acc = r.add(r.mul(acc, at), *it);
    }
    return acc;
}

inline Scalar poly_eval(const Poly& f, const Scalar& at) {
    if (!(f.ring() == at.ring)) {
        throw Error(Errc::MixedContexts, "evaluating a polynomial over " + f.ring().name() + " at an element of " +
                                             at.ring.name());
    }
    return {f.ring(), poly_eval(f, at.value)};
}

/// q-derivative of f(x): the linear map x^n -> [n]_q x^(n-1). The result
/// has coefficients in base[q], where base is the coefficient ring of f.
inline Poly q_derivative(const Poly& f, const std::string& q_name = "q") {
    const Ring& base = f.ring();
    const Ring ext = Ring::extension(base, q_name);
    std::vector<Elem> out;
    for (std::size_t n = 1; n < f.coeffs().size(); ++n) {
        Poly c = quantum_integer(static_cast<long>(n), base).scaled(f.coeffs()[n]);
        out.push_back(ext.from_poly(c));
    }
    return Poly(ext, std::move(out));
}

} // namespace qrules

#endif // QRULES_POLY_HPP

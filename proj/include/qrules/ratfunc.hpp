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

#ifndef QRULES_RATFUNC_HPP
#define QRULES_RATFUNC_HPP

#include <optional>
#include <utility>

#include "qrules/poly.hpp"

namespace qrules {

/// Reduced quotient num/den of polynomials over a field. The denominator
/// is monic and coprime to the numerator, so equality is structural.
class RatFunc {
public:
    /// rf_make: reduce to canonical form.
    RatFunc(const Poly& num, const Poly& den) : num_(num), den_(den) {
        num.check_same(den);
        if (!num.ring().is_field()) {
            throw Error(Errc::RequiresField, "rational functions over " + num.ring().name());
        }
        if (den.is_zero()) {
            throw Error(Errc::DivisionByZero, "rational function with zero denominator");
        }
        canonicalize();
    }

    explicit RatFunc(const Poly& p) : RatFunc(p, Poly::constant(p.ring(), p.ring().one())) {}

    const Poly& num() const noexcept { return num_; }
    const Poly& den() const noexcept { return den_; }
    const Ring& ring() const noexcept { return num_.ring(); }
    bool is_zero() const noexcept { return num_.is_zero(); }

    /// The numerator when the denominator is 1.
    std::optional<Poly> as_poly() const {
        if (den_.degree() == 0) {
            return num_;
        }
        return std::nullopt;
    }

    friend RatFunc operator+(const RatFunc& a, const RatFunc& b) {
        return RatFunc(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    }
    friend RatFunc operator-(const RatFunc& a) { return RatFunc(-a.num_, a.den_); }
    friend RatFunc operator-(const RatFunc& a, const RatFunc& b) { return a + (-b); }
    friend RatFunc operator*(const RatFunc& a, const RatFunc& b) {
        return RatFunc(a.num_ * b.num_, a.den_ * b.den_);
    }
    friend RatFunc operator/(const RatFunc& a, const RatFunc& b) { return a * b.inverse(); }

    RatFunc inverse() const {
        if (is_zero()) {
            throw Error(Errc::DivisionByZero, "inverse of the zero rational function");
        }
        return RatFunc(den_, num_);
    }

    friend bool operator==(const RatFunc& a, const RatFunc& b) { return a.num_ == b.num_ && a.den_ == b.den_; }

private:
    void canonicalize() {
        const Ring& r = num_.ring();
        if (num_.is_zero()) {
            den_ = Poly::constant(r, r.one());
            return;
        }
        Poly g = poly_gcd(num_, den_);
        if (g.degree() > 0) {
            num_ = poly_div_exact(num_, g);
            den_ = poly_div_exact(den_, g);
        }
        const Elem scale = r.inverse(den_.leading());
        num_ = num_.scaled(scale);
        den_ = den_.scaled(scale);
    }

    Poly num_;
    Poly den_;
};

inline RatFunc rf_make(const Poly& num, const Poly& den) { return RatFunc(num, den); }

enum class RfOp { Add, Mul, Inv };

inline RatFunc rf_arith(RfOp op, const RatFunc& a, const std::optional<RatFunc>& b = std::nullopt) {
    if (op == RfOp::Inv) {
        return a.inverse();
    }
    if (!b) {
        throw Error(Errc::DimensionMismatch, "binary rational-function operation needs two operands");
    }
    if (!(a.ring() == b->ring())) {
        throw Error(Errc::MixedContexts, "rational functions over " + a.ring().name() + " and " + b->ring().name());
    }
    return op == RfOp::Add ? a + *b : a * *b;
}

inline RatFunc rf_subst_power(const RatFunc& a, long m) {
    return RatFunc(poly_subst_power(a.num(), m), poly_subst_power(a.den(), m));
}

} // namespace qrules

#endif // QRULES_RATFUNC_HPP

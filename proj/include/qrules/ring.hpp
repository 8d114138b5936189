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

// Coefficient rings chosen at runtime, their elements, and the dense
// polynomial type built on top of them.
//
// Ring elements are untagged (`Elem`); the owning `Ring` interprets them.
// `Scalar` pairs an element with its ring and is the checked public surface.
// Polynomials live here as well because the polynomial extension ring R[q]
// stores polynomials as its elements.

#ifndef QRULES_RING_HPP
#define QRULES_RING_HPP

#include <gmpxx.h>

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <limits>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "qrules/errors.hpp"

namespace qrules {

class Poly;
using PolyPtr = std::shared_ptr<const Poly>;

/// Untagged ring element. Integers and prime-field residues use mpz_class,
/// rationals use mpq_class (always canonical), extension elements are
/// shared immutable polynomials over the base ring.
using Elem = std::variant<mpz_class, mpq_class, PolyPtr>;

enum class RingKind { Integers, Rationals, PrimeField, PolyExtension };

/// Polynomial degree with a sentinel for the zero polynomial that compares
/// below every integer and absorbs addition.
class Degree {
public:
    constexpr explicit Degree(long value) noexcept : value_(value), neg_inf_(false) {}

    static constexpr Degree neg_inf() noexcept { return Degree(); }

    constexpr bool is_neg_inf() const noexcept { return neg_inf_; }

    long value() const {
        if (neg_inf_) {
            throw Error(Errc::InvariantViolation, "degree of the zero polynomial has no integer value");
        }
        return value_;
    }

    friend constexpr Degree operator+(Degree a, Degree b) noexcept {
        if (a.neg_inf_ || b.neg_inf_) {
            return neg_inf();
        }
        return Degree(a.value_ + b.value_);
    }

    friend constexpr bool operator==(Degree a, Degree b) noexcept {
        return a.neg_inf_ == b.neg_inf_ && (a.neg_inf_ || a.value_ == b.value_);
    }

    friend constexpr std::strong_ordering operator<=>(Degree a, Degree b) noexcept {
        if (a.neg_inf_ || b.neg_inf_) {
            return b.neg_inf_ <=> a.neg_inf_;
        }
        return a.value_ <=> b.value_;
    }

    friend constexpr bool operator==(Degree a, long b) noexcept { return a == Degree(b); }
    friend constexpr std::strong_ordering operator<=>(Degree a, long b) noexcept { return a <=> Degree(b); }

private:
    constexpr Degree() noexcept : value_(0), neg_inf_(true) {}

    long value_;
    bool neg_inf_;
};

/// Descriptor of a commutative coefficient ring with 1. Only integral
/// domains are offered: ZZ, QQ, F_p and polynomial extensions R[x] of
/// those, nested at most twice.
class Ring {
public:
    static constexpr int kMaxNesting = 2;

    static Ring integers() { return Ring(std::make_shared<const Impl>(Impl{RingKind::Integers, {}, {}, {}, 0})); }
    static Ring rationals() { return Ring(std::make_shared<const Impl>(Impl{RingKind::Rationals, {}, {}, {}, 0})); }

    static Ring prime_field(const mpz_class& p) {
        if (p < 2 || mpz_probab_prime_p(p.get_mpz_t(), 40) == 0) {
            throw Error(Errc::NonPrimeModulus, "modulus " + p.get_str() + " is not prime");
        }
        return Ring(std::make_shared<const Impl>(Impl{RingKind::PrimeField, p, {}, {}, 0}));
    }

    static Ring extension(const Ring& base, std::string variable = "q") {
        const int depth = base.depth() + 1;
        if (depth > kMaxNesting) {
            throw Error(Errc::UnsupportedNesting, "polynomial extension depth " + std::to_string(depth) + " exceeds " +
                                                      std::to_string(kMaxNesting));
        }
        return Ring(std::make_shared<const Impl>(
            Impl{RingKind::PolyExtension, {}, std::make_shared<const Ring>(base), std::move(variable), depth}));
    }

    static Ring make(RingKind kind, const std::optional<mpz_class>& modulus = std::nullopt,
                     const std::optional<Ring>& base = std::nullopt, std::string variable = "q") {
        switch (kind) {
        case RingKind::Integers: return integers();
        case RingKind::Rationals: return rationals();
        case RingKind::PrimeField:
            if (!modulus) {
                throw Error(Errc::NonPrimeModulus, "prime field requires a modulus");
            }
            return prime_field(*modulus);
        case RingKind::PolyExtension:
            if (!base) {
                throw Error(Errc::UnsupportedNesting, "polynomial extension requires a base ring");
            }
            return extension(*base, std::move(variable));
        }
        throw Error(Errc::InvariantViolation, "unknown ring kind");
    }

    RingKind kind() const noexcept { return impl_->kind; }
    bool is_field() const noexcept { return kind() == RingKind::Rationals || kind() == RingKind::PrimeField; }
    int depth() const noexcept { return impl_->depth; }

    const mpz_class& modulus() const {
        if (kind() != RingKind::PrimeField) {
            throw Error(Errc::InvariantViolation, "modulus requested from a non prime-field ring");
        }
        return impl_->modulus;
    }

    const Ring& base() const {
        if (kind() != RingKind::PolyExtension) {
            throw Error(Errc::InvariantViolation, "base requested from a non-extension ring");
        }
        return *impl_->base;
    }

    const std::string& variable() const { return impl_->variable; }

    /// "ZZ", "QQ", "Fp:5", "QQ[q]".
    std::string name() const {
        switch (kind()) {
        case RingKind::Integers: return "ZZ";
        case RingKind::Rationals: return "QQ";
        case RingKind::PrimeField: return "Fp:" + impl_->modulus.get_str();
        case RingKind::PolyExtension: return base().name() + "[" + variable() + "]";
        }
        return "?";
    }

    friend bool operator==(const Ring& a, const Ring& b) {
        if (a.impl_ == b.impl_) {
            return true;
        }
        if (a.kind() != b.kind()) {
            return false;
        }
        switch (a.kind()) {
        case RingKind::Integers:
        case RingKind::Rationals: return true;
        case RingKind::PrimeField: return a.impl_->modulus == b.impl_->modulus;
        case RingKind::PolyExtension: return a.variable() == b.variable() && a.base() == b.base();
        }
        return false;
    }

    Elem zero() const;
    Elem one() const;
    Elem from_integer(const mpz_class& n) const;
    Elem from_int(long n) const { return from_integer(mpz_class(n)); }
    /// Throws RationalOverNonField unless the ring contains 1/den.
    Elem from_rational(const mpq_class& r) const;
    Elem from_poly(const Poly& p) const;

    bool is_zero(const Elem& a) const;
    bool equal(const Elem& a, const Elem& b) const;

    Elem add(const Elem& a, const Elem& b) const;
    Elem sub(const Elem& a, const Elem& b) const;
    Elem neg(const Elem& a) const;
    Elem mul(const Elem& a, const Elem& b) const;

    /// acc += a*b. Prime-field results are left unreduced until reduce().
    void add_mul(Elem& acc, const Elem& a, const Elem& b) const;
    void reduce(Elem& a) const;

    std::optional<Elem> try_inverse(const Elem& a) const;
    Elem inverse(const Elem& a) const;
    /// a/b when the quotient exists in the ring.
    std::optional<Elem> try_divide(const Elem& a, const Elem& b) const;

    /// Representation invariant of a stored element.
    bool is_canonical(const Elem& a) const;

private:
    struct Impl {
        RingKind kind;
        mpz_class modulus;
        std::shared_ptr<const Ring> base;
        std::string variable;
        int depth;
    };

    explicit Ring(std::shared_ptr<const Impl> impl) : impl_(std::move(impl)) {}

    std::shared_ptr<const Impl> impl_;
};

/// Dense univariate polynomial; coeffs()[i] is the coefficient of q^i.
/// The zero polynomial is the empty sequence, otherwise the last stored
/// coefficient is nonzero.
class Poly {
public:
    explicit Poly(Ring ring) : ring_(std::move(ring)) {}

    Poly(Ring ring, std::vector<Elem> coeffs) : ring_(std::move(ring)), coeffs_(std::move(coeffs)) { normalize(); }

    static Poly constant(const Ring& ring, Elem c) { return Poly(ring, std::vector<Elem>{std::move(c)}); }

    static Poly monomial(const Ring& ring, std::size_t power, Elem c) {
        std::vector<Elem> coeffs(power + 1, ring.zero());
        coeffs[power] = std::move(c);
        return Poly(ring, std::move(coeffs));
    }

    /// The variable itself, q.
    static Poly variable(const Ring& ring) { return monomial(ring, 1, ring.one()); }

    static Poly from_ints(const Ring& ring, std::initializer_list<long> coeffs) {
        std::vector<Elem> out;
        out.reserve(coeffs.size());
        for (long c : coeffs) {
            out.push_back(ring.from_int(c));
        }
        return Poly(ring, std::move(out));
    }

    const Ring& ring() const noexcept { return ring_; }
    const std::vector<Elem>& coeffs() const noexcept { return coeffs_; }
    bool is_zero() const noexcept { return coeffs_.empty(); }

    Degree degree() const noexcept {
        return coeffs_.empty() ? Degree::neg_inf() : Degree(static_cast<long>(coeffs_.size()) - 1);
    }

    Elem coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : ring_.zero(); }

    const Elem& leading() const {
        if (coeffs_.empty()) {
            throw Error(Errc::InvariantViolation, "leading coefficient of the zero polynomial");
        }
        return coeffs_.back();
    }

    Poly scaled(const Elem& c) const {
        std::vector<Elem> out;
        out.reserve(coeffs_.size());
        for (const auto& a : coeffs_) {
            out.push_back(ring_.mul(a, c));
        }
        return Poly(ring_, std::move(out));
    }

    /// Multiply by q^k.
    Poly shifted(std::size_t k) const {
        if (is_zero()) {
            return *this;
        }
        std::vector<Elem> out(k, ring_.zero());
        out.insert(out.end(), coeffs_.begin(), coeffs_.end());
        return Poly(ring_, std::move(out));
    }

    Poly& operator+=(const Poly& other) {
        check_same(other);
        if (other.coeffs_.size() > coeffs_.size()) {
            coeffs_.resize(other.coeffs_.size(), ring_.zero());
        }
        for (std::size_t i = 0; i < other.coeffs_.size(); ++i) {
            coeffs_[i] = ring_.add(coeffs_[i], other.coeffs_[i]);
        }
        normalize();
        return *this;
    }

    Poly& operator-=(const Poly& other) {
        check_same(other);
        if (other.coeffs_.size() > coeffs_.size()) {
            coeffs_.resize(other.coeffs_.size(), ring_.zero());
        }
        for (std::size_t i = 0; i < other.coeffs_.size(); ++i) {
            coeffs_[i] = ring_.sub(coeffs_[i], other.coeffs_[i]);
        }
        normalize();
        return *this;
    }

    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }

    friend Poly operator-(const Poly& a) {
        std::vector<Elem> out;
        out.reserve(a.coeffs_.size());
        for (const auto& c : a.coeffs_) {
            out.push_back(a.ring_.neg(c));
        }
        return Poly(a.ring_, std::move(out));
    }

    friend Poly operator*(const Poly& a, const Poly& b) {
        a.check_same(b);
        if (a.is_zero() || b.is_zero()) {
            return Poly(a.ring_);
        }
        const Ring& r = a.ring_;
        std::vector<Elem> out(a.coeffs_.size() + b.coeffs_.size() - 1, r.zero());
        for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
            if (r.is_zero(a.coeffs_[i])) {
                continue;
            }
            for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
                r.add_mul(out[i + j], a.coeffs_[i], b.coeffs_[j]);
            }
        }
        for (auto& c : out) {
            r.reduce(c);
        }
        return Poly(r, std::move(out));
    }

    Poly& operator*=(const Poly& other) { return *this = *this * other; }

    friend bool operator==(const Poly& a, const Poly& b) {
        if (!(a.ring_ == b.ring_) || a.coeffs_.size() != b.coeffs_.size()) {
            return false;
        }
        for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
            if (!a.ring_.equal(a.coeffs_[i], b.coeffs_[i])) {
                return false;
            }
        }
        return true;
    }

    void check_same(const Poly& other) const {
        if (!(ring_ == other.ring_)) {
            throw Error(Errc::MixedContexts, "polynomials over " + ring_.name() + " and " + other.ring_.name());
        }
    }

private:
    void normalize() {
        while (!coeffs_.empty() && ring_.is_zero(coeffs_.back())) {
            coeffs_.pop_back();
        }
    }

    Ring ring_;
    std::vector<Elem> coeffs_;
};

namespace detail {

struct DivMod {
    Poly quotient;
    Poly remainder;
};

/// Long division that stops as soon as a leading coefficient is not
/// divisible in the ring. Over an integral domain the remainder is zero
/// exactly when g divides f.
inline DivMod divmod(const Poly& f, const Poly& g) {
    f.check_same(g);
    if (g.is_zero()) {
        throw Error(Errc::DivisionByZero, "polynomial division by zero");
    }
    const Ring& r = f.ring();
    const std::size_t dg = g.coeffs().size() - 1;
    std::vector<Elem> rem = f.coeffs();
    std::vector<Elem> quot(rem.size() >= dg + 1 ? rem.size() - dg : 0, r.zero());
    const Elem& lead = g.leading();
    while (!rem.empty() && rem.size() - 1 >= dg) {
        auto c = r.try_divide(rem.back(), lead);
        if (!c) {
            break;
        }
        const std::size_t shift = rem.size() - 1 - dg;
        quot[shift] = *c;
        for (std::size_t j = 0; j <= dg; ++j) {
            rem[shift + j] = r.sub(rem[shift + j], r.mul(*c, g.coeffs()[j]));
        }
        while (!rem.empty() && r.is_zero(rem.back())) {
            rem.pop_back();
        }
    }
    return {Poly(r, std::move(quot)), Poly(r, std::move(rem))};
}

inline const mpz_class& as_int(const Elem& a) { return std::get<mpz_class>(a); }
inline const mpq_class& as_rat(const Elem& a) { return std::get<mpq_class>(a); }
inline const Poly& as_poly(const Elem& a) { return *std::get<PolyPtr>(a); }

inline mpz_class mod_floor(const mpz_class& a, const mpz_class& p) {
    mpz_class r;
    mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), p.get_mpz_t());
    return r;
}

} // namespace detail

inline Elem Ring::zero() const { return from_int(0); }
inline Elem Ring::one() const { return from_int(1); }

inline Elem Ring::from_integer(const mpz_class& n) const {
    switch (kind()) {
    case RingKind::Integers: return n;
    case RingKind::Rationals: return mpq_class(n);
    case RingKind::PrimeField: return detail::mod_floor(n, impl_->modulus);
    case RingKind::PolyExtension: {
        const Ring& b = base();
        return std::make_shared<const Poly>(Poly::constant(b, b.from_integer(n)));
    }
    }
    throw Error(Errc::InvariantViolation, "unknown ring kind");
}

inline Elem Ring::from_rational(const mpq_class& value) const {
    mpq_class r(value);
    r.canonicalize();
    if (r.get_den() == 1) {
        return from_integer(r.get_num());
    }
    switch (kind()) {
    case RingKind::Integers:
        throw Error(Errc::RationalOverNonField, "rational " + r.get_str() + " is not an element of ZZ");
    case RingKind::Rationals: return r;
    case RingKind::PrimeField: {
        auto den = try_inverse(from_integer(r.get_den()));
        if (!den) {
            throw Error(Errc::NotInvertible, "denominator " + r.get_den().get_str() + " vanishes in " + name());
        }
        return mul(from_integer(r.get_num()), *den);
    }
    case RingKind::PolyExtension: {
        const Ring& b = base();
        return std::make_shared<const Poly>(Poly::constant(b, b.from_rational(r)));
    }
    }
    throw Error(Errc::InvariantViolation, "unknown ring kind");
}

inline Elem Ring::from_poly(const Poly& p) const {
    if (kind() != RingKind::PolyExtension || !(p.ring() == base())) {
        throw Error(Errc::MixedContexts, "polynomial over " + p.ring().name() + " is not an element of " + name());
    }
    return std::make_shared<const Poly>(p);
}

inline bool Ring::is_zero(const Elem& a) const {
    switch (kind()) {
    case RingKind::Integers:
    case RingKind::PrimeField: return sgn(detail::as_int(a)) == 0;
    case RingKind::Rationals: return sgn(detail::as_rat(a)) == 0;
    case RingKind::PolyExtension: return detail::as_poly(a).is_zero();
    }
    return false;
}

inline bool Ring::equal(const Elem& a, const Elem& b) const {
    switch (kind()) {
    case RingKind::Integers:
    case RingKind::PrimeField: return detail::as_int(a) == detail::as_int(b);
    case RingKind::Rationals: return detail::as_rat(a) == detail::as_rat(b);
    case RingKind::PolyExtension: return detail::as_poly(a) == detail::as_poly(b);
    }
    return false;
}

inline Elem Ring::add(const Elem& a, const Elem& b) const {
    switch (kind()) {
    case RingKind::Integers: return mpz_class(detail::as_int(a) + detail::as_int(b));
    case RingKind::Rationals: return mpq_class(detail::as_rat(a) + detail::as_rat(b));
    case RingKind::PrimeField: {
        mpz_class s = detail::as_int(a) + detail::as_int(b);
        if (s >= impl_->modulus) {
            s -= impl_->modulus;
        }
        return s;
    }
    case RingKind::PolyExtension: return std::make_shared<const Poly>(detail::as_poly(a) + detail::as_poly(b));
    }
    throw Error(Errc::InvariantViolation, "unknown ring kind");
}

inline Elem Ring::neg(const Elem& a) const {
    switch (kind()) {
    case RingKind::Integers: return mpz_class(-detail::as_int(a));
    case RingKind::Rationals: return mpq_class(-detail::as_rat(a));
    case RingKind::PrimeField: {
        const auto& v = detail::as_int(a);
        return sgn(v) == 0 ? v : mpz_class(impl_->modulus - v);
    }
    case RingKind::PolyExtension: return std::make_shared<const Poly>(-detail::as_poly(a));
    }
    throw Error(Errc::InvariantViolation, "unknown ring kind");
}

inline Elem Ring::sub(const Elem& a, const Elem& b) const {
    switch (kind()) {
    case RingKind::Integers: return mpz_class(detail::as_int(a) - detail::as_int(b));
    case RingKind::Rationals: return mpq_class(detail::as_rat(a) - detail::as_rat(b));
    case RingKind::PrimeField: return add(a, neg(b));
    case RingKind::PolyExtension: return std::make_shared<const Poly>(detail::as_poly(a) - detail::as_poly(b));
    }
    throw Error(Errc::InvariantViolation, "unknown ring kind");
}

inline Elem Ring::mul(const Elem& a, const Elem& b) const {
    switch (kind()) {
    case RingKind::Integers: return mpz_class(detail::as_int(a) * detail::as_int(b));
    case RingKind::Rationals: return mpq_class(detail::as_rat(a) * detail::as_rat(b));
    case RingKind::PrimeField: return detail::mod_floor(detail::as_int(a) * detail::as_int(b), impl_->modulus);
    case RingKind::PolyExtension: return std::make_shared<const Poly>(detail::as_poly(a) * detail::as_poly(b));
    }
    throw Error(Errc::InvariantViolation, "unknown ring kind");
}

inline void Ring::add_mul(Elem& acc, const Elem& a, const Elem& b) const {
    switch (kind()) {
    case RingKind::Integers:
    case RingKind::PrimeField: {
        auto& x = std::get<mpz_class>(acc);
        mpz_addmul(x.get_mpz_t(), detail::as_int(a).get_mpz_t(), detail::as_int(b).get_mpz_t());
        return;
    }
    case RingKind::Rationals: std::get<mpq_class>(acc) += detail::as_rat(a) * detail::as_rat(b); return;
    case RingKind::PolyExtension: acc = add(acc, mul(a, b)); return;
    }
}

inline void Ring::reduce(Elem& a) const {
    if (kind() == RingKind::PrimeField) {
        auto& x = std::get<mpz_class>(a);
        if (x < 0 || x >= impl_->modulus) {
            x = detail::mod_floor(x, impl_->modulus);
        }
    }
}

inline std::optional<Elem> Ring::try_inverse(const Elem& a) const {
    if (is_zero(a)) {
        return std::nullopt;
    }
    switch (kind()) {
    case RingKind::Integers: {
        const auto& v = detail::as_int(a);
        if (v == 1 || v == -1) {
            return v;
        }
        return std::nullopt;
    }
    case RingKind::Rationals: return mpq_class(1 / detail::as_rat(a));
    case RingKind::PrimeField: {
        mpz_class inv;
        mpz_invert(inv.get_mpz_t(), detail::as_int(a).get_mpz_t(), impl_->modulus.get_mpz_t());
        return inv;
    }
    case RingKind::PolyExtension: {
        const Poly& p = detail::as_poly(a);
        if (p.degree() != 0) {
            return std::nullopt;
        }
        auto c = base().try_inverse(p.coeffs()[0]);
        if (!c) {
            return std::nullopt;
        }
        return std::make_shared<const Poly>(Poly::constant(base(), *c));
    }
    }
    return std::nullopt;
}

inline Elem Ring::inverse(const Elem& a) const {
    auto inv = try_inverse(a);
    if (!inv) {
        throw Error(Errc::NotInvertible, "element is not a unit in " + name());
    }
    return *inv;
}

inline std::optional<Elem> Ring::try_divide(const Elem& a, const Elem& b) const {
    if (is_zero(b)) {
        return std::nullopt;
    }
    switch (kind()) {
    case RingKind::Integers: {
        const auto& x = detail::as_int(a);
        const auto& y = detail::as_int(b);
        if (!mpz_divisible_p(x.get_mpz_t(), y.get_mpz_t())) {
            return std::nullopt;
        }
        mpz_class out;
        mpz_divexact(out.get_mpz_t(), x.get_mpz_t(), y.get_mpz_t());
        return out;
    }
    case RingKind::Rationals: return mpq_class(detail::as_rat(a) / detail::as_rat(b));
    case RingKind::PrimeField: return mul(a, *try_inverse(b));
    case RingKind::PolyExtension: {
        auto dm = detail::divmod(detail::as_poly(a), detail::as_poly(b));
        if (!dm.remainder.is_zero()) {
            return std::nullopt;
        }
        return std::make_shared<const Poly>(std::move(dm.quotient));
    }
    }
    return std::nullopt;
}

inline bool Ring::is_canonical(const Elem& a) const {
    switch (kind()) {
    case RingKind::Integers: return std::holds_alternative<mpz_class>(a);
    case RingKind::Rationals: {
        if (!std::holds_alternative<mpq_class>(a)) {
            return false;
        }
        const auto& r = detail::as_rat(a);
        mpz_class g;
        mpz_gcd(g.get_mpz_t(), r.get_num_mpz_t(), r.get_den_mpz_t());
        return r.get_den() > 0 && g == 1;
    }
    case RingKind::PrimeField: {
        if (!std::holds_alternative<mpz_class>(a)) {
            return false;
        }
        const auto& v = detail::as_int(a);
        return v >= 0 && v < impl_->modulus;
    }
    case RingKind::PolyExtension:
        return std::holds_alternative<PolyPtr>(a) && std::get<PolyPtr>(a) && detail::as_poly(a).ring() == base();
    }
    return false;
}

/// A ring element tagged with its ring.
struct Scalar {
    Ring ring;
    Elem value;

    static Scalar from_int(const Ring& ring, long n) { return {ring, ring.from_int(n)}; }
    static Scalar from_rational(const Ring& ring, const mpq_class& r) { return {ring, ring.from_rational(r)}; }

    bool is_zero() const { return ring.is_zero(value); }

    friend bool operator==(const Scalar& a, const Scalar& b) { return a.ring == b.ring && a.ring.equal(a.value, b.value); }
};

enum class ScalarOp { Add, Mul, Neg, Inv };

inline Scalar scalar_arith(ScalarOp op, const Scalar& a, const std::optional<Scalar>& b = std::nullopt) {
    const bool binary = op == ScalarOp::Add || op == ScalarOp::Mul;
    if (binary) {
        if (!b) {
            throw Error(Errc::DimensionMismatch, "binary scalar operation needs two operands");
        }
        if (!(a.ring == b->ring)) {
            throw Error(Errc::MixedContexts, "scalars over " + a.ring.name() + " and " + b->ring.name());
        }
    }
    switch (op) {
    case ScalarOp::Add: return {a.ring, a.ring.add(a.value, b->value)};
    case ScalarOp::Mul: return {a.ring, a.ring.mul(a.value, b->value)};
    case ScalarOp::Neg: return {a.ring, a.ring.neg(a.value)};
    case ScalarOp::Inv: return {a.ring, a.ring.inverse(a.value)};
    }
    throw Error(Errc::InvariantViolation, "unknown scalar operation");
}

inline Scalar operator+(const Scalar& a, const Scalar& b) { return scalar_arith(ScalarOp::Add, a, b); }
inline Scalar operator*(const Scalar& a, const Scalar& b) { return scalar_arith(ScalarOp::Mul, a, b); }
inline Scalar operator-(const Scalar& a) { return scalar_arith(ScalarOp::Neg, a); }
inline Scalar operator-(const Scalar& a, const Scalar& b) { return a + (-b); }
inline Scalar inverse(const Scalar& a) { return scalar_arith(ScalarOp::Inv, a); }

} // namespace qrules

#endif // QRULES_RING_HPP

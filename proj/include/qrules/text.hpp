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

// Polynomial text: a recursive-descent parser and the canonical printer.
//
//   expr   := ['+'|'-'] term (('+'|'-') term)*
//   term   := factor ('*' factor)*        "3q^2" is read as "3*q^2"
//   factor := atom ('^' nonneg-int)?
//   atom   := int | int '/' int | 'q' | '(' expr ')'
//
// Output is in ascending powers, "1 + q + q^2", with unit coefficients
// elided before the variable and the zero polynomial printed as "0".

#ifndef QRULES_TEXT_HPP
#define QRULES_TEXT_HPP

#include <cctype>
#include <cstdlib>
#include <string>
#include <string_view>

#include "qrules/poly.hpp"
#include "qrules/ratfunc.hpp"

namespace qrules {

inline constexpr long kDefaultMaxDegree = 4096;

/// Degree cap for parsed input: QRULES_MAX_DEGREE when set to a positive
/// integer, otherwise 4096.
inline long max_degree_from_env() {
    if (const char* env = std::getenv("QRULES_MAX_DEGREE")) {
        char* end = nullptr;
        const long v = std::strtol(env, &end, 10);
        if (end != env && *end == '\0' && v > 0) {
            return v;
        }
    }
    return kDefaultMaxDegree;
}

std::string format_poly(const Poly& f, std::string_view var = "q");

inline std::string format_elem(const Ring& ring, const Elem& e) {
    switch (ring.kind()) {
    case RingKind::Integers:
    case RingKind::PrimeField: return detail::as_int(e).get_str();
    case RingKind::Rationals: return detail::as_rat(e).get_str();
    case RingKind::PolyExtension: return format_poly(detail::as_poly(e), ring.variable());
    }
    return "?";
}

inline std::string format_scalar(const Scalar& s) { return format_elem(s.ring, s.value); }

namespace detail {

inline bool is_negative(const Ring& ring, const Elem& e) {
    switch (ring.kind()) {
    case RingKind::Integers: return sgn(as_int(e)) < 0;
    case RingKind::Rationals: return sgn(as_rat(e)) < 0;
    default: return false;
    }
}

inline std::string monomial_text(std::string_view var, std::size_t power) {
    if (power == 1) {
        return std::string(var);
    }
    return std::string(var) + "^" + std::to_string(power);
}

} // namespace detail

inline std::string format_poly(const Poly& f, std::string_view var) {
    if (f.is_zero()) {
        return "0";
    }
    const Ring& r = f.ring();
    const bool nested = r.kind() == RingKind::PolyExtension;
    std::string out;
    for (std::size_t i = 0; i < f.coeffs().size(); ++i) {
        const Elem& c = f.coeffs()[i];
        if (r.is_zero(c)) {
            continue;
        }
        const bool negative = detail::is_negative(r, c);
        const Elem magnitude = negative ? r.neg(c) : c;
        if (out.empty()) {
            out += negative ? "-" : "";
        } else {
            out += negative ? " - " : " + ";
        }
        std::string coeff = format_elem(r, magnitude);
        if (nested && detail::as_poly(magnitude).degree() > 0) {
            coeff = "(" + coeff + ")";
        }
        if (i == 0) {
            out += coeff;
        } else if (r.equal(magnitude, r.one())) {
            out += detail::monomial_text(var, i);
        } else {
            out += coeff + "*" + detail::monomial_text(var, i);
        }
    }
    return out;
}

inline std::string format_ratfunc(const RatFunc& f) {
    if (f.den().degree() == 0) {
        return format_poly(f.num());
    }
    const bool bare_num = f.num().coeffs().size() <= 1;
    const std::string num = bare_num ? format_poly(f.num()) : "(" + format_poly(f.num()) + ")";
    return num + " / (" + format_poly(f.den()) + ")";
}

namespace detail {

class PolyParser {
public:
    PolyParser(std::string_view text, const Ring& ring, long max_degree)
        : text_(text), ring_(ring), max_degree_(max_degree) {}

    Poly parse() {
        if (ring_.kind() == RingKind::PolyExtension) {
            throw ParseError(Errc::ParseError, 0, "polynomial text is read over ZZ, QQ or Fp only");
        }
        Poly result = expr();
        skip_space();
        if (pos_ != text_.size()) {
            fail("unexpected '" + std::string(1, text_[pos_]) + "'");
        }
        return result;
    }

private:
    [[noreturn]] void fail(const std::string& what, Errc code = Errc::ParseError) const {
        throw ParseError(code, pos_, what);
    }

    void skip_space() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) {
            ++pos_;
        }
    }

    char peek() {
        skip_space();
        return pos_ < text_.size() ? text_[pos_] : '\0';
    }

    void check_degree(const Poly& p) const {
        if (p.degree() > max_degree_) {
            fail("degree exceeds the cap of " + std::to_string(max_degree_), Errc::DegreeCapExceeded);
        }
    }

    Poly expr() {
        bool negate = false;
        if (const char c = peek(); c == '-' || c == '+') {
            negate = c == '-';
            ++pos_;
        }
        Poly acc = term();
        if (negate) {
            acc = -acc;
        }
        for (char c = peek(); c == '+' || c == '-'; c = peek()) {
            ++pos_;
            Poly rhs = term();
            acc = c == '+' ? acc + rhs : acc - rhs;
        }
        return acc;
    }

    Poly term() {
        bool literal = false;
        Poly acc = factor(literal);
        for (;;) {
            const char c = peek();
            if (c == '*') {
                ++pos_;
                acc *= factor(literal);
            } else if (c == 'q' && literal) {
                acc *= factor(literal);
            } else {
                break;
            }
            check_degree(acc);
        }
        return acc;
    }

    Poly factor(bool& literal) {
        Poly base = atom(literal);
        if (peek() != '^') {
            return base;
        }
        ++pos_;
        if (peek() == '-') {
            fail("negative exponent", Errc::NegativeExponent);
        }
        const mpz_class e = integer("exponent");
        if (e > max_degree_) {
            fail("exponent exceeds the cap of " + std::to_string(max_degree_), Errc::DegreeCapExceeded);
        }
        if (!base.is_zero() && base.degree().value() * e.get_si() > max_degree_) {
            fail("degree exceeds the cap of " + std::to_string(max_degree_), Errc::DegreeCapExceeded);
        }
        return poly_pow(base, e.get_ui());
    }

    Poly atom(bool& literal) {
        const char c = peek();
        const std::size_t start = pos_;
        if (c == 'q') {
            ++pos_;
            literal = false;
            return Poly::variable(ring_);
        }
        if (c == '(') {
            ++pos_;
            Poly inner = expr();
            if (peek() != ')') {
                fail("expected ')'");
            }
            ++pos_;
            literal = false;
            return inner;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            mpz_class num = integer("integer");
            literal = true;
            if (peek() == '/') {
                ++pos_;
                mpz_class den = integer("denominator");
                if (den == 0) {
                    pos_ = start;
                    fail("division by zero", Errc::DivisionByZero);
                }
                try {
                    return Poly::constant(ring_, ring_.from_rational(mpq_class(num, den)));
                } catch (const ParseError&) {
                    throw;
                } catch (const Error& e) {
                    pos_ = start;
                    fail(e.detail(), e.code());
                }
            }
            return Poly::constant(ring_, ring_.from_integer(num));
        }
        if (c == '\0') {
            fail("unexpected end of input");
        }
        fail("unexpected '" + std::string(1, c) + "'");
    }

    mpz_class integer(const char* what) {
        skip_space();
        const std::size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
            ++pos_;
        }
        if (start == pos_) {
            fail(std::string("expected ") + what);
        }
        return mpz_class(std::string(text_.substr(start, pos_ - start)), 10);
    }

    std::string_view text_;
    const Ring& ring_;
    long max_degree_;
    std::size_t pos_ = 0;
};

} // namespace detail

inline Poly parse_poly(std::string_view text, const Ring& ring, long max_degree = max_degree_from_env()) {
    return detail::PolyParser(text, ring, max_degree).parse();
}

/// A constant expression such as "3", "-2" or "1/2".
inline Scalar parse_scalar(std::string_view text, const Ring& ring) {
    const Poly p = parse_poly(text, ring);
    if (p.degree() > 0) {
        throw ParseError(Errc::ParseError, 0, "expected a constant, got a polynomial of positive degree");
    }
    return {ring, p.coeff(0)};
}

/// "ZZ", "QQ" or "Fp:<p>".
inline Ring parse_ring(std::string_view text) {
    if (text == "ZZ") {
        return Ring::integers();
    }
    if (text == "QQ") {
        return Ring::rationals();
    }
    if (text.substr(0, 3) == "Fp:" && text.size() > 3) {
        const std::string digits(text.substr(3));
        for (char c : digits) {
            if (!std::isdigit(static_cast<unsigned char>(c))) {
                throw ParseError(Errc::ParseError, 3, "prime modulus must be a decimal integer");
            }
        }
        return Ring::prime_field(mpz_class(digits, 10));
    }
    throw ParseError(Errc::ParseError, 0, "unknown ring '" + std::string(text) + "'; expected ZZ, QQ or Fp:<p>");
}

} // namespace qrules

#endif // QRULES_TEXT_HPP

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

// Linear quantum addition rules [m+n]_q = u [m]_q + v [n]_q and zero
// identities s [m]_q + t [n]_q = 0.
//
// A rule whose coefficients depend on n (for u) and m (for v) is fully
// determined by one polynomial z:
//
//     u_n = 1 + z [n]_q,    v_m = q^m - z [m]_q,
//
// and every zero identity of the same shape is s_n = z [n]_q, t_m = -z [m]_q.
// Canonical rules therefore store z only. Tabulated rules keep explicit
// u_{m,n}, v_{m,n} up to a bound and are only ever verified.

#ifndef QRULES_RULES_HPP
#define QRULES_RULES_HPP

#include <algorithm>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "qrules/poly.hpp"

namespace qrules {

template <class T>
struct Counterexample {
    long m;
    long n;
    T lhs;
    T rhs;
};

/// Outcome of checking an identity on 1 <= m <= M, 1 <= n <= N. The
/// counterexample, when present, is the lexicographically smallest (m, n).
template <class T>
struct BasicVerifyReport {
    bool verified = true;
    std::optional<Counterexample<T>> counterexample;
    long max_m = 0;
    long max_n = 0;
};

using VerifyReport = BasicVerifyReport<Poly>;

namespace detail {

/// Runs check(m, n) over the grid in lexicographic order; check returns the
/// (lhs, rhs) pair that must agree.
template <class T, class Check>
BasicVerifyReport<T> verify_grid(long max_m, long max_n, Check&& check) {
    BasicVerifyReport<T> report;
    report.max_m = max_m;
    report.max_n = max_n;
    for (long m = 1; m <= max_m; ++m) {
        for (long n = 1; n <= max_n; ++n) {
            auto [lhs, rhs] = check(m, n);
            if (!(lhs == rhs)) {
                report.verified = false;
                report.counterexample = Counterexample<T>{m, n, std::move(lhs), std::move(rhs)};
                return report;
            }
        }
    }
    return report;
}

inline void check_range(long max_m, long max_n) {
    if (max_m <= 0 || max_n <= 0) {
        throw Error(Errc::InvalidIndex, "verification range must be positive");
    }
}

} // namespace detail

class ZeroIdentity {
public:
    explicit ZeroIdentity(Poly z) : z_(std::move(z)) {}

    const Poly& z() const noexcept { return z_; }
    const Ring& ring() const noexcept { return z_.ring(); }

    Poly s(long n) const { return z_ * quantum_integer(n, ring()); }
    Poly t(long m) const { return -(z_ * quantum_integer(m, ring())); }

private:
    Poly z_;
};

inline ZeroIdentity zero_identity(const Poly& z) { return ZeroIdentity(z); }

/// Checks s_n [m]_q + t_m [n]_q = 0.
inline VerifyReport zero_verify(const ZeroIdentity& zid, long max_m, long max_n) {
    detail::check_range(max_m, max_n);
    const Ring& r = zid.ring();
    const Poly zero(r);
    return detail::verify_grid<Poly>(max_m, max_n, [&](long m, long n) {
        Poly lhs = zid.s(n) * quantum_integer(m, r) + zid.t(m) * quantum_integer(n, r);
        return std::pair{std::move(lhs), zero};
    });
}

class LinearRule {
public:
    struct Canonical {
        Poly z;
    };

    /// Explicit u_{m,n}, v_{m,n} for 1 <= m, n <= bound. A key component of
    /// 0 acts as a wildcard matching any index.
    struct Tabulated {
        std::map<std::pair<long, long>, Poly> u;
        std::map<std::pair<long, long>, Poly> v;
        long bound;
    };

    static LinearRule canonical(Poly z) {
        Ring r = z.ring();
        return LinearRule(std::move(r), Canonical{std::move(z)});
    }

    static LinearRule tabulated(const Ring& ring, Tabulated table) {
        for (const auto* side : {&table.u, &table.v}) {
            for (const auto& [key, p] : *side) {
                if (!(p.ring() == ring)) {
                    throw Error(Errc::MixedContexts, "tabulated entry over " + p.ring().name());
                }
                if (key.first < 0 || key.second < 0) {
                    throw Error(Errc::InvalidIndex, "tabulated index must be positive");
                }
            }
        }
        return LinearRule(ring, std::move(table));
    }

    const Ring& ring() const noexcept { return ring_; }
    bool is_canonical() const noexcept { return std::holds_alternative<Canonical>(data_); }

    const Poly& z() const {
        if (!is_canonical()) {
            throw Error(Errc::NotCanonical, "tabulated rule has no stored z; classify it first");
        }
        return std::get<Canonical>(data_).z;
    }

    const Tabulated& table() const {
        if (is_canonical()) {
            throw Error(Errc::InvariantViolation, "canonical rule has no table");
        }
        return std::get<Tabulated>(data_);
    }

    /// Largest index covered; canonical rules cover every index.
    std::optional<long> bound() const {
        if (is_canonical()) {
            return std::nullopt;
        }
        return table().bound;
    }

    /// The coefficient pair (u, v) used for the pair (m, n).
    std::pair<Poly, Poly> expand(long m, long n) const {
        if (m <= 0 || n <= 0) {
            throw Error(Errc::InvalidIndex, "rule indices must be positive");
        }
        if (is_canonical()) {
            const Poly& zz = z();
            Poly u = Poly::constant(ring_, ring_.one()) + zz * quantum_integer(n, ring_);
            Poly v = Poly::monomial(ring_, static_cast<std::size_t>(m), ring_.one()) - zz * quantum_integer(m, ring_);
            return {std::move(u), std::move(v)};
        }
        const auto& t = table();
        if (m > t.bound || n > t.bound) {
            throw Error(Errc::IndexOutOfBound, "index (" + std::to_string(m) + "," + std::to_string(n) +
                                                   ") beyond tabulated bound " + std::to_string(t.bound));
        }
        return {lookup(t.u, m, n, "u"), lookup(t.v, m, n, "v")};
    }

private:
    LinearRule(Ring ring, std::variant<Canonical, Tabulated> data) : ring_(std::move(ring)), data_(std::move(data)) {}

    static Poly lookup(const std::map<std::pair<long, long>, Poly>& side, long m, long n, const char* name) {
        for (auto key : {std::pair{m, n}, std::pair{m, 0L}, std::pair{0L, n}, std::pair{0L, 0L}}) {
            if (auto it = side.find(key); it != side.end()) {
                return it->second;
            }
        }
        throw Error(Errc::IndexOutOfBound, std::string("no tabulated ") + name + " entry for (" + std::to_string(m) +
                                               "," + std::to_string(n) + ")");
    }

    Ring ring_;
    std::variant<Canonical, Tabulated> data_;
};

inline LinearRule rule_canonical(const Poly& z) { return LinearRule::canonical(z); }

inline std::pair<Poly, Poly> rule_expand(const LinearRule& rule, long m, long n) { return rule.expand(m, n); }

/// The unique z with u_1 = 1 + z and v_1 = q - z.
inline Poly rule_classify(const Poly& u1, const Poly& v1) {
    u1.check_same(v1);
    const Ring& r = u1.ring();
    Poly from_u = u1 - Poly::constant(r, r.one());
    Poly from_v = Poly::variable(r) - v1;
    if (!(from_u == from_v)) {
        throw Error(Errc::InconsistentRule, "u_1 - 1 differs from q - v_1; no linear quantum addition rule starts this way");
    }
    return from_u;
}

/// Checks u [m]_q + v [n]_q = [m+n]_q.
inline VerifyReport rule_verify(const LinearRule& rule, long max_m, long max_n) {
    detail::check_range(max_m, max_n);
    if (auto b = rule.bound(); b && *b < std::max(max_m, max_n)) {
        throw Error(Errc::IndexOutOfBound, "tabulated bound " + std::to_string(*b) + " is below the requested range");
    }
    const Ring& r = rule.ring();
    return detail::verify_grid<Poly>(max_m, max_n, [&](long m, long n) {
        auto [u, v] = rule.expand(m, n);
        Poly lhs = u * quantum_integer(m, r) + v * quantum_integer(n, r);
        return std::pair{std::move(lhs), quantum_integer(m + n, r)};
    });
}

/// Turns a tabulated rule that agrees with a canonical rule on its whole
/// table into that canonical rule.
inline LinearRule rule_canonicalize(const LinearRule& rule) {
    if (rule.is_canonical()) {
        return rule;
    }
    auto [u1, v1] = rule.expand(1, 1);
    LinearRule canon = rule_canonical(rule_classify(u1, v1));
    const long bound = *rule.bound();
    for (long m = 1; m <= bound; ++m) {
        for (long n = 1; n <= bound; ++n) {
            if (rule.expand(m, n) != canon.expand(m, n)) {
                throw Error(Errc::NotCanonical, "tabulated entry (" + std::to_string(m) + "," + std::to_string(n) +
                                                    ") does not follow the canonical form");
            }
        }
    }
    return canon;
}

/// Affine combination sum alpha_i * rule_i with sum alpha_i = 1.
inline LinearRule rule_affine(const std::vector<LinearRule>& rules, const std::vector<Scalar>& alphas) {
    if (rules.empty() || rules.size() != alphas.size()) {
        throw Error(Errc::DimensionMismatch, "affine combination needs one weight per rule");
    }
    const Ring& r = rules.front().ring();
    Scalar total = Scalar::from_int(r, 0);
    Poly z(r);
    for (std::size_t i = 0; i < rules.size(); ++i) {
        if (!(rules[i].ring() == r) || !(alphas[i].ring == r)) {
            throw Error(Errc::MixedContexts, "affine combination across rings");
        }
        total = total + alphas[i];
        z += rules[i].z().scaled(alphas[i].value);
    }
    if (!(total == Scalar::from_int(r, 1))) {
        throw Error(Errc::AffineSumNotOne, "weights do not sum to 1");
    }
    return rule_canonical(z);
}

/// (U + S, V + T) for a canonical rule and a zero identity.
inline LinearRule rule_add_zero(const LinearRule& rule, const ZeroIdentity& zid) {
    return rule_canonical(rule.z() + zid.z());
}

} // namespace qrules

#endif // QRULES_RULES_HPP

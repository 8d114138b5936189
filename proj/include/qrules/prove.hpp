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

// Bounded-degree prover for linear rule forms.
//
// A form fixes which index each coefficient sequence depends on and the
// target of the identity
//
//     a_i(q) [m]_q + b_j(q) [n]_q = target,   target = [m+n]_q or 0,
//
// with i, j each either m or n. With every unknown polynomial of degree at
// most D and (m, n) ranging over [1, M] x [1, N], comparing coefficients of
// q^k gives a linear system in the unknown coefficients. Its exact solution
// either pins the sequences down, describes every solution, or carries a
// certificate that no solution of bounded degree exists on that range.

#ifndef QRULES_PROVE_HPP
#define QRULES_PROVE_HPP

#include <algorithm>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <type_traits>
#include <utility>
#include <variant>
#include <vector>

#include "qrules/linsolve.hpp"
#include "qrules/poly.hpp"

namespace qrules {

enum class ProofForm { AddNM, AddMM, AddMN, ZeroNM, ZeroMM, ZeroMN };

inline constexpr ProofForm kAllProofForms[] = {ProofForm::AddNM,  ProofForm::AddMM,  ProofForm::AddMN,
                                               ProofForm::ZeroNM, ProofForm::ZeroMM, ProofForm::ZeroMN};

struct FormShape {
    bool first_by_n;  // sequence multiplying [m]_q is indexed by n
    bool second_by_n; // sequence multiplying [n]_q is indexed by n
    bool zero_target;
    const char* first_name;
    const char* second_name;
};

inline FormShape form_shape(ProofForm form) {
    switch (form) {
    case ProofForm::AddNM: return {true, false, false, "u", "v"};
    case ProofForm::AddMM: return {false, false, false, "u", "v"};
    case ProofForm::AddMN: return {false, true, false, "u", "v"};
    case ProofForm::ZeroNM: return {true, false, true, "s", "t"};
    case ProofForm::ZeroMM: return {false, false, true, "s", "t"};
    case ProofForm::ZeroMN: return {false, true, true, "s", "t"};
    }
    throw Error(Errc::InvariantViolation, "unknown proof form");
}

inline std::string_view form_name(ProofForm form) {
    switch (form) {
    case ProofForm::AddNM: return "add_nm";
    case ProofForm::AddMM: return "add_mm";
    case ProofForm::AddMN: return "add_mn";
    case ProofForm::ZeroNM: return "zero_nm";
    case ProofForm::ZeroMM: return "zero_mm";
    case ProofForm::ZeroMN: return "zero_mn";
    }
    return "?";
}

inline std::optional<ProofForm> form_from_name(std::string_view name) {
    for (ProofForm f : kAllProofForms) {
        if (form_name(f) == name) {
            return f;
        }
    }
    return std::nullopt;
}

/// One polynomial per index for each of the two sequences; first[i] is the
/// sequence value at index i+1.
struct Witness {
    std::vector<Poly> first;
    std::vector<Poly> second;
};

struct ProofUnique {
    Witness witness;
};

struct ProofSolutionSpace {
    std::size_t dimension;
    Witness particular;
    std::vector<Witness> basis;
    /// For the n/m forms the solutions are parameterized by one polynomial z;
    /// this is an echelonized basis of the z directions.
    std::vector<Poly> z_basis;
    std::optional<Poly> z_particular;
};

struct CertificateTerm {
    long m;
    long n;
    std::size_t power;
    Elem weight;
};

/// Weighted sum of coefficient equations whose unknown part cancels while
/// the target part sums to `contradiction` != 0.
struct ProofInfeasible {
    std::vector<CertificateTerm> certificate;
    Elem contradiction;
};

struct ProofReport {
    ProofForm form;
    long degree_bound;
    long max_m;
    long max_n;
    Ring ring;
    std::variant<ProofUnique, ProofSolutionSpace, ProofInfeasible> outcome;
};

namespace detail {

struct ProofSystem {
    FormShape shape;
    long degree_bound;
    long max_m;
    long max_n;
    std::size_t first_count;
    std::size_t second_count;
    std::size_t powers;
    Matrix a;
    Vector b;

    std::size_t coeffs_per_poly() const { return static_cast<std::size_t>(degree_bound) + 1; }

    std::size_t column(bool second, long index, std::size_t degree) const {
        const std::size_t base = second ? first_count * coeffs_per_poly() : 0;
        return base + static_cast<std::size_t>(index - 1) * coeffs_per_poly() + degree;
    }

    std::size_t row(long m, long n, std::size_t power) const {
        return (static_cast<std::size_t>(m - 1) * static_cast<std::size_t>(max_n) + static_cast<std::size_t>(n - 1)) *
                   powers +
               power;
    }

    Witness unpack(const Vector& x) const {
        const Ring& r = a.ring();
        Witness w;
        auto take = [&](bool second, std::size_t count, std::vector<Poly>& out) {
            for (std::size_t i = 1; i <= count; ++i) {
                std::vector<Elem> coeffs;
                for (std::size_t d = 0; d < coeffs_per_poly(); ++d) {
                    coeffs.push_back(x[column(second, static_cast<long>(i), d)]);
                }
                out.emplace_back(r, std::move(coeffs));
            }
        };
        take(false, first_count, w.first);
        take(true, second_count, w.second);
        return w;
    }
};

inline ProofSystem build_system(ProofForm form, long degree_bound, long max_m, long max_n, const Ring& ring) {
    const FormShape shape = form_shape(form);
    const std::size_t first_count = static_cast<std::size_t>(shape.first_by_n ? max_n : max_m);
    const std::size_t second_count = static_cast<std::size_t>(shape.second_by_n ? max_n : max_m);
    // Highest power appearing in a_i [m]_q, b_j [n]_q or [m+n]_q.
    const long top = std::max(degree_bound + std::max(max_m, max_n) - 1, max_m + max_n - 1);
    const auto powers = static_cast<std::size_t>(top) + 1;
    const std::size_t cols = (first_count + second_count) * static_cast<std::size_t>(degree_bound + 1);
    const std::size_t rows = static_cast<std::size_t>(max_m * max_n) * powers;

    ProofSystem sys{shape,        degree_bound, max_m, max_n, first_count, second_count, powers, Matrix(ring, rows, cols),
                    Vector(rows, ring.zero())};
    const Elem one = ring.one();
    for (long m = 1; m <= max_m; ++m) {
        for (long n = 1; n <= max_n; ++n) {
            const long i = shape.first_by_n ? n : m;
            const long j = shape.second_by_n ? n : m;
            for (std::size_t k = 0; k < powers; ++k) {
                const std::size_t row = sys.row(m, n, k);
                // [q^k] a_i [m]_q = sum of a_{i,d} over k-m+1 <= d <= k
                for (std::size_t d = 0; d <= static_cast<std::size_t>(degree_bound); ++d) {
                    if (d <= k && k - d < static_cast<std::size_t>(m)) {
                        sys.a.at(row, sys.column(false, i, d)) = one;
                    }
                    if (d <= k && k - d < static_cast<std::size_t>(n)) {
                        sys.a.at(row, sys.column(true, j, d)) = one;
                    }
                }
                if (!shape.zero_target && k < static_cast<std::size_t>(m + n)) {
                    sys.b[row] = one;
                }
            }
        }
    }
    return sys;
}

inline std::vector<Poly> echelon_polys(const Ring& ring, const std::vector<Poly>& polys, std::size_t width) {
    if (polys.empty()) {
        return {};
    }
    Matrix m(ring, polys.size(), width);
    for (std::size_t i = 0; i < polys.size(); ++i) {
        for (std::size_t d = 0; d < polys[i].coeffs().size(); ++d) {
            m.at(i, d) = polys[i].coeffs()[d];
        }
    }
    auto ech = rref(m, Vector(polys.size(), ring.zero()));
    std::vector<Poly> out;
    for (std::size_t k = 0; k < ech.pivot_cols.size(); ++k) {
        std::vector<Elem> row(ech.rows[k].begin(), ech.rows[k].begin() + static_cast<std::ptrdiff_t>(width));
        out.emplace_back(ring, std::move(row));
    }
    return out;
}

} // namespace detail

/// Decides the form at bounded degree on [1, M] x [1, N].
inline ProofReport prove_bounded(ProofForm form, long degree_bound, long max_m, long max_n,
                                 const Ring& ring = Ring::rationals()) {
    if (max_m < 2 || max_n < 2) {
        throw Error(Errc::RangeTooSmall, "index ranges must be at least 2, got " + std::to_string(max_m) + " x " +
                                             std::to_string(max_n));
    }
    if (degree_bound < 0) {
        throw Error(Errc::InvalidIndex, "degree bound must be nonnegative");
    }
    if (!ring.is_field()) {
        throw Error(Errc::RequiresField, "bounded prover solves over a field; " + ring.name() + " is not one");
    }
    const auto sys = detail::build_system(form, degree_bound, max_m, max_n, ring);
    ProofReport report{form, degree_bound, max_m, max_n, ring, ProofUnique{}};

    auto result = linsolve_exact(sys.a, sys.b);
    if (auto* u = std::get_if<UniqueSolution>(&result)) {
        report.outcome = ProofUnique{sys.unpack(u->x)};
    } else if (auto* s = std::get_if<AffineSpace>(&result)) {
        ProofSolutionSpace space{s->nullspace.size(), sys.unpack(s->particular), {}, {}, std::nullopt};
        for (const auto& v : s->nullspace) {
            space.basis.push_back(sys.unpack(v));
        }
        if (sys.shape.first_by_n && !sys.shape.second_by_n) {
            // z = a_1 - 1 for rules, z = s_1 for zero identities.
            std::vector<Poly> zs;
            for (const auto& w : space.basis) {
                zs.push_back(w.first.front());
            }
            space.z_basis = detail::echelon_polys(ring, zs, sys.coeffs_per_poly());
            Poly zp = space.particular.first.front();
            if (!sys.shape.zero_target) {
                zp -= Poly::constant(ring, ring.one());
            }
            space.z_particular = zp;
        }
        report.outcome = std::move(space);
    } else {
        const auto& cert = std::get<Inconsistent>(result).certificate;
        ProofInfeasible inf{{}, ring.zero()};
        for (long m = 1; m <= max_m; ++m) {
            for (long n = 1; n <= max_n; ++n) {
                for (std::size_t k = 0; k < sys.powers; ++k) {
                    const auto& w = cert[sys.row(m, n, k)];
                    if (!ring.is_zero(w)) {
                        inf.certificate.push_back({m, n, k, w});
                        inf.contradiction = ring.add(inf.contradiction, ring.mul(w, sys.b[sys.row(m, n, k)]));
                    }
                }
            }
        }
        report.outcome = std::move(inf);
    }
    return report;
}

/// Checks a_i [m]_q + b_j [n]_q = target on the report's range with
/// polynomial arithmetic. `homogeneous` forces target 0.
inline bool witness_satisfies(ProofForm form, const Witness& w, long max_m, long max_n, bool homogeneous = false) {
    const FormShape shape = form_shape(form);
    for (long m = 1; m <= max_m; ++m) {
        for (long n = 1; n <= max_n; ++n) {
            const auto i = static_cast<std::size_t>((shape.first_by_n ? n : m) - 1);
            const auto j = static_cast<std::size_t>((shape.second_by_n ? n : m) - 1);
            if (i >= w.first.size() || j >= w.second.size()) {
                return false;
            }
            const Ring& r = w.first[i].ring();
            const Poly lhs = w.first[i] * quantum_integer(m, r) + w.second[j] * quantum_integer(n, r);
            const Poly target = shape.zero_target || homogeneous ? Poly(r) : quantum_integer(m + n, r);
            if (!(lhs == target)) {
                return false;
            }
        }
    }
    return true;
}

/// Recomputes the certificate from the form definition: the combined
/// coefficient of every unknown must vanish and the target side must sum
/// to the stated nonzero contradiction.
inline bool certificate_recheck(const ProofReport& report) {
    const auto* inf = std::get_if<ProofInfeasible>(&report.outcome);
    if (!inf) {
        return false;
    }
    const Ring& r = report.ring;
    const FormShape shape = form_shape(report.form);
    const auto width = static_cast<std::size_t>(report.degree_bound) + 1;
    const auto first_count = static_cast<std::size_t>(shape.first_by_n ? report.max_n : report.max_m);
    const auto second_count = static_cast<std::size_t>(shape.second_by_n ? report.max_n : report.max_m);
    std::vector<Elem> first(first_count * width, r.zero());
    std::vector<Elem> second(second_count * width, r.zero());
    Elem target = r.zero();
    for (const auto& term : inf->certificate) {
        const Poly qm = quantum_integer(term.m, r);
        const Poly qn = quantum_integer(term.n, r);
        const auto i = static_cast<std::size_t>((shape.first_by_n ? term.n : term.m) - 1);
        const auto j = static_cast<std::size_t>((shape.second_by_n ? term.n : term.m) - 1);
        for (std::size_t d = 0; d < width && d <= term.power; ++d) {
            // coefficient of a_{i,d} in [q^power] a_i [m]_q is [q^(power-d)] [m]_q
            first[i * width + d] = r.add(first[i * width + d], r.mul(term.weight, qm.coeff(term.power - d)));
            second[j * width + d] = r.add(second[j * width + d], r.mul(term.weight, qn.coeff(term.power - d)));
        }
        if (!shape.zero_target) {
            target = r.add(target, r.mul(term.weight, quantum_integer(term.m + term.n, r).coeff(term.power)));
        }
    }
    for (const auto* side : {&first, &second}) {
        for (const auto& e : *side) {
            if (!r.is_zero(e)) {
                return false;
            }
        }
    }
    return !r.is_zero(target) && r.equal(target, inf->contradiction);
}

/// Re-verifies whatever the report claims.
inline bool proof_recheck(const ProofReport& report) {
    return std::visit(
        [&](const auto& outcome) -> bool {
            using T = std::decay_t<decltype(outcome)>;
            if constexpr (std::is_same_v<T, ProofUnique>) {
                return witness_satisfies(report.form, outcome.witness, report.max_m, report.max_n);
            } else if constexpr (std::is_same_v<T, ProofSolutionSpace>) {
                if (!witness_satisfies(report.form, outcome.particular, report.max_m, report.max_n)) {
                    return false;
                }
                return std::all_of(outcome.basis.begin(), outcome.basis.end(), [&](const Witness& w) {
                    return witness_satisfies(report.form, w, report.max_m, report.max_n, true);
                });
            } else {
                return certificate_recheck(report);
            }
        },
        report.outcome);
}

} // namespace qrules

#endif // QRULES_PROVE_HPP

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

// Command dispatch for the qrules tool.
//
// Exit codes: 0 success / verified, 1 counterexample or infeasibility found,
// 2 usage, parse or input error, 3 internal invariant violation. The report
// is assembled completely before anything is written.

#ifndef QRULES_CLI_HPP
#define QRULES_CLI_HPP

#include <functional>
#include <iostream>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "qrules/prove.hpp"
#include "qrules/rules.hpp"
#include "qrules/solve.hpp"
#include "qrules/spec_io.hpp"
#include "qrules/text.hpp"

namespace qrules::cli {

enum ExitCode : int { kSuccess = 0, kFound = 1, kUsage = 2, kInternal = 3 };

/// Ordered key/value lines. Text mode prints "key: value" for metadata and
/// "key = value" for polynomial equations; JSON mode emits one field per
/// line in the same order.
class Report {
public:
    void field(std::string key, std::string value) { entries_.push_back({std::move(key), std::move(value), false}); }
    void equation(std::string key, std::string value) { entries_.push_back({std::move(key), std::move(value), true}); }

    std::string render(bool json) const {
        if (json) {
            nlohmann::ordered_json doc = nlohmann::ordered_json::object();
            for (const auto& e : entries_) {
                doc[e.key] = e.value;
            }
            return doc.dump(2) + "\n";
        }
        std::string out;
        for (const auto& e : entries_) {
            out += e.key + (e.equation ? " = " : ": ") + e.value + "\n";
        }
        return out;
    }

private:
    struct Entry {
        std::string key;
        std::string value;
        bool equation;
    };
    std::vector<Entry> entries_;
};

namespace detail {

struct Globals {
    std::string ring = "ZZ";
    std::string max;
    long degree = 10;
    bool json = false;
};

struct Range {
    long m;
    long n;
};

inline Range parse_range(const std::string& text, Range fallback) {
    if (text.empty()) {
        return fallback;
    }
    auto to_long = [&](const std::string& part) {
        std::size_t used = 0;
        long v = 0;
        try {
            v = std::stol(part, &used);
        } catch (const std::exception&) {
            used = 0;
        }
        if (used != part.size() || v <= 0) {
            throw Error(Errc::InvalidIndex, "--max expects M or M,N with positive integers, got '" + text + "'");
        }
        return v;
    };
    const auto comma = text.find(',');
    if (comma == std::string::npos) {
        const long v = to_long(text);
        return {v, v};
    }
    return {to_long(text.substr(0, comma)), to_long(text.substr(comma + 1))};
}

inline std::string range_text(long m, long n) { return std::to_string(m) + " x " + std::to_string(n); }

inline Ring as_field(const Ring& ring) { return ring.kind() == RingKind::Integers ? Ring::rationals() : ring; }

template <class T, class Fmt>
int report_verify(Report& report, const BasicVerifyReport<T>& v, Fmt&& fmt) {
    report.field("range", range_text(v.max_m, v.max_n));
    if (v.verified) {
        report.field("result", "VERIFIED");
        return kSuccess;
    }
    const auto& c = *v.counterexample;
    report.field("result", "COUNTEREXAMPLE");
    report.equation("m", std::to_string(c.m));
    report.equation("n", std::to_string(c.n));
    report.equation("lhs", fmt(c.lhs));
    report.equation("rhs", fmt(c.rhs));
    return kFound;
}

inline int report_poly_verify(Report& report, const VerifyReport& v) {
    return report_verify(report, v, [](const Poly& p) { return format_poly(p); });
}

/// A rule or zero identity named either by --z or by --spec.
struct RuleSource {
    std::optional<std::string> z;
    std::optional<std::string> spec;

    RuleSpec load(const Ring& ring, bool zero_kind) const {
        if (z.has_value() == spec.has_value()) {
            throw Error(Errc::InvalidSpec, "give exactly one of --z or --spec");
        }
        if (spec) {
            return rule_spec_from_json(read_json_file(*spec), ring);
        }
        const Poly zp = parse_poly(*z, ring);
        if (zero_kind) {
            return {ring, zero_identity(zp)};
        }
        return {ring, rule_canonical(zp)};
    }
};

inline void show_rule(Report& report, const LinearRule& rule, long upto) {
    if (rule.is_canonical()) {
        report.field("kind", "canonical");
        report.equation("z", format_poly(rule.z()));
        for (long k = 1; k <= upto; ++k) {
            report.equation("u_" + std::to_string(k), format_poly(rule.expand(1, k).first));
        }
        for (long k = 1; k <= upto; ++k) {
            report.equation("v_" + std::to_string(k), format_poly(rule.expand(k, 1).second));
        }
        return;
    }
    const long bound = std::min(upto, *rule.bound());
    report.field("kind", "tabulated");
    report.field("bound", std::to_string(*rule.bound()));
    for (long m = 1; m <= bound; ++m) {
        for (long n = 1; n <= bound; ++n) {
            auto [u, v] = rule.expand(m, n);
            const std::string idx = std::to_string(m) + "," + std::to_string(n);
            report.equation("u_{" + idx + "}", format_poly(u));
            report.equation("v_{" + idx + "}", format_poly(v));
        }
    }
}

inline std::string witness_name(const char* base, std::size_t index) {
    return std::string(base) + "_" + std::to_string(index + 1);
}

inline void report_witness(Report& report, ProofForm form, const Witness& w, const std::string& prefix = "") {
    const FormShape shape = form_shape(form);
    for (std::size_t i = 0; i < w.first.size(); ++i) {
        report.equation(prefix + witness_name(shape.first_name, i), format_poly(w.first[i]));
    }
    for (std::size_t i = 0; i < w.second.size(); ++i) {
        report.equation(prefix + witness_name(shape.second_name, i), format_poly(w.second[i]));
    }
}

inline bool witness_is_zero(const Witness& w) {
    auto zero = [](const Poly& p) { return p.is_zero(); };
    return std::all_of(w.first.begin(), w.first.end(), zero) && std::all_of(w.second.begin(), w.second.end(), zero);
}

inline int report_proof(Report& report, const ProofReport& proof) {
    const FormShape shape = form_shape(proof.form);
    report.field("form", std::string(form_name(proof.form)));
    report.field("ring", proof.ring.name());
    report.field("degree bound", std::to_string(proof.degree_bound));
    report.field("range", range_text(proof.max_m, proof.max_n));
    const bool recheck = proof_recheck(proof);
    int code = kSuccess;
    if (const auto* u = std::get_if<ProofUnique>(&proof.outcome)) {
        report.field("result", "UNIQUE");
        if (witness_is_zero(u->witness)) {
            report.field("solution", std::string("zero only (every ") + shape.first_name + "_i and " +
                                         shape.second_name + "_j vanishes)");
        } else {
            report_witness(report, proof.form, u->witness);
        }
    } else if (const auto* s = std::get_if<ProofSolutionSpace>(&proof.outcome)) {
        report.field("result", "SOLUTION SPACE");
        report.field("dimension", std::to_string(s->dimension));
        if (s->z_particular) {
            report.equation("z particular", format_poly(*s->z_particular));
            for (std::size_t i = 0; i < s->z_basis.size(); ++i) {
                report.equation("z basis " + std::to_string(i + 1), format_poly(s->z_basis[i]));
            }
        } else {
            report_witness(report, proof.form, s->particular);
            for (std::size_t i = 0; i < s->basis.size(); ++i) {
                report_witness(report, proof.form, s->basis[i], "basis " + std::to_string(i + 1) + " ");
            }
        }
    } else {
        const auto& inf = std::get<ProofInfeasible>(proof.outcome);
        report.field("result", "INFEASIBLE");
        report.field("certificate terms", std::to_string(inf.certificate.size()));
        report.field("combination", "weighted coefficient equations sum to 0 = " +
                                        format_elem(proof.ring, inf.contradiction));
        for (const auto& t : inf.certificate) {
            report.equation("w(m=" + std::to_string(t.m) + ",n=" + std::to_string(t.n) + ",q^" +
                                std::to_string(t.power) + ")",
                            format_elem(proof.ring, t.weight));
        }
        code = kFound;
    }
    report.field("recheck", recheck ? "PASSED" : "FAILED");
    report.field("scope", "bounded claim: unknowns of degree <= " + std::to_string(proof.degree_bound) +
                              ", 1 <= m <= " + std::to_string(proof.max_m) + ", 1 <= n <= " +
                              std::to_string(proof.max_n));
    if (!recheck) {
        throw Error(Errc::InvariantViolation, "prover output failed re-verification");
    }
    return code;
}

inline std::pair<long, long> parse_pair(const std::string& text, const char* what) {
    const auto colon = text.find(':');
    try {
        if (colon != std::string::npos) {
            std::size_t a = 0;
            std::size_t b = 0;
            const long first = std::stol(text.substr(0, colon), &a);
            const long second = std::stol(text.substr(colon + 1), &b);
            if (a == colon && b == text.size() - colon - 1) {
                return {first, second};
            }
        }
    } catch (const std::exception&) {
    }
    throw Error(Errc::InvalidSpec, std::string(what) + " expects <int>:<int>, got '" + text + "'");
}

} // namespace detail

/// Runs one command line (without the program name). Output goes to `out`
/// only after the command completed; diagnostics go to `err`.
inline int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    using namespace detail;
    CLI::App app{"Exact quantum addition rules: build, verify, classify, combine, solve and prove", "qrules"};
    app.require_subcommand(1);
    app.fallthrough();
    Globals g;
    app.add_option("--ring", g.ring, "coefficient ring: ZZ, QQ or Fp:<p>");
    app.add_option("--max", g.max, "index range M or M,N");
    app.add_option("--degree", g.degree, "degree bound for prove");
    app.add_flag("--json", g.json, "machine-readable report");

    Report report;
    std::function<int()> action;

    // qint
    auto* qint = app.add_subcommand("qint", "print the quantum integer [n]_q");
    long qint_n = 0;
    qint->add_option("n", qint_n, "positive integer")->required();
    qint->callback([&] {
        action = [&] {
            const Ring ring = parse_ring(g.ring);
            report.equation("[" + std::to_string(qint_n) + "]_q", format_poly(quantum_integer(qint_n, ring)));
            return int(kSuccess);
        };
    });

    // parse
    auto* parse = app.add_subcommand("parse", "parse a polynomial and print its canonical form");
    std::string parse_text;
    parse->add_option("expr", parse_text, "polynomial text")->required();
    parse->callback([&] {
        action = [&] {
            const Ring ring = parse_ring(g.ring);
            const Poly p = parse_poly(parse_text, ring);
            report.equation("poly", format_poly(p));
            report.field("degree", p.is_zero() ? "-inf" : std::to_string(p.degree().value()));
            return int(kSuccess);
        };
    });

    // rule ...
    auto* rule = app.add_subcommand("rule", "linear quantum addition rules");
    rule->require_subcommand(1);

    RuleSource show_src;
    auto* rule_show = rule->add_subcommand("show", "expand a rule's coefficient sequences");
    rule_show->add_option("--z", show_src.z, "canonical parameter z(q)");
    rule_show->add_option("--spec", show_src.spec, "rule-spec JSON file");
    rule_show->callback([&] {
        action = [&] {
            const auto spec = show_src.load(parse_ring(g.ring), false);
            const auto* lr = std::get_if<LinearRule>(&spec.rule);
            if (!lr) {
                throw Error(Errc::InvalidSpec, "rule show needs a canonical or tabulated rule");
            }
            report.field("ring", spec.ring.name());
            show_rule(report, *lr, parse_range(g.max, {4, 4}).m);
            return int(kSuccess);
        };
    });

    std::string u1_text;
    std::string v1_text;
    auto* rule_classify_cmd = rule->add_subcommand("classify", "recover z from u_1 and v_1");
    rule_classify_cmd->add_option("--u1", u1_text, "u_1(q)")->required();
    rule_classify_cmd->add_option("--v1", v1_text, "v_1(q)")->required();
    rule_classify_cmd->callback([&] {
        action = [&] {
            const Ring ring = parse_ring(g.ring);
            const Poly u1 = parse_poly(u1_text, ring);
            const Poly v1 = parse_poly(v1_text, ring);
            try {
                report.equation("z", format_poly(rule_classify(u1, v1)));
                return int(kSuccess);
            } catch (const Error& e) {
                if (e.code() != Errc::InconsistentRule) {
                    throw;
                }
            }
            const Poly one = Poly::constant(ring, ring.one());
            report.field("result", "INCONSISTENT");
            report.equation("u_1 - 1", format_poly(u1 - one));
            report.equation("q - v_1", format_poly(Poly::variable(ring) - v1));
            return int(kFound);
        };
    });

    RuleSource verify_src;
    auto* rule_verify_cmd = rule->add_subcommand("verify", "check u [m]_q + v [n]_q = [m+n]_q on a grid");
    rule_verify_cmd->add_option("--z", verify_src.z, "canonical parameter z(q)");
    rule_verify_cmd->add_option("--spec", verify_src.spec, "rule-spec JSON file");
    rule_verify_cmd->callback([&] {
        action = [&] {
            const auto spec = verify_src.load(parse_ring(g.ring), false);
            const Range range = parse_range(g.max, {32, 32});
            report.field("ring", spec.ring.name());
            if (const auto* zid = std::get_if<ZeroIdentity>(&spec.rule)) {
                report.field("kind", "zero");
                report.equation("z", format_poly(zid->z()));
                return report_poly_verify(report, zero_verify(*zid, range.m, range.n));
            }
            const auto& lr = std::get<LinearRule>(spec.rule);
            report.field("kind", lr.is_canonical() ? "canonical" : "tabulated");
            if (lr.is_canonical()) {
                report.equation("z", format_poly(lr.z()));
            }
            return report_poly_verify(report, rule_verify(lr, range.m, range.n));
        };
    });

    std::vector<std::string> combine_z;
    std::vector<std::string> combine_alpha;
    auto* rule_combine = rule->add_subcommand("combine", "affine combination of canonical rules");
    rule_combine->add_option("--z", combine_z, "canonical parameters, one per rule")->required();
    rule_combine->add_option("--alpha", combine_alpha, "weights summing to 1, one per rule")->required();
    rule_combine->callback([&] {
        action = [&] {
            const Ring ring = parse_ring(g.ring);
            std::vector<LinearRule> rules;
            std::vector<Scalar> alphas;
            for (const auto& z : combine_z) {
                rules.push_back(rule_canonical(parse_poly(z, ring)));
            }
            for (const auto& a : combine_alpha) {
                alphas.push_back(parse_scalar(a, ring));
            }
            report.equation("z", format_poly(rule_affine(rules, alphas).z()));
            return int(kSuccess);
        };
    });

    std::string add_z;
    std::string add_zero_z;
    auto* rule_add_zero_cmd = rule->add_subcommand("add-zero", "add a zero identity to a canonical rule");
    rule_add_zero_cmd->add_option("--z", add_z, "rule parameter z(q)")->required();
    rule_add_zero_cmd->add_option("--zero", add_zero_z, "zero-identity parameter z(q)")->required();
    rule_add_zero_cmd->callback([&] {
        action = [&] {
            const Ring ring = parse_ring(g.ring);
            const LinearRule r = rule_add_zero(rule_canonical(parse_poly(add_z, ring)),
                                               zero_identity(parse_poly(add_zero_z, ring)));
            report.equation("z", format_poly(r.z()));
            return int(kSuccess);
        };
    });

    // zero verify
    auto* zero = app.add_subcommand("zero", "linear zero identities");
    zero->require_subcommand(1);
    RuleSource zero_src;
    auto* zero_verify_cmd = zero->add_subcommand("verify", "check s_n [m]_q + t_m [n]_q = 0 on a grid");
    zero_verify_cmd->add_option("--z", zero_src.z, "parameter z(q)");
    zero_verify_cmd->add_option("--spec", zero_src.spec, "rule-spec JSON file of kind zero");
    zero_verify_cmd->callback([&] {
        action = [&] {
            const auto spec = zero_src.load(parse_ring(g.ring), true);
            const auto* zid = std::get_if<ZeroIdentity>(&spec.rule);
            if (!zid) {
                throw Error(Errc::InvalidSpec, "zero verify needs a spec of kind zero");
            }
            const Range range = parse_range(g.max, {32, 32});
            report.field("ring", spec.ring.name());
            report.equation("z", format_poly(zid->z()));
            return report_poly_verify(report, zero_verify(*zid, range.m, range.n));
        };
    });

    // solve ...
    auto* solve = app.add_subcommand("solve", "functional equations");
    solve->require_subcommand(1);

    std::string lin_z;
    std::string lin_f1;
    auto* solve_linear = solve->add_subcommand("linear", "f_{m+n} = u_n f_m + v_m f_n from f_1");
    solve_linear->add_option("--z", lin_z, "rule parameter z(q)")->required();
    solve_linear->add_option("--f1", lin_f1, "initial value f_1(q)")->required();
    solve_linear->callback([&] {
        action = [&] {
            const Ring ring = parse_ring(g.ring);
            const LinearRule r = rule_canonical(parse_poly(lin_z, ring));
            const Poly f1 = parse_poly(lin_f1, ring);
            const Range range = parse_range(g.max, {4, 4});
            const auto seq = fe_linear_recover(r, f1, range.m + range.n);
            report.field("ring", ring.name());
            report.equation("z", format_poly(r.z()));
            for (std::size_t k = 0; k < seq.size(); ++k) {
                report.equation("f_" + std::to_string(k + 1), format_poly(seq[k]));
                if (!(seq[k] == fe_linear_solution(f1, static_cast<long>(k + 1)))) {
                    throw Error(Errc::InvariantViolation, "recursion departs from f_1 [n]_q at n = " +
                                                              std::to_string(k + 1));
                }
            }
            report.field("closed form", "f_n = f_1 * [n]_q for n <= " + std::to_string(seq.size()));
            return report_poly_verify(report, fe_linear_verify(r, seq, range.m, range.n));
        };
    });

    int quad_variant = 1;
    std::string quad_f1;
    auto* solve_quadratic = solve->add_subcommand("quadratic", "closed forms of the two quadratic rules");
    solve_quadratic->add_option("--variant", quad_variant, "1 or 2")->required();
    solve_quadratic->add_option("--f1", quad_f1, "initial value f_1(q)")->required();
    solve_quadratic->callback([&] {
        action = [&] {
            const Ring ring = parse_ring(g.ring);
            const Poly f1 = parse_poly(quad_f1, ring);
            const long count = parse_range(g.max, {8, 8}).m;
            std::vector<Poly> seq;
            try {
                for (long n = 1; n <= count; ++n) {
                    seq.push_back(quad_closed_form(quad_variant, f1, n));
                }
            } catch (const InexactDivisionError& e) {
                throw Error(Errc::InvariantViolation, "closed-form numerator not divisible by 1 - q");
            }
            report.field("ring", ring.name());
            report.field("variant", std::to_string(quad_variant));
            for (std::size_t k = 0; k < seq.size(); ++k) {
                report.equation("f_" + std::to_string(k + 1), format_poly(seq[k]));
            }
            report.field("range", "m + n <= " + std::to_string(count));
            for (long m = 1; m < count; ++m) {
                for (long n = 1; m + n <= count; ++n) {
                    const Poly rhs = quad_rule_apply(quad_variant, seq[m - 1], seq[n - 1], m, n);
                    if (!(seq[m + n - 1] == rhs)) {
                        report.field("result", "COUNTEREXAMPLE");
                        report.equation("m", std::to_string(m));
                        report.equation("n", std::to_string(n));
                        report.equation("lhs", format_poly(seq[m + n - 1]));
                        report.equation("rhs", format_poly(rhs));
                        return int(kFound);
                    }
                }
            }
            report.field("result", "VERIFIED");
            return int(kSuccess);
        };
    });

    // mult ...
    auto* mult = app.add_subcommand("mult", "multiplicative rule f_m(q) f_n(q^m)");
    mult->require_subcommand(1);

    struct FamilyInline {
        std::optional<std::string> spec;
        std::optional<long> t0;
        std::vector<std::string> exponents;
        std::vector<std::string> lambdas;
        std::optional<std::string> lambda_default;

        bool given() const { return spec || t0 || !exponents.empty() || !lambdas.empty() || lambda_default; }

        FamilySpecFile load(const Ring& cli_ring) const {
            if (spec) {
                if (t0 || !exponents.empty() || !lambdas.empty() || lambda_default) {
                    throw Error(Errc::InvalidSpec, "--spec cannot be combined with inline family options");
                }
                return family_spec_from_json(read_json_file(*spec), as_field(cli_ring));
            }
            const Ring ring = as_field(cli_ring);
            MultFamilySpec s;
            s.t0 = t0.value_or(0);
            for (const auto& e : exponents) {
                auto [r, t] = parse_pair(e, "--exponent");
                s.exponents.insert_or_assign(r, t);
            }
            for (const auto& l : lambdas) {
                const auto colon = l.find(':');
                if (colon == std::string::npos) {
                    throw Error(Errc::InvalidSpec, "--lambda expects <prime>:<value>, got '" + l + "'");
                }
                const long p = parse_pair(l.substr(0, colon) + ":0", "--lambda").first;
                s.lambda_on_primes.insert_or_assign(p, parse_scalar(l.substr(colon + 1), ring));
            }
            s.lambda_default = parse_scalar(lambda_default.value_or("1"), ring);
            validate_family(s, ring);
            return {ring, std::move(s)};
        }
    };
    auto add_family_options = [](CLI::App* cmd, FamilyInline& f) {
        cmd->add_option("--spec", f.spec, "family-spec JSON file");
        cmd->add_option("--t0", f.t0, "exponent t0 of q^(t0 (n-1))");
        cmd->add_option("--exponent", f.exponents, "r:t_r factor [n]_{q^r}^{t_r}");
        cmd->add_option("--lambda", f.lambdas, "p:value of lambda at the prime p");
        cmd->add_option("--lambda-default", f.lambda_default, "lambda at unlisted primes (inline default 1)");
    };

    std::string gen_name;
    FamilyInline verify_family;
    auto* mult_verify_cmd = mult->add_subcommand("verify", "check f_m(q) f_n(q^m) = f_{mn} on a grid");
    mult_verify_cmd->add_option("--gen", gen_name, "built-in sequence: qint, one, qint-shift");
    add_family_options(mult_verify_cmd, verify_family);
    mult_verify_cmd->callback([&] {
        action = [&] {
            const Range range = parse_range(g.max, {12, 12});
            if (gen_name.empty() == !verify_family.given()) {
                throw Error(Errc::InvalidSpec, "give exactly one of --gen or a family (--spec or inline options)");
            }
            if (!gen_name.empty()) {
                const Ring ring = parse_ring(g.ring);
                std::function<Poly(long)> gen;
                if (gen_name == "qint") {
                    gen = [&](long n) { return quantum_integer(n, ring); };
                } else if (gen_name == "one") {
                    gen = [&](long) { return Poly::constant(ring, ring.one()); };
                } else if (gen_name == "qint-shift") {
                    gen = [&](long n) { return quantum_integer(n + 1, ring); };
                } else {
                    throw Error(Errc::InvalidSpec, "unknown generator '" + gen_name + "'");
                }
                report.field("ring", ring.name());
                report.field("sequence", gen_name);
                return report_poly_verify(report, mult_verify<Poly>(gen, range.m, range.n, range.m * range.n));
            }
            const auto fam = verify_family.load(parse_ring(g.ring));
            report.field("ring", fam.ring.name());
            report.field("sequence", "family");
            std::function<RatFunc(long)> gen = [&](long n) { return mult_family(fam.spec, n, fam.ring); };
            return report_verify(report, mult_verify<RatFunc>(gen, range.m, range.n, range.m * range.n),
                                 [](const RatFunc& f) { return format_ratfunc(f); });
        };
    });

    FamilyInline show_family;
    std::optional<long> family_n;
    auto* mult_family_cmd = mult->add_subcommand("family", "members of a multiplicative family");
    add_family_options(mult_family_cmd, show_family);
    mult_family_cmd->add_option("--n", family_n, "single index to print");
    mult_family_cmd->callback([&] {
        action = [&] {
            const auto fam = show_family.load(parse_ring(g.ring));
            report.field("ring", fam.ring.name());
            const long from = family_n.value_or(1);
            const long to = family_n.value_or(parse_range(g.max, {6, 6}).m);
            for (long n = from; n <= to; ++n) {
                report.equation("f_" + std::to_string(n), format_ratfunc(mult_family(fam.spec, n, fam.ring)));
            }
            return int(kSuccess);
        };
    });

    // prove
    auto* prove = app.add_subcommand("prove", "bounded-degree classification of a rule form");
    std::string form_text;
    prove->add_option("--form", form_text, "add_nm, add_mm, add_mn, zero_nm, zero_mm or zero_mn")->required();
    prove->callback([&] {
        action = [&] {
            const auto form = form_from_name(form_text);
            if (!form) {
                throw Error(Errc::InvalidSpec, "unknown form '" + form_text + "'");
            }
            const Range range = parse_range(g.max, {4, 4});
            const Ring ring = as_field(parse_ring(g.ring));
            return report_proof(report, prove_bounded(*form, g.degree, range.m, range.n, ring));
        };
    });

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(std::move(reversed));
    } catch (const CLI::ParseError& e) {
        std::ostringstream text;
        std::ostringstream diag;
        const int code = app.exit(e, text, diag);
        out << text.str();
        err << diag.str();
        return code == 0 ? int(kSuccess) : int(kUsage);
    }

    int code = kSuccess;
    try {
        code = action ? action() : int(kUsage);
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return e.code() == Errc::InvariantViolation ? int(kInternal) : int(kUsage);
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << "\n";
        return kInternal;
    }
    out << report.render(g.json);
    return code;
}

} // namespace qrules::cli

#endif // QRULES_CLI_HPP

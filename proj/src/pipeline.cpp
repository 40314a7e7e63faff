/*
   Copyright 2026 the wblock authors

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

#include "wb/pipeline.hpp"

#include <algorithm>
#include <limits>
#include <sstream>

#include <json.hpp>

#include "wb/error.hpp"
#include "wb/numth.hpp"

namespace wb {

namespace {

constexpr const char* kFixedSpaceStep = "fixed-space-reduction";
constexpr const char* kLevelStep = "centralizer-level-reduction";
constexpr const char* kCrucialStep = "crucial-case-classification";
constexpr const char* kClassicalStep = "classical-to-gl-reduction";
constexpr const char* kTransferStep = "special-linear-transfer";

void require_odd_prime(std::uint64_t p, const char* who) {
    if (p < 3 || p % 2 == 0 || !is_prime(p)) {
        throw Error(ErrorKind::HypothesisViolation,
                    std::string(who) + ": p must be an odd prime");
    }
}

void require_sign(int eps, const char* who) {
    if (eps != 1 && eps != -1) {
        throw Error(ErrorKind::OutOfRange,
                    std::string(who) + ": eps must be +1 or -1");
    }
}

bool divides_q_minus_eps(std::uint64_t p, std::uint64_t q, int eps) {
    std::uint64_t r = q % p;
    std::uint64_t want = eps == 1 ? 1 % p : p - 1;
    return r == want;
}

// Shared tail of every GL/GU-shaped computation.  The reduced datum is
// GL^{eps1}_{n1}(q1) with p | q1 - eps1; the label depends only on
// a = v_p(q1 - eps1), aprime = v_p(n1), and the parity data (eps1, n1, p).
WReport crucial_case_report(const GroupDescriptor& group, std::uint64_t p,
                            unsigned n0, unsigned d, int eps1,
                            std::uint64_t n1, const mpz_class& q1,
                            std::vector<std::string> chain,
                            std::vector<std::string> notes) {
    mpz_class shifted = q1 - eps1;
    unsigned a = padic_val(p, shifted);
    if (a == 0) {
        throw Error(ErrorKind::HypothesisViolation,
                    "reduced field order is not eps modulo p");
    }
    unsigned aprime = padic_val(p, static_cast<std::int64_t>(n1));
    std::uint64_t m = n1;
    for (unsigned i = 0; i < aprime; ++i) m /= p;

    unsigned l = a + aprime;
    bool crucial = eps1 == -1 && n1 % 2 == 1 && p % 4 == 3;
    DadeLabel label = crucial ? interval_label(a, a + aprime - 1, l, p)
                              : DadeLabel(CyclicPGroupShape(p, l), 0);

    BlockScenario scenario{group, p, n0, d, m, aprime, eps1, n1, q1};
    return WReport{std::move(scenario), l,          label,
                   label.empty(),       std::move(chain), std::move(notes)};
}

std::string reduced_name(const BlockScenario& s) {
    std::ostringstream os;
    os << (s.eps_reduced == 1 ? "GL" : "GU") << "_" << s.n_reduced << "("
       << s.q_reduced.get_str() << ")";
    return os.str();
}

std::string attributed_name(const WReport& r) {
    const GroupDescriptor& g = r.scenario.group;
    if (!r.special_linear) return g.render();
    std::ostringstream os;
    os << (g.family == Family::GL ? "SL" : "SU") << "_" << g.n << "(" << g.q
       << ")";
    return os.str();
}

std::string attributed_family(const WReport& r) {
    const GroupDescriptor& g = r.scenario.group;
    if (!r.special_linear) return family_name(g.family);
    return g.family == Family::GL ? "SL" : "SU";
}

nlohmann::ordered_json report_json(const WReport& r) {
    nlohmann::ordered_json j;
    j["family"] = attributed_family(r);
    j["n"] = r.scenario.group.n;
    j["q"] = r.scenario.group.q;
    j["p"] = r.scenario.p;
    j["n0"] = r.scenario.support_dim;
    j["d"] = r.scenario.d;
    j["m"] = r.scenario.m;
    j["aprime"] = r.scenario.aprime;
    j["eps_reduced"] = r.scenario.eps_reduced;
    if (r.scenario.q_reduced.fits_ulong_p()) {
        j["q_reduced"] = static_cast<std::uint64_t>(r.scenario.q_reduced.get_ui());
    } else {
        j["q_reduced"] = r.scenario.q_reduced.get_str();
    }
    j["defect_exponent"] = r.defect_exponent;
    nlohmann::ordered_json lab;
    lab["p"] = r.label.shape().p;
    lab["l"] = r.label.shape().l;
    lab["A"] = r.label.indices();
    j["label"] = std::move(lab);
    j["rendered"] = render_label(r.label);
    j["trivial"] = r.trivial;
    j["chain"] = r.chain;
    j["notes"] = r.notes;
    return j;
}

}  // namespace

WReport w_base(int eps, unsigned n, std::uint64_t q, std::uint64_t p) {
    require_sign(eps, "w_base");
    require_odd_prime(p, "w_base");
    if (n < 2) {
        throw Error(ErrorKind::OutOfRange, "w_base: n must be at least 2");
    }
    GroupDescriptor group(eps == 1 ? Family::GL : Family::GU, n, q);
    if (!divides_q_minus_eps(p, q, eps)) {
        throw Error(ErrorKind::HypothesisViolation,
                    "w_base: p must divide q - eps");
    }

    std::vector<std::string> notes;
    if (eps == -1 && q == 2 && n == 2) {
        notes.push_back(
            "GU_2(2) carries no block with the required regular structure; "
            "the report is formal");
    }
    if (eps == -1 && q == 2 && n == 3 && p == 3) {
        notes.push_back(
            "GU_3(2) at p = 3 is an excluded small configuration; "
            "the report is formal");
    }
    return crucial_case_report(group, p, n, 1, eps, n, mpz_class(q),
                               {kCrucialStep}, std::move(notes));
}

WReport w_glgu(int eps, unsigned n, std::uint64_t q, std::uint64_t p,
               unsigned n0) {
    require_sign(eps, "w_glgu");
    require_odd_prime(p, "w_glgu");
    GroupDescriptor group(eps == 1 ? Family::GL : Family::GU, n, q);
    if (q % p == 0) {
        throw Error(ErrorKind::BadCharacteristic,
                    "w_glgu: p divides q; the defining characteristic case "
                    "is out of scope");
    }
    if (n0 < 1 || n0 > n) {
        throw Error(ErrorKind::OutOfRange,
                    "w_glgu: support dimension must lie in [1, n]");
    }
    if (q > static_cast<std::uint64_t>(std::numeric_limits<std::int64_t>::max())) {
        throw Error(ErrorKind::OutOfRange, "w_glgu: q too large");
    }

    unsigned d = static_cast<unsigned>(
        mult_order(eps * static_cast<std::int64_t>(q), p));
    if (n0 % d != 0) {
        throw Error(ErrorKind::InvalidSupport,
                    "w_glgu: the level must divide the support dimension");
    }
    if (d == 1) {
        if (n0 != n) {
            throw Error(ErrorKind::InvalidScenario,
                        "w_glgu: full support is forced when p divides "
                        "q - eps");
        }
        return w_base(eps, n, q, p);
    }

    std::uint64_t n1 = n0 / d;
    int eps1 = (eps == 1 || d % 2 == 0) ? 1 : -1;
    mpz_class q1 = mpz_pow(q, d);

    std::vector<std::string> chain;
    if (n0 < n) chain.push_back(kFixedSpaceStep);
    chain.push_back(kLevelStep);

    if (n1 == 1) {
        return crucial_case_report(
            group, p, n0, d, eps1, n1, q1, std::move(chain),
            {"the reduced group has rank one, so the defect group is "
             "central and the invariant is trivial"});
    }
    chain.push_back(kCrucialStep);
    return crucial_case_report(group, p, n0, d, eps1, n1, q1,
                               std::move(chain), {});
}

WReport w_classical(const GroupDescriptor& g, std::uint64_t p,
                    const CentralizerScenario& scenario, unsigned n0) {
    if (g.family == Family::GL || g.family == Family::GU) {
        throw Error(ErrorKind::InvalidDescriptor,
                    "w_classical: applies to Sp and Spin groups only");
    }
    require_odd_prime(p, "w_classical");

    bool known = false;
    for (const CentralizerScenario& s : centralizer_scenarios(g, p)) {
        if (s.d == scenario.d && s.m == scenario.m && s.eps == scenario.eps &&
            s.q_reduced == scenario.q_reduced &&
            s.type_constraint_on_subspace_only ==
                scenario.type_constraint_on_subspace_only) {
            known = true;
            break;
        }
    }
    if (!known) {
        throw Error(ErrorKind::InvalidScenario,
                    "w_classical: scenario was not produced for this group "
                    "and prime");
    }
    if (static_cast<std::uint64_t>(n0) !=
        2 * scenario.m * static_cast<std::uint64_t>(scenario.d)) {
        throw Error(ErrorKind::InvalidScenario,
                    "w_classical: support dimension does not match the "
                    "scenario");
    }

    std::uint64_t nred = scenario.m;
    std::uint64_t qred = scenario.q_reduced;
    int eps = scenario.eps;

    std::vector<std::string> chain;
    if (n0 < g.n) chain.push_back(kFixedSpaceStep);
    chain.push_back(kClassicalStep);

    std::vector<std::string> notes;
    if (scenario.type_constraint_on_subspace_only) {
        notes.push_back(
            "partial support: the type constraint applies to the subspace "
            "carrying the block, so realizability is reported, not "
            "certified");
    }

    if (nred <= 2) {
        unsigned l = padic_val(p, mpz_class(qred) - eps);
        notes.push_back(
            "the reduced rank is at most two, which forces the defect "
            "group into the center of the centralizer; the invariant is "
            "trivial");
        BlockScenario sc{g,   p,    n0,   scenario.d, nred,
                         0,   eps,  nred, mpz_class(qred)};
        return WReport{std::move(sc),  l, DadeLabel(CyclicPGroupShape(p, l), 0),
                       true,           std::move(chain), std::move(notes)};
    }
    if (qred == 2 && nred == 3) {
        unsigned aprime = padic_val(p, static_cast<std::int64_t>(nred));
        std::uint64_t m = nred;
        for (unsigned i = 0; i < aprime; ++i) m /= p;
        notes.push_back(
            "this configuration reduces to the cyclic 3-blocks of Sp_6(2), "
            "which have defect at most one; the invariant is trivial");
        BlockScenario sc{g,      p,   n0,   scenario.d, m,
                         aprime, eps, nred, mpz_class(qred)};
        return WReport{std::move(sc),  1, DadeLabel(CyclicPGroupShape(p, 1), 0),
                       true,           std::move(chain), std::move(notes)};
    }

    WReport base = w_base(eps, static_cast<unsigned>(nred), qred, p);
    chain.push_back(kCrucialStep);
    for (const std::string& note : base.notes) notes.push_back(note);
    BlockScenario sc{g,
                     p,
                     n0,
                     scenario.d,
                     base.scenario.m,
                     base.scenario.aprime,
                     eps,
                     nred,
                     mpz_class(qred)};
    return WReport{std::move(sc),    base.defect_exponent, base.label,
                   base.trivial,     std::move(chain),     std::move(notes)};
}

WReport sl_su_transfer(int eps, unsigned n, std::uint64_t q, std::uint64_t p,
                       const WReport& report) {
    require_sign(eps, "sl_su_transfer");
    require_odd_prime(p, "sl_su_transfer");
    if (q % p == 0) {
        throw Error(ErrorKind::BadCharacteristic,
                    "sl_su_transfer: p divides q");
    }
    if (divides_q_minus_eps(p, q, eps)) {
        throw Error(ErrorKind::OutOfScope,
                    "sl_su_transfer: the case p | q - eps for the special "
                    "groups is not covered by this tool");
    }
    Family want = eps == 1 ? Family::GL : Family::GU;
    if (report.scenario.group.family != want || report.scenario.group.n != n ||
        report.scenario.group.q != q || report.scenario.p != p) {
        throw Error(ErrorKind::InvalidScenario,
                    "sl_su_transfer: the report was not computed for the "
                    "requested group and prime");
    }

    WReport out = report;
    out.special_linear = true;
    out.chain.push_back(kTransferStep);
    out.notes.push_back(
        "the invariant is unchanged for the special subgroup and for its "
        "central quotients");
    if (n == 2 && q == 2) {
        out.notes.push_back(
            "the configuration (n, q) = (2, 2) is degenerate; the transfer "
            "is formal");
    }
    return out;
}

std::vector<WReport> enumerate_scenarios(const GroupDescriptor& g,
                                         std::uint64_t p) {
    require_odd_prime(p, "enumerate_scenarios");
    std::vector<WReport> out;

    if (g.family == Family::GL || g.family == Family::GU) {
        if (g.q % p == 0) {
            throw Error(ErrorKind::BadCharacteristic,
                        "enumerate_scenarios: p divides q");
        }
        int eps = g.eps();
        unsigned d = static_cast<unsigned>(
            mult_order(eps * static_cast<std::int64_t>(g.q), p));
        if (d == 1) {
            if (g.n == 1) {
                // Rank one: the group is its own Coxeter torus and the
                // defect group is central.
                out.push_back(crucial_case_report(
                    g, p, 1, 1, eps, 1, mpz_class(g.q), {},
                    {"the group has rank one, so the defect group is "
                     "central and the invariant is trivial"}));
            } else {
                out.push_back(w_base(eps, g.n, g.q, p));
            }
        } else {
            for (unsigned n0 = d; n0 <= g.n; n0 += d) {
                out.push_back(w_glgu(eps, g.n, g.q, p, n0));
            }
        }
    } else {
        for (const CentralizerScenario& sc : centralizer_scenarios(g, p)) {
            unsigned n0 = static_cast<unsigned>(2 * sc.m * sc.d);
            out.push_back(w_classical(g, p, sc, n0));
        }
    }

    std::sort(out.begin(), out.end(), [](const WReport& x, const WReport& y) {
        if (x.scenario.support_dim != y.scenario.support_dim) {
            return x.scenario.support_dim < y.scenario.support_dim;
        }
        if (x.scenario.m != y.scenario.m) return x.scenario.m < y.scenario.m;
        return x.scenario.aprime < y.scenario.aprime;
    });
    return out;
}

namespace {

void expect(bool ok, const std::string& what,
            std::vector<std::string>& checks) {
    if (!ok) {
        throw Error(ErrorKind::ReproductionFailure, what);
    }
    checks.push_back(what);
}

}  // namespace

BdrExampleReport reproduce_bdr_example() {
    std::vector<std::string> checks;

    WReport ex = w_glgu(-1, 21, 5, 7, 21);
    expect(ex.scenario.d == 3, "level d = ord_7(-5) = 3", checks);
    expect(ex.scenario.eps_reduced == -1 && ex.scenario.n_reduced == 7 &&
               ex.scenario.q_reduced == 125,
           "reduction lands in GU_7(125)", checks);
    expect(ex.defect_exponent == 2 && ex.label.shape().l == 2,
           "the defect group is cyclic of order 7^2", checks);
    expect(!ex.trivial && ex.label.indices() == std::vector<unsigned>{1},
           "the label is the singleton {1}", checks);
    expect(render_label(ex.label) == "Ω_{D/D_1}(k)",
           "the invariant renders as Ω_{D/D_1}(k)", checks);

    WReport red = w_base(-1, 7, 125, 7);
    expect(red.label == ex.label && red.defect_exponent == ex.defect_exponent,
           "the reduced-step computation agrees with the pipeline", checks);

    expect(is_prime(449), "449 is prime", checks);
    mpz_class torus = torus_order(-1, 21, 5);
    expect(mpz_class(torus % 449) == 0, "449 divides 5^21 + 1", checks);
    expect(mult_order(25, 449) == 7,
           "the eigenvalues of the regular element span a degree-7 "
           "extension of F_25",
           checks);
    for (unsigned j = 1; j < 7; ++j) {
        mpz_class reject = mpz_pow(25, j) - 1;
        expect(mpz_class(reject % 449) != 0,
               "449 does not divide 25^" + std::to_string(j) + " - 1",
               checks);
    }
    expect(mult_order(-5, 7) == 3, "ord_7(-5) = 3 matches the level",
           checks);

    BdrExampleReport report{
        std::move(ex), std::move(red), 449, 7, 3, 3, true, {}};
    expect(report.tree_edges == report.example.scenario.d,
           "the Brauer tree is a line with d = 3 edges (cited, matched "
           "against the computed level)",
           checks);
    checks.push_back(
        "the Morita-correspondent unipotent block has trivial invariant "
        "(cited contrast)");
    report.checks = std::move(checks);
    return report;
}

std::string report_to_json_string(const WReport& report) {
    return report_json(report).dump(2);
}

std::string bdr_report_to_json_string(const BdrExampleReport& report) {
    nlohmann::ordered_json j;
    j["example"] = report_json(report.example);
    j["reduced"] = report_json(report.reduced_step);
    j["regular_element_order"] = report.regular_element_order;
    j["eigenvalue_field_degree"] = report.eigenvalue_field_degree;
    j["level"] = report.level;
    j["tree_edges"] = report.tree_edges;
    j["morita_side_trivial"] = report.morita_side_trivial;
    j["checks"] = report.checks;
    return j.dump(2);
}

std::string report_headline(const WReport& report) {
    std::ostringstream os;
    os << attributed_name(report) << "  p=" << report.scenario.p
       << "  n0=" << report.scenario.support_dim << "  ->  "
       << reduced_name(report.scenario) << "  defect " << report.scenario.p
       << "^" << report.defect_exponent
       << "  W = " << render_label(report.label);
    return os.str();
}

}  // namespace wb

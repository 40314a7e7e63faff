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

#include <cstdint>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "wb/dade.hpp"
#include "wb/error.hpp"
#include "wb/grouppoly.hpp"
#include "wb/numth.hpp"
#include "wb/pipeline.hpp"
#include "wb/report.hpp"
#include "wb/verify.hpp"

namespace {

struct FamilyChoice {
    wb::Family family;
    bool special_linear;
};

std::optional<FamilyChoice> parse_family(const std::string& s) {
    if (s == "gl") return FamilyChoice{wb::Family::GL, false};
    if (s == "gu") return FamilyChoice{wb::Family::GU, false};
    if (s == "sl") return FamilyChoice{wb::Family::GL, true};
    if (s == "su") return FamilyChoice{wb::Family::GU, true};
    if (s == "sp") return FamilyChoice{wb::Family::Sp, false};
    if (s == "spin+") return FamilyChoice{wb::Family::SpinPlus, false};
    if (s == "spin-") return FamilyChoice{wb::Family::SpinMinus, false};
    return std::nullopt;
}

std::string group_label(const wb::WReport& r) {
    const wb::GroupDescriptor& g = r.scenario.group;
    if (!r.special_linear) return g.render();
    std::ostringstream os;
    os << (g.family == wb::Family::GL ? "SL" : "SU") << "_" << g.n << "("
       << g.q << ")";
    return os.str();
}

std::string defect_group_string(std::uint64_t p, unsigned l) {
    std::ostringstream os;
    if (l == 0) {
        os << "trivial (|D| = 1)";
        return os.str();
    }
    os << "C_{" << p << "^" << l << "}  (|D| = "
       << wb::mpz_pow(p, l).get_str() << ")";
    return os.str();
}

std::string defect_order_short(std::uint64_t p, unsigned l) {
    std::ostringstream os;
    os << p << "^" << l;
    return os.str();
}

std::string join(const std::vector<std::string>& parts, const char* sep) {
    std::ostringstream os;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (i != 0) os << sep;
        os << parts[i];
    }
    return os.str();
}

void print_w_table(const wb::WReport& r) {
    const wb::BlockScenario& s = r.scenario;
    const auto row = [](const char* key, const std::string& value) {
        std::cout << "  " << std::left << std::setw(16) << key << value
                  << "\n";
    };
    std::cout << "block invariant report\n";
    row("group", group_label(r));
    row("prime", std::to_string(s.p));
    row("support", std::to_string(s.support_dim));
    row("level d", std::to_string(s.d));
    {
        std::ostringstream os;
        os << (s.eps_reduced == -1 ? "GU" : "GL") << "_" << s.n_reduced
           << "(" << s.q_reduced.get_str() << ")"
           << "  [eps = " << (s.eps_reduced == 1 ? "+1" : "-1")
           << ", m = " << s.m << ", a' = " << s.aprime << "]";
        row("reduced block", os.str());
    }
    row("defect group", defect_group_string(s.p, r.defect_exponent));
    row("label A", wb::label_to_json_string(r.label));
    row("W(B)", wb::render_label(r.label));
    row("trivial", r.trivial ? "yes" : "no");
    row("chain", r.chain.empty() ? "(direct)" : join(r.chain, " -> "));
    for (const std::string& note : r.notes) row("note", note);
}

void print_enumerate_table(const std::vector<wb::WReport>& reports) {
    const std::vector<std::string> header = {"support", "d",     "m",
                                             "a'",      "eps",   "q^d",
                                             "defect",  "W",     "notes"};
    std::vector<std::vector<std::string>> rows;
    for (const wb::WReport& r : reports) {
        const wb::BlockScenario& s = r.scenario;
        rows.push_back({std::to_string(s.support_dim), std::to_string(s.d),
                        std::to_string(s.m), std::to_string(s.aprime),
                        s.eps_reduced == 1 ? "+1" : "-1",
                        s.q_reduced.get_str(),
                        defect_order_short(s.p, r.defect_exponent),
                        wb::render_label(r.label), join(r.notes, "; ")});
    }
    std::vector<std::size_t> width(header.size());
    for (std::size_t c = 0; c < header.size(); ++c) width[c] = header[c].size();
    for (const auto& row : rows) {
        for (std::size_t c = 0; c < row.size(); ++c) {
            width[c] = std::max(width[c], row[c].size());
        }
    }
    const auto print_row = [&](const std::vector<std::string>& row) {
        std::cout << "  ";
        for (std::size_t c = 0; c < row.size(); ++c) {
            // setw counts bytes, which misaligns the UTF-8 label column;
            // pad manually by character-agnostic byte width instead, which
            // is still stable for fixed content and keeps columns apart.
            std::cout << row[c];
            if (c + 1 < row.size()) {
                for (std::size_t k = row[c].size(); k < width[c] + 2; ++k) {
                    std::cout << ' ';
                }
            }
        }
        std::cout << "\n";
    };
    print_row(header);
    for (const auto& row : rows) print_row(row);
}

void print_bdr_report(const wb::BdrExampleReport& rep) {
    std::cout << "worked example: cyclic unitary block at the bad sign "
                 "pattern\n";
    const auto row = [](const char* key, const std::string& value) {
        std::cout << "  " << std::left << std::setw(24) << key << value
                  << "\n";
    };
    row("group", group_label(rep.example));
    row("prime", std::to_string(rep.example.scenario.p));
    row("level d", std::to_string(rep.level));
    row("regular element order", std::to_string(rep.regular_element_order));
    row("eigenvalue field degree", std::to_string(rep.eigenvalue_field_degree));
    row("defect group",
        defect_group_string(rep.example.scenario.p,
                            rep.example.defect_exponent));
    row("W(B)", wb::render_label(rep.example.label));
    row("label A", wb::label_to_json_string(rep.example.label));
    row("reduced block", rep.reduced_step.scenario.group.render());
    row("Brauer tree edges", std::to_string(rep.tree_edges));
    row("Morita side W", rep.morita_side_trivial ? "k (trivial)" : "?");
    std::cout << "checks:\n";
    for (const std::string& c : rep.checks) std::cout << "  - " << c << "\n";
}

nlohmann::ordered_json verify_report_json(const wb::VerifyReport& r) {
    nlohmann::ordered_json j;
    j["name"] = r.suite;
    j["cases"] = r.cases;
    j["violations"] = r.violations;
    j["seconds"] = r.seconds;
    j["samples"] = r.samples;
    return j;
}

int run_verify(const std::string& suite, bool json) {
    const wb::SuiteResult result = wb::run_suite(suite, /*parallel=*/true);
    if (json) {
        nlohmann::ordered_json j;
        j["suite"] = result.name;
        j["ok"] = result.ok;
        j["seconds"] = result.seconds;
        j["reports"] = nlohmann::ordered_json::array();
        for (const wb::VerifyReport& r : result.reports) {
            j["reports"].push_back(verify_report_json(r));
        }
        std::cout << j.dump(2) << "\n";
    } else {
        std::uint64_t cases = 0;
        std::uint64_t violations = 0;
        for (const wb::VerifyReport& r : result.reports) {
            cases += r.cases;
            violations += r.violations;
            std::ostringstream line;
            line << "  " << std::left << std::setw(34) << r.suite
                 << " cases=" << std::setw(10) << r.cases
                 << " violations=" << std::setw(6) << r.violations
                 << std::fixed << std::setprecision(2) << r.seconds << "s";
            std::cout << line.str() << "\n";
            for (const std::string& s : r.samples) {
                std::cout << "      ! " << s << "\n";
            }
        }
        std::cout << "suite " << result.name << ": "
                  << result.reports.size() << " sweeps, " << cases
                  << " cases, " << violations << " violations, "
                  << std::fixed << std::setprecision(2) << result.seconds
                  << "s -> " << (result.ok ? "OK" : "FAILED") << "\n";
    }
    return result.ok ? 0 : 1;
}

nlohmann::ordered_json reports_json(const std::vector<wb::WReport>& reports) {
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const wb::WReport& r : reports) {
        arr.push_back(nlohmann::ordered_json::parse(
            wb::report_to_json_string(r)));
    }
    return arr;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "wblock: endo-permutation source invariants of cyclic blocks of "
        "finite classical groups"};
    app.require_subcommand(1);

    std::string family_str;
    std::uint64_t n_value = 0;
    std::uint64_t q_value = 0;
    std::uint64_t p_value = 0;
    std::uint64_t support_value = 0;
    bool json_flag = false;
    std::string suite_name = "all";

    CLI::App* winv = app.add_subcommand(
        "w-invariant", "Compute W(B) for one cyclic block");
    winv->add_option("--family", family_str,
                     "gl, gu, sl, su, sp, spin+ or spin-")
        ->required();
    winv->add_option("--n", n_value, "rank / dimension of the group")
        ->required();
    winv->add_option("--q", q_value, "field size (prime power)")->required();
    winv->add_option("--p", p_value, "block characteristic (odd prime)")
        ->required();
    CLI::Option* support_opt = winv->add_option(
        "--support", support_value,
        "support dimension of the block (defaults to the largest "
        "admissible scenario)");
    winv->add_flag("--json", json_flag, "emit the report as JSON");

    CLI::App* enumerate = app.add_subcommand(
        "enumerate", "List every admissible block scenario");
    enumerate->add_option("--family", family_str,
                          "gl, gu, sl, su, sp, spin+ or spin-")
        ->required();
    enumerate->add_option("--n", n_value, "rank / dimension of the group")
        ->required();
    enumerate->add_option("--q", q_value, "field size (prime power)")
        ->required();
    enumerate->add_option("--p", p_value, "block characteristic (odd prime)")
        ->required();
    enumerate->add_flag("--json", json_flag, "emit the reports as JSON");

    CLI::App* verify = app.add_subcommand(
        "verify", "Run the brute-force verification sweeps");
    verify->add_option("--suite", suite_name,
                       "numth, ffpoly, dade, signs, grouppoly, pipeline or "
                       "all");
    verify->add_flag("--json", json_flag, "emit the summary as JSON");

    CLI::App* bdr = app.add_subcommand(
        "bdr-example", "Reproduce the worked GU_21(5) example end to end");
    bdr->add_flag("--json", json_flag, "emit the report as JSON");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    }

    try {
        if (winv->parsed() || enumerate->parsed()) {
            const std::optional<FamilyChoice> fc = parse_family(family_str);
            if (!fc) {
                std::cerr << "usage error: unknown family '" << family_str
                          << "' (expected gl, gu, sl, su, sp, spin+, spin-)\n";
                return 2;
            }
            if (n_value > 1000000) {
                std::cerr << "usage error: --n out of the supported range\n";
                return 2;
            }
            const unsigned n = static_cast<unsigned>(n_value);
            const bool is_linear = fc->family == wb::Family::GL ||
                                   fc->family == wb::Family::GU;
            if (fc->special_linear && !is_linear) {
                std::cerr << "usage error: special-linear transfer only "
                             "applies to gl/gu families\n";
                return 2;
            }

            if (enumerate->parsed()) {
                const wb::GroupDescriptor g(fc->family, n, q_value);
                std::vector<wb::WReport> reports =
                    wb::enumerate_scenarios(g, p_value);
                if (fc->special_linear) {
                    for (wb::WReport& r : reports) {
                        r = wb::sl_su_transfer(g.eps(), n, q_value, p_value,
                                               r);
                    }
                }
                if (json_flag) {
                    std::cout << reports_json(reports).dump(2) << "\n";
                } else if (reports.empty()) {
                    std::cout << "no admissible block scenarios for "
                              << g.render() << " at p=" << p_value << "\n";
                } else {
                    print_enumerate_table(reports);
                }
                return 0;
            }

            wb::WReport report = [&] {
                const wb::GroupDescriptor g(fc->family, n, q_value);
                if (is_linear && support_opt->count() > 0) {
                    if (support_value > n) {
                        throw wb::Error(
                            wb::ErrorKind::InvalidSupport,
                            "support dimension exceeds the group rank");
                    }
                    return wb::w_glgu(g.eps(), n, q_value, p_value,
                                      static_cast<unsigned>(support_value));
                }
                std::vector<wb::WReport> reports =
                    wb::enumerate_scenarios(g, p_value);
                if (support_opt->count() > 0) {
                    for (const wb::WReport& r : reports) {
                        if (r.scenario.support_dim == support_value) return r;
                    }
                    throw wb::Error(wb::ErrorKind::InvalidSupport,
                                    "no admissible scenario has support "
                                    "dimension " +
                                        std::to_string(support_value));
                }
                if (reports.empty()) {
                    throw wb::Error(wb::ErrorKind::InvalidScenario,
                                    "no admissible block scenario for " +
                                        g.render() + " at p=" +
                                        std::to_string(p_value));
                }
                return reports.back();
            }();
            if (fc->special_linear) {
                report = wb::sl_su_transfer(
                    report.scenario.group.eps(), n, q_value, p_value, report);
            }
            if (json_flag) {
                std::cout << wb::report_to_json_string(report) << "\n";
            } else {
                print_w_table(report);
            }
            return 0;
        }

        if (verify->parsed()) return run_verify(suite_name, json_flag);

        if (bdr->parsed()) {
            const wb::BdrExampleReport rep = wb::reproduce_bdr_example();
            if (json_flag) {
                std::cout << wb::bdr_report_to_json_string(rep) << "\n";
            } else {
                print_bdr_report(rep);
            }
            return 0;
        }
    } catch (const wb::Error& e) {
        if (e.kind() == wb::ErrorKind::ReproductionFailure) {
            std::cerr << "verification failure: " << e.what() << "\n";
            return 1;
        }
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }

    std::cerr << "usage error: no verb given\n";
    return 2;
}

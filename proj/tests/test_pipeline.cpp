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

#include <doctest.h>

#include <json.hpp>

#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

#include "wb/error.hpp"
#include "wb/pipeline.hpp"

using namespace wb;

namespace {

ErrorKind kind_of(const std::function<void()>& fn) {
    try {
        fn();
    } catch (const Error& e) {
        return e.kind();
    }
    throw std::logic_error("expected a library error");
}

bool notes_mention(const WReport& r, const std::string& needle) {
    for (const auto& s : r.notes)
        if (s.find(needle) != std::string::npos) return true;
    return false;
}

}  // namespace

TEST_SUITE("pipeline") {

TEST_CASE("base case: non-trivial exactly in the crucial configuration") {
    WReport r = w_base(-1, 7, 125, 7);
    CHECK(r.defect_exponent == 2);
    CHECK_FALSE(r.trivial);
    CHECK(r.label.indices() == std::vector<unsigned>{1});
    CHECK(render_label(r.label) == "Ω_{D/D_1}(k)");
    CHECK(r.chain == std::vector<std::string>{"crucial-case-classification"});

    // unitary, odd rank, p = 3 mod 4: the only non-trivial corner
    CHECK_FALSE(w_base(-1, 3, 5, 3).trivial);
    CHECK(w_base(1, 10, 11, 5).trivial);   // split form
    CHECK(w_base(-1, 5, 4, 5).trivial);    // p = 1 mod 4
    CHECK(w_base(-1, 6, 2, 3).trivial);    // even rank
    CHECK(w_base(-1, 5, 2, 3).trivial);    // aprime = 0: empty interval

    CHECK(kind_of([] { w_base(-1, 5, 7, 5); }) ==
          ErrorKind::HypothesisViolation);
    CHECK(kind_of([] { w_base(-1, 1, 5, 3); }) == ErrorKind::OutOfRange);
}

TEST_CASE("base case: formal small-group caveats are reported") {
    CHECK(notes_mention(w_base(-1, 2, 2, 3), "GU_2(2)"));
    CHECK(notes_mention(w_base(-1, 3, 2, 3), "excluded"));
    CHECK(w_base(-1, 4, 2, 3).notes.empty());
}

TEST_CASE("general linear pipeline through the level reduction") {
    WReport r = w_glgu(-1, 21, 5, 7, 21);
    CHECK(r.scenario.d == 3);
    CHECK(r.scenario.m == 1);
    CHECK(r.scenario.aprime == 1);
    CHECK(r.scenario.eps_reduced == -1);
    CHECK(r.scenario.n_reduced == 7);
    CHECK(r.scenario.q_reduced == 125);
    CHECK(r.defect_exponent == 2);
    CHECK_FALSE(r.trivial);
    CHECK(r.label.indices() == std::vector<unsigned>{1});
    CHECK(r.chain ==
          std::vector<std::string>{"centralizer-level-reduction",
                                   "crucial-case-classification"});

    // even level flips the form to split, which is always trivial
    WReport s = w_glgu(1, 6, 2, 7, 6);
    CHECK(s.scenario.d == 3);
    CHECK(s.scenario.n_reduced == 2);
    CHECK(s.scenario.q_reduced == 8);
    CHECK(s.defect_exponent == 1);
    CHECK(s.trivial);

    // partial support prepends the fixed-space step
    WReport t = w_glgu(-1, 24, 5, 7, 21);
    CHECK(t.chain.front() == "fixed-space-reduction");
    CHECK(t.label == r.label);

    // reduced rank one: central defect group
    WReport u = w_glgu(-1, 21, 5, 7, 3);
    CHECK(u.scenario.n_reduced == 1);
    CHECK(u.trivial);
    CHECK(notes_mention(u, "rank one"));
}

TEST_CASE("general linear pipeline rejects malformed scenarios") {
    CHECK(kind_of([] { w_glgu(-1, 25, 5, 3, 3); }) ==
          ErrorKind::InvalidScenario);
    CHECK(kind_of([] { w_glgu(1, 6, 2, 7, 4); }) ==
          ErrorKind::InvalidSupport);
    CHECK(kind_of([] { w_glgu(1, 4, 9, 3, 4); }) ==
          ErrorKind::BadCharacteristic);
    CHECK(kind_of([] { w_glgu(-1, 21, 5, 7, 22); }) == ErrorKind::OutOfRange);
    CHECK(kind_of([] { w_glgu(-1, 21, 5, 7, 0); }) == ErrorKind::OutOfRange);
}

TEST_CASE("enumeration lists one scenario per admissible support") {
    GroupDescriptor gu(Family::GU, 21, 5);
    auto reports = enumerate_scenarios(gu, 7);
    REQUIRE(reports.size() == 7);
    for (std::size_t i = 0; i < reports.size(); ++i) {
        CHECK(reports[i].scenario.support_dim == 3 * (i + 1));
        if (i + 1 < reports.size()) CHECK(reports[i].trivial);
    }
    CHECK_FALSE(reports.back().trivial);
    CHECK(reports.back().scenario.support_dim == 21);

    GroupDescriptor gl(Family::GL, 4, 3);
    auto single = enumerate_scenarios(gl, 13);
    REQUIRE(single.size() == 1);
    CHECK(single[0].scenario.support_dim == 3);
    CHECK(single[0].scenario.n_reduced == 1);
    CHECK(single[0].trivial);

    // rank one at level one: the torus itself
    auto rank_one = enumerate_scenarios(GroupDescriptor(Family::GL, 1, 4), 3);
    REQUIRE(rank_one.size() == 1);
    CHECK(rank_one[0].trivial);
    CHECK(notes_mention(rank_one[0], "rank one"));
}

TEST_CASE("symplectic reduction: every small block is trivial") {
    GroupDescriptor sp6(Family::Sp, 6, 2);
    auto reports = enumerate_scenarios(sp6, 3);
    REQUIRE(reports.size() == 3);
    for (const auto& r : reports) {
        CHECK(r.trivial);
        CHECK(r.scenario.d == 1);
    }
    CHECK(notes_mention(reports.back(), "Sp_6(2)"));
    CHECK(reports.back().defect_exponent == 1);

    GroupDescriptor sp12(Family::Sp, 12, 5);
    auto sc = centralizer_scenarios(sp12, 7);
    WReport two = w_classical(sp12, 7, sc[1], 12);
    CHECK(two.scenario.n_reduced == 2);
    CHECK(two.trivial);
    CHECK(two.defect_exponent == 1);
}

TEST_CASE("spin reduction matches the reduced general unitary block") {
    GroupDescriptor g(Family::SpinMinus, 42, 5);
    auto reports = enumerate_scenarios(g, 7);
    REQUIRE(reports.size() == 7);
    for (const auto& r : reports) {
        if (r.scenario.support_dim < 42) {
            CHECK(r.trivial);
            CHECK(notes_mention(r, "partial support"));
        }
    }
    const WReport& full = reports.back();
    CHECK(full.scenario.support_dim == 42);
    CHECK_FALSE(full.trivial);
    WReport base = w_base(-1, 7, 125, 7);
    CHECK(full.label == base.label);
    CHECK(full.defect_exponent == base.defect_exponent);
    CHECK(full.chain ==
          std::vector<std::string>{"classical-to-gl-reduction",
                                   "crucial-case-classification"});

    auto sc = centralizer_scenarios(g, 7);
    CHECK(kind_of([&] { w_classical(g, 7, sc[0], 42); }) ==
          ErrorKind::InvalidScenario);
    CentralizerScenario fake = sc[0];
    fake.d = 5;
    CHECK(kind_of([&] { w_classical(g, 7, fake, 10); }) ==
          ErrorKind::InvalidScenario);
}

TEST_CASE("special linear transfer keeps the invariant") {
    WReport rep = w_glgu(-1, 21, 5, 7, 21);
    WReport t = sl_su_transfer(-1, 21, 5, 7, rep);
    CHECK(t.special_linear);
    CHECK(t.label == rep.label);
    CHECK(t.defect_exponent == rep.defect_exponent);
    CHECK(t.chain.back() == "special-linear-transfer");
    CHECK(t.notes.size() == rep.notes.size() + 1);

    CHECK(kind_of([&] {
              sl_su_transfer(-1, 4, 2, 3, w_base(-1, 4, 2, 3));
          }) == ErrorKind::OutOfScope);
    CHECK(kind_of([&] { sl_su_transfer(1, 21, 5, 7, rep); }) ==
          ErrorKind::InvalidScenario);
}

TEST_CASE("reports serialize to the documented JSON schema") {
    WReport r = w_glgu(-1, 21, 5, 7, 21);
    auto j = nlohmann::json::parse(report_to_json_string(r));
    CHECK(j["family"] == "GU");
    CHECK(j["n"] == 21);
    CHECK(j["q"] == 5);
    CHECK(j["p"] == 7);
    CHECK(j["n0"] == 21);
    CHECK(j["d"] == 3);
    CHECK(j["m"] == 1);
    CHECK(j["aprime"] == 1);
    CHECK(j["eps_reduced"] == -1);
    CHECK(j["q_reduced"] == 125);
    CHECK(j["defect_exponent"] == 2);
    CHECK(j["label"]["p"] == 7);
    CHECK(j["label"]["l"] == 2);
    CHECK(j["label"]["A"] == nlohmann::json::array({1}));
    CHECK(j["rendered"] == "Ω_{D/D_1}(k)");
    CHECK(j["trivial"] == false);
    CHECK(j["chain"].is_array());
    CHECK(j["notes"].is_array());

    auto t = nlohmann::json::parse(
        report_to_json_string(sl_su_transfer(-1, 21, 5, 7, r)));
    CHECK(t["family"] == "SU");

    CHECK(report_headline(r).find("GU_21(5)") != std::string::npos);
    CHECK(report_headline(r).find("W = Ω_{D/D_1}(k)") != std::string::npos);
}

TEST_CASE("worked example reproduces end to end") {
    BdrExampleReport rep = reproduce_bdr_example();
    CHECK(rep.regular_element_order == 449);
    CHECK(rep.eigenvalue_field_degree == 7);
    CHECK(rep.level == 3);
    CHECK(rep.tree_edges == 3);
    CHECK(rep.morita_side_trivial);
    CHECK_FALSE(rep.example.trivial);
    CHECK(rep.example.label == rep.reduced_step.label);
    CHECK(rep.checks.size() >= 10);

    auto j = nlohmann::json::parse(bdr_report_to_json_string(rep));
    CHECK(j["regular_element_order"] == 449);
    CHECK(j["example"]["rendered"] == "Ω_{D/D_1}(k)");
}

}  // TEST_SUITE

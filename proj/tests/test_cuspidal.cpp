#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "hecke/cuspidal.hpp"

using namespace hecke;

namespace {
Partition P(std::vector<long> v) { return Partition(std::move(v)); }
Q4 q(long quarters) { return Q4::from_quarters(quarters); }
}  // namespace

TEST_CASE("degree templates") {
    {
        auto t = degree_template(Family::III_ord, 1, 0);
        MultiplicityFn expect;
        expect.add(Q4(1), -2);
        expect.add(Q4(2), -1);
        CHECK(t.even_mult == expect);
    }
    CHECK(degree_template(Family::II, 0, 0).even_mult.empty());
    CHECK(degree_template(Family::III_extra, 0, 1).even_mult == dirac(Q4(1), -1));
    {
        // II(2,1) is the rank-6 template
        auto t = degree_template(Family::II, 2, 1);
        MultiplicityFn expect;
        expect.add(Q4(1), -5);
        expect.add(Q4(2), -3);
        expect.add(Q4(3), -1);
        CHECK(t.even_mult == expect);
    }
    // all values nonpositive; distinct labels give distinct functions per
    // family (modulo the unordered {a,b} symmetry of I, III_ord and IV_ord)
    for (Family f : {Family::I, Family::II, Family::III_ord, Family::IV_ord,
                     Family::III_extra, Family::IV_extra}) {
        bool symmetric = f == Family::I || f == Family::III_ord || f == Family::IV_ord;
        std::set<std::string> seen;
        std::size_t count = 0;
        for (long a = 0; a <= 8; ++a) {
            for (long b = 0; b <= 8; ++b) {
                if (symmetric && a > b) continue;
                auto t = degree_template(f, a, b);
                for (auto& [x, v] : t.even_mult.entries()) CHECK(v < 0);
                seen.insert(t.even_mult.str());
                ++count;
            }
        }
        CHECK(seen.size() == count);
    }
}

TEST_CASE("template source parameters and realized ranks") {
    CHECK(template_source_params(Family::II, 2, 1) ==
          classify_params(q4_half(), Q4::half(7), 0));
    CHECK(template_source_params(Family::III_extra, 0, 1) == classify_params(q(5), q(7), 0));
    auto chain = reduce_to_minimal(template_source_params(Family::III_extra, 0, 1));
    REQUIRE(!chain.empty());
    CHECK(chain.back().target == classify_params(Q4(0), Q4(1), 1));
}

TEST_CASE("rank-0 labels") {
    CHECK(rank0_label(Q4(3)) == P({5, 3, 1}));
    CHECK(rank0_label(Q4::half(5)) == P({4, 2}));
    CHECK(rank0_label(Q4(0)) == Partition());
    CHECK(rank0_label(q4_half()) == Partition());
    CHECK(rank0_label(q(7)) == Partition());
}

TEST_CASE("classify_no_odd examples") {
    {
        auto p = classify_params(q4_half(), q4_half(), 6);
        auto hits = classify_no_odd(p);
        // one-sided triangular solutions plus mixed triangular pairs
        std::set<std::pair<Partition, Partition>> s(hits.begin(), hits.end());
        CHECK(s.count({Partition(), P({6, 4, 2})}));
        CHECK(s.count({P({6, 4, 2}), Partition()}));
        CHECK(s.count({P({4, 2}), P({4, 2})}));
        for (auto& [lm, lp] : s) {
            CHECK(side_no_odd_family(q4_half(), lm));
            CHECK(side_no_odd_family(q4_half(), lp));
        }
    }
    {
        auto hits = classify_no_odd(classify_params(Q4(0), Q4(0), 2));
        std::set<std::pair<Partition, Partition>> s(hits.begin(), hits.end());
        CHECK(s.count({Partition(), P({3, 1})}));
    }
    {
        // squares qualify at m = 1/4 but not at m = 3/4
        CHECK(side_no_odd_family(q(1), P({2, 2})));
        CHECK(!side_no_odd_family(q(3), P({2, 2})));
        CHECK(side_no_odd_family(q(3), P({1, 1})));
        auto hits = classify_no_odd(classify_params(q(1), q(3), 2));
        for (auto& [lm, lp] : hits) {
            CHECK(side_no_odd_family(q(1), lm));
            CHECK(side_no_odd_family(q(3), lp));
        }
    }
}

TEST_CASE("mixed_mult_formula examples") {
    {
        auto p = classify_params(q4_half(), q4_half(), 1);
        auto s = mixed_mult_formula(p, Partition(), P({2}));
        CHECK(s.even == dirac(Q4(1), -1));
        CHECK(s.odd.empty());
    }
    {
        // triangular pair at (1,1): -(max{0,p_-+p_++2-k} + max{0,|p_+-p_-|-k}) - delta_1
        auto p = classify_params(Q4(1), Q4(1), 4);
        Partition lm = P({3, 1});   // p_- = 1
        Partition lp = P({5, 3, 1});  // p_+ = 2
        auto s = mixed_mult_formula(p, lm, lp);
        MultiplicityFn expect;
        for (long k = 1; k <= 6; ++k) {
            long v = std::max(0L, 1 + 2 + 2 - k) + std::max(0L, 1 - k);
            if (v) expect.add(Q4(k), static_cast<int>(-v));
        }
        expect.add(Q4(1), -1);  // anisotropy
        CHECK(s.even == expect);
        CHECK(s.odd.empty());
    }
    {
        auto p = classify_params(q4_half(), q4_half(), 0);
        auto s = mixed_mult_formula(p, Partition(), Partition());
        CHECK(s.even.empty());
        CHECK(s.odd.empty());
    }
}

TEST_CASE("formula route equals the direct route") {
    std::vector<HeckeParams> fams = {
        classify_params(q4_half(), q4_half()), classify_params(Q4(0), Q4(1)),
        classify_params(Q4(0), Q4(0)),         classify_params(Q4(1), Q4(1)),
        classify_params(q4_half(), Q4(0)),     classify_params(q4_half(), Q4(1)),
        classify_params(q(1), q(1)),           classify_params(q(1), q(3)),
        classify_params(q(1), q(5)),           classify_params(q(3), q(5)),
        classify_params(q(3), q(7)),           classify_params(q(1), q(11))};
    for (auto base : fams) {
        long cap = base.base == 2 ? 3 : 4;
        for (long n = 0; n <= cap; ++n) {
            HeckeParams p = classify_params(base.m_minus, base.m_plus, n);
            for (auto& [lm, lp] : enumerate_residual_points(p)) {
                auto direct = residue_q(p, coordinates(p, lm, lp).coords);
                auto formula = mixed_mult_formula(p, lm, lp);
                CHECK(formula.even == direct.even_part);
                CHECK(formula.odd == direct.odd_cycl);
            }
        }
    }
}

TEST_CASE("solve_fdeg examples") {
    {
        auto p = classify_params(q4_half(), q4_half(), 6);
        auto orbits = solve_fdeg(p, degree_template(Family::II, 2, 1));
        REQUIRE(orbits.size() == 1);
        REQUIRE(orbits[0].size() == 2);
        CHECK(orbits[0][0] == LabelledPoint{Partition(), P({6, 4, 2})});
        CHECK(orbits[0][1] == LabelledPoint{P({6, 4, 2}), Partition()});
    }
    {
        auto p = classify_params(Q4(0), Q4(1), 1);
        auto orbits = solve_fdeg(p, degree_template(Family::III_extra, 0, 1));
        REQUIRE(orbits.size() == 1);
        CHECK(orbits[0] == std::vector<LabelledPoint>{{Partition(), P({3})}});
    }
    {
        // a template with a positive entry can never match
        DegreeTemplate bogus{Family::II, 0, 0, dirac(Q4(1), +1)};
        CHECK(solve_fdeg(classify_params(q4_half(), q4_half(), 1), bogus).empty());
    }
}

TEST_CASE("verify_uniqueness small cases") {
    {
        auto rep = verify_uniqueness(classify_params(q4_half(), q4_half(), 6));
        CHECK(rep.pass);
        bool found = false;
        for (auto& t : rep.templates)
            for (auto& l : t.labels)
                if (l == "II(2,1)") {
                    found = true;
                    CHECK(t.solution_orbits.front().size() == 2);
                }
        CHECK(found);
    }
    {
        auto rep = verify_uniqueness(classify_params(Q4(0), Q4(1), 4));
        CHECK(rep.pass);
        std::set<std::string> labels;
        for (auto& t : rep.templates)
            for (auto& l : t.labels) labels.insert(l);
        CHECK(labels.count("III_ord(1,1)"));
        CHECK(labels.count("III_extra(1,0)"));
    }
    CHECK(verify_uniqueness(classify_params(Q4(0), Q4(0), 0)).pass);
    CHECK_THROWS_AS(verify_uniqueness(classify_params(Q4(0), Q4(3), 1)), std::domain_error);
}

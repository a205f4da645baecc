#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "hecke/cuspidal.hpp"
#include "hecke/residual.hpp"

using namespace hecke;

namespace {
Partition P(std::vector<long> v) { return Partition(std::move(v)); }
Q4 q(long quarters) { return Q4::from_quarters(quarters); }

std::set<CoordinateVector> orbit_set(const HeckeParams& p) {
    std::set<CoordinateVector> s;
    for (auto& [lm, lp] : enumerate_residual_points(p))
        s.insert(coordinates(p, lm, lp).coords);
    return s;
}
}  // namespace

TEST_CASE("classify_params") {
    CHECK(classify_params(q4_half(), q4_half()).type() == ParamType::II);
    CHECK(classify_params(q4_half(), q4_half()).base == 1);
    CHECK(classify_params(Q4(0), Q4(1)).type() == ParamType::III);
    CHECK(classify_params(Q4(0), Q4(1)).base == 1);
    auto v = classify_params(q(1), q(5));
    CHECK(v.type() == ParamType::V);
    CHECK(v.base == 2);
    CHECK(classify_params(q(3), q(5)).type() == ParamType::VI);
    CHECK(classify_params(q4_half(), Q4(1)).type() == ParamType::I);
    CHECK(classify_params(q4_half(), Q4(1)).base == 2);
    CHECK(classify_params(Q4(0), Q4(2)).type() == ParamType::IV);
    CHECK_THROWS_AS(classify_params(q(1), q4_half()), std::domain_error);
}

TEST_CASE("enumerate_residual_points examples") {
    auto a = enumerate_residual_points(classify_params(Q4(0), Q4(1), 1));
    CHECK(a == std::vector<std::pair<Partition, Partition>>{{Partition(), P({3})}});
    auto b = enumerate_residual_points(classify_params(q4_half(), q4_half(), 1));
    CHECK(b.size() == 2);
    CHECK(b[0] == std::pair<Partition, Partition>{Partition(), P({2})});
    CHECK(b[1] == std::pair<Partition, Partition>{P({2}), Partition()});
    auto c = enumerate_residual_points(classify_params(q(1), q(5), 1));
    CHECK(c.size() == 2);  // ([1], []) and ([], [1])
    CHECK_THROWS_AS(enumerate_residual_points(classify_params(Q4(0), Q4(3), 1)),
                    std::domain_error);
}

TEST_CASE("coordinates examples") {
    auto a = coordinates(classify_params(Q4(0), Q4(1), 1), Partition(), P({3}));
    CHECK(a.coords == CoordinateVector{{+1, 2}});
    auto b = coordinates(classify_params(q4_half(), q4_half(), 1), Partition(), P({2}));
    CHECK(b.coords == CoordinateVector{{+1, 1}});
    auto c = coordinates(classify_params(q(1), q(5), 2), Partition(), P({1, 1}));
    CHECK(c.coords == CoordinateVector{{+1, 1}, {+1, 5}});
}

TEST_CASE("check_residual") {
    auto p = classify_params(Q4(0), Q4(1), 1);
    auto r1 = check_residual(p, {{+1, 2}});
    CHECK(r1.num_zeros == 0);
    CHECK(r1.den_zeros == 1);
    CHECK(r1.ok);
    auto r2 = check_residual(p, {{+1, 4}});
    CHECK(r2.num_zeros == 0);
    CHECK(r2.den_zeros == 0);
    CHECK(!r2.ok);
    auto r0 = check_residual(classify_params(Q4(0), Q4(1), 0), {});
    CHECK(r0.ok);
    // the point -1 is not residual here: defect 0
    auto rm = check_residual(p, {{-1, 0}});
    CHECK(rm.num_zeros == 2);
    CHECK(rm.den_zeros == 2);
    CHECK(!rm.ok);
}

TEST_CASE("residue_q examples") {
    {
        auto p = classify_params(Q4(0), Q4(1), 1);
        auto r = residue_q(p, coordinates(p, Partition(), P({3})).coords);
        CHECK(r.even_part == dirac(Q4(1), -1));
        CHECK(r.odd_cycl.empty());
    }
    {
        auto p = classify_params(q4_half(), q4_half(), 1);
        auto r = residue_q(p, coordinates(p, Partition(), P({2})).coords);
        CHECK(r.even_part == dirac(Q4(1), -1));
        CHECK(r.odd_cycl.empty());
    }
    {
        auto p = classify_params(q4_half(), q4_half(), 0);
        auto r = residue_q(p, {});
        CHECK(r.even_part.empty());
        CHECK(r.odd_cycl.empty());
        CHECK(r.canonical.phi.empty());
    }
    CHECK_THROWS_AS(residue_q(classify_params(Q4(0), Q4(1), 1), CoordinateVector{{+1, 4}}),
                    std::domain_error);
}

TEST_CASE("d0_qpart examples") {
    CHECK(d0_qpart(classify_params(q(1), q(5))) == dirac(Q4(1), -1));
    CHECK(d0_qpart(classify_params(q4_half(), q4_half())).empty());
    // (0,3): {1+2a, 1+2b} = {3,3} gives a = b = 1
    auto s = solve_sets(classify_params(Q4(0), Q4(3)));
    CHECK(s == std::pair<long, long>{1, 1});
    MultiplicityFn expect;
    expect.add(Q4(1), -4);
    expect.add(Q4(2), -2);
    CHECK(d0_qpart(classify_params(Q4(0), Q4(3))) == expect);
    CHECK_THROWS_AS(solve_sets(classify_params(Q4(0), Q4(2))), std::domain_error);
}

TEST_CASE("brute-force oracle matches the enumeration at small rank") {
    std::vector<HeckeParams> fams = {
        classify_params(q4_half(), q4_half()), classify_params(Q4(0), Q4(1)),
        classify_params(Q4(0), Q4(0)),         classify_params(Q4(1), Q4(1)),
        classify_params(q4_half(), Q4(0)),     classify_params(q4_half(), Q4(1)),
        classify_params(q(1), q(5)),           classify_params(q(1), q(3))};
    for (auto base : fams) {
        for (long n = 0; n <= 2; ++n) {
            HeckeParams p = classify_params(base.m_minus, base.m_plus, n);
            auto brute = brute_force_residual_points(p, default_exponent_bound(p));
            std::set<CoordinateVector> bs(brute.begin(), brute.end());
            CHECK(bs == orbit_set(p));
        }
    }
}

TEST_CASE("residue is invariant under the Weyl action") {
    auto p = classify_params(q4_half(), q4_half(), 3);
    auto pt = coordinates(p, P({2}), P({4, 2}));
    auto base = residue_q(p, pt.coords);
    CoordinateVector permuted = {pt.coords[2], pt.coords[0], pt.coords[1]};
    CHECK(residue_q(p, permuted).even_part == base.even_part);
    CHECK(residue_q(p, permuted).odd_cycl == base.odd_cycl);
    // inverting a coordinate is allowed in non-canonical form
    CoordinateVector inverted = pt.coords;
    inverted[1].second = -inverted[1].second;
    CHECK(residue_q(p, inverted).even_part == base.even_part);
}

namespace {
long side_rank(Q4 m, const Partition& l) {
    if (m.is_strict_quarter()) return l.size();
    return (l.size() - (m.quarters() * m.quarters()) / 16) / 2;
}
}  // namespace

TEST_CASE("factorization congruence over the sides") {
    // odd content of the pair = sum of one-sided odd contents with swapped
    // parameters on the minus side
    std::vector<HeckeParams> fams = {classify_params(q4_half(), q4_half()),
                                     classify_params(Q4(0), Q4(1)),
                                     classify_params(Q4(1), Q4(1)),
                                     classify_params(q(1), q(5))};
    for (auto base : fams) {
        for (long n = 0; n <= 4; ++n) {
            HeckeParams p = classify_params(base.m_minus, base.m_plus, n);
            for (auto& [lm, lp] : enumerate_residual_points(p)) {
                auto pair_odd = residue_q_raw(p, coordinates(p, lm, lp).coords).odd_cycl;
                HeckeParams pp = classify_params(p.m_minus, p.m_plus, side_rank(p.m_plus, lp));
                HeckeParams pm = classify_params(p.m_plus, p.m_minus, side_rank(p.m_minus, lm));
                auto plus_odd =
                    residue_q_raw(pp, coordinates(pp, Partition(), lp).coords).odd_cycl;
                auto minus_odd =
                    residue_q_raw(pm, coordinates(pm, Partition(), lm).coords).odd_cycl;
                CHECK(pair_odd == plus_odd + minus_odd);
            }
        }
    }
}

TEST_CASE("odd positivity at the top index") {
    std::vector<HeckeParams> fams = {classify_params(q4_half(), q4_half()),
                                     classify_params(Q4(0), Q4(1)),
                                     classify_params(Q4(0), Q4(0)),
                                     classify_params(Q4(1), Q4(1)),
                                     classify_params(q(1), q(5)),
                                     classify_params(q(3), q(5))};
    for (auto base : fams) {
        for (long n = 0; n <= 4; ++n) {
            HeckeParams p = classify_params(base.m_minus, base.m_plus, n);
            for (auto& [lm, lp] : enumerate_residual_points(p)) {
                auto r = residue_q(p, coordinates(p, lm, lp).coords);
                if (!r.odd_cycl.empty()) CHECK(r.odd_cycl.entries().rbegin()->second > 0);
            }
        }
    }
}

TEST_CASE("relation between (1,delta) and (0,delta) residues") {
    for (long delta : {0, 1}) {
        for (long n = 1; n <= 5; ++n) {
            HeckeParams p0 = classify_params(Q4(0), Q4(delta), n);
            HeckeParams p1 = classify_params(Q4(1), Q4(delta), n);
            for (auto& [lm, lp] : enumerate_residual_points(p0)) {
                if (!lm.empty()) continue;
                auto c = coordinates(p0, lm, lp).coords;
                auto r0 = residue_q_raw(p0, c);
                auto r1 = residue_q_raw(p1, c);
                MultiplicityFn corr = delta_op(htilde(Q4(delta), lp), Q4(1));
                MultiplicityFn expect = r0.even_part;
                for (auto& [x, v] : corr.entries())
                    if (x > Q4(0)) expect.add(x, v);
                CHECK(r1.even_part == expect);
                CHECK(r1.odd_cycl == r0.odd_cycl);
            }
        }
    }
}

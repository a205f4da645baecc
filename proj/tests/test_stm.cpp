#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "hecke/stm.hpp"

using namespace hecke;

namespace {
Partition P(std::vector<long> v) { return Partition(std::move(v)); }
Q4 q(long quarters) { return Q4::from_quarters(quarters); }
}  // namespace

TEST_CASE("iso generators") {
    auto p = classify_params(q4_half(), q4_half(), 6);
    LabelledPoint pt{Partition(), P({6, 4, 2})};
    auto [p1, pt1] = iso_apply(STMKind::IsoEta, p, pt);
    CHECK(pt1 == LabelledPoint{P({6, 4, 2}), Partition()});
    auto [p2, pt2] = iso_apply(STMKind::IsoEta, p1, pt1);
    CHECK(pt2 == pt);
    CHECK(p2 == p);

    auto v = classify_params(q(1), q(1), 3);
    LabelledPoint vp{Partition(), P({2, 1})};
    auto [v1, vp1] = iso_apply(STMKind::IsoEtaPlus, v, vp);
    CHECK(v1.m_plus == q(-1));
    CHECK(vp1.lambda_plus == P({2, 1}).conjugate());
}

TEST_CASE("translation steps") {
    {
        auto p = classify_params(Q4(0), Q4(3), 0);
        auto [t, pt] = translate_step(p, {Partition(), P({5, 3, 1})}, +1);
        CHECK(t == classify_params(Q4(0), Q4(1), 4));
        CHECK(pt.lambda_plus == P({5, 3, 1}));
    }
    {
        auto p = classify_params(q4_half(), Q4::half(3), 1);
        auto [t, pt] = translate_step(p, {Partition(), P({4})}, +1);
        CHECK(t == classify_params(q4_half(), q4_half(), 2));
        CHECK(pt.lambda_plus == P({4}));
    }
    CHECK_THROWS_AS(translate_step(classify_params(Q4(0), Q4(1), 1),
                                   LabelledPoint{Partition(), P({3})}, +1),
                    std::domain_error);
}

TEST_CASE("translations on opposite sides commute") {
    auto p = classify_params(Q4::half(5), Q4(2), 0);
    LabelledPoint pt{P({4, 2}), P({3, 1})};
    auto [a1, apt1] = translate_step(p, pt, -1);
    auto [a2, apt2] = translate_step(a1, apt1, +1);
    auto [b1, bpt1] = translate_step(p, pt, +1);
    auto [b2, bpt2] = translate_step(b1, bpt1, -1);
    CHECK(a2 == b2);
    CHECK(apt2 == bpt2);
}

TEST_CASE("extra-special map") {
    {
        auto p = classify_params(q(1), q(5), 2);
        auto [t, pt] = extraspecial_map(p, {Partition(), P({1, 1})});
        CHECK(t == classify_params(Q4(0), Q4(1), 5));
        CHECK(pt == LabelledPoint{Partition(), P({7, 3, 1})});
    }
    {
        auto p = classify_params(q(1), q(1), 0);
        auto [t, pt] = extraspecial_map(p, {Partition(), Partition()});
        CHECK(t == classify_params(Q4(0), Q4(0), 0));
        CHECK(pt == LabelledPoint{Partition(), Partition()});
    }
    {
        auto p = classify_params(q(1), q(15), 0);
        auto [t, pt] = extraspecial_map(p, {Partition(), Partition()});
        CHECK(t == classify_params(Q4(0), Q4(0), 14));
        CHECK(pt == LabelledPoint{Partition(), P({13, 9, 5, 1})});
    }
    CHECK_THROWS_AS(extraspecial_map(classify_params(Q4(0), Q4(1), 1),
                                     LabelledPoint{Partition(), P({3})}),
                    std::domain_error);
}

TEST_CASE("reduce_to_minimal") {
    {
        auto steps = reduce_to_minimal(classify_params(Q4(0), Q4(3), 0));
        REQUIRE(steps.size() == 1);
        CHECK(steps[0].kind == STMKind::Translate);
        CHECK(steps[0].target == classify_params(Q4(0), Q4(1), 4));
    }
    {
        auto steps = reduce_to_minimal(classify_params(q(1), q(5), 0));
        REQUIRE(steps.size() == 1);
        CHECK(steps[0].kind == STMKind::ExtraSpecial);
        CHECK(steps[0].target == classify_params(Q4(0), Q4(1), 1));
    }
    CHECK(reduce_to_minimal(classify_params(q4_half(), q4_half(), 3)).empty());
    {
        // sign normalization and ordering both appear
        auto steps = reduce_to_minimal(classify_params(Q4(2), Q4(-1), 0));
        CHECK(!steps.empty());
        CHECK(steps.back().target.m_minus == Q4(0));
        CHECK(steps.back().target.m_plus == Q4(1));
    }
}

TEST_CASE("extra-special steps preserve the full residue") {
    std::vector<std::pair<long, long>> params = {{1, 5}, {1, 3}, {3, 5}, {1, 7},
                                                 {3, 7}, {5, 7}, {1, 1}, {3, 3}};
    for (auto [a, b] : params) {
        for (long r = 0; r <= 2; ++r) {
            HeckeParams src = classify_params(q(a), q(b), r);
            if (extraspecial_params(src).target.rank > 8) continue;
            for (auto& [rm, rp] : enumerate_residual_points(src)) {
                auto [tgt, image] = extraspecial_map(src, {rm, rp});
                auto rs = residue_full(src, coordinates(src, rm, rp).coords);
                auto rt = residue_full(
                    tgt, coordinates(tgt, image.lambda_minus, image.lambda_plus).coords);
                CHECK(rs.even_part == rt.even_part);
                CHECK(rs.odd_cycl == rt.odd_cycl);
            }
        }
    }
}

TEST_CASE("translation steps match a unique target orbit in the oracle") {
    std::vector<std::pair<HeckeParams, int>> cases = {
        {classify_params(Q4(0), Q4(3), 0), +1},            // to (0,1) at rank 4
        {classify_params(q4_half(), Q4::half(3), 0), +1},  // to (1/2,1/2) at rank 1
        {classify_params(q4_half(), Q4::half(3), 1), +1},  // to (1/2,1/2) at rank 2
        {classify_params(Q4(1), Q4(3), 0), +1},            // to (1,1) at rank 4
        {classify_params(q4_half(), Q4(2), 0), +1}};       // to (1/2,0) at rank 2
    for (auto& [src, side] : cases) {
        STMStep step = translate_params(src, side);
        HeckeParams tgt = step.target;
        REQUIRE(tgt.rank <= 4);
        auto src_orbits = brute_force_residual_points(src, default_exponent_bound(src));
        auto tgt_orbits = brute_force_residual_points(tgt, default_exponent_bound(tgt));
        auto orbit_rep = [&](const CoordinateVector& c) {
            if (!has_swap_automorphism(tgt)) return c;
            return std::min(c, flip_signs(c));
        };
        for (auto& so : src_orbits) {
            auto rs = residue_full(src, so);
            std::set<CoordinateVector> matches;
            for (auto& to : tgt_orbits) {
                auto rt = residue_full(tgt, to);
                if (rt.even_part == rs.even_part && rt.odd_cycl == rs.odd_cycl)
                    matches.insert(orbit_rep(to));
            }
            CHECK(matches.size() == 1);
        }
    }
}

TEST_CASE("rank-0 source transports to the labelled target point") {
    auto src = classify_params(Q4(0), Q4(3), 0);
    auto [tgt, pt] = translate_step(src, {Partition(), P({5, 3, 1})}, +1);
    auto rs = residue_full(src, {});
    auto rt = residue_full(tgt, coordinates(tgt, pt.lambda_minus, pt.lambda_plus).coords);
    CHECK(rs.even_part == rt.even_part);
    CHECK(rs.odd_cycl == rt.odd_cycl);
}

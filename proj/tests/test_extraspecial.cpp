#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "hecke/extraspecial.hpp"

using namespace hecke;

namespace {
Partition P(std::vector<long> v) { return Partition(std::move(v)); }
Q4 q(long quarters) { return Q4::from_quarters(quarters); }

std::vector<Partition> odd_distinct_upto(long max_size) {
    std::vector<Partition> out;
    for (long size = 0; size <= max_size; ++size) {
        auto batch = (size % 2 == 0) ? enumerate_distinguished(Q4(0), size / 2)
                                     : enumerate_distinguished(Q4(1), (size - 1) / 2);
        out.insert(out.end(), batch.begin(), batch.end());
    }
    return out;
}
}  // namespace

TEST_CASE("worked encode example") {
    ESPair p = encode(P({21, 19, 13, 9, 5, 3}));
    CHECK(p.m == q(7));
    CHECK(p.rho == P({4, 3, 3, 3, 1, 1, 1}));
    CHECK(p.kappa() == 2);
    CHECK(p.epsilon() == 0);
}

TEST_CASE("worked decode examples") {
    CHECK(decode({q(15), Partition()}) == P({13, 9, 5, 1}));
    CHECK(decode({q(1), Partition()}) == Partition());
    CHECK(decode({q(3), Partition()}) == P({1}));
    CHECK(decode({q(1), P({1})}) == P({3, 1}));
    CHECK(decode({q(5), P({1, 1})}) == P({7, 3, 1}));
    CHECK(encode(Partition()) == ESPair{q(1), Partition()});
    CHECK(encode(P({3, 1})) == ESPair{q(1), P({1})});
    CHECK_THROWS_AS(encode(P({4, 2})), std::domain_error);
    CHECK_THROWS_AS(decode({q4_half(), Partition()}), std::domain_error);
}

TEST_CASE("hook and strip decomposition") {
    {
        auto d = hook_strip_decomposition({q(7), P({4, 3, 3, 3, 1, 1, 1})});
        REQUIRE(d.hooks.size() == 2);
        CHECK(d.hooks[0] == std::pair<Q4, Q4>{q(19), q(17)});
        CHECK(d.hooks[1] == std::pair<Q4, Q4>{q(11), q(1)});
        REQUIRE(d.strips.size() == 2);
        CHECK(d.strips[0] == q(7));
        CHECK(d.strips[1] == q(3));
    }
    {
        auto d = hook_strip_decomposition({q(1), P({2, 2})});
        REQUIRE(d.hooks.size() == 2);
        CHECK(d.hooks[0] == std::pair<Q4, Q4>{q(5), q(3)});
        CHECK(d.hooks[1] == std::pair<Q4, Q4>{q(1), q(1)});
        CHECK(d.strips.empty());
    }
    {
        auto d = hook_strip_decomposition({q(15), Partition()});
        CHECK(d.hooks.empty());
        REQUIRE(d.strips.size() == 4);
        for (auto& s : d.strips) CHECK(!s.has_value());
    }
}

TEST_CASE("every m-hook contains the corner m and a 1/4 box") {
    for (auto& l : odd_distinct_upto(31)) {
        ESPair p = encode(l);
        if (p.rho.empty()) continue;
        MTableau t = mtableau_contents(p.m, p.rho);
        auto d = hook_strip_decomposition(p);
        Partition conj = p.rho.conjugate();
        for (long i = 1; i <= d.t; ++i) {
            CHECK(t.fillings[i - 1][i - 1] == p.m);  // corner
            bool quarter_box = false;
            for (long r = i; r <= conj.part(i - 1); ++r)
                if (t.fillings[r - 1][i - 1] == q(1)) quarter_box = true;
            for (long c = i; c <= p.rho.part(i - 1); ++c)
                if (t.fillings[i - 1][c - 1] == q(1)) quarter_box = true;
            CHECK(quarter_box);
        }
    }
}

TEST_CASE("decode then encode is the identity on odd-distinct partitions") {
    long cases = 0;
    for (auto& l : odd_distinct_upto(45)) {
        ESPair p = encode(l);
        CHECK(decode(p) == l);
        // size bookkeeping: |lambda| = 2*sum(jumps) + #parts
        long jsum = 0;
        for (Q4 j : jumps(l)) jsum += j.to_integer();
        CHECK(l.size() == 2 * jsum + static_cast<long>(l.length()));
        ++cases;
    }
    CHECK(cases >= 400);
}

TEST_CASE("encode then decode is the identity on pairs") {
    for (long mq : {1, 3, 5, 7, 9, 11, 13, 15, 17, 19}) {
        for (long r = 0; r <= 12; ++r) {
            for (auto& rho : all_partitions(r)) {
                ESPair p{q(mq), rho};
                Partition l = decode(p);
                CHECK(encode(l) == p);
                CHECK(static_cast<long>(l.length()) % 2 == p.kappa() % 2);
            }
        }
    }
}

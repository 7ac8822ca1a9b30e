#include <doctest.h>

#include <random>

#include "../support/oracles.hpp"
#include "dgs/exponents.hpp"
#include "dgs/families.hpp"

using namespace dgs;

namespace {

Digraph fam(const std::string& text) { return build_family(parse_family_spec(text)); }

std::string nstr(int n) { return std::to_string(n); }

// Least e with A^e > 0 from exact integer powers, or 0 if none up to the cap.
int exponent_by_big_powers(const Digraph& d) {
    const int n = d.order();
    for (int e = 1; e <= (n - 1) * (n - 1) + 1; ++e) {
        const WalkCountMatrix w = walk_count(d, e);
        bool positive = true;
        for (const BigInt& v : w.entries.values()) positive = positive && v > 0;
        if (positive) return e;
    }
    return 0;
}

}  // namespace

TEST_CASE("primitivity") {
    CHECK_FALSE(is_primitive(fam("family=DCn n=6")));
    CHECK_FALSE(is_primitive(fam("family=ADF n=6")));
    CHECK(is_primitive(fam("family=PDF n=5")));
    CHECK_FALSE(is_primitive(fam("family=ADF n=3")));
    const Arc loop[] = {{1, 1}};
    CHECK(is_primitive(Digraph::build(1, loop)));
    CHECK_FALSE(is_primitive(Digraph::build(1, {})));
}

TEST_CASE("exponents of the named examples") {
    ExponentResult adf7 = exponent(fam("family=ADF n=7"));
    CHECK(adf7.primitive);
    CHECK(adf7.exponent == 9);
    CHECK_FALSE(has_walk(fam("family=ADF n=7"), 6, 3, 8));
    auto gaps = walk_gaps(fam("family=ADF n=7"), 8);
    CHECK(std::find(gaps.begin(), gaps.end(), std::make_pair(6, 3)) != gaps.end());
    CHECK(adf7.witness == gaps.front());

    CHECK(exponent(fam("family=ADF n=5")).exponent == 12);
    ExponentResult adw11 = exponent(fam("family=ADW n=11"));
    CHECK(adw11.exponent == 6);
    CHECK_FALSE(has_walk(fam("family=ADW n=11"), 9, 2, 5));
    CHECK(exponent(fam("family=DCc n=5")).exponent == 2);

    ExponentResult dc6 = exponent(fam("family=DCn n=6"));
    CHECK_FALSE(dc6.primitive);
    CHECK_FALSE(dc6.exponent.has_value());
    CHECK_FALSE(dc6.witness.has_value());

    const Arc loop[] = {{1, 1}};
    ExponentResult one = exponent(Digraph::build(1, loop));
    CHECK(one.exponent == 1);
    CHECK_FALSE(one.witness.has_value());
}

TEST_CASE("the Wielandt digraph reaches the bound") {
    for (int n = 2; n <= 12; ++n) {
        std::vector<Arc> arcs;
        for (int i = 1; i < n; ++i) arcs.push_back({i, i + 1});
        arcs.push_back({n, 1});
        if (n > 2) arcs.push_back({n - 1, 1});
        else arcs.push_back({1, 1});
        Digraph w = Digraph::build(n, arcs);
        CHECK(exponent(w).exponent == (n - 1) * (n - 1) + 1);
    }
}

TEST_CASE("exponent and witness agree with exact powers on random digraphs") {
    std::mt19937_64 rng(17);
    int primitive = 0;
    for (int trial = 0; trial < 150; ++trial) {
        Digraph d = oracle::random_digraph(rng, 2 + trial % 6, 0.45, trial % 2 == 0);
        ExponentResult r = exponent(d);
        const int big = exponent_by_big_powers(d);
        CHECK(r.primitive == (big != 0));
        if (!r.primitive) continue;
        ++primitive;
        CHECK(*r.exponent == big);
        REQUIRE(r.witness.has_value());
        CHECK(walk_count(d, big - 1).at(r.witness->first, r.witness->second) == 0);
        auto gaps = walk_gaps(d, big - 1);
        CHECK(gaps.front() == *r.witness);
        CHECK(walk_gaps(d, big + 1).empty());
    }
    CHECK(primitive > 30);
}

TEST_CASE("walk lists") {
    Digraph adf7 = fam("family=ADF n=7");
    CHECK(verify_walk_list(adf7, {{1, 2, 3, 1, 2, 3, 1, 2, 3, 1}}, 9).all_valid);
    WalkListVerdict bad = verify_walk_list(adf7, {{1, 2, 3}, {1, 2, 4}});
    CHECK_FALSE(bad.all_valid);
    CHECK(bad.checks[0].valid);
    CHECK_FALSE(bad.checks[1].valid);
    CHECK(bad.checks[1].reason == "no arc 2->4");
    CHECK_FALSE(verify_walk_list(adf7, {{1, 2, 3}}, 9).all_valid);
    CHECK_FALSE(verify_walk_list(adf7, {{}}).all_valid);
    CHECK_FALSE(verify_walk_list(adf7, {{1, 9}}).all_valid);
}

TEST_CASE("the nine length-9 templates cover ADF_n") {
    for (int n = 7; n <= 21; n += 2) {
        Digraph d = fam("family=ADF n=" + nstr(n));
        auto walks = adf_template_walks(n);
        CHECK(walks.size() == std::size_t(n * n));
        WalkListVerdict v = verify_walk_list(d, walks, 9);
        CHECK(v.all_valid);
        for (const auto& w : walks) {
            CHECK(w.front() >= 1);
            CHECK(w.back() <= n);
        }
        CHECK(adf_template_walk(n, 4, 3).front() == 4);
        CHECK(adf_template_walk(n, 4, 3).back() == 3);
    }
    CHECK_THROWS_AS(adf_template_walk(5, 1, 1), Error);
    CHECK_THROWS_AS(adf_template_walk(8, 1, 1), Error);
}

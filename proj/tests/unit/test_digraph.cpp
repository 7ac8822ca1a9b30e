#include <doctest.h>

#include <random>

#include "../support/oracles.hpp"
#include "dgs/families.hpp"

using namespace dgs;

namespace {

Digraph triangle() {
    const Arc arcs[] = {{1, 2}, {2, 3}, {3, 1}};
    return Digraph::build(3, arcs);
}

Digraph fam(Family f, int n) {
    FamilySpec s;
    s.family = f;
    s.n = n;
    return build_family(s);
}

ErrorKind kind_of(auto&& fn) {
    try {
        fn();
    } catch (const Error& e) {
        return e.kind();
    }
    return ErrorKind::InternalError;
}

}  // namespace

TEST_CASE("build keeps the arc multiset") {
    Digraph d = triangle();
    CHECK(d.order() == 3);
    CHECK(d.arc_count() == 3);
    CHECK(d.has_arc(3, 1));
    CHECK_FALSE(d.has_arc(1, 3));
    CHECK(d.is_simple());

    const Arc loops[] = {{1, 1, 3}};
    Digraph one = Digraph::build(1, loops);
    CHECK(one.multiplicity(1, 1) == 3);
    CHECK(one.arc_count() == 3);
    CHECK_FALSE(one.is_simple());
}

TEST_CASE("repeated loops merge, repeated arcs are rejected") {
    const Arc loops[] = {{2, 2, 1}, {2, 2, 2}};
    CHECK(Digraph::build(2, loops).multiplicity(2, 2) == 3);

    const Arc twice[] = {{1, 2}, {1, 2}};
    CHECK(kind_of([&] { Digraph::build(2, twice); }) == ErrorKind::ParallelNonLoopArc);
    const Arc heavy[] = {{1, 2, 2}};
    CHECK(kind_of([&] { Digraph::build(2, heavy); }) == ErrorKind::ParallelNonLoopArc);
    const Arc outside[] = {{1, 4}};
    CHECK(kind_of([&] { Digraph::build(3, outside); }) == ErrorKind::IndexOutOfRange);
    const Arc zero[] = {{0, 1}};
    CHECK(kind_of([&] { Digraph::build(3, zero); }) == ErrorKind::IndexOutOfRange);
}

TEST_CASE("arcs come out sorted") {
    const Arc arcs[] = {{3, 1}, {1, 2}, {2, 3}, {1, 1, 2}};
    Digraph d = Digraph::build(3, arcs);
    std::vector<Arc> expected = {{1, 1, 2}, {1, 2, 1}, {2, 3, 1}, {3, 1, 1}};
    CHECK(d.arcs() == expected);
    CHECK(d.successors(1) == std::vector<int>{1, 2});
}

TEST_CASE("complement of the triangle") {
    Digraph c = complement(triangle());
    std::vector<Arc> expected = {{1, 3, 1}, {2, 1, 1}, {3, 2, 1}};
    CHECK(c.arcs() == expected);
    Digraph dc5 = fam(Family::DCn, 5);
    CHECK(complement(complement(dc5)) == dc5);

    const Arc loops[] = {{1, 1}};
    CHECK(kind_of([&] { complement(Digraph::build(2, loops)); }) == ErrorKind::NotSimple);
}

TEST_CASE("complement is an involution and splits the n(n-1) arcs") {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 100; ++trial) {
        const int n = 1 + trial % 7;
        Digraph d = oracle::random_digraph(rng, n, 0.4, false);
        Digraph c = complement(d);
        CHECK(complement(c) == d);
        CHECK(d.arc_count() + c.arc_count() == n * (n - 1));
    }
}

TEST_CASE("strong connectivity") {
    CHECK(is_strongly_connected(fam(Family::DCn, 8)));
    const Arc path[] = {{1, 2}, {2, 3}};
    CHECK_FALSE(is_strongly_connected(Digraph::build(3, path)));
    CHECK_FALSE(is_strongly_connected(fam(Family::ADF, 6)));
    CHECK(is_strongly_connected(fam(Family::ADF, 7)));
    CHECK(is_strongly_connected(Digraph::build(1, {})));
}

TEST_CASE("cycle gcd") {
    CHECK(cycle_gcd(fam(Family::DCn, 6)) == 6);

    // ADF_5: cycles 1-2-3-1 and 1-4-5-1 (length 3) and 1-2-3-4-5-1 (length 5).
    Digraph adf5 = fam(Family::ADF, 5);
    auto lengths = oracle::cycle_lengths(adf5);
    std::sort(lengths.begin(), lengths.end());
    CHECK(lengths == std::vector<int>{3, 3, 5});
    CHECK(cycle_gcd(adf5) == 1);

    const Arc path[] = {{1, 2}};
    CHECK(kind_of([&] { cycle_gcd(Digraph::build(2, path)); }) == ErrorKind::NotStronglyConnected);
}

TEST_CASE("cycle gcd agrees with explicit cycles on random strong digraphs") {
    std::mt19937_64 rng(5);
    int checked = 0;
    while (checked < 80) {
        Digraph d = oracle::random_digraph(rng, 2 + checked % 6, 0.35, checked % 3 == 0);
        if (!is_strongly_connected(d)) continue;
        int g = 0;
        for (int len : oracle::cycle_lengths(d)) g = std::gcd(g, len);
        CHECK(cycle_gcd(d) == g);
        ++checked;
    }
}

TEST_CASE("walk counts") {
    CHECK(walk_count(triangle(), 3).entries == BigMatrix::identity(3));
    CHECK(walk_count(triangle(), 0).entries == BigMatrix::identity(3));
    CHECK(walk_count(fam(Family::ADF, 7), 8).at(6, 3) == 0);

    const Arc loops[] = {{1, 1, 3}};
    CHECK(walk_count(Digraph::build(1, loops), 40).at(1, 1) == BigInt("12157665459056928801"));
}

TEST_CASE("walk counts multiply") {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 60; ++trial) {
        Digraph d = oracle::random_digraph(rng, 1 + trial % 6, 0.4);
        const unsigned k1 = trial % 7, k2 = (trial / 7) % 7;
        CHECK(walk_count(d, k1 + k2).entries == walk_count(d, k1).entries * walk_count(d, k2).entries);
    }
}

TEST_CASE("walk counts match explicit walks") {
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 30; ++trial) {
        const int n = 1 + trial % 7;
        Digraph d = oracle::random_digraph(rng, n, 0.4);
        for (int k = 0; k <= n; ++k) {
            WalkCountMatrix w = walk_count(d, k);
            CHECK(w.power == unsigned(k));
            for (int i = 1; i <= n; ++i)
                for (int j = 1; j <= n; ++j) CHECK(w.at(i, j) == oracle::walks(d, i, j, k));
        }
    }
}

TEST_CASE("text and json round trips") {
    const Arc arcs[] = {{2, 2, 3}, {1, 2}, {2, 1}};
    Digraph d = Digraph::build(2, arcs);
    CHECK(to_text(d) == "2\n1 2\n2 1\n2 2 3\n");
    CHECK(to_json(d) == "{\"arcs\":[[1,2,1],[2,1,1],[2,2,3]],\"n\":2}\n");
    CHECK(parse_text(to_text(d)) == d);
    CHECK(parse_json(to_json(d)) == d);
    CHECK(parse_digraph(to_json(d)) == d);
    CHECK(parse_digraph("# comment\n2\n2 2 3\n1 2 # arc\n2 1\n") == d);

    CHECK(kind_of([] { parse_text("2\n1\n"); }) == ErrorKind::ParseError);
    CHECK(kind_of([] { parse_json("{\"arcs\":[]}"); }) == ErrorKind::ParseError);
    CHECK(parse_json("{\"n\":2}").arc_count() == 0);
    CHECK(kind_of([] { parse_text("3\n1 5\n"); }) == ErrorKind::IndexOutOfRange);
}

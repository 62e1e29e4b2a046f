#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "qorb/tree.hpp"

using namespace qorb;

TEST_CASE("interior vertices are (q+1)-regular and colors alternate") {
    for (int q : {2, 3}) {
        TruncatedTree tree(q, 3, 3, Layout::geodesic());
        for (int v = 0; v < tree.vertex_count(); ++v) {
            if (tree.core_dist(v) < tree.depth()) CHECK(tree.degree(v) == q + 1);
            CHECK(tree.degree(v) <= q + 1);
        }
        // Sample adjacency through the geodesic: consecutive coordinates have
        // opposite colors.
        for (int c = -2; c < 2; ++c)
            CHECK(tree.color(tree.geodesic_vertex(0, c)) !=
                  tree.color(tree.geodesic_vertex(0, c + 1)));
    }
}

TEST_CASE("layouts realize their configuration") {
    // Two geodesics overlapping in r=2 vertices share exactly that segment.
    TruncatedTree overlap(2, 4, 6, Layout::overlapping_geodesics(2));
    CHECK(overlap.geodesic_vertex(0, 0) == overlap.geodesic_vertex(1, 0));
    CHECK(overlap.geodesic_vertex(0, 1) == overlap.geodesic_vertex(1, 1));
    CHECK(overlap.geodesic_vertex(0, 2) != overlap.geodesic_vertex(1, 2));
    CHECK(overlap.geodesic_vertex(0, -1) != overlap.geodesic_vertex(1, -1));

    // A point hung at distance 2 from the geodesic.
    TruncatedTree hung(3, 3, 5, Layout::geodesic_with_center(HalfInt::whole(2), false));
    CHECK(hung.dist_to_geodesic(0)[hung.center_vertex()] == 2);

    // Two geodesics bridged at distance 3.
    TruncatedTree bridge(2, 4, 6, Layout::two_geodesics(HalfInt::whole(3)));
    CHECK(bridge.dist_to_geodesic(1)[bridge.geodesic_vertex(0, 0)] == 3);
    CHECK(bridge.dist_to_geodesic(0)[bridge.geodesic_vertex(1, 0)] == 3);

    // A midpoint at distance 3/2 from the geodesic.
    TruncatedTree mid(2, 4, 6, Layout::geodesic_with_center(HalfInt::halves(3), true));
    auto [u, v] = mid.center_edge();
    CHECK(mid.dist_to_geodesic(0)[u] + mid.dist_to_geodesic(0)[v] == 3);

    // Crossing geodesics at a single vertex need degree 4.
    CHECK_THROWS_AS(TruncatedTree(2, 3, 4, Layout::overlapping_geodesics(1)),
                    std::invalid_argument);
    CHECK_NOTHROW(TruncatedTree(3, 3, 4, Layout::overlapping_geodesics(1)));
}

TEST_CASE("oracle counts on balls") {
    TruncatedTree tree(2, 4, 4, Layout::vertex());
    CHECK(oracle_count(tree, OracleQuery::ball(HalfInt::whole(2))) == 10);
    CHECK(oracle_count(tree, OracleQuery::ball(HalfInt::whole(0))) == 1);

    TruncatedTree edge(2, 4, 4, Layout::edge());
    CHECK(oracle_count(edge, OracleQuery::ball(HalfInt::halves(3))) == 6);
}

TEST_CASE("boundary guard") {
    TruncatedTree deep(2, 5, 5, Layout::vertex());
    CHECK(boundary_guard(deep, OracleQuery::ball(HalfInt::whole(3))));
    TruncatedTree shallow(2, 3, 3, Layout::vertex());
    CHECK(!boundary_guard(shallow, OracleQuery::ball(HalfInt::whole(3))));
    CHECK_THROWS_AS(oracle_count(shallow, OracleQuery::ball(HalfInt::whole(3))),
                    std::domain_error);

    // Sphere at distance 2 around a tube of radius 2: reach 4 < depth 6.
    TruncatedTree tube_tree(2, 6, 8, Layout::geodesic());
    auto query = OracleQuery::sphere_at(
        2, OracleQuery::intersect(OracleQuery::tube(0, 2),
                                  OracleQuery::ball_at(0, HalfInt::whole(2))));
    CHECK(boundary_guard(tube_tree, query));
    // A bare tube is not a finite set.
    CHECK(!boundary_guard(tube_tree, OracleQuery::tube(0, 2)));
    CHECK_THROWS_AS(oracle_count(tube_tree, OracleQuery::tube(0, 2)), std::domain_error);
}

TEST_CASE("counts are invariant under translation along the apartment") {
    for (int q : {2, 3}) {
        TruncatedTree tree(q, 4, 8, Layout::geodesic());
        long base = oracle_count(tree, OracleQuery::ball_at(0, HalfInt::whole(2)));
        for (int c : {-2, 1, 3})
            CHECK(oracle_count(tree, OracleQuery::ball_at(c, HalfInt::whole(2))) == base);
        // Same ball realized on a different layout.
        CHECK(oracle_count_auto(q, Layout::vertex(), OracleQuery::ball(HalfInt::whole(2))) ==
              base);
    }
}

TEST_CASE("sphere counts match (q+1)q^{n-1}") {
    for (int q : {2, 3})
        for (int n = 1; n <= 3; ++n) {
            long count = oracle_count_auto(
                q, Layout::vertex(),
                OracleQuery::sphere_at(n, OracleQuery::ball(HalfInt::whole(0))));
            long want = (q + 1);
            for (int i = 1; i < n; ++i) want *= q;
            CHECK(count == want);
        }
}

TEST_CASE("color split of balls") {
    for (int q : {2, 3})
        for (long i : {0L, 2L, 4L}) {
            auto ball = OracleQuery::ball(HalfInt::whole(i));
            long black = oracle_count_auto(q, Layout::vertex(),
                                           ball.colored(ColorFilter::Black));
            long white = oracle_count_auto(q, Layout::vertex(),
                                           ball.colored(ColorFilter::White));
            long total = oracle_count_auto(q, Layout::vertex(), ball);
            CHECK(black + white == total);
        }
}

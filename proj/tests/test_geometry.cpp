/**
 * @file test_geometry.cpp
 * @brief Exact polytope primitives: hulls, volumes, weighted Minkowski sums,
 *        containment, and the root-margin classifier, each checked against an
 *        independently coded oracle.
 */

#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "okounkov/brunn.hpp"
#include "okounkov/polytope.hpp"
#include "oracles.hpp"

using namespace okounkov;

namespace {

QVec qv(std::initializer_list<Rat> xs) { return QVec(xs); }
ZVec zv(std::initializer_list<Int> xs) { return ZVec(xs); }

Polytope unit_square() {
    return convex_hull({qv({0, 0}), qv({1, 0}), qv({0, 1}), qv({1, 1})}, 2);
}

Polytope corner_triangle() {
    return convex_hull({qv({0, 0}), qv({1, 0}), qv({0, 1})}, 2);
}

std::mt19937_64 rng(20260815);

QVec random_point_2d() {
    std::uniform_int_distribution<int> num(-8, 8);
    std::uniform_int_distribution<int> den(1, 4);
    return qv({Rat(num(rng), den(rng)), Rat(num(rng), den(rng))});
}

}  // namespace

TEST_CASE("convex_hull removes interior points") {
    Polytope t = convex_hull({qv({0, 0}), qv({1, 0}), qv({0, 1}), qv({Rat(1, 4), Rat(1, 4)})}, 2);
    REQUIRE(t.vertices.size() == 3);
    REQUIRE(t == corner_triangle());
}

TEST_CASE("convex_hull reduces collinear input to segment endpoints") {
    Polytope s = convex_hull({qv({0}), qv({1}), qv({2})}, 1);
    REQUIRE(s.vertices == std::vector<QVec>{qv({0}), qv({2})});
}

TEST_CASE("hull of pairwise sums of square and triangle vertices is a pentagon") {
    std::vector<QVec> sums;
    for (const auto& a : unit_square().vertices)
        for (const auto& b : corner_triangle().vertices)
            sums.push_back(qv({a[0] + b[0], a[1] + b[1]}));
    REQUIRE(sums.size() == 12);
    Polytope pent = convex_hull(sums, 2);
    std::set<QVec> expect = oracle::brute_hull_vertices(sums);
    REQUIRE(std::set<QVec>(pent.vertices.begin(), pent.vertices.end()) == expect);
    REQUIRE(pent.vertices.size() == 5);
    REQUIRE(contains_point(pent, qv({2, 1})));
    REQUIRE(contains_point(pent, qv({1, 2})));
}

TEST_CASE("convex_hull rejects mixed dimensions") {
    REQUIRE_THROWS_AS(convex_hull({qv({0, 0}), qv({1})}, 2), dimension_mismatch);
}

TEST_CASE("hull is idempotent on random point clouds") {
    for (int trial = 0; trial < 25; ++trial) {
        std::vector<QVec> pts;
        std::uniform_int_distribution<int> count(1, 9);
        int n = count(rng);
        for (int i = 0; i < n; ++i) pts.push_back(random_point_2d());
        Polytope p = convex_hull(pts, 2);
        REQUIRE(convex_hull(p.vertices, 2) == p);
        REQUIRE(std::set<QVec>(p.vertices.begin(), p.vertices.end()) ==
                oracle::brute_hull_vertices(pts));
    }
}

TEST_CASE("polytope_volume on the square, triangle and pentagon") {
    REQUIRE(polytope_volume(unit_square()) == 1);
    REQUIRE(polytope_volume(corner_triangle()) == Rat(1, 2));
    Polytope pent = convex_hull({qv({0, 0}), qv({2, 0}), qv({2, 1}), qv({1, 2}), qv({0, 2})}, 2);
    REQUIRE(oracle::shoelace_area(pent.vertices) == Rat(7, 2));
    REQUIRE(polytope_volume(pent) == Rat(7, 2));
}

TEST_CASE("volume vanishes for empty and lower-dimensional polytopes") {
    REQUIRE(polytope_volume(Polytope{2, {}}) == 0);
    Polytope seg = convex_hull({qv({0, 0}), qv({3, 3})}, 2);
    REQUIRE(polytope_volume(seg) == 0);
    Polytope pt = convex_hull({qv({5, 7})}, 2);
    REQUIRE(polytope_volume(pt) == 0);
}

TEST_CASE("volume matches the shoelace oracle on random polygons") {
    for (int trial = 0; trial < 40; ++trial) {
        std::vector<QVec> pts;
        std::uniform_int_distribution<int> count(3, 10);
        int n = count(rng);
        for (int i = 0; i < n; ++i) pts.push_back(random_point_2d());
        Polytope p = convex_hull(pts, 2);
        if (p.vertices.size() < 3) continue;
        REQUIRE(polytope_volume(p) == oracle::shoelace_area(p.vertices));
    }
}

TEST_CASE("minkowski_weighted identity and segment sum") {
    Polytope sq = unit_square();
    REQUIRE(minkowski_weighted({sq}, {Rat(1)}) == sq);
    Polytope ex = convex_hull({qv({0, 0}), qv({1, 0})}, 2);
    Polytope ey = convex_hull({qv({0, 0}), qv({0, 1})}, 2);
    REQUIRE(minkowski_weighted({ex, ey}, {Rat(1), Rat(1)}) == sq);
}

TEST_CASE("half-half sum of square and triangle has volume 7/8") {
    Polytope m = minkowski_weighted({unit_square(), corner_triangle()}, {Rat(1, 2), Rat(1, 2)});
    REQUIRE(polytope_volume(m) == Rat(7, 8));
}

TEST_CASE("minkowski_weighted degenerate weights") {
    Polytope sq = unit_square();
    Polytope zero = minkowski_weighted({sq}, {Rat(0)});
    REQUIRE(zero.vertices == std::vector<QVec>{qv({0, 0})});
    Polytope empty{2, {}};
    REQUIRE(minkowski_weighted({sq, empty}, {Rat(1), Rat(1, 3)}).empty());
    REQUIRE_THROWS_AS(minkowski_weighted({}, {}), empty_input);
    REQUIRE_THROWS_AS(minkowski_weighted({sq}, {Rat(-1)}), negative_entry);
}

TEST_CASE("volume scales with degree-n homogeneity under dilation") {
    std::vector<Rat> weights = {Rat(1, 3), Rat(2), Rat(5, 4)};
    for (const Rat& t : weights) {
        Polytope pent =
            convex_hull({qv({0, 0}), qv({2, 0}), qv({2, 1}), qv({1, 2}), qv({0, 2})}, 2);
        Polytope scaled = minkowski_weighted({pent}, {t});
        REQUIRE(polytope_volume(scaled) == t * t * polytope_volume(pent));
    }
}

TEST_CASE("volume is translation invariant") {
    for (int trial = 0; trial < 10; ++trial) {
        std::vector<QVec> pts;
        for (int i = 0; i < 6; ++i) pts.push_back(random_point_2d());
        Polytope p = convex_hull(pts, 2);
        Polytope shifted = translate(p, random_point_2d());
        REQUIRE(polytope_volume(shifted) == polytope_volume(p));
    }
}

TEST_CASE("contains handles points, misses and nesting") {
    Polytope sq = unit_square();
    Polytope centroid = convex_hull({qv({Rat(1, 2), Rat(1, 2)})}, 2);
    REQUIRE(contains(sq, centroid));
    REQUIRE_FALSE(contains(corner_triangle(), sq));
    REQUIRE(contains(sq, corner_triangle()));
    REQUIRE(contains(sq, Polytope{2, {}}));
    REQUIRE_THROWS_AS(contains(sq, convex_hull({qv({0})}, 1)), dimension_mismatch);
}

TEST_CASE("containment implies volume monotonicity") {
    for (int trial = 0; trial < 20; ++trial) {
        std::vector<QVec> pts;
        for (int i = 0; i < 8; ++i) pts.push_back(random_point_2d());
        Polytope p = convex_hull(pts, 2);
        Polytope q = convex_hull({pts[0], pts[1], pts[2], pts[3]}, 2);
        REQUIRE(contains(p, q));
        REQUIRE(polytope_volume(q) <= polytope_volume(p));
    }
}

TEST_CASE("3-d volume: cube and simplex") {
    std::vector<QVec> cube;
    for (int x = 0; x < 2; ++x)
        for (int y = 0; y < 2; ++y)
            for (int z = 0; z < 2; ++z) cube.push_back(qv({x, y, z}));
    REQUIRE(polytope_volume(convex_hull(cube, 3)) == 1);
    Polytope simplex =
        convex_hull({qv({0, 0, 0}), qv({1, 0, 0}), qv({0, 1, 0}), qv({0, 0, 1})}, 3);
    REQUIRE(polytope_volume(simplex) == Rat(1, 6));
}

TEST_CASE("lattice_points of small polygons") {
    std::vector<ZVec> sq = lattice_points(unit_square());
    REQUIRE(sq.size() == 4);
    Polytope pent = convex_hull({qv({0, 0}), qv({2, 0}), qv({2, 1}), qv({1, 2}), qv({0, 2})}, 2);
    long long expect =
        oracle::pick_count({zv({0, 0}), zv({2, 0}), zv({2, 1}), zv({1, 2}), zv({0, 2})});
    REQUIRE(static_cast<long long>(lattice_points(pent).size()) == expect);
    REQUIRE(expect == 8);  // area 7/2, boundary 7, one interior point
    REQUIRE(lattice_points(Polytope{2, {}}).empty());
}

TEST_CASE("lattice point counts agree with Pick on random lattice polygons") {
    std::uniform_int_distribution<int> coord(-5, 6);
    for (int trial = 0; trial < 25; ++trial) {
        std::vector<QVec> pts;
        for (int i = 0; i < 7; ++i) pts.push_back(qv({coord(rng), coord(rng)}));
        Polytope p = convex_hull(pts, 2);
        if (polytope_volume(p) == 0) continue;
        std::vector<ZVec> ring;
        for (const auto& v : p.vertices)
            ring.push_back(zv({numerator(v[0]), numerator(v[1])}));
        REQUIRE(static_cast<long long>(lattice_points(p).size()) == oracle::pick_count(ring));
    }
}

TEST_CASE("brunn_minkowski_margin exact cases in the plane") {
    Polytope sq = unit_square();
    REQUIRE(brunn_minkowski_margin(sq, sq) == BMResult::Equal);
    REQUIRE(brunn_minkowski_margin(sq, corner_triangle()) == BMResult::StrictlyGreater);
    Polytope seg1 = convex_hull({qv({0}), qv({1})}, 1);
    Polytope seg2 = convex_hull({qv({4}), qv({5})}, 1);
    REQUIRE(brunn_minkowski_margin(seg1, seg2) == BMResult::Equal);
    REQUIRE_THROWS_AS(brunn_minkowski_margin(sq, Polytope{2, {}}), empty_polytope);
}

TEST_CASE("brunn_minkowski_margin never reports Violation on random polygons") {
    std::uniform_int_distribution<int> coord(0, 7);
    for (int trial = 0; trial < 30; ++trial) {
        std::vector<QVec> a, b;
        for (int i = 0; i < 5; ++i) {
            a.push_back(qv({coord(rng), coord(rng)}));
            b.push_back(qv({coord(rng), coord(rng)}));
        }
        Polytope p = convex_hull(a, 2), q = convex_hull(b, 2);
        BMResult r = brunn_minkowski_margin(p, q);
        REQUIRE(r != BMResult::Violation);
        REQUIRE(r != BMResult::Indeterminate);
    }
}

TEST_CASE("brunn_minkowski_margin in dimension 3") {
    std::vector<QVec> cube;
    for (int x = 0; x < 2; ++x)
        for (int y = 0; y < 2; ++y)
            for (int z = 0; z < 2; ++z) cube.push_back(qv({x, y, z}));
    Polytope c = convex_hull(cube, 3);
    // homothetic copies: equality, detected through the exact-power path
    Polytope c2 = minkowski_weighted({c}, {Rat(3)});
    REQUIRE(brunn_minkowski_margin(c, c2) == BMResult::Equal);
    Polytope simplex =
        convex_hull({qv({0, 0, 0}), qv({1, 0, 0}), qv({0, 1, 0}), qv({0, 0, 1})}, 3);
    REQUIRE(brunn_minkowski_margin(c, simplex) == BMResult::StrictlyGreater);
}

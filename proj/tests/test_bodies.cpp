#include <catch2/catch_amalgamated.hpp>

#include <set>

#include "okounkov/bodies.hpp"
#include "okounkov/models.hpp"
#include "oracles.hpp"

using namespace okounkov;

namespace {

GradedSemigroup e1(long long bound = 40) {
    std::vector<GradedPoint> gens{
        {{0}, {1, 0}}, {{2}, {1, 0}}, {{0}, {0, 1}}, {{3}, {0, 1}}, {{7}, {2, 0}}};
    return GradedSemigroup::from_generators(1, 2, std::move(gens), bound);
}

GradedSemigroup e2(long long bound = 12) {
    auto zv = [](std::initializer_list<long long> xs) {
        ZVec z;
        for (long long x : xs) z.push_back(Int(x));
        return z;
    };
    return toric_model({lattice_polytope({zv({0, 0}), zv({1, 0}), zv({0, 1}), zv({1, 1})}, 2),
                        lattice_polytope({zv({0, 0}), zv({1, 0}), zv({0, 1})}, 2)},
                       bound);
}

ZVec zv3(long long a, long long b, long long c) { return ZVec{Int(a), Int(b), Int(c)}; }

Polytope segment(const Rat& hi) {
    return convex_hull({QVec{Rat(0)}, QVec{hi}}, 1);
}

}  // namespace

TEST_CASE("E1 global cone: extreme rays") {
    GradedSemigroup s = e1();
    const ConvexCone& cone = global_cone(s);
    CHECK(cone.dim == 3);
    CHECK(cone.lineality.empty());
    std::set<ZVec> rays(cone.rays.begin(), cone.rays.end());
    std::set<ZVec> want{zv3(0, 1, 0), zv3(7, 2, 0), zv3(0, 0, 1), zv3(3, 0, 1)};
    CHECK(rays == want);

    // grounded against the brute-force 3-d oracles
    std::vector<ZVec> want_rays(want.begin(), want.end());
    for (const auto& pt : s.graded_points(8)) CHECK(oracle::brute_cone_member_3d(want_rays, pt));
    CHECK_FALSE(oracle::brute_cone_member_3d(want_rays, zv3(8, 2, 0)));
    CHECK_FALSE(cone_contains(cone, zv3(8, 2, 0)));
}

TEST_CASE("E2 global cone: vertex rays in degree one") {
    GradedSemigroup s = e2();
    const ConvexCone& cone = global_cone(s);
    CHECK(cone.dim == 4);
    std::set<ZVec> rays(cone.rays.begin(), cone.rays.end());
    std::set<ZVec> want{ZVec{Int(0), Int(0), Int(1), Int(0)}, ZVec{Int(1), Int(0), Int(1), Int(0)},
                        ZVec{Int(0), Int(1), Int(1), Int(0)}, ZVec{Int(1), Int(1), Int(1), Int(0)},
                        ZVec{Int(0), Int(0), Int(0), Int(1)}, ZVec{Int(1), Int(0), Int(0), Int(1)},
                        ZVec{Int(0), Int(1), Int(0), Int(1)}};
    CHECK(rays == want);
    for (const auto& pt : s.graded_points(4)) CHECK(cone_contains(cone, pt));
}

TEST_CASE("E1 fiber bodies and volumes") {
    GradedSemigroup s = e1();
    CHECK(okounkov_body(s, QVec{Rat(1), Rat(0)}) == segment(Rat(7, 2)));
    CHECK(okounkov_body(s, QVec{Rat(0), Rat(1)}) == segment(Rat(3)));
    CHECK(okounkov_body(s, QVec{Rat(1, 2), Rat(1, 2)}) == segment(Rat(13, 4)));

    CHECK(volume_geometric(s, QVec{Rat(1), Rat(0)}) == Rat(7, 2));
    CHECK(volume_geometric(s, QVec{Rat(0), Rat(1)}) == 3);
    CHECK(volume_geometric(s, QVec{Rat(1, 2), Rat(1, 2)}) == Rat(13, 4));
    // d = 1 homogeneity
    CHECK(volume_geometric(s, QVec{Rat(2), Rat(0)}) == 7);

    CHECK_THROWS_AS(okounkov_body(s, QVec{Rat(0), Rat(0)}), error);
    CHECK_THROWS_AS(okounkov_body(s, QVec{Rat(-1), Rat(2)}), negative_entry);
    CHECK_THROWS_AS(okounkov_body(s, QVec{Rat(1)}), dimension_mismatch);
}

TEST_CASE("E2 fiber bodies: boundary equals the defining polytopes") {
    GradedSemigroup s = e2();
    Polytope p1 = okounkov_body(s, QVec{Rat(1), Rat(0)});
    CHECK(p1 == convex_hull({QVec{Rat(0), Rat(0)}, QVec{Rat(1), Rat(0)}, QVec{Rat(0), Rat(1)},
                             QVec{Rat(1), Rat(1)}},
                            2));
    Polytope p2 = okounkov_body(s, QVec{Rat(0), Rat(1)});
    CHECK(p2 ==
          convex_hull({QVec{Rat(0), Rat(0)}, QVec{Rat(1), Rat(0)}, QVec{Rat(0), Rat(1)}}, 2));
    CHECK(volume_geometric(s, QVec{Rat(1), Rat(0)}) == 2);
    CHECK(volume_geometric(s, QVec{Rat(0), Rat(1)}) == 1);
    CHECK(volume_geometric(s, QVec{Rat(1, 2), Rat(1, 2)}) == Rat(7, 4));
    // the halved pentagon, against the shoelace oracle
    Polytope mid = okounkov_body(s, QVec{Rat(1, 2), Rat(1, 2)});
    CHECK(oracle::shoelace_area(mid.vertices) == Rat(7, 8));
}

TEST_CASE("fibers interpolate convexly in the direction") {
    GradedSemigroup s = e1();
    Polytope at10 = okounkov_body(s, QVec{Rat(1), Rat(0)});
    Polytope at01 = okounkov_body(s, QVec{Rat(0), Rat(1)});
    Polytope mid = okounkov_body(s, QVec{Rat(1, 2), Rat(1, 2)});
    Polytope average = minkowski_weighted({at10, at01}, {Rat(1, 2), Rat(1, 2)});
    CHECK(contains(mid, average));
    // here the average is exactly attained
    CHECK(mid == average);
}

TEST_CASE("inner approximation grows with the bound") {
    GradedSemigroup small = e1(20);
    GradedSemigroup large = e1(40);
    for (const auto& a : {QVec{Rat(1), Rat(0)}, QVec{Rat(1, 2), Rat(1, 2)}}) {
        Polytope inner = okounkov_body(small, a);
        Polytope outer = okounkov_body(large, a);
        CHECK(contains(outer, inner));
        CHECK(polytope_volume(inner) <= polytope_volume(outer));
    }
}

TEST_CASE("ray-restricted bodies sit inside the fiber at the primitive direction") {
    GradedSemigroup s = e1();
    // the restriction is graded by multiples of the primitive integer point
    // on the ray, so it compares against the fiber at that point
    for (const auto& a : {QVec{Rat(1), Rat(0)}, QVec{Rat(0), Rat(1)}, QVec{Rat(1), Rat(1)}}) {
        Polytope restricted = ray_restricted_body(s, a);
        Polytope full = okounkov_body(s, a);
        CHECK(contains(full, restricted));
    }
    CHECK(ray_restricted_body(s, QVec{Rat(1), Rat(0)}) == segment(Rat(7, 2)));
    // scale invariance: (1/2,1/2) restricts identically to (1,1)
    CHECK(ray_restricted_body(s, QVec{Rat(1, 2), Rat(1, 2)}) ==
          ray_restricted_body(s, QVec{Rat(1), Rat(1)}));
}

TEST_CASE("counting estimates") {
    GradedSemigroup s = e1();
    auto counts = volume_counting(s, QVec{Rat(1), Rat(0)}, 10);
    REQUIRE(counts.size() == 10);
    CHECK(counts.front() == std::make_pair(1LL, Rat(2)));
    CHECK(counts.back() == std::make_pair(10LL, Rat(3)));  // 30 points at degree (10,0)
    CHECK(s.hilbert({10, 0}) == 30);

    // non-integral multiples are skipped
    auto half_counts = volume_counting(s, QVec{Rat(1, 2), Rat(1, 2)}, 4);
    REQUIRE(half_counts.size() == 2);
    CHECK(half_counts[0] == std::make_pair(2LL, Rat(2)));
    // degree (2,2) holds {0,2,...,8,10} from square degrees plus {7,10,13} through (2,0)
    CHECK(s.hilbert({2, 2}) == 10);
    CHECK(half_counts[1] == std::make_pair(4LL, Rat(5, 2)));

    GradedSemigroup single = GradedSemigroup::from_generators(1, 1, {{{1}, {1}}}, 10);
    auto ones = volume_counting(single, QVec{Rat(1)}, 4);
    REQUIRE(ones.size() == 4);
    CHECK(ones[3] == std::make_pair(4LL, Rat(1, 4)));

    GradedSemigroup t = e2();
    auto toric_counts = volume_counting(t, QVec{Rat(1), Rat(0)}, 5);
    REQUIRE(toric_counts.size() == 5);
    CHECK(toric_counts.back() == std::make_pair(5LL, Rat(72, 25)));  // 36 points in 5·P1
}

TEST_CASE("lattice index certifies counting convergence") {
    CHECK(lattice_index(e1(), QVec{Rat(1), Rat(0)}).value() == 1);
    CHECK(lattice_index(e2(), QVec{Rat(1, 2), Rat(1, 2)}).value() == 1);

    // v-values {0,2} generate an index-2 subgroup of Z^2 together with degree
    GradedSemigroup coarse = GradedSemigroup::from_generators(1, 1, {{{0}, {1}}, {{2}, {1}}}, 10);
    CHECK(lattice_index(coarse, QVec{Rat(1)}).value() == 2);

    // a single generator never affinely spans: rank-deficient
    GradedSemigroup single = GradedSemigroup::from_generators(1, 1, {{{1}, {1}}}, 10);
    CHECK_FALSE(lattice_index(single, QVec{Rat(1)}).has_value());

    GradedSemigroup empty = GradedSemigroup::from_generators(1, 2, {}, 5);
    CHECK_THROWS_AS(lattice_index(empty, QVec{Rat(1), Rat(0)}), empty_ray);
}

TEST_CASE("estimate_volume bundles the three views") {
    GradedSemigroup s = e2();
    VolumeEstimate est = estimate_volume(s, QVec{Rat(1, 2), Rat(1, 2)}, 12);
    CHECK(est.geometric == Rat(7, 4));
    CHECK(est.index.value() == 1);
    REQUIRE_FALSE(est.counting.empty());
    CHECK(est.counting.back().first == 12);
    // estimates over-count: d!·#(kQ cap Z^d)/k^d >= d!·vol(Q) for lattice polytopes
    for (const auto& [k, v] : est.counting) CHECK(v >= est.geometric);
}

TEST_CASE("empty semigroup has no cone") {
    GradedSemigroup empty = GradedSemigroup::from_generators(1, 2, {}, 5);
    CHECK_THROWS_AS(global_cone(empty), empty_cone);
    CHECK_THROWS_AS(volume_geometric(empty, QVec{Rat(1), Rat(0)}), empty_cone);
}

#include <catch2/catch_amalgamated.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>

#include "okounkov/bodies.hpp"
#include "okounkov/models.hpp"
#include "oracles.hpp"

using namespace okounkov;

namespace {

ZVec zv(std::initializer_list<long long> xs) {
    ZVec z;
    for (long long x : xs) z.push_back(Int(x));
    return z;
}

std::vector<LatticePolytope> e2_polytopes() {
    return {lattice_polytope({zv({0, 0}), zv({1, 0}), zv({0, 1}), zv({1, 1})}, 2),
            lattice_polytope({zv({0, 0}), zv({1, 0}), zv({0, 1})}, 2)};
}

GradedSemigroup e1() {
    std::vector<GradedPoint> gens{
        {{0}, {1, 0}}, {{2}, {1, 0}}, {{0}, {0, 1}}, {{3}, {0, 1}}, {{7}, {2, 0}}};
    return GradedSemigroup::from_generators(1, 2, std::move(gens), 40);
}

std::string slurp(const std::filesystem::path& path) {
    std::ifstream in(path);
    REQUIRE(in.good());
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

std::filesystem::path data_dir() {
    const char* dir = std::getenv("OKOUNKOV_DATA");
    REQUIRE(dir != nullptr);
    return std::filesystem::path(dir);
}

}  // namespace

TEST_CASE("toric model pieces enumerate weighted Minkowski sums") {
    GradedSemigroup s = toric_model(e2_polytopes(), 12);
    CHECK(s.mode() == GradedSemigroup::Mode::toric);

    std::set<ValuationVector> square(s.piece({1, 0}).begin(), s.piece({1, 0}).end());
    CHECK(square == std::set<ValuationVector>{{0, 0}, {1, 0}, {0, 1}, {1, 1}});
    CHECK(std::is_sorted(s.piece({1, 0}).begin(), s.piece({1, 0}).end()));

    // P1 + P2 via the Pick oracle: area 7/2, boundary 7, so 8 lattice points
    std::vector<ZVec> hex{zv({0, 0}), zv({2, 0}), zv({2, 1}), zv({1, 2}), zv({0, 2})};
    CHECK(oracle::pick_count(hex) == 8);
    CHECK(s.piece({1, 1}).size() == 8);
    CHECK(s.hilbert({1, 1}) == 8);
}

TEST_CASE("toric model on a segment") {
    GradedSemigroup s = toric_model({lattice_polytope({zv({0}), zv({2})}, 1)}, 10);
    for (long long k = 0; k <= 10; ++k) {
        const auto& pts = s.piece({k});
        REQUIRE(static_cast<long long>(pts.size()) == 2 * k + 1);
        for (long long x = 0; x <= 2 * k; ++x) CHECK(pts[static_cast<std::size_t>(x)] == ValuationVector{x});
    }
}

TEST_CASE("toric model validation") {
    auto segment2d = lattice_polytope({zv({0, 0}), zv({1, 1})}, 2);
    CHECK_THROWS_AS(toric_model({segment2d}, 5), not_full_dimensional);
    CHECK_THROWS_AS(toric_model({}, 5), empty_input);
    CHECK_THROWS_AS(
        toric_model({e2_polytopes()[0], lattice_polytope({zv({0}), zv({1})}, 1)}, 5),
        dimension_mismatch);
    CHECK_THROWS_AS(toric_model(e2_polytopes(), 0), bound_too_small);
}

TEST_CASE("toric fiber oracle: pinned fibers") {
    auto polys = e2_polytopes();
    Polytope square = convex_hull({{Rat(0), Rat(0)}, {Rat(1), Rat(0)}, {Rat(0), Rat(1)}, {Rat(1), Rat(1)}}, 2);
    CHECK(toric_fiber_oracle(polys, {Rat(1), Rat(0)}) == square);
    CHECK(polytope_volume(toric_fiber_oracle(polys, {Rat(1, 2), Rat(1, 2)})) == Rat(7, 8));
    // mixed-volume expansion: (1/3)^2 + 2*(1/3)(2/3) + (2/3)^2/2
    CHECK(polytope_volume(toric_fiber_oracle(polys, {Rat(1, 3), Rat(2, 3)})) == Rat(7, 9));

    CHECK_THROWS_AS(toric_fiber_oracle({}, {Rat(1)}), empty_input);
    CHECK_THROWS_AS(toric_fiber_oracle(polys, {Rat(1)}), dimension_mismatch);
}

TEST_CASE("toric bodies agree with the closed-form oracle on a Farey grid") {
    auto polys = e2_polytopes();
    GradedSemigroup s = toric_model(polys, 12);
    std::set<QVec> dirs;
    for (long long den = 1; den <= 6; ++den)
        for (long long num = 0; num <= den; ++num)
            dirs.insert({Rat(num, den), Rat(den - num, den)});
    REQUIRE(dirs.size() == 13);
    for (const auto& a : dirs) CHECK(okounkov_body(s, a) == toric_fiber_oracle(polys, a));
}

TEST_CASE("toric superadditivity holds degreewise") {
    GradedSemigroup s = toric_model(e2_polytopes(), 12);
    SupportInfo sup = s.support(3);
    for (const auto& m1 : sup.degrees) {
        for (const auto& m2 : sup.degrees) {
            MultiDegree sum(m1.size());
            for (std::size_t i = 0; i < sum.size(); ++i) sum[i] = m1[i] + m2[i];
            auto pts = GradedSemigroup::sumset(s.piece(m1), s.piece(m2));
            CHECK(std::includes(s.piece(sum).begin(), s.piece(sum).end(), pts.begin(), pts.end()));
        }
    }
}

TEST_CASE("lattice polygons are normal: degree-1 truncation changes nothing") {
    GradedSemigroup sq = toric_model(e2_polytopes(), 12);
    GradedSemigroup sqt = sq.truncate(1);
    for (const auto& m : sq.support(12).degrees) CHECK(sqt.piece(m) == sq.piece(m));

    GradedSemigroup seg = toric_model({lattice_polytope({zv({0}), zv({2})}, 1)}, 10);
    GradedSemigroup segt = seg.truncate(1);
    for (long long k = 0; k <= 10; ++k) CHECK(segt.piece({k}) == seg.piece({k}));
}

TEST_CASE("Reeve tetrahedron is not normal: truncation is a strict subseries") {
    GradedSemigroup s = parse_model(slurp(data_dir() / "reeve.json"));
    CHECK(s.d() == 3);
    CHECK(s.r() == 1);
    CHECK(s.piece({1}).size() == 4);  // vertices only: all edges primitive
    GradedSemigroup t = s.truncate(1);
    for (long long k = 0; k <= s.bound(); ++k) {
        const auto& full = s.piece({k});
        const auto& trunc = t.piece({k});
        CHECK(std::includes(full.begin(), full.end(), trunc.begin(), trunc.end()));
    }
    // (1,1,1) lies in 2T but is no sum of two lattice points of T
    CHECK(t.piece({2}).size() < s.piece({2}).size());
    auto p2 = s.piece({2});
    CHECK(std::binary_search(p2.begin(), p2.end(), ValuationVector{1, 1, 1}));
    auto q2 = t.piece({2});
    CHECK_FALSE(std::binary_search(q2.begin(), q2.end(), ValuationVector{1, 1, 1}));
}

TEST_CASE("model JSON round trips bit-exactly") {
    GradedSemigroup gen = e1();
    CHECK(parse_model(serialize_model(gen)) == gen);

    GradedSemigroup tor = toric_model(e2_polytopes(), 12);
    CHECK(parse_model(serialize_model(tor)) == tor);
    CHECK(serialize_model(parse_model(serialize_model(tor))) == serialize_model(tor));

    GradedSemigroup rnd = random_model(2, 2, 6, 5, 2, 7);
    CHECK(parse_model(serialize_model(rnd)) == rnd);
}

TEST_CASE("shipped fixture documents parse to the fixtures") {
    CHECK(parse_model(slurp(data_dir() / "e1.json")) == e1());
    CHECK(parse_model(slurp(data_dir() / "e2.json")) == toric_model(e2_polytopes(), 12));
}

TEST_CASE("model parse diagnostics") {
    CHECK_THROWS_AS(parse_model("{ not json"), parse_error);
    CHECK_THROWS_AS(parse_model("[1,2]"), parse_error);
    CHECK_THROWS_AS(parse_model(R"({"mode":"generators","d":1,"r":1})"), parse_error);
    CHECK_THROWS_AS(parse_model(R"({"mode":"frobnicate","d":1,"r":1,"bound":4})"), parse_error);
    CHECK_THROWS_AS(
        parse_model(R"({"mode":"generators","d":1.5,"r":1,"bound":4,"generators":[]})"),
        parse_error);
    CHECK_THROWS_AS(
        parse_model(R"({"mode":"generators","d":1,"r":1,"bound":4,"generators":[{"v":[0.5],"m":[1]}]})"),
        parse_error);
    CHECK_THROWS_AS(
        parse_model(R"({"mode":"generators","d":1,"r":2,"bound":4,"generators":[{"v":[1],"m":[0,0]}]})"),
        zero_degree_generator);
    CHECK_THROWS_AS(
        parse_model(R"({"mode":"generators","d":1,"r":1,"bound":4,"generators":[{"v":[-1],"m":[1]}]})"),
        negative_entry);
    CHECK_THROWS_AS(
        parse_model(R"({"mode":"toric","d":2,"r":2,"bound":4,"polytopes":[[[0,0],[1,0],[0,1]]]})"),
        parse_error);
    CHECK_THROWS_AS(
        parse_model(R"({"mode":"toric","d":2,"r":1,"bound":4,"polytopes":[[[0],[1]]]})"),
        parse_error);
}

TEST_CASE("random models are seed-deterministic") {
    GradedSemigroup a = random_model(1, 2, 5, 7, 2, 42);
    GradedSemigroup b = random_model(1, 2, 5, 7, 2, 42);
    CHECK(a == b);
    CHECK(a.generators() == b.generators());
    CHECK_FALSE(random_model(1, 2, 5, 7, 2, 43) == a);

    GradedSemigroup empty = random_model(1, 2, 0, 7, 2, 42);
    CHECK(empty.generators().empty());
    CHECK_FALSE(empty.has_nonzero_piece());

    CHECK_THROWS_AS(random_model(0, 2, 5, 7, 2, 42), error);
    CHECK_THROWS_AS(random_model(1, 2, 5, 7, 0, 42), error);
}

TEST_CASE("random model golden capture") {
    const char* dir = std::getenv("OKOUNKOV_GOLDEN");
    REQUIRE(dir != nullptr);
    std::filesystem::path path = std::filesystem::path(dir) / "random_model_d1_r2_n5_seed42.json";
    std::string current = serialize_model(random_model(1, 2, 5, 7, 2, 42));
    if (!std::filesystem::exists(path)) {
        std::ofstream out(path);
        REQUIRE(out.good());
        out << current;
        WARN("golden file captured on first run: " + path.string());
    }
    CHECK(slurp(path) == current);
}

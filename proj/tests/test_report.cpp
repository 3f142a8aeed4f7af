#include <catch2/catch_amalgamated.hpp>

#include <nlohmann/json.hpp>

#include "okounkov/fujita.hpp"

using namespace okounkov;

namespace {

GradedSemigroup e1() {
    std::vector<GradedPoint> gens{
        {{0}, {1, 0}}, {{2}, {1, 0}}, {{0}, {0, 1}}, {{3}, {0, 1}}, {{7}, {2, 0}}};
    return GradedSemigroup::from_generators(1, 2, std::move(gens), 40);
}

}  // namespace

TEST_CASE("decimal rendering: 12 significant digits, informational only") {
    CHECK(decimal12(Rat(4, 7)) == "0.571428571429");
    CHECK(decimal12(Rat(6, 7)) == "0.857142857143");
    CHECK(decimal12(Rat(1, 3)) == "0.333333333333");
    CHECK(decimal12(Rat(1)) == "1");
    CHECK(decimal12(Rat(7, 2)) == "3.5");
    CHECK(decimal12(Rat(0)) == "0");
}

TEST_CASE("direction rendering uses the CLI colon format") {
    CHECK(direction_to_string({Rat(1), Rat(0)}) == "1:0");
    CHECK(direction_to_string({Rat(1, 2), Rat(1, 2)}) == "1/2:1/2");
    CHECK(direction_to_string({Rat(2, 3)}) == "2/3");
}

TEST_CASE("csv rows: exact rationals, markers fill the numeric columns") {
    FujitaRow row;
    row.p = 1;
    row.direction = {Rat(1), Rat(0)};
    row.vol_full = Rat(7, 2);
    row.vol_trunc = 2;
    row.ratio = Rat(4, 7);
    CHECK(csv_row(row) == "1,1:0,7/2,2,4/7,0.571428571429");

    FujitaRow bad;
    bad.p = 2;
    bad.direction = {Rat(0), Rat(1)};
    bad.marker = RowMarker::zero_volume;
    CHECK(csv_row(bad) == "2,0:1,ZeroVolume,ZeroVolume,ZeroVolume,ZeroVolume");
    bad.marker = RowMarker::beyond_bound;
    CHECK(csv_row(bad) == "2,0:1,BeyondBound,BeyondBound,BeyondBound,BeyondBound");
}

TEST_CASE("csv document for the pinned ratio sweep") {
    FujitaReport report = sweep(e1(), {1, 2, 3}, {{Rat(1), Rat(0)}});
    CHECK(to_csv(report) ==
          "p,a,vol_full,vol_trunc,ratio,ratio_decimal\n"
          "1,1:0,7/2,2,4/7,0.571428571429\n"
          "2,1:0,7/2,7/2,1,1\n"
          "3,1:0,7/2,3,6/7,0.857142857143\n");

    FujitaReport empty;
    CHECK(to_csv(empty) == "p,a,vol_full,vol_trunc,ratio,ratio_decimal\n");
}

TEST_CASE("json rendering is well formed and carries the verdict") {
    FujitaReport report = verify_theorem(e1(), Rat(1, 5), 8, {1, 2, 3, 4, 5, 6, 7, 8});
    nlohmann::json doc = nlohmann::json::parse(to_json(report));
    CHECK(doc["verdict"] == "pass");
    CHECK(doc["p0"] == 2);
    CHECK(doc["resolution"] == 2);
    CHECK(doc["epsilon"] == "1/5");
    CHECK(doc["epsilon_prime"] == "3/10");
    CHECK(doc["oscillation_met"] == true);
    CHECK(doc["minkowski_ok"] == true);
    CHECK(doc["bound"] == 40);
    REQUIRE(doc["rows"].is_array());
    CHECK(doc["rows"].size() == report.rows.size());
    CHECK(doc["rows"][0]["marker"] == "ok");
    CHECK(doc["rows"][0]["p"] == 2);

    FujitaReport missed = verify_theorem(e1(), Rat(1, 5), 8, {1});
    nlohmann::json md = nlohmann::json::parse(to_json(missed));
    CHECK(md["p0"] == "NotReached");
    CHECK(md["verdict"] == "fail");
    CHECK(md["rows"].empty());
}

TEST_CASE("rendering is independent of the thread cap") {
    GradedSemigroup s = e1();
    std::vector<QVec> dirs{{Rat(1), Rat(0)}, {Rat(0), Rat(1)}, {Rat(1, 2), Rat(1, 2)}};
    set_thread_cap(1);
    std::string serial = to_csv(sweep(s, {1, 2, 3, 4}, dirs));
    set_thread_cap(4);
    std::string parallel = to_csv(sweep(s, {1, 2, 3, 4}, dirs));
    set_thread_cap(0);
    CHECK(serial == parallel);
}

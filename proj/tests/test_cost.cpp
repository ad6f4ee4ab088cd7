#include <catch2/catch_amalgamated.hpp>

#include "cbctt/cost.hpp"
#include "oracle.hpp"
#include "test_support.hpp"

using namespace cbctt;

namespace {

// One course, one lecture, 30 students; the only room seats 25.
Instance overfull_room() {
  Instance inst;
  inst.days = 1;
  inst.periods_per_day = 1;
  inst.courses.push_back({"c0", "t0", 1, 1, 30, -1});
  inst.rooms.push_back({"r0", 25});
  inst.finalize();
  return inst;
}

// One course, three lectures, three rooms, one day of three periods.
Instance three_rooms() {
  Instance inst;
  inst.days = 1;
  inst.periods_per_day = 3;
  inst.courses.push_back({"c0", "t0", 3, 1, 10, -1});
  for (int r = 0; r < 3; ++r)
    inst.rooms.push_back({"r" + std::to_string(r), 20});
  inst.finalize();
  return inst;
}

// One course, three lectures spread over at least three days, one room.
Instance three_days() {
  Instance inst;
  inst.days = 3;
  inst.periods_per_day = 3;
  inst.courses.push_back({"c0", "t0", 3, 3, 10, -1});
  inst.rooms.push_back({"r0", 20});
  inst.finalize();
  return inst;
}

}  // namespace

TEST_CASE("room capacity charges each overflowing seat per lecture") {
  const Instance inst = overfull_room();
  Timetable tt(inst);
  tt.place(0, 0);
  CHECK(room_capacity_cost(tt, inst) == 5);
  CHECK(room_capacity_cost(tt, inst, {2, 1, 5, 2}) == 10);
}

TEST_CASE("room capacity accumulates over lectures") {
  Instance inst = overfull_room();
  inst.courses[0].lectures = 2;
  inst.periods_per_day = 2;
  inst.finalize();
  Timetable tt(inst);
  tt.place(0, 0);
  tt.place(0, 1);
  CHECK(room_capacity_cost(tt, inst) == 10);
}

TEST_CASE("room stability charges rooms beyond the first") {
  const Instance inst = three_rooms();
  const Dims d = inst.dims();

  Timetable two_rooms(inst);
  two_rooms.place(0, slot_index({0, 0, 0}, d));
  two_rooms.place(0, slot_index({0, 0, 1}, d));
  two_rooms.place(0, slot_index({1, 0, 2}, d));
  CHECK(room_stability_cost(two_rooms, inst) == 1);
  CHECK(room_stability_cost(two_rooms, inst, {1, 2, 5, 2}) == 2);

  Timetable spread(inst);
  spread.place(0, slot_index({0, 0, 0}, d));
  spread.place(0, slot_index({1, 0, 1}, d));
  spread.place(0, slot_index({2, 0, 2}, d));
  CHECK(room_stability_cost(spread, inst) == 2);

  Timetable loyal(inst);
  loyal.place(0, slot_index({0, 0, 0}, d));
  loyal.place(0, slot_index({0, 0, 1}, d));
  loyal.place(0, slot_index({0, 0, 2}, d));
  CHECK(room_stability_cost(loyal, inst) == 0);
}

TEST_CASE("min working days charges each missing day at weight five") {
  const Instance inst = three_days();
  const Dims d = inst.dims();

  Timetable two_days(inst);
  two_days.place(0, slot_index({0, 0, 0}, d));
  two_days.place(0, slot_index({0, 0, 1}, d));
  two_days.place(0, slot_index({0, 1, 0}, d));
  CHECK(min_working_days_cost(two_days, inst) == 5);

  Timetable one_day(inst);
  one_day.place(0, slot_index({0, 0, 0}, d));
  one_day.place(0, slot_index({0, 0, 1}, d));
  one_day.place(0, slot_index({0, 0, 2}, d));
  CHECK(min_working_days_cost(one_day, inst) == 10);

  Timetable spread(inst);
  spread.place(0, slot_index({0, 0, 0}, d));
  spread.place(0, slot_index({0, 1, 0}, d));
  spread.place(0, slot_index({0, 2, 0}, d));
  CHECK(min_working_days_cost(spread, inst) == 0);
}

TEST_CASE("curriculum compactness charges isolated lectures at weight two") {
  const Instance inst = testsupport::cost_toy();
  const Dims d = inst.dims();

  // Two lectures of cA with a gap between them: both isolated.
  Timetable gappy(inst);
  gappy.place(0, slot_index({0, 0, 0}, d));
  gappy.place(0, slot_index({0, 0, 2}, d));
  CHECK(curriculum_compactness_cost(gappy, inst) == 4);

  // Adjacent pair plus a distant cB lecture: only cB is isolated.
  Timetable tail(inst);
  tail.place(0, slot_index({0, 0, 0}, d));
  tail.place(0, slot_index({0, 0, 1}, d));
  tail.place(1, slot_index({1, 0, 3}, d));
  CHECK(curriculum_compactness_cost(tail, inst) == 2);

  // The clean arrangement has a contiguous block.
  CHECK(curriculum_compactness_cost(testsupport::cost_toy_clean(inst), inst) ==
        0);
}

TEST_CASE("adjacency never crosses a day boundary") {
  Instance inst;
  inst.days = 2;
  inst.periods_per_day = 2;
  inst.courses.push_back({"cA", "tA", 2, 1, 10, -1});
  inst.rooms.push_back({"r0", 20});
  inst.curricula.push_back({"q0", {0}});
  inst.finalize();
  const Dims d = inst.dims();

  // Last period of day 0 and first of day 1 are consecutive composite
  // periods but must not count as neighbours.
  Timetable tt(inst);
  tt.place(0, slot_index({0, 0, 1}, d));
  tt.place(0, slot_index({0, 1, 0}, d));
  CHECK(curriculum_compactness_cost(tt, inst) == 4);
}

TEST_CASE("courses outside any curriculum never pay compactness") {
  Instance inst;
  inst.days = 1;
  inst.periods_per_day = 4;
  inst.courses.push_back({"lone", "t0", 2, 1, 10, -1});
  inst.rooms.push_back({"r0", 20});
  inst.finalize();
  Timetable tt(inst);
  tt.place(0, 0);
  tt.place(0, 2);
  CHECK(curriculum_compactness_cost(tt, inst) == 0);
}

TEST_CASE("total cost folds the four components") {
  const Instance inst = testsupport::cost_toy();
  const Matrices m = build_matrices(inst);

  const PenaltyBreakdown clean =
      total_cost(testsupport::cost_toy_clean(inst), inst, m);
  CHECK(clean == PenaltyBreakdown{0, 0, 0, 0, 0});

  // cB in the small room (3 students over) and isolated: 3*w_cap + 1*w_comp.
  const PenaltyBreakdown dirty =
      total_cost(testsupport::cost_toy_dirty(inst), inst, m);
  CHECK(dirty.room_capacity == 3);
  CHECK(dirty.room_stability == 0);
  CHECK(dirty.min_working_days == 0);
  CHECK(dirty.curriculum_compactness == 2);
  CHECK(dirty.total == 5);

  const SoftWeights heavy{2, 3, 7, 11};
  const PenaltyBreakdown weighted =
      total_cost(testsupport::cost_toy_dirty(inst), inst, m, heavy);
  CHECK(weighted.room_capacity == 6);
  CHECK(weighted.curriculum_compactness == 11);
  CHECK(weighted.total == 17);
}

TEST_CASE("total cost refuses infeasible timetables") {
  const Instance inst = testsupport::cost_toy();
  const Matrices m = build_matrices(inst);

  Timetable partial(inst);
  partial.place(0, 0);
  CHECK_THROWS_AS(total_cost(partial, inst, m), std::invalid_argument);

  // Complete but conflicting: cA and cB share period 0.
  const Dims d = inst.dims();
  Timetable clash(inst);
  clash.place(0, slot_index({0, 0, 0}, d));
  clash.place(0, slot_index({0, 0, 1}, d));
  clash.place(1, slot_index({1, 0, 0}, d));
  CHECK_THROWS_AS(total_cost(clash, inst, m), std::invalid_argument);
}

TEST_CASE("library components match an independent recount") {
  cbctt::Rng rng(99251);
  const SoftWeights weights;  // track defaults: 1, 1, 5, 2
  int rounds = 0;
  while (rounds < 120) {
    const auto gen = testsupport::random_instance(rng);
    const Matrices m = build_matrices(gen.instance);
    const Timetable tt = testsupport::random_feasible(gen, m, rng);
    REQUIRE(validate_hard(tt, gen.instance, m).empty());

    const PenaltyBreakdown lib = total_cost(tt, gen.instance, m, weights);
    const oracle::Components naive = oracle::recount(tt, gen.instance);
    CHECK(lib.room_capacity == weights.capacity * naive.capacity);
    CHECK(lib.room_stability == weights.stability * naive.stability);
    CHECK(lib.min_working_days == weights.working_days * naive.working_days);
    CHECK(lib.curriculum_compactness ==
          weights.compactness * naive.compactness);
    CHECK(lib.total == weights.capacity * naive.capacity +
                           weights.stability * naive.stability +
                           weights.working_days * naive.working_days +
                           weights.compactness * naive.compactness);
    ++rounds;
  }
}

TEST_CASE("penalty rows serialize for the trace files") {
  CHECK(std::string(penalty_csv_header()) ==
        "instance,seed,iteration,room_capacity,room_stability,"
        "min_working_days,curriculum_compactness,total");
  const PenaltyBreakdown b{3, 0, 5, 2, 10};
  CHECK(penalty_csv_row(b, "comp01", 7, 12) == "comp01,7,12,3,0,5,2,10");
}

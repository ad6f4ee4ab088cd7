#pragma once

#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "cbctt/timetable.hpp"

namespace cbctt {

// ITC-2007 track-3 weighting (capacity 1, stability 1, working days 5,
// compactness 2). Weights are folded into the components they scale.
struct SoftWeights {
  int capacity = 1;
  int stability = 1;
  int working_days = 5;
  int compactness = 2;
};

struct PenaltyBreakdown {
  int room_capacity = 0;
  int room_stability = 0;
  int min_working_days = 0;
  int curriculum_compactness = 0;
  int total = 0;

  bool operator==(const PenaltyBreakdown&) const = default;
};

// S1: per lecture, students beyond the seats of its room.
inline int room_capacity_cost(const Timetable& tt, const Instance& inst,
                              const SoftWeights& w = {}) {
  int excess = 0;
  const Dims d = inst.dims();
  for (int slot = 0; slot < tt.num_slots(); ++slot) {
    const int c = tt.at(slot);
    if (c == kEmptySlot) continue;
    const int students = inst.courses[static_cast<std::size_t>(c)].students;
    const int seats =
        inst.rooms[static_cast<std::size_t>(room_of_slot(slot, d))].capacity;
    if (students > seats) excess += students - seats;
  }
  return w.capacity * excess;
}

// S2: per course, one point for every room used beyond the first.
inline int room_stability_cost(const Timetable& tt, const Instance& inst,
                               const SoftWeights& w = {}) {
  int extra = 0;
  const Dims d = inst.dims();
  for (int c = 0; c < inst.num_courses(); ++c) {
    std::set<int> rooms;
    for (int slot : tt.course_slots(c)) rooms.insert(room_of_slot(slot, d));
    if (rooms.size() > 1) extra += static_cast<int>(rooms.size()) - 1;
  }
  return w.stability * extra;
}

// S3: per course, days short of its minimum spread.
inline int min_working_days_cost(const Timetable& tt, const Instance& inst,
                                 const SoftWeights& w = {}) {
  int missing = 0;
  const Dims d = inst.dims();
  for (int c = 0; c < inst.num_courses(); ++c) {
    std::set<int> days;
    for (int slot : tt.course_slots(c))
      days.insert(location_of(slot, d).day);
    const int want = inst.courses[static_cast<std::size_t>(c)].min_working_days;
    if (static_cast<int>(days.size()) < want)
      missing += want - static_cast<int>(days.size());
  }
  return w.working_days * missing;
}

// S4: per curriculum and day, lectures with no same-curriculum lecture in
// an adjacent period. Adjacency never crosses a day boundary.
inline int curriculum_compactness_cost(const Timetable& tt,
                                       const Instance& inst,
                                       const SoftWeights& w = {}) {
  int isolated = 0;
  const Dims d = inst.dims();
  const int periods = d.periods();
  std::vector<char> occupied(static_cast<std::size_t>(periods));
  for (int q = 0; q < inst.num_curricula(); ++q) {
    std::fill(occupied.begin(), occupied.end(), 0);
    for (int c : inst.curricula[static_cast<std::size_t>(q)].courses)
      for (int slot : tt.course_slots(c))
        occupied[static_cast<std::size_t>(period_of_slot(slot, d))] = 1;
    for (int p = 0; p < periods; ++p) {
      if (!occupied[static_cast<std::size_t>(p)]) continue;
      const int within = p % d.periods_per_day;
      const bool before =
          within > 0 && occupied[static_cast<std::size_t>(p - 1)];
      const bool after = within + 1 < d.periods_per_day &&
                         occupied[static_cast<std::size_t>(p + 1)];
      if (!before && !after) ++isolated;
    }
  }
  return w.compactness * isolated;
}

// Total soft penalty of a complete feasible timetable. The cost of an
// infeasible timetable is undefined, so hard violations are rejected.
inline PenaltyBreakdown total_cost(const Timetable& tt, const Instance& inst,
                                   const Matrices& m,
                                   const SoftWeights& w = {}) {
  const auto violations = validate_hard(tt, inst, m);
  if (!violations.empty()) {
    std::ostringstream msg;
    msg << "total_cost: timetable has " << violations.size()
        << " hard violation(s), first: " << violations.front().description;
    throw std::invalid_argument(msg.str());
  }
  PenaltyBreakdown b;
  b.room_capacity = room_capacity_cost(tt, inst, w);
  b.room_stability = room_stability_cost(tt, inst, w);
  b.min_working_days = min_working_days_cost(tt, inst, w);
  b.curriculum_compactness = curriculum_compactness_cost(tt, inst, w);
  b.total = b.room_capacity + b.room_stability + b.min_working_days +
            b.curriculum_compactness;
  return b;
}

// CSV row: instance, seed, iteration, the four components, total.
inline std::string penalty_csv_row(const PenaltyBreakdown& b,
                                   const std::string& instance,
                                   std::uint64_t seed, int iteration) {
  std::ostringstream out;
  out << instance << "," << seed << "," << iteration << "," << b.room_capacity
      << "," << b.room_stability << "," << b.min_working_days << ","
      << b.curriculum_compactness << "," << b.total;
  return out.str();
}

inline const char* penalty_csv_header() {
  return "instance,seed,iteration,room_capacity,room_stability,"
         "min_working_days,curriculum_compactness,total";
}

}  // namespace cbctt

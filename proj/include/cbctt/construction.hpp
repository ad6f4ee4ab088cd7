#pragma once

#include <optional>
#include <stdexcept>
#include <vector>

#include "cbctt/memory.hpp"
#include "cbctt/rng.hpp"
#include "cbctt/timetable.hpp"

namespace cbctt {

struct CourseState {
  int course = 0;
  int unscheduled_lectures = 0;
  int available_period_count = 0;
  long long conflict_degree = 0;
};

// Saturation degree first (fewest open periods), then largest weighted
// conflict degree, remaining ties by seeded coin flip. Only courses with
// unscheduled lectures compete.
inline int next_course(const std::vector<CourseState>& states, Rng& rng) {
  std::vector<int> best;
  for (std::size_t i = 0; i < states.size(); ++i) {
    const auto& s = states[i];
    if (s.unscheduled_lectures <= 0) continue;
    if (best.empty()) {
      best.push_back(static_cast<int>(i));
      continue;
    }
    const auto& b = states[static_cast<std::size_t>(best.front())];
    if (s.available_period_count < b.available_period_count ||
        (s.available_period_count == b.available_period_count &&
         s.conflict_degree > b.conflict_degree)) {
      best.assign(1, static_cast<int>(i));
    } else if (s.available_period_count == b.available_period_count &&
               s.conflict_degree == b.conflict_degree) {
      best.push_back(static_cast<int>(i));
    }
  }
  if (best.empty())
    throw std::logic_error("next_course: all lectures already scheduled");
  return states[static_cast<std::size_t>(rng.pick(best))].course;
}

// All slots where the course could legally be placed right now.
inline std::vector<int> feasible_slots(const Timetable& tt, int course,
                                       const Matrices& m) {
  std::vector<int> out;
  for (int slot = 0; slot < tt.num_slots(); ++slot)
    if (is_feasible_placement(tt, course, slot, m)) out.push_back(slot);
  return out;
}

namespace detail {

// One construction pass: schedule lecture by lecture, most constrained
// course first, location uniform among its feasible slots. Returns nothing
// on a dead end.
inline std::optional<Timetable> construct_once(const Instance& inst,
                                               const Matrices& m, Rng& rng) {
  Timetable tt(inst);
  std::vector<CourseState> states;
  states.reserve(static_cast<std::size_t>(inst.num_courses()));
  for (int c = 0; c < inst.num_courses(); ++c) {
    states.push_back({c, inst.courses[static_cast<std::size_t>(c)].lectures, 0,
                      m.conflict_degree(c)});
  }
  int remaining = inst.total_lectures;
  while (remaining > 0) {
    for (auto& s : states) {
      if (s.unscheduled_lectures > 0)
        s.available_period_count = available_period_count(tt, s.course, m);
    }
    const int course = next_course(states, rng);
    const auto slots = feasible_slots(tt, course, m);
    if (slots.empty()) return std::nullopt;
    tt.place(course, rng.pick(slots));
    --states[static_cast<std::size_t>(course)].unscheduled_lectures;
    --remaining;
  }
  return tt;
}

}  // namespace detail

// Feasible construction with whole-restart on dead ends.
inline std::optional<Timetable> construct_feasible(const Instance& inst,
                                                   const Matrices& m, Rng& rng,
                                                   int max_attempts = 100) {
  for (int attempt = 0; attempt < max_attempts; ++attempt) {
    if (auto tt = detail::construct_once(inst, m, rng)) return tt;
  }
  return std::nullopt;
}

inline std::optional<Timetable> construct_feasible(const Instance& inst,
                                                   const Matrices& m,
                                                   std::uint64_t seed,
                                                   int max_attempts = 100) {
  Rng rng(seed);
  return construct_feasible(inst, m, rng, max_attempts);
}

// Fills the harmony memory with up to hms distinct feasible timetables,
// sorted by total penalty. Finding fewer than hms within the attempt
// budget leaves the memory short; finding none at all is an error.
inline HarmonyMemory fill_memory(const Instance& inst, const Matrices& m,
                                 const HsaParams& params, Rng& rng,
                                 const SoftWeights& weights = {}) {
  HarmonyMemory hm(params.hms);
  long long budget =
      static_cast<long long>(params.hms) * params.max_attempts;
  while (!hm.at_capacity() && budget > 0) {
    bool found = false;
    while (budget > 0 && !found) {
      --budget;
      auto tt = detail::construct_once(inst, m, rng);
      if (!tt) continue;
      if (hm.contains(*tt)) continue;  // keep members distinct
      auto penalty = total_cost(*tt, inst, m, weights);
      hm.add({std::move(*tt), penalty});
      found = true;
    }
  }
  if (hm.empty())
    throw std::runtime_error(
        "memory initialization found no feasible timetable for instance '" +
        inst.name + "' within " +
        std::to_string(static_cast<long long>(params.hms) *
                       params.max_attempts) +
        " attempts");
  return hm;
}

inline HarmonyMemory fill_memory(const Instance& inst, const Matrices& m,
                                 const HsaParams& params,
                                 const SoftWeights& weights = {}) {
  Rng rng(params.seed);
  return fill_memory(inst, m, params, rng, weights);
}

}  // namespace cbctt

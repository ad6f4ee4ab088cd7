#pragma once

#include <functional>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "cbctt/construction.hpp"
#include "cbctt/cost.hpp"
#include "cbctt/memory.hpp"
#include "cbctt/rng.hpp"
#include "cbctt/timetable.hpp"

namespace cbctt {

enum class PitchProcedure {
  MoveTimeslot,
  SwapTimeslot,
  MoveLocation,
  SwapLocation,
  ExchangeLocation,
  SwapDistinctTimeslots,
  MoveRoom,
  SwapRoom,
  DoNothing,
};

inline const char* name_of(PitchProcedure p) {
  switch (p) {
    case PitchProcedure::MoveTimeslot: return "move-timeslot";
    case PitchProcedure::SwapTimeslot: return "swap-timeslot";
    case PitchProcedure::MoveLocation: return "move-location";
    case PitchProcedure::SwapLocation: return "swap-location";
    case PitchProcedure::ExchangeLocation: return "exchange-location";
    case PitchProcedure::SwapDistinctTimeslots: return "swap-distinct-timeslots";
    case PitchProcedure::MoveRoom: return "move-room";
    case PitchProcedure::SwapRoom: return "swap-room";
    case PitchProcedure::DoNothing: return "do-nothing";
  }
  return "?";
}

// Maps a uniform draw onto the nine probability bands: eight move bands of
// width 0.10*par each, the remainder of [0,1) does nothing.
inline PitchProcedure select_pitch_procedure(double u, double par) {
  static constexpr PitchProcedure kMoves[8] = {
      PitchProcedure::MoveTimeslot,         PitchProcedure::SwapTimeslot,
      PitchProcedure::MoveLocation,         PitchProcedure::SwapLocation,
      PitchProcedure::ExchangeLocation,     PitchProcedure::SwapDistinctTimeslots,
      PitchProcedure::MoveRoom,             PitchProcedure::SwapRoom,
  };
  for (int i = 0; i < 8; ++i)
    if (u < 0.10 * (i + 1) * par) return kMoves[i];
  return PitchProcedure::DoNothing;
}

// Highest-occurrence vote over the slot's column of the harmony memory,
// the empty value included. Frequency ties go to the course with the
// fewest open periods, then the largest conflict degree, then a seeded
// coin flip; a course beats the empty value on any tie.
inline int memory_consideration(const HarmonyMemory& hm, int slot,
                                const Timetable& tt, const Matrices& m,
                                Rng& rng) {
  if (hm.empty())
    throw std::invalid_argument("memory_consideration: empty harmony memory");
  std::vector<int> count(static_cast<std::size_t>(m.num_courses) + 1, 0);
  for (int i = 0; i < hm.size(); ++i)
    ++count[static_cast<std::size_t>(hm.value_at(i, slot) + 1)];

  int best_count = 0;
  for (int v : count) best_count = std::max(best_count, v);

  std::vector<int> candidates;  // course ids; kEmptySlot for the empty value
  for (std::size_t i = 0; i < count.size(); ++i)
    if (count[i] == best_count) candidates.push_back(static_cast<int>(i) - 1);

  if (candidates.size() > 1 && candidates.front() == kEmptySlot)
    candidates.erase(candidates.begin());
  if (candidates.size() == 1) return candidates.front();

  int least_avail = available_period_count(tt, candidates.front(), m);
  std::vector<int> narrowed{candidates.front()};
  for (std::size_t i = 1; i < candidates.size(); ++i) {
    const int avail = available_period_count(tt, candidates[i], m);
    if (avail < least_avail) {
      least_avail = avail;
      narrowed.assign(1, candidates[i]);
    } else if (avail == least_avail) {
      narrowed.push_back(candidates[i]);
    }
  }
  if (narrowed.size() == 1) return narrowed.front();

  long long top_degree = m.conflict_degree(narrowed.front());
  std::vector<int> finalists{narrowed.front()};
  for (std::size_t i = 1; i < narrowed.size(); ++i) {
    const long long deg = m.conflict_degree(narrowed[i]);
    if (deg > top_degree) {
      top_degree = deg;
      finalists.assign(1, narrowed[i]);
    } else if (deg == top_degree) {
      finalists.push_back(narrowed[i]);
    }
  }
  if (finalists.size() == 1) return finalists.front();
  return rng.pick(finalists);
}

namespace detail {

inline std::vector<int> occupied_slots(const Timetable& tt, int except = -1) {
  std::vector<int> out;
  for (int s = 0; s < tt.num_slots(); ++s)
    if (s != except && !tt.empty_at(s)) out.push_back(s);
  return out;
}

inline bool pitch_move_timeslot(Timetable& tt, int course, int slot,
                                const Matrices& m, Rng& rng) {
  const Dims d = tt.dims();
  const int room = room_of_slot(slot, d);
  const int period = period_of_slot(slot, d);
  tt.remove(slot);
  std::vector<int> targets;
  for (int p = 0; p < d.periods(); ++p) {
    if (p == period) continue;
    const int cand = room * d.periods() + p;
    if (is_feasible_placement(tt, course, cand, m)) targets.push_back(cand);
  }
  if (targets.empty()) {
    tt.place(course, slot);
    return false;
  }
  tt.place(course, rng.pick(targets));
  return true;
}

inline bool pitch_move_location(Timetable& tt, int course, int slot,
                                const Matrices& m, Rng& rng) {
  tt.remove(slot);
  std::vector<int> targets;
  for (int cand = 0; cand < tt.num_slots(); ++cand) {
    if (cand == slot) continue;
    if (is_feasible_placement(tt, course, cand, m)) targets.push_back(cand);
  }
  if (targets.empty()) {
    tt.place(course, slot);
    return false;
  }
  tt.place(course, rng.pick(targets));
  return true;
}

inline bool pitch_move_room(Timetable& tt, int course, int slot,
                            const Matrices& m, Rng& rng) {
  const Dims d = tt.dims();
  const int room = room_of_slot(slot, d);
  const int period = period_of_slot(slot, d);
  tt.remove(slot);
  std::vector<int> targets;
  for (int r = 0; r < d.rooms; ++r) {
    if (r == room) continue;
    const int cand = r * d.periods() + period;
    if (is_feasible_placement(tt, course, cand, m)) targets.push_back(cand);
  }
  if (targets.empty()) {
    tt.place(course, slot);
    return false;
  }
  tt.place(course, rng.pick(targets));
  return true;
}

// Exchange periods with another event, both rooms kept. Partners are tried
// in shuffled order until one keeps the timetable feasible.
inline bool pitch_swap_timeslot(Timetable& tt, int course, int slot,
                                const Matrices& m, Rng& rng) {
  const Dims d = tt.dims();
  const int r1 = room_of_slot(slot, d);
  const int p1 = period_of_slot(slot, d);
  auto others = occupied_slots(tt, slot);
  rng.shuffle(others);
  for (int s2 : others) {
    const int p2 = period_of_slot(s2, d);
    if (p2 == p1) continue;
    const int c2 = tt.at(s2);
    const int r2 = room_of_slot(s2, d);
    const int t1 = r1 * d.periods() + p2;
    const int t2 = r2 * d.periods() + p1;
    tt.remove(slot);
    tt.remove(s2);
    if (is_feasible_placement(tt, course, t1, m)) {
      tt.place(course, t1);
      if (is_feasible_placement(tt, c2, t2, m)) {
        tt.place(c2, t2);
        return true;
      }
      tt.remove(t1);
    }
    tt.place(course, slot);
    tt.place(c2, s2);
  }
  return false;
}

// Exchange full (period, room) locations with another event.
inline bool pitch_swap_location(Timetable& tt, int course, int slot,
                                const Matrices& m, Rng& rng) {
  auto others = occupied_slots(tt, slot);
  rng.shuffle(others);
  for (int s2 : others) {
    const int c2 = tt.at(s2);
    tt.remove(slot);
    tt.remove(s2);
    if (is_feasible_placement(tt, course, s2, m)) {
      tt.place(course, s2);
      if (is_feasible_placement(tt, c2, slot, m)) {
        tt.place(c2, slot);
        return true;
      }
      tt.remove(s2);
    }
    tt.place(course, slot);
    tt.place(c2, s2);
  }
  return false;
}

// Three-way location rotation among the event and two random partners.
inline bool pitch_exchange_location(Timetable& tt, int course, int slot,
                                    const Matrices& m, Rng& rng) {
  auto others = occupied_slots(tt, slot);
  if (others.size() < 2) return false;
  constexpr int kAttempts = 30;
  for (int attempt = 0; attempt < kAttempts; ++attempt) {
    const int s2 = rng.pick(others);
    const int s3 = rng.pick(others);
    if (s2 == s3) continue;
    const int c2 = tt.at(s2);
    const int c3 = tt.at(s3);
    tt.remove(slot);
    tt.remove(s2);
    tt.remove(s3);
    bool placed1 = false, placed2 = false;
    if (is_feasible_placement(tt, course, s2, m)) {
      tt.place(course, s2);
      placed1 = true;
      if (is_feasible_placement(tt, c2, s3, m)) {
        tt.place(c2, s3);
        placed2 = true;
        if (is_feasible_placement(tt, c3, slot, m)) {
          tt.place(c3, slot);
          return true;
        }
      }
    }
    if (placed2) tt.remove(s3);
    if (placed1) tt.remove(s2);
    tt.place(course, slot);
    tt.place(c2, s2);
    tt.place(c3, s3);
  }
  return false;
}

// Swap the entire event sets of the event's period and another period,
// rooms unchanged. Room occupancy and within-period conflicts move
// wholesale, so only availability needs checking.
inline bool pitch_swap_distinct_timeslots(Timetable& tt, int slot,
                                          const Matrices& m, Rng& rng) {
  const Dims d = tt.dims();
  const int p1 = period_of_slot(slot, d);
  std::vector<int> candidates;
  for (int p2 = 0; p2 < d.periods(); ++p2) {
    if (p2 == p1) continue;
    bool ok = true;
    for (int r = 0; r < d.rooms && ok; ++r) {
      const int a = tt.at(r * d.periods() + p1);
      const int b = tt.at(r * d.periods() + p2);
      if (a != kEmptySlot && m.unavailable(a, p2)) ok = false;
      if (b != kEmptySlot && m.unavailable(b, p1)) ok = false;
    }
    if (ok) candidates.push_back(p2);
  }
  if (candidates.empty()) return false;
  const int p2 = rng.pick(candidates);
  for (int r = 0; r < d.rooms; ++r) {
    const int s1 = r * d.periods() + p1;
    const int s2 = r * d.periods() + p2;
    const int a = tt.at(s1);
    const int b = tt.at(s2);
    if (a != kEmptySlot) tt.remove(s1);
    if (b != kEmptySlot) tt.remove(s2);
    if (a != kEmptySlot) tt.place(a, s2);
    if (b != kEmptySlot) tt.place(b, s1);
  }
  return true;
}

// Swap rooms with another event in the same period.
inline bool pitch_swap_room(Timetable& tt, int course, int slot,
                            const Matrices& m, Rng& rng) {
  const Dims d = tt.dims();
  const int r1 = room_of_slot(slot, d);
  const int period = period_of_slot(slot, d);
  std::vector<int> candidates;
  for (int r2 = 0; r2 < d.rooms; ++r2) {
    if (r2 == r1) continue;
    const int s2 = r2 * d.periods() + period;
    const int c2 = tt.at(s2);
    if (c2 == kEmptySlot) continue;
    if (m.room_compatible(course, r2) && m.room_compatible(c2, r1))
      candidates.push_back(s2);
  }
  if (candidates.empty()) return false;
  const int s2 = rng.pick(candidates);
  const int c2 = tt.remove(s2);
  tt.remove(slot);
  tt.place(course, s2);
  tt.place(c2, slot);
  return true;
}

}  // namespace detail

// Attempts exactly one pitch procedure on the event at `slot`. The move is
// applied only when the result stays hard-feasible; otherwise the timetable
// is left untouched. Returns whether anything moved.
inline bool apply_pitch(Timetable& tt, int course, int slot,
                        PitchProcedure proc, const Matrices& m, Rng& rng) {
  if (tt.at(slot) != course)
    throw std::logic_error("apply_pitch: course " + std::to_string(course) +
                           " is not at slot " + std::to_string(slot));
  switch (proc) {
    case PitchProcedure::MoveTimeslot:
      return detail::pitch_move_timeslot(tt, course, slot, m, rng);
    case PitchProcedure::SwapTimeslot:
      return detail::pitch_swap_timeslot(tt, course, slot, m, rng);
    case PitchProcedure::MoveLocation:
      return detail::pitch_move_location(tt, course, slot, m, rng);
    case PitchProcedure::SwapLocation:
      return detail::pitch_swap_location(tt, course, slot, m, rng);
    case PitchProcedure::ExchangeLocation:
      return detail::pitch_exchange_location(tt, course, slot, m, rng);
    case PitchProcedure::SwapDistinctTimeslots:
      return detail::pitch_swap_distinct_timeslots(tt, slot, m, rng);
    case PitchProcedure::MoveRoom:
      return detail::pitch_move_room(tt, course, slot, m, rng);
    case PitchProcedure::SwapRoom:
      return detail::pitch_swap_room(tt, course, slot, m, rng);
    case PitchProcedure::DoNothing:
      return false;
  }
  return false;
}

// Placing `course` at this occupied slot would be feasible once the
// current holder is evicted.
inline bool feasible_if_evicted(const Timetable& tt, int course, int slot,
                                const Matrices& m) {
  if (!m.available(course, slot)) return false;
  const Dims d = tt.dims();
  const int period = period_of_slot(slot, d);
  for (int r = 0; r < d.rooms; ++r) {
    const int s = r * d.periods() + period;
    if (s == slot) continue;
    const int o = tt.at(s);
    if (o == kEmptySlot) continue;
    if (o == course || m.conflict_at(course, o) > 0) return false;
  }
  return true;
}

// One-level backtracking: place each leftover lecture either directly into
// a free feasible slot or by evicting the holder of one, the evictee
// joining the unscheduled pool. Gives up after `cap` iterations.
inline bool repair(Timetable& tt, std::vector<int>& unscheduled,
                   const Matrices& m, int cap, Rng& rng) {
  for (int iter = 0; iter < cap && !unscheduled.empty(); ++iter) {
    const int pick = rng.below(static_cast<int>(unscheduled.size()));
    const int course = unscheduled[static_cast<std::size_t>(pick)];

    auto free_slots = feasible_slots(tt, course, m);
    if (!free_slots.empty()) {
      tt.place(course, rng.pick(free_slots));
      unscheduled.erase(unscheduled.begin() + pick);
      continue;
    }

    std::vector<int> evictable;
    for (int slot = 0; slot < tt.num_slots(); ++slot) {
      if (tt.empty_at(slot) || tt.at(slot) == course) continue;
      if (feasible_if_evicted(tt, course, slot, m)) evictable.push_back(slot);
    }
    if (evictable.empty()) continue;  // stuck this round, burn an iteration

    const int slot = rng.pick(evictable);
    const int evicted = tt.remove(slot);
    tt.place(course, slot);
    unscheduled[static_cast<std::size_t>(pick)] = evicted;
  }
  return unscheduled.empty();
}

// One improvisation: memory consideration slot by slot, random
// consideration for the remaining lectures, a pitch-adjustment pass over
// the scheduled events, then repair. Returns nothing when repair runs out
// of budget; the caller discards the attempt and tries again.
inline std::optional<Timetable> improvise(const HarmonyMemory& hm,
                                          const Instance& inst,
                                          const Matrices& m,
                                          const HsaParams& params, Rng& rng) {
  if (hm.empty())
    throw std::invalid_argument("improvise: harmony memory not filled");
  Timetable tt(inst);
  std::vector<int> remaining(static_cast<std::size_t>(inst.num_courses()));
  for (int c = 0; c < inst.num_courses(); ++c)
    remaining[static_cast<std::size_t>(c)] =
        inst.courses[static_cast<std::size_t>(c)].lectures;

  for (int slot = 0; slot < tt.num_slots(); ++slot) {
    if (rng.uniform() > params.hmcr) continue;  // left for random consideration
    const int v = memory_consideration(hm, slot, tt, m, rng);
    if (v == kEmptySlot) continue;
    if (remaining[static_cast<std::size_t>(v)] > 0 &&
        is_feasible_placement(tt, v, slot, m)) {
      tt.place(v, slot);
      --remaining[static_cast<std::size_t>(v)];
    }
  }

  std::vector<CourseState> states;
  states.reserve(static_cast<std::size_t>(inst.num_courses()));
  int left = 0;
  for (int c = 0; c < inst.num_courses(); ++c) {
    states.push_back({c, remaining[static_cast<std::size_t>(c)], 0,
                      m.conflict_degree(c)});
    left += remaining[static_cast<std::size_t>(c)];
  }
  std::vector<int> unscheduled;
  while (left > 0) {
    for (auto& s : states) {
      if (s.unscheduled_lectures > 0)
        s.available_period_count = available_period_count(tt, s.course, m);
    }
    const int course = next_course(states, rng);
    auto slots = feasible_slots(tt, course, m);
    if (slots.empty()) {
      unscheduled.push_back(course);  // repair will deal with it
    } else {
      tt.place(course, rng.pick(slots));
    }
    --states[static_cast<std::size_t>(course)].unscheduled_lectures;
    --left;
  }

  // One adjustment opportunity per slot that was occupied when the pass
  // began, in slot order; events moved by earlier adjustments are not
  // chased.
  for (int slot : detail::occupied_slots(tt)) {
    const int course = tt.at(slot);
    if (course == kEmptySlot) continue;
    const auto proc = select_pitch_procedure(rng.uniform(), params.par);
    apply_pitch(tt, course, slot, proc, m, rng);
  }

  if (!unscheduled.empty() &&
      !repair(tt, unscheduled, m, params.effective_repair_cap(inst), rng))
    return std::nullopt;
  return tt;
}

struct IterationRecord {
  int iteration = 0;
  int best_total = 0;
  int worst_total = 0;
  int restarts = 0;

  bool operator==(const IterationRecord&) const = default;
};

struct RunHooks {
  // Called with every timetable admitted to the harmony memory, initial
  // fill included.
  std::function<void(const Timetable&)> on_admit;
};

struct RunResult {
  HarmonyMemory memory;
  std::vector<IterationRecord> trace;

  const HarmonyMember& best() const { return memory.best(); }
};

inline std::string trace_csv(const std::vector<IterationRecord>& trace) {
  std::ostringstream out;
  out << "iteration,best_total,worst_total,restarts\n";
  for (const auto& r : trace)
    out << r.iteration << "," << r.best_total << "," << r.worst_total << ","
        << r.restarts << "\n";
  return out.str();
}

// The full search: fill the memory, then mi improvisation/update rounds.
// Deterministic for a fixed (instance, params) pair.
inline RunResult run(const Instance& inst, const HsaParams& params,
                     const SoftWeights& weights = {},
                     const RunHooks& hooks = {}) {
  params.validate();
  const Matrices m = build_matrices(inst);
  Rng rng(params.seed);

  HarmonyMemory hm = fill_memory(inst, m, params, rng, weights);
  if (hooks.on_admit)
    for (const auto& member : hm.members()) hooks.on_admit(member.timetable);

  std::vector<IterationRecord> trace;
  trace.push_back({0, hm.best().penalty.total, hm.worst().penalty.total, 0});

  for (int iter = 1; iter <= params.mi; ++iter) {
    int restarts = 0;
    std::optional<Timetable> cand;
    while (!(cand = improvise(hm, inst, m, params, rng))) {
      if (++restarts > params.restart_limit) {
        std::ostringstream msg;
        msg << "iteration " << iter << " on '" << inst.name
            << "': improvisation discarded " << restarts
            << " times in a row (repair budget "
            << params.effective_repair_cap(inst)
            << " exhausted); raise repair_cap or restart_limit";
        throw std::runtime_error(msg.str());
      }
    }
    const auto penalty = total_cost(*cand, inst, m, weights);
    const bool admit =
        !hm.at_capacity() || penalty.total < hm.worst().penalty.total;
    if (admit && hooks.on_admit) hooks.on_admit(*cand);
    update_memory(hm, {std::move(*cand), penalty});
    trace.push_back(
        {iter, hm.best().penalty.total, hm.worst().penalty.total, restarts});
  }
  return {std::move(hm), std::move(trace)};
}

}  // namespace cbctt

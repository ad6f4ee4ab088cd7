#pragma once

#include <algorithm>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "cbctt/instance.hpp"
#include "cbctt/matrices.hpp"

namespace cbctt {

struct Location {
  int room = 0;
  int day = 0;
  int period = 0;  // period within the day

  bool operator==(const Location&) const = default;
};

// Room-major flat encoding: the first room's slots enumerate all D*P
// timeslots in day order, then the second room's, and so on.
inline int slot_index(const Location& loc, const Dims& dims) {
  if (loc.room < 0 || loc.room >= dims.rooms || loc.day < 0 ||
      loc.day >= dims.days || loc.period < 0 ||
      loc.period >= dims.periods_per_day) {
    std::ostringstream msg;
    msg << "location (room " << loc.room << ", day " << loc.day << ", period "
        << loc.period << ") out of bounds for " << dims.rooms << "x"
        << dims.days << "x" << dims.periods_per_day;
    throw std::out_of_range(msg.str());
  }
  return loc.room * dims.periods() + loc.day * dims.periods_per_day +
         loc.period;
}

inline Location location_of(int slot, const Dims& dims) {
  if (slot < 0 || slot >= dims.slots())
    throw std::out_of_range("slot index " + std::to_string(slot) +
                            " out of bounds");
  const int within = slot % dims.periods();
  return Location{slot / dims.periods(), within / dims.periods_per_day,
                  within % dims.periods_per_day};
}

// Composite period index (day * P + period) of a flat slot.
inline int period_of_slot(int slot, const Dims& dims) {
  return slot % dims.periods();
}

inline int room_of_slot(int slot, const Dims& dims) {
  return slot / dims.periods();
}

enum class HardConstraint { Lectures, RoomOccupancy, Conflicts, Availability };

inline const char* name_of(HardConstraint h) {
  switch (h) {
    case HardConstraint::Lectures: return "H1-Lectures";
    case HardConstraint::RoomOccupancy: return "H2-RoomOccupancy";
    case HardConstraint::Conflicts: return "H3-Conflicts";
    case HardConstraint::Availability: return "H4-Availability";
  }
  return "?";
}

struct Violation {
  HardConstraint constraint;
  std::vector<int> courses;
  std::string description;
};

// One candidate solution: a flat slot vector over (room, day, period) with
// -1 marking an empty slot, plus per-course occupied-slot indices and
// per-period occupancy counters that keep feasibility queries O(1).
class Timetable {
 public:
  explicit Timetable(const Instance& inst)
      : inst_(&inst),
        slots_(static_cast<std::size_t>(inst.num_slots()), kEmptySlot),
        by_course_(static_cast<std::size_t>(inst.num_courses())),
        course_period_(static_cast<std::size_t>(inst.num_courses()) *
                           static_cast<std::size_t>(inst.periods()),
                       0),
        curriculum_period_(static_cast<std::size_t>(inst.num_curricula()) *
                               static_cast<std::size_t>(inst.periods()),
                           0),
        teacher_period_(static_cast<std::size_t>(inst.teacher_count) *
                            static_cast<std::size_t>(inst.periods()),
                        0),
        period_rooms_used_(static_cast<std::size_t>(inst.periods()), 0) {}

  const Instance& instance() const { return *inst_; }
  Dims dims() const { return inst_->dims(); }
  int num_slots() const { return static_cast<int>(slots_.size()); }

  int at(int slot) const { return slots_[static_cast<std::size_t>(slot)]; }
  bool empty_at(int slot) const { return at(slot) == kEmptySlot; }
  const std::vector<int>& slots() const { return slots_; }

  // Occupied flat indices of a course, ascending.
  const std::vector<int>& course_slots(int course) const {
    return by_course_[static_cast<std::size_t>(course)];
  }

  int scheduled_count() const { return scheduled_; }
  bool complete() const { return scheduled_ == inst_->total_lectures; }

  bool course_in_period(int course, int period) const {
    return course_period_[idx(course, period)] != 0;
  }

  int rooms_used_in_period(int period) const {
    return period_rooms_used_[static_cast<std::size_t>(period)];
  }

  // True iff no already-placed lecture conflicts (shared curriculum or
  // teacher) with `course` at that period. The course's own lectures are
  // not covered here; check course_in_period separately.
  bool conflict_free(int course, int period) const {
    const auto& cq = inst_->curricula_of_course[static_cast<std::size_t>(course)];
    for (int q : cq) {
      if (curriculum_period_[idx_q(q, period)] != 0) return false;
    }
    const int t = inst_->courses[static_cast<std::size_t>(course)].teacher_id;
    return teacher_period_[idx_t(t, period)] == 0;
  }

  void place(int course, int slot) {
    auto& cell = slots_[static_cast<std::size_t>(slot)];
    if (cell != kEmptySlot)
      throw std::logic_error("place: slot " + std::to_string(slot) +
                             " already occupied by course " +
                             std::to_string(cell));
    cell = course;
    auto& occ = by_course_[static_cast<std::size_t>(course)];
    occ.insert(std::lower_bound(occ.begin(), occ.end(), slot), slot);
    bump(course, period_of_slot(slot, dims()), +1);
    ++scheduled_;
  }

  int remove(int slot) {
    auto& cell = slots_[static_cast<std::size_t>(slot)];
    if (cell == kEmptySlot)
      throw std::logic_error("remove: slot " + std::to_string(slot) +
                             " is empty");
    const int course = cell;
    cell = kEmptySlot;
    auto& occ = by_course_[static_cast<std::size_t>(course)];
    occ.erase(std::lower_bound(occ.begin(), occ.end(), slot));
    bump(course, period_of_slot(slot, dims()), -1);
    --scheduled_;
    return course;
  }

  bool operator==(const Timetable& other) const {
    return slots_ == other.slots_;
  }

 private:
  std::size_t idx(int course, int period) const {
    return static_cast<std::size_t>(course) *
               static_cast<std::size_t>(inst_->periods()) +
           static_cast<std::size_t>(period);
  }
  std::size_t idx_q(int curriculum, int period) const {
    return static_cast<std::size_t>(curriculum) *
               static_cast<std::size_t>(inst_->periods()) +
           static_cast<std::size_t>(period);
  }
  std::size_t idx_t(int teacher, int period) const {
    return static_cast<std::size_t>(teacher) *
               static_cast<std::size_t>(inst_->periods()) +
           static_cast<std::size_t>(period);
  }

  void bump(int course, int period, int delta) {
    course_period_[idx(course, period)] += delta;
    for (int q : inst_->curricula_of_course[static_cast<std::size_t>(course)])
      curriculum_period_[idx_q(q, period)] += delta;
    const int t = inst_->courses[static_cast<std::size_t>(course)].teacher_id;
    teacher_period_[idx_t(t, period)] += delta;
    period_rooms_used_[static_cast<std::size_t>(period)] += delta;
  }

  const Instance* inst_;
  std::vector<int> slots_;
  std::vector<std::vector<int>> by_course_;
  std::vector<int> course_period_;
  std::vector<int> curriculum_period_;
  std::vector<int> teacher_period_;
  std::vector<int> period_rooms_used_;
  int scheduled_ = 0;
};

// H2 + H3 + H4 check for putting `course` into the given slot, plus the
// distinct-period clause of H1 (the course may not already sit in the
// period, in any room).
inline bool is_feasible_placement(const Timetable& tt, int course, int slot,
                                  const Matrices& m) {
  if (!tt.empty_at(slot)) return false;
  if (!m.available(course, slot)) return false;
  const int period = period_of_slot(slot, tt.dims());
  if (tt.course_in_period(course, period)) return false;
  return tt.conflict_free(course, period);
}

inline bool is_feasible_placement(const Timetable& tt, int course,
                                  const Location& loc, const Matrices& m) {
  return is_feasible_placement(tt, course, slot_index(loc, tt.dims()), m);
}

// True iff the course could take some room at this period: the period is
// not blacked out, the course is absent from it, no conflicting course
// occupies it, and a compatible empty room exists.
inline bool period_open(const Timetable& tt, int course, int period,
                        const Matrices& m) {
  if (m.unavailable(course, period)) return false;
  if (tt.course_in_period(course, period)) return false;
  if (!tt.conflict_free(course, period)) return false;
  const Dims d = tt.dims();
  if (tt.rooms_used_in_period(period) >= d.rooms) return false;
  for (int r = 0; r < d.rooms; ++r) {
    const int slot = r * d.periods() + period;
    if (tt.empty_at(slot) && m.room_compatible(course, r)) return true;
  }
  return false;
}

// Saturation degree: number of periods currently open for the course.
inline int available_period_count(const Timetable& tt, int course,
                                  const Matrices& m) {
  int count = 0;
  for (int p = 0; p < tt.dims().periods(); ++p)
    if (period_open(tt, course, p, m)) ++count;
  return count;
}

// Full rescan of H1-H4. Works on partial timetables: missing lectures are
// reported as H1 violations, so the list is empty only for a complete
// feasible solution. Independent of the incremental counters by design.
inline std::vector<Violation> validate_hard(const Timetable& tt,
                                            const Instance& inst,
                                            const Matrices& m) {
  std::vector<Violation> out;
  const Dims d = inst.dims();

  for (int c = 0; c < inst.num_courses(); ++c) {
    const int want = inst.courses[static_cast<std::size_t>(c)].lectures;
    const int got = static_cast<int>(tt.course_slots(c).size());
    if (got != want) {
      std::ostringstream msg;
      msg << name_of(HardConstraint::Lectures) << ": course "
          << inst.courses[static_cast<std::size_t>(c)].name << " has " << got
          << " of " << want << " lectures scheduled";
      out.push_back({HardConstraint::Lectures, {c}, msg.str()});
    }
  }

  for (int p = 0; p < d.periods(); ++p) {
    std::vector<int> here;
    for (int r = 0; r < d.rooms; ++r) {
      const int c = tt.at(r * d.periods() + p);
      if (c != kEmptySlot) here.push_back(c);
    }
    for (std::size_t i = 0; i < here.size(); ++i) {
      for (std::size_t j = i + 1; j < here.size(); ++j) {
        const int a = here[i];
        const int b = here[j];
        if (a == b) {
          std::ostringstream msg;
          msg << name_of(HardConstraint::Lectures) << ": course "
              << inst.courses[static_cast<std::size_t>(a)].name
              << " scheduled twice in period " << p;
          out.push_back({HardConstraint::Lectures, {a}, msg.str()});
        } else if (m.conflict_at(a, b) > 0) {
          std::ostringstream msg;
          msg << name_of(HardConstraint::Conflicts) << ": courses "
              << inst.courses[static_cast<std::size_t>(a)].name << " and "
              << inst.courses[static_cast<std::size_t>(b)].name
              << " share period " << p;
          out.push_back({HardConstraint::Conflicts, {a, b}, msg.str()});
        }
      }
    }
  }

  for (int slot = 0; slot < tt.num_slots(); ++slot) {
    const int c = tt.at(slot);
    if (c == kEmptySlot) continue;
    const int p = period_of_slot(slot, d);
    if (m.unavailable(c, p)) {
      std::ostringstream msg;
      msg << name_of(HardConstraint::Availability) << ": course "
          << inst.courses[static_cast<std::size_t>(c)].name
          << " placed at unavailable period " << p;
      out.push_back({HardConstraint::Availability, {c}, msg.str()});
    }
    if (!m.room_compatible(c, room_of_slot(slot, d))) {
      std::ostringstream msg;
      msg << name_of(HardConstraint::RoomOccupancy) << ": course "
          << inst.courses[static_cast<std::size_t>(c)].name
          << " placed in incompatible room " << room_of_slot(slot, d);
      out.push_back({HardConstraint::RoomOccupancy, {c}, msg.str()});
    }
  }

  return out;
}

}  // namespace cbctt

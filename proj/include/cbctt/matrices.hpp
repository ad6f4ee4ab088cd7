#pragma once

#include <cstdint>
#include <vector>

#include "cbctt/instance.hpp"

namespace cbctt {

// Precomputed lookup tables consulted by every later phase. All are flat
// row-major arrays indexed with dense ids.
struct Matrices {
  int num_courses = 0;
  int periods = 0;
  int num_rooms = 0;

  // conflict[a*C+b] counts shared curricula, plus 1 when a and b share a
  // teacher. Symmetric, zero diagonal; downstream only the zero/nonzero
  // distinction matters, the magnitude feeds the construction ordering.
  std::vector<int> conflict;

  // 1 iff the course cannot be scheduled at that period.
  std::vector<std::uint8_t> course_period_unavail;

  // 1 iff the course may use the room. The instance format carries no
  // equipment data, so this is all ones; kept so the availability table
  // below has its full definition.
  std::vector<std::uint8_t> course_room_compat;

  // 1 iff the course may occupy the flat slot (room compatible and period
  // available). Indexed [course][slot] with the room-major slot encoding.
  std::vector<std::uint8_t> course_period_room_avail;

  int num_slots() const { return periods * num_rooms; }

  int conflict_at(int a, int b) const {
    return conflict[static_cast<std::size_t>(a) *
                        static_cast<std::size_t>(num_courses) +
                    static_cast<std::size_t>(b)];
  }

  bool unavailable(int course, int period) const {
    return course_period_unavail[static_cast<std::size_t>(course) *
                                     static_cast<std::size_t>(periods) +
                                 static_cast<std::size_t>(period)] != 0;
  }

  bool room_compatible(int course, int room) const {
    return course_room_compat[static_cast<std::size_t>(course) *
                                  static_cast<std::size_t>(num_rooms) +
                              static_cast<std::size_t>(room)] != 0;
  }

  bool available(int course, int slot) const {
    return course_period_room_avail[static_cast<std::size_t>(course) *
                                        static_cast<std::size_t>(num_slots()) +
                                    static_cast<std::size_t>(slot)] != 0;
  }

  // Weighted conflict degree of a course: row sum of the conflict matrix.
  long long conflict_degree(int course) const {
    long long sum = 0;
    const std::size_t base = static_cast<std::size_t>(course) *
                             static_cast<std::size_t>(num_courses);
    for (int b = 0; b < num_courses; ++b) sum += conflict[base + static_cast<std::size_t>(b)];
    return sum;
  }
};

inline Matrices build_matrices(const Instance& inst) {
  Matrices m;
  m.num_courses = inst.num_courses();
  m.periods = inst.periods();
  m.num_rooms = inst.num_rooms();
  const std::size_t C = static_cast<std::size_t>(m.num_courses);
  const std::size_t P = static_cast<std::size_t>(m.periods);
  const std::size_t R = static_cast<std::size_t>(m.num_rooms);

  m.conflict.assign(C * C, 0);
  for (const auto& q : inst.curricula) {
    for (std::size_t i = 0; i < q.courses.size(); ++i) {
      for (std::size_t j = i + 1; j < q.courses.size(); ++j) {
        const auto a = static_cast<std::size_t>(q.courses[i]);
        const auto b = static_cast<std::size_t>(q.courses[j]);
        ++m.conflict[a * C + b];
        ++m.conflict[b * C + a];
      }
    }
  }
  for (std::size_t a = 0; a < C; ++a) {
    for (std::size_t b = a + 1; b < C; ++b) {
      if (inst.courses[a].teacher_id == inst.courses[b].teacher_id) {
        ++m.conflict[a * C + b];
        ++m.conflict[b * C + a];
      }
    }
  }

  m.course_period_unavail.assign(C * P, 0);
  for (const auto& u : inst.unavailabilities) {
    const int period = u.day * inst.periods_per_day + u.period;
    m.course_period_unavail[static_cast<std::size_t>(u.course) * P +
                            static_cast<std::size_t>(period)] = 1;
  }

  m.course_room_compat.assign(C * R, 1);

  m.course_period_room_avail.assign(C * P * R, 0);
  for (std::size_t c = 0; c < C; ++c) {
    for (std::size_t r = 0; r < R; ++r) {
      if (!m.course_room_compat[c * R + r]) continue;
      for (std::size_t p = 0; p < P; ++p) {
        if (m.course_period_unavail[c * P + p]) continue;
        m.course_period_room_avail[c * (P * R) + r * P + p] = 1;
      }
    }
  }
  return m;
}

}  // namespace cbctt

#pragma once

#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "cbctt/instance.hpp"
#include "cbctt/timetable.hpp"

namespace cbctt {

struct SolutionEntry {
  int course = 0;
  int room = 0;
  int day = 0;
  int period = 0;

  bool operator==(const SolutionEntry&) const = default;
};

// One line per lecture: "<CourseName> <RoomName> <Day> <Period>", courses in
// instance order, each course's lectures in slot order.
inline std::string write_solution(const Timetable& tt, const Instance& inst) {
  std::ostringstream out;
  for (int c = 0; c < inst.num_courses(); ++c) {
    for (int slot : tt.course_slots(c)) {
      const Location loc = location_of(slot, tt.dims());
      out << inst.courses[static_cast<std::size_t>(c)].name << ' '
          << inst.rooms[static_cast<std::size_t>(loc.room)].name << ' '
          << loc.day << ' ' << loc.period << '\n';
    }
  }
  return out.str();
}

inline std::vector<SolutionEntry> read_solution(const std::string& text,
                                                const Instance& inst) {
  std::map<std::string, int> course_ids;
  for (int c = 0; c < inst.num_courses(); ++c)
    course_ids[inst.courses[static_cast<std::size_t>(c)].name] = c;
  std::map<std::string, int> room_ids;
  for (int r = 0; r < static_cast<int>(inst.rooms.size()); ++r)
    room_ids[inst.rooms[static_cast<std::size_t>(r)].name] = r;

  std::vector<SolutionEntry> entries;
  std::istringstream in(text);
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::istringstream fields(line);
    std::string course_name, room_name;
    int day = 0, period = 0;
    if (!(fields >> course_name)) continue;  // blank line
    if (!(fields >> room_name >> day >> period))
      throw ParseError(line_no, "expected '<course> <room> <day> <period>'");
    std::string extra;
    if (fields >> extra)
      throw ParseError(line_no, "trailing token '" + extra + "'");
    const auto c = course_ids.find(course_name);
    if (c == course_ids.end())
      throw ParseError(line_no, "unknown course '" + course_name + "'");
    const auto r = room_ids.find(room_name);
    if (r == room_ids.end())
      throw ParseError(line_no, "unknown room '" + room_name + "'");
    if (day < 0 || day >= inst.dims().days)
      throw ParseError(line_no, "day " + std::to_string(day) + " out of range");
    if (period < 0 || period >= inst.dims().periods_per_day)
      throw ParseError(line_no,
                       "period " + std::to_string(period) + " out of range");
    entries.push_back({c->second, r->second, day, period});
  }
  return entries;
}

// Full hard-constraint audit of a raw assignment list. Room double-bookings
// are reported here (a slot-indexed timetable cannot hold both occupants);
// every other check is delegated to the timetable rescan, built from the
// first claimant of each contested slot.
inline std::vector<Violation> validate_entries(
    const std::vector<SolutionEntry>& entries, const Instance& inst,
    const Matrices& m) {
  std::vector<Violation> violations;
  Timetable tt(inst);
  for (const auto& e : entries) {
    const int slot = slot_index({e.room, e.day, e.period}, inst.dims());
    const int holder = tt.at(slot);
    if (holder != kEmptySlot) {
      std::ostringstream what;
      what << "room " << inst.rooms[static_cast<std::size_t>(e.room)].name
           << " hosts both "
           << inst.courses[static_cast<std::size_t>(holder)].name << " and "
           << inst.courses[static_cast<std::size_t>(e.course)].name
           << " on day " << e.day << " period " << e.period;
      violations.push_back(
          {HardConstraint::RoomOccupancy, {holder, e.course}, what.str()});
      continue;
    }
    tt.place(e.course, slot);
  }
  auto rest = validate_hard(tt, inst, m);
  violations.insert(violations.end(), rest.begin(), rest.end());
  return violations;
}

// Strict conversion: throws when any slot is claimed twice.
inline Timetable timetable_from_entries(const std::vector<SolutionEntry>& entries,
                                        const Instance& inst) {
  Timetable tt(inst);
  for (const auto& e : entries)
    tt.place(e.course, slot_index({e.room, e.day, e.period}, inst.dims()));
  return tt;
}

}  // namespace cbctt

#pragma once

#include <map>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace cbctt {

constexpr int kEmptySlot = -1;

struct Course {
  std::string name;
  std::string teacher;
  int lectures = 0;
  int min_working_days = 0;
  int students = 0;
  int teacher_id = -1;  // dense, assigned by Instance::finalize
};

struct Room {
  std::string name;
  int capacity = 0;
};

struct Curriculum {
  std::string name;
  std::vector<int> courses;  // dense course ids, no duplicates
};

struct Unavailability {
  int course = 0;
  int day = 0;
  int period = 0;
};

struct Dims {
  int days = 0;
  int periods_per_day = 0;
  int rooms = 0;

  int periods() const { return days * periods_per_day; }
  int slots() const { return days * periods_per_day * rooms; }
};

class ParseError : public std::runtime_error {
 public:
  ParseError(int line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what),
        line_(line) {}

  int line() const { return line_; }

 private:
  int line_;
};

struct Instance {
  std::string name;
  std::vector<Course> courses;
  std::vector<Room> rooms;
  std::vector<Curriculum> curricula;
  std::vector<Unavailability> unavailabilities;
  int days = 0;
  int periods_per_day = 0;

  // Derived by finalize().
  int teacher_count = 0;
  int total_lectures = 0;
  std::vector<std::vector<int>> curricula_of_course;

  int num_courses() const { return static_cast<int>(courses.size()); }
  int num_rooms() const { return static_cast<int>(rooms.size()); }
  int num_curricula() const { return static_cast<int>(curricula.size()); }
  int periods() const { return days * periods_per_day; }
  int num_slots() const { return periods() * num_rooms(); }
  Dims dims() const { return Dims{days, periods_per_day, num_rooms()}; }

  // Assigns dense teacher ids, tallies lectures, and indexes curriculum
  // membership per course. Must be called once the raw fields are set;
  // parse_instance does this automatically.
  void finalize() {
    std::map<std::string, int> teacher_ids;
    total_lectures = 0;
    for (auto& c : courses) {
      auto [it, inserted] =
          teacher_ids.emplace(c.teacher, static_cast<int>(teacher_ids.size()));
      c.teacher_id = it->second;
      total_lectures += c.lectures;
    }
    teacher_count = static_cast<int>(teacher_ids.size());
    curricula_of_course.assign(courses.size(), {});
    for (int q = 0; q < num_curricula(); ++q) {
      for (int c : curricula[q].courses) {
        curricula_of_course[static_cast<std::size_t>(c)].push_back(q);
      }
    }
  }
};

namespace detail {

inline std::vector<std::string> tokens_of(const std::string& line) {
  std::istringstream in(line);
  std::vector<std::string> out;
  std::string tok;
  while (in >> tok) out.push_back(tok);
  return out;
}

// Reads lines, skipping blank ones, and tracks the current line number.
class LineReader {
 public:
  explicit LineReader(const std::string& text) : in_(text) {}

  // Next non-blank line as tokens; false at end of input.
  bool next(std::vector<std::string>& toks) {
    std::string line;
    while (std::getline(in_, line)) {
      ++line_no_;
      toks = tokens_of(line);
      if (!toks.empty()) return true;
    }
    return false;
  }

  int line_no() const { return line_no_; }

 private:
  std::istringstream in_;
  int line_no_ = 0;
};

inline int parse_count(const std::string& tok, int line, const char* what) {
  std::size_t pos = 0;
  int value = 0;
  try {
    value = std::stoi(tok, &pos);
  } catch (const std::exception&) {
    throw ParseError(line, std::string("expected integer for ") + what +
                               ", got '" + tok + "'");
  }
  if (pos != tok.size())
    throw ParseError(line, std::string("trailing characters in ") + what +
                               " '" + tok + "'");
  return value;
}

inline int header_count(LineReader& rd, const std::string& key) {
  std::vector<std::string> toks;
  if (!rd.next(toks))
    throw ParseError(rd.line_no(), "truncated header, expected '" + key + "'");
  if (toks.size() != 2 || toks[0] != key)
    throw ParseError(rd.line_no(), "malformed header, expected '" + key +
                                       " <value>'");
  return parse_count(toks[1], rd.line_no(), key.c_str());
}

}  // namespace detail

// Parses the ITC-2007 track-3 plain-text instance format: a fixed header,
// then the COURSES / ROOMS / CURRICULA / UNAVAILABILITY_CONSTRAINTS sections,
// terminated by END. Names become dense 0-based ids in file order.
inline Instance parse_instance(const std::string& text) {
  detail::LineReader rd(text);
  std::vector<std::string> toks;

  Instance inst;
  if (!rd.next(toks))
    throw ParseError(rd.line_no(), "truncated header, expected 'Name:'");
  if (toks.size() != 2 || toks[0] != "Name:")
    throw ParseError(rd.line_no(), "malformed header, expected 'Name: <name>'");
  inst.name = toks[1];

  const int course_count = detail::header_count(rd, "Courses:");
  const int room_count = detail::header_count(rd, "Rooms:");
  inst.days = detail::header_count(rd, "Days:");
  inst.periods_per_day = detail::header_count(rd, "Periods_per_day:");
  const int curriculum_count = detail::header_count(rd, "Curricula:");
  const int constraint_count = detail::header_count(rd, "Constraints:");
  const int header_line = rd.line_no();

  if (course_count < 1)
    throw ParseError(header_line, "instance must declare at least one course");
  if (room_count < 1)
    throw ParseError(header_line, "instance must declare at least one room");
  if (inst.days < 1 || inst.periods_per_day < 1)
    throw ParseError(header_line, "Days and Periods_per_day must be >= 1");
  if (curriculum_count < 0 || constraint_count < 0)
    throw ParseError(header_line, "negative count in header");

  auto expect_section = [&](const char* tag) {
    if (!rd.next(toks))
      throw ParseError(rd.line_no(),
                       std::string("truncated file, expected section ") + tag);
    if (toks.size() != 1 || toks[0] != tag)
      throw ParseError(rd.line_no(), std::string("expected section ") + tag +
                                         ", got '" + toks[0] + "'");
  };

  std::map<std::string, int> course_ids;

  expect_section("COURSES:");
  for (int i = 0; i < course_count; ++i) {
    if (!rd.next(toks))
      throw ParseError(rd.line_no(), "truncated file inside COURSES");
    if (toks.size() != 5)
      throw ParseError(rd.line_no(),
                       "course line needs 5 fields "
                       "(name teacher lectures min_days students)");
    Course c;
    c.name = toks[0];
    c.teacher = toks[1];
    c.lectures = detail::parse_count(toks[2], rd.line_no(), "lectures");
    c.min_working_days = detail::parse_count(toks[3], rd.line_no(), "min_days");
    c.students = detail::parse_count(toks[4], rd.line_no(), "students");
    if (c.lectures < 1)
      throw ParseError(rd.line_no(), "course '" + c.name +
                                         "' must have at least one lecture");
    if (c.min_working_days < 1 || c.min_working_days > inst.days)
      throw ParseError(rd.line_no(), "course '" + c.name +
                                         "' min working days out of range");
    if (c.students < 0)
      throw ParseError(rd.line_no(), "negative student count");
    if (!course_ids.emplace(c.name, i).second)
      throw ParseError(rd.line_no(), "duplicate course name '" + c.name + "'");
    inst.courses.push_back(std::move(c));
  }

  expect_section("ROOMS:");
  for (int i = 0; i < room_count; ++i) {
    if (!rd.next(toks))
      throw ParseError(rd.line_no(), "truncated file inside ROOMS");
    if (toks.size() != 2)
      throw ParseError(rd.line_no(), "room line needs 2 fields (name capacity)");
    Room r;
    r.name = toks[0];
    r.capacity = detail::parse_count(toks[1], rd.line_no(), "capacity");
    if (r.capacity < 0)
      throw ParseError(rd.line_no(), "room '" + r.name + "' negative capacity");
    inst.rooms.push_back(std::move(r));
  }

  auto course_id = [&](const std::string& name) {
    auto it = course_ids.find(name);
    if (it == course_ids.end())
      throw ParseError(rd.line_no(), "unknown course name '" + name + "'");
    return it->second;
  };

  expect_section("CURRICULA:");
  for (int i = 0; i < curriculum_count; ++i) {
    if (!rd.next(toks))
      throw ParseError(rd.line_no(), "truncated file inside CURRICULA");
    if (toks.size() < 2)
      throw ParseError(rd.line_no(),
                       "curriculum line needs a name and a member count");
    Curriculum q;
    q.name = toks[0];
    const int members = detail::parse_count(toks[1], rd.line_no(), "members");
    if (members < 1)
      throw ParseError(rd.line_no(),
                       "curriculum '" + q.name + "' must have members");
    if (static_cast<int>(toks.size()) != 2 + members)
      throw ParseError(rd.line_no(), "curriculum '" + q.name + "' declares " +
                                         std::to_string(members) +
                                         " members but lists " +
                                         std::to_string(toks.size() - 2));
    std::set<int> seen;
    for (int j = 0; j < members; ++j) {
      const int id = course_id(toks[static_cast<std::size_t>(2 + j)]);
      if (!seen.insert(id).second)
        throw ParseError(rd.line_no(), "duplicate member '" + toks[2 + j] +
                                           "' in curriculum '" + q.name + "'");
      q.courses.push_back(id);
    }
    inst.curricula.push_back(std::move(q));
  }

  expect_section("UNAVAILABILITY_CONSTRAINTS:");
  for (int i = 0; i < constraint_count; ++i) {
    if (!rd.next(toks))
      throw ParseError(rd.line_no(),
                       "truncated file inside UNAVAILABILITY_CONSTRAINTS");
    if (toks.size() != 3)
      throw ParseError(rd.line_no(),
                       "unavailability line needs 3 fields (course day period)");
    Unavailability u;
    u.course = course_id(toks[0]);
    u.day = detail::parse_count(toks[1], rd.line_no(), "day");
    u.period = detail::parse_count(toks[2], rd.line_no(), "period");
    if (u.day < 0 || u.day >= inst.days || u.period < 0 ||
        u.period >= inst.periods_per_day)
      throw ParseError(rd.line_no(), "unavailability (day " +
                                         std::to_string(u.day) + ", period " +
                                         std::to_string(u.period) +
                                         ") out of range");
    inst.unavailabilities.push_back(u);
  }

  if (!rd.next(toks))
    throw ParseError(rd.line_no(), "truncated file, expected END.");
  if (toks.size() != 1 || toks[0] != "END.")
    throw ParseError(rd.line_no(), "expected END., got '" + toks[0] + "'");

  inst.finalize();
  if (inst.total_lectures > inst.num_slots())
    throw ParseError(rd.line_no(),
                     std::to_string(inst.total_lectures) +
                         " lectures cannot fit into " +
                         std::to_string(inst.num_slots()) + " slots");
  return inst;
}

// Inverse of parse_instance up to whitespace normalisation: re-parsing the
// output yields an identical instance.
inline std::string serialize_instance(const Instance& inst) {
  std::ostringstream out;
  out << "Name: " << inst.name << "\n";
  out << "Courses: " << inst.num_courses() << "\n";
  out << "Rooms: " << inst.num_rooms() << "\n";
  out << "Days: " << inst.days << "\n";
  out << "Periods_per_day: " << inst.periods_per_day << "\n";
  out << "Curricula: " << inst.num_curricula() << "\n";
  out << "Constraints: " << inst.unavailabilities.size() << "\n";
  out << "\nCOURSES:\n";
  for (const auto& c : inst.courses) {
    out << c.name << " " << c.teacher << " " << c.lectures << " "
        << c.min_working_days << " " << c.students << "\n";
  }
  out << "\nROOMS:\n";
  for (const auto& r : inst.rooms) {
    out << r.name << " " << r.capacity << "\n";
  }
  out << "\nCURRICULA:\n";
  for (const auto& q : inst.curricula) {
    out << q.name << " " << q.courses.size();
    for (int c : q.courses) out << " " << inst.courses[static_cast<std::size_t>(c)].name;
    out << "\n";
  }
  out << "\nUNAVAILABILITY_CONSTRAINTS:\n";
  for (const auto& u : inst.unavailabilities) {
    out << inst.courses[static_cast<std::size_t>(u.course)].name << " "
        << u.day << " " << u.period << "\n";
  }
  out << "\nEND.\n";
  return out.str();
}

}  // namespace cbctt

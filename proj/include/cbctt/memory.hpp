#pragma once

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "cbctt/cost.hpp"
#include "cbctt/timetable.hpp"

namespace cbctt {

struct HsaParams {
  int hms = 50;
  double hmcr = 0.9;
  double par = 1.0;
  int mi = 50;
  // Repair budget per improvisation; 0 means 10x the lecture count.
  int repair_cap = 0;
  // Consecutive failed improvisations tolerated per iteration.
  int restart_limit = 50;
  // Construction restarts per requested memory member.
  int max_attempts = 100;
  std::uint64_t seed = 1;

  void validate() const {
    if (hms < 1) throw std::invalid_argument("hms must be >= 1");
    if (hmcr < 0.0 || hmcr > 1.0)
      throw std::invalid_argument("hmcr must be in [0,1]");
    if (par < 0.0 || par > 1.0)
      throw std::invalid_argument("par must be in [0,1]");
    if (mi < 0) throw std::invalid_argument("mi must be >= 0");
    if (repair_cap < 0) throw std::invalid_argument("repair_cap must be >= 0");
    if (restart_limit < 1)
      throw std::invalid_argument("restart_limit must be >= 1");
    if (max_attempts < 1)
      throw std::invalid_argument("max_attempts must be >= 1");
  }

  int effective_repair_cap(const Instance& inst) const {
    return repair_cap > 0 ? repair_cap : 10 * inst.total_lectures;
  }
};

struct HarmonyMember {
  Timetable timetable;
  PenaltyBreakdown penalty;
};

// The population of feasible timetables, kept sorted ascending by total
// penalty. Never exceeds its capacity.
class HarmonyMemory {
 public:
  explicit HarmonyMemory(int capacity) : capacity_(capacity) {
    if (capacity < 1)
      throw std::invalid_argument("harmony memory capacity must be >= 1");
  }

  int capacity() const { return capacity_; }
  int size() const { return static_cast<int>(members_.size()); }
  bool empty() const { return members_.empty(); }
  bool at_capacity() const { return size() == capacity_; }

  const std::vector<HarmonyMember>& members() const { return members_; }
  const HarmonyMember& best() const { return members_.front(); }
  const HarmonyMember& worst() const { return members_.back(); }

  // Course id (or -1) stored at `slot` by member `i`.
  int value_at(int i, int slot) const {
    return members_[static_cast<std::size_t>(i)].timetable.at(slot);
  }

  bool contains(const Timetable& tt) const {
    for (const auto& mem : members_)
      if (mem.timetable == tt) return true;
    return false;
  }

  // Sorted insert used while filling the memory. Throws when full.
  void add(HarmonyMember member) {
    if (at_capacity())
      throw std::logic_error("harmony memory already at capacity");
    insert_sorted(std::move(member));
  }

 private:
  void insert_sorted(HarmonyMember member) {
    auto pos = std::upper_bound(
        members_.begin(), members_.end(), member.penalty.total,
        [](int total, const HarmonyMember& m) { return total < m.penalty.total; });
    members_.insert(pos, std::move(member));
  }

  int capacity_;
  std::vector<HarmonyMember> members_;

  friend bool update_memory(HarmonyMemory&, HarmonyMember);
};

// Admits the candidate iff it is strictly better than the current worst
// member, which is then dropped. Below capacity the candidate is always
// admitted. Returns whether the memory changed.
inline bool update_memory(HarmonyMemory& hm, HarmonyMember candidate) {
  if (!hm.at_capacity()) {
    hm.insert_sorted(std::move(candidate));
    return true;
  }
  if (candidate.penalty.total >= hm.worst().penalty.total) return false;
  hm.members_.pop_back();
  hm.insert_sorted(std::move(candidate));
  return true;
}

}  // namespace cbctt

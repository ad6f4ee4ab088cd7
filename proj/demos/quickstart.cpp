// Minimal end-to-end tour: parse an instance, run a short search, print
// the penalty breakdown, and dump the best timetable in solution format.
//
//   ./quickstart data/instances/comp01.ctt

#include <iostream>

#include "cbctt/cbctt.hpp"

int main(int argc, char** argv) {
  if (argc != 2) {
    std::cerr << "usage: quickstart <instance.ctt>\n";
    return 1;
  }

  const auto inst = cbctt::parse_instance(cbctt::read_text_file(argv[1]));
  std::cout << inst.name << ": " << inst.num_courses() << " courses, "
            << inst.total_lectures << " lectures, " << inst.rooms.size()
            << " rooms, " << inst.days << "x" << inst.periods_per_day
            << " periods\n";

  cbctt::HsaParams params;
  params.hms = 10;
  params.mi = 20;
  params.seed = 42;

  const auto result = cbctt::run(inst, params);
  const auto& best = result.best();
  std::cout << "best total after " << params.mi
            << " improvisations: " << best.penalty.total << "\n"
            << "  room capacity:          " << best.penalty.room_capacity
            << "\n"
            << "  room stability:         " << best.penalty.room_stability
            << "\n"
            << "  min working days:       " << best.penalty.min_working_days
            << "\n"
            << "  curriculum compactness: "
            << best.penalty.curriculum_compactness << "\n\n";

  std::cout << cbctt::write_solution(best.timetable, inst);
  return 0;
}

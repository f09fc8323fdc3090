// Serial reference kernels against their OpenMP counterparts. Each row runs
// both, checks that they agree, and prints wall times.
//
//   twisted_bench [repeats]

#include <omp.h>

#include <chrono>
#include <cstdlib>
#include <functional>
#include <iomanip>
#include <iostream>
#include <string>

#include "twisted/oracles.hpp"
#include "twisted/structures.hpp"
#include "twisted/topology.hpp"

using namespace twisted;

namespace {

template <typename F>
double best_of(int repeats, F&& f, std::string& result) {
  double best = 1e300;
  for (int r = 0; r < repeats; ++r) {
    const auto start = std::chrono::steady_clock::now();
    result = f();
    const auto ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    best = std::min(best, ms);
  }
  return best;
}

std::string describe(const SearchOutcome& s) {
  return (s.value ? std::to_string(*s.value) : std::string("none")) + "/" + std::to_string(s.explored);
}

struct Case {
  std::string name;
  std::function<std::string(Execution)> run;
};

}  // namespace

int main(int argc, char** argv) {
  const int repeats = argc > 1 ? std::atoi(argv[1]) : 3;
  const auto h5 = MaterializedTopology::build_recursive(5);
  const auto h6 = MaterializedTopology::build_recursive(6);
  const auto h7 = MaterializedTopology::build_recursive(7);

  const Case cases[] = {
      {"vertex_connectivity H7", [&](Execution e) { return std::to_string(vertex_connectivity(h7, e)); }},
      {"1-extra H6", [&](Execution e) { return std::to_string(g_extra_connectivity(h6, 1, e).value); }},
      {"2-extra H5", [&](Execution e) { return std::to_string(g_extra_connectivity(h5, 2, e).value); }},
      {"K1,3 substructure H6",
       [&](Execution e) {
         return describe(structure_connectivity_exact(h6, Shape::star(3), CutMode::Substructure, 4, e));
       }},
      {"P4 structure H6",
       [&](Execution e) { return describe(structure_connectivity_exact(h6, Shape::path(4), CutMode::Structure, 4, e)); }},
      {"P3 substructure H5",
       [&](Execution e) {
         return describe(structure_connectivity_exact(h5, Shape::path(3), CutMode::Substructure, 4, e));
       }},
  };

  std::cout << "threads=" << omp_get_max_threads() << " repeats=" << repeats << '\n';
  std::cout << std::left << std::setw(26) << "kernel" << std::right << std::setw(12) << "serial_ms" << std::setw(12)
            << "omp_ms" << std::setw(9) << "speedup" << "  result\n";
  int mismatches = 0;
  for (const auto& c : cases) {
    std::string serial_result;
    std::string parallel_result;
    const double serial = best_of(repeats, [&] { return c.run(Execution::Serial); }, serial_result);
    const double parallel = best_of(repeats, [&] { return c.run(Execution::Parallel); }, parallel_result);
    const bool same = serial_result == parallel_result;
    if (!same) ++mismatches;
    std::cout << std::left << std::setw(26) << c.name << std::right << std::fixed << std::setprecision(1)
              << std::setw(12) << serial << std::setw(12) << parallel << std::setw(8) << std::setprecision(2)
              << serial / parallel << "x  " << serial_result << (same ? "" : " MISMATCH " + parallel_result) << '\n';
  }
  return mismatches == 0 ? 0 : 1;
}

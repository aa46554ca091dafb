// Times the serial reference orbit kernel against the OpenMP one on the
// regular W-orbit of each named type, after checking that both produce the
// same shell profile. Wall clock only; run on a quiet machine for numbers
// worth quoting.

#include <chrono>
#include <cstdio>
#include <string>
#include <vector>

#include "hecke/orbits.hpp"
#include "hecke/root_system.hpp"

using namespace hecke;
using clk = std::chrono::steady_clock;

namespace {

double seconds(clk::time_point a, clk::time_point b) {
  return std::chrono::duration<double>(b - a).count();
}

}  // namespace

int main(int argc, char** argv) {
  std::vector<std::string> types = {"B2", "G2", "D4", "F4", "E6"};
  for (int i = 1; i < argc; ++i) {
    std::string a = argv[i];
    if (a == "--long-running") {
      types.push_back("E7");
    } else if (i == 1) {
      types.assign(argv + 1, argv + argc);
      break;
    }
  }

  std::printf("%-5s %12s %10s %10s %8s\n", "type", "|orbit|", "serial_s", "openmp_s",
              "speedup");
  int bad = 0;
  for (const std::string& t : types) {
    RootSystem rs = RootSystem::named(t);
    OrbitProblem p = OrbitProblem::regular_orbit(rs);

    clk::time_point t0 = clk::now();
    OrbitProfile a = orbit_profile_serial(p);
    clk::time_point t1 = clk::now();
    OrbitProfile b = orbit_profile_parallel(p);
    clk::time_point t2 = clk::now();

    if (!(a == b)) {
      std::printf("%-5s profiles disagree\n", t.c_str());
      ++bad;
      continue;
    }
    double ts = seconds(t0, t1), tp = seconds(t1, t2);
    std::printf("%-5s %12llu %10.4f %10.4f %7.2fx\n", t.c_str(),
                (unsigned long long)a.total, ts, tp, tp > 0 ? ts / tp : 0.0);
  }
  return bad ? 1 : 0;
}

#ifndef HECKE_ORBITS_HPP
#define HECKE_ORBITS_HPP

/*
  Weyl orbit enumeration kernels for integral data, used to count |W| through
  the orbit of a regular vector without materializing group elements.

  The walk is a shell BFS: the orbit of a regular vector under the simple
  reflections is the Cayley graph of W, which is bipartite by length parity,
  so the next shell is (reflections applied to the current shell) minus the
  previous shell. Only three shells are ever held in memory.

  Two implementations share this structure: a serial reference and an OpenMP
  variant that expands the frontier in parallel and merges thread-local
  buffers. They must produce identical shell profiles; a test and the
  bench_orbits tool compare them.
*/

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "hecke/root_system.hpp"

namespace hecke {

constexpr int kOrbitMaxRank = 8;
using OrbitVec = std::array<std::int32_t, kOrbitMaxRank>;

struct OrbitProfile {
  std::vector<std::uint64_t> shell_sizes;
  std::uint64_t total = 0;
  bool operator==(const OrbitProfile& o) const {
    return shell_sizes == o.shell_sizes && total == o.total;
  }
};

struct OrbitProblem {
  int n = 0;  // rank
  // simple roots and coroots in X coordinates
  std::vector<OrbitVec> simples;
  std::vector<OrbitVec> cosimples;
  OrbitVec start{};

  static OrbitProblem regular_orbit(const RootSystem& rs);
};

OrbitProfile orbit_profile_serial(const OrbitProblem& p);
OrbitProfile orbit_profile_parallel(const OrbitProblem& p, int threads = 0);

// |W| for a named type via the serial kernel
std::uint64_t weyl_order_by_orbit(const std::string& type, bool parallel = false);

}  // namespace hecke

#endif

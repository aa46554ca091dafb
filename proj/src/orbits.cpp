#include "hecke/orbits.hpp"

#include <algorithm>
#include <omp.h>
#include <stdexcept>

namespace hecke {

OrbitProblem OrbitProblem::regular_orbit(const RootSystem& rs) {
  OrbitProblem p;
  p.n = rs.nsimple();
  if (p.n > kOrbitMaxRank) throw std::invalid_argument("rank too large for orbit kernel");
  if (rs.dim != p.n) throw std::invalid_argument("orbit kernel needs semisimple datum");
  p.simples.resize(p.n);
  p.cosimples.resize(p.n);
  for (int s = 0; s < p.n; ++s) {
    p.simples[s].fill(0);
    p.cosimples[s].fill(0);
    for (int i = 0; i < p.n; ++i) {
      p.simples[s][i] = (std::int32_t)rat_to_long(rs.simples[s][i]);
      p.cosimples[s][i] = (std::int32_t)rat_to_long(rs.simple_cos[s][i]);
    }
  }
  // start = vector pairing to 1 with every simple coroot; solve over rationals
  QMat A(p.n, p.n), b(p.n, 1);
  for (int s = 0; s < p.n; ++s) {
    for (int i = 0; i < p.n; ++i) A.at(s, i) = rs.simple_cos[s][i];
    b.at(s, 0) = Rat(1);
  }
  auto x = A.solve(b);
  if (!x) throw std::logic_error("coroots not a basis");
  // clear denominators to stay integral (scaling keeps regularity)
  mpz_class den(1);
  for (int i = 0; i < p.n; ++i) den = lcm(den, x->at(i, 0).get_den());
  p.start.fill(0);
  for (int i = 0; i < p.n; ++i) p.start[i] = (std::int32_t)rat_to_long(Rat(den) * x->at(i, 0));
  return p;
}

namespace {

inline OrbitVec reflect(const OrbitProblem& p, int s, const OrbitVec& v) {
  std::int64_t pair = 0;
  for (int i = 0; i < p.n; ++i) pair += (std::int64_t)v[i] * p.cosimples[s][i];
  OrbitVec r = v;
  for (int i = 0; i < p.n; ++i) r[i] -= (std::int32_t)(pair * p.simples[s][i]);
  return r;
}

// next = dedup(expanded) minus prev; all inputs sorted
std::vector<OrbitVec> merge_step(std::vector<OrbitVec>& expanded,
                                 const std::vector<OrbitVec>& prev) {
  std::sort(expanded.begin(), expanded.end());
  expanded.erase(std::unique(expanded.begin(), expanded.end()), expanded.end());
  std::vector<OrbitVec> next;
  next.reserve(expanded.size());
  std::set_difference(expanded.begin(), expanded.end(), prev.begin(), prev.end(),
                      std::back_inserter(next));
  return next;
}

}  // namespace

OrbitProfile orbit_profile_serial(const OrbitProblem& p) {
  OrbitProfile prof;
  std::vector<OrbitVec> prev, cur{p.start};
  std::sort(cur.begin(), cur.end());
  while (!cur.empty()) {
    prof.shell_sizes.push_back(cur.size());
    prof.total += cur.size();
    std::vector<OrbitVec> expanded;
    expanded.reserve(cur.size() * p.n);
    for (const OrbitVec& v : cur)
      for (int s = 0; s < p.n; ++s) expanded.push_back(reflect(p, s, v));
    std::vector<OrbitVec> next = merge_step(expanded, prev);
    prev = std::move(cur);
    cur = std::move(next);
  }
  return prof;
}

OrbitProfile orbit_profile_parallel(const OrbitProblem& p, int threads) {
  if (threads > 0) omp_set_num_threads(threads);
  OrbitProfile prof;
  std::vector<OrbitVec> prev, cur{p.start};
  std::sort(cur.begin(), cur.end());
  while (!cur.empty()) {
    prof.shell_sizes.push_back(cur.size());
    prof.total += cur.size();
    std::vector<std::vector<OrbitVec>> local;
#pragma omp parallel
    {
#pragma omp single
      local.resize(omp_get_num_threads());
      std::vector<OrbitVec>& mine = local[omp_get_thread_num()];
#pragma omp for schedule(static)
      for (std::int64_t k = 0; k < (std::int64_t)cur.size(); ++k)
        for (int s = 0; s < p.n; ++s) mine.push_back(reflect(p, s, cur[k]));
    }
    std::size_t tot = 0;
    for (auto& l : local) tot += l.size();
    std::vector<OrbitVec> expanded;
    expanded.reserve(tot);
    for (auto& l : local) {
      expanded.insert(expanded.end(), l.begin(), l.end());
      l.clear();
      l.shrink_to_fit();
    }
    std::vector<OrbitVec> next = merge_step(expanded, prev);
    prev = std::move(cur);
    cur = std::move(next);
  }
  return prof;
}

std::uint64_t weyl_order_by_orbit(const std::string& type, bool parallel) {
  RootSystem rs = RootSystem::named(type);
  OrbitProblem p = OrbitProblem::regular_orbit(rs);
  return (parallel ? orbit_profile_parallel(p) : orbit_profile_serial(p)).total;
}

}  // namespace hecke

#include "hecke/root_system.hpp"

#include <algorithm>
#include <cstdint>
#include <deque>
#include <set>
#include <sstream>
#include <stdexcept>
#include <unordered_set>

namespace hecke {

namespace {

QVec qv(std::initializer_list<long> xs) {
  QVec v;
  for (long x : xs) v.push_back(Rat(x));
  return v;
}

// Cartan matrix rows: row i, column j = <alpha_j, alpha_i^vee>
std::vector<std::vector<long>> cartan_of(const std::string& t) {
  if (t == "A1" || t == "A1ad") return {{2}};
  if (t == "A2") return {{2, -1}, {-1, 2}};
  if (t == "B2") return {{2, -1}, {-2, 2}};   // alpha1 long, alpha2 short
  if (t == "C2") return {{2, -2}, {-1, 2}};   // alpha1 short, alpha2 long
  if (t == "G2") return {{2, -3}, {-1, 2}};   // alpha1 short, alpha2 long
  if (t == "A1xA1") return {{2, 0}, {0, 2}};
  if (t == "D4")
    return {{2, -1, 0, 0}, {-1, 2, -1, -1}, {0, -1, 2, 0}, {0, -1, 0, 2}};
  if (t == "F4")
    return {{2, -1, 0, 0}, {-1, 2, -1, 0}, {0, -2, 2, -1}, {0, 0, -1, 2}};
  if (t == "E6")
    return {{2, 0, -1, 0, 0, 0},  {0, 2, 0, -1, 0, 0},  {-1, 0, 2, -1, 0, 0},
            {0, -1, -1, 2, -1, 0}, {0, 0, 0, -1, 2, -1}, {0, 0, 0, 0, -1, 2}};
  if (t == "E7")
    return {{2, 0, -1, 0, 0, 0, 0},  {0, 2, 0, -1, 0, 0, 0},
            {-1, 0, 2, -1, 0, 0, 0}, {0, -1, -1, 2, -1, 0, 0},
            {0, 0, 0, -1, 2, -1, 0}, {0, 0, 0, 0, -1, 2, -1},
            {0, 0, 0, 0, 0, -1, 2}};
  throw std::invalid_argument("unknown type: " + t);
}

}  // namespace

RootSystem RootSystem::from_simples(std::vector<QVec> simple_roots,
                                    std::vector<QVec> simple_coroots,
                                    const std::string& label) {
  if (simple_roots.size() != simple_coroots.size())
    throw std::invalid_argument("root/coroot count mismatch");
  RootSystem rs;
  rs.label = label;
  rs.dim = simple_roots.empty() ? 0 : (int)simple_roots[0].size();
  rs.simples = std::move(simple_roots);
  rs.simple_cos = std::move(simple_coroots);
  for (size_t i = 0; i < rs.simples.size(); ++i) {
    if ((int)rs.simples[i].size() != rs.dim || (int)rs.simple_cos[i].size() != rs.dim)
      throw std::invalid_argument("coordinate size mismatch");
    if (dot(rs.simples[i], rs.simple_cos[i]) != 2)
      throw std::invalid_argument("pairing <alpha, alpha^vee> must be 2");
  }
  rs.ensure_roots();
  return rs;
}

RootSystem RootSystem::named(const std::string& type) {
  if (type == "A1ad") {
    // adjoint rank 1: X = Z alpha, coroot = 2; the coroot lies in 2 X^vee
    return from_simples({qv({1})}, {qv({2})}, type);
  }
  auto C = cartan_of(type);
  int n = (int)C.size();
  std::vector<QVec> roots(n), cos(n);
  for (int i = 0; i < n; ++i) {
    cos[i] = qvec_zero(n);
    cos[i][i] = Rat(1);
    roots[i] = qvec_zero(n);
    for (int j = 0; j < n; ++j) roots[i][j] = Rat(C[j][i]);  // column i
  }
  return from_simples(roots, cos, type);
}

std::vector<std::string> RootSystem::known_types() {
  return {"A1", "A1ad", "A1xA1", "A2", "B2", "C2", "G2", "D4", "F4", "E6", "E7"};
}

QVec RootSystem::reflect_E(int s, const QVec& v) const {
  return qvec_sub(v, qvec_scale(dot(v, simple_cos[s]), simples[s]));
}

QVec RootSystem::reflect_D(int s, const QVec& f) const {
  return qvec_sub(f, qvec_scale(dot(simples[s], f), simple_cos[s]));
}

QVec RootSystem::act_E(int wi, const QVec& v) const {
  const QMat& m = W[wi].mE;
  QVec r = qvec_zero(dim);
  for (int i = 0; i < dim; ++i)
    for (int j = 0; j < dim; ++j) r[i] += m.at(i, j) * v[j];
  return r;
}

QVec RootSystem::act_D(int wi, const QVec& f) const {
  const QMat& m = W[wi].mD;
  QVec r = qvec_zero(dim);
  for (int i = 0; i < dim; ++i)
    for (int j = 0; j < dim; ++j) r[i] += m.at(i, j) * f[j];
  return r;
}

void RootSystem::ensure_roots() {
  if (!roots.empty() || simples.empty()) return;
  // closure of (root, coroot) pairs under simple reflections
  std::map<QVec, int> seen;
  std::vector<std::pair<QVec, QVec>> all;
  std::deque<int> queue;
  for (int i = 0; i < nsimple(); ++i) {
    if (seen.count(simples[i])) continue;
    seen[simples[i]] = (int)all.size();
    all.push_back({simples[i], simple_cos[i]});
    queue.push_back((int)all.size() - 1);
  }
  while (!queue.empty()) {
    int idx = queue.front();
    queue.pop_front();
    for (int s = 0; s < nsimple(); ++s) {
      QVec nr = reflect_E(s, all[idx].first);
      if (seen.count(nr)) continue;
      QVec nc = reflect_D(s, all[idx].second);
      seen[nr] = (int)all.size();
      all.push_back({nr, nc});
      queue.push_back((int)all.size() - 1);
    }
  }
  // positivity: expansion in the simple basis has all coefficients >= 0.
  // Solve S c = root with S = matrix of simple roots as columns.
  QMat S(dim, nsimple());
  for (int j = 0; j < nsimple(); ++j)
    for (int i = 0; i < dim; ++i) S.at(i, j) = simples[j][i];
  std::vector<std::pair<QVec, QVec>> pos, neg;
  for (auto& [r, c] : all) {
    QMat b(dim, 1);
    for (int i = 0; i < dim; ++i) b.at(i, 0) = r[i];
    auto sol = S.solve(b);
    if (!sol) throw std::logic_error("root outside simple span");
    bool nonneg = true, nonpos = true;
    for (int i = 0; i < nsimple(); ++i) {
      if (sol->at(i, 0) < 0) nonneg = false;
      if (sol->at(i, 0) > 0) nonpos = false;
    }
    if (nonneg == nonpos) throw std::logic_error("mixed sign root expansion");
    if (nonneg)
      pos.push_back({r, c});
    else
      neg.push_back({r, c});
  }
  if (pos.size() != neg.size()) throw std::logic_error("positive/negative mismatch");
  std::sort(pos.begin(), pos.end());
  npos = (int)pos.size();
  roots.clear();
  coroots.clear();
  for (auto& [r, c] : pos) {
    roots.push_back(r);
    coroots.push_back(c);
  }
  for (int i = 0; i < npos; ++i) {
    roots.push_back(qvec_neg(roots[i]));
    coroots.push_back(qvec_neg(coroots[i]));
  }
  // reflection permutations on root indices
  perm_simple.assign(nsimple(), std::vector<int>(roots.size()));
  for (int s = 0; s < nsimple(); ++s)
    for (size_t ri = 0; ri < roots.size(); ++ri) {
      int im = root_index(reflect_E(s, roots[ri]));
      if (im < 0) throw std::logic_error("reflection left the root set");
      perm_simple[s][ri] = im;
    }
  // W-orbits of roots, BFS over the reflection permutations
  root_orbit.assign(roots.size(), -1);
  int next_orbit = 0;
  for (size_t start = 0; start < roots.size(); ++start) {
    if (root_orbit[start] >= 0) continue;
    int id = next_orbit++;
    std::deque<int> q{(int)start};
    root_orbit[start] = id;
    while (!q.empty()) {
      int ri = q.front();
      q.pop_front();
      for (int s = 0; s < nsimple(); ++s) {
        int im = perm_simple[s][ri];
        if (root_orbit[im] < 0) {
          root_orbit[im] = id;
          q.push_back(im);
        }
      }
    }
  }
}

int RootSystem::root_index(const QVec& r) const {
  for (size_t i = 0; i < roots.size(); ++i)
    if (roots[i] == r) return (int)i;
  return -1;
}

int RootSystem::simple_root_index(int s) const {
  int idx = root_index(simples[s]);
  if (idx < 0) throw std::logic_error("simple root missing from root list");
  return idx;
}

void RootSystem::ensure_weyl(size_t cap) {
  if (!W.empty()) return;
  ensure_roots();
  std::map<std::vector<Rat>, int> index_of;
  auto key = [&](const QMat& m) { return m.a; };
  Welt id;
  id.mE = QMat::id(dim);
  id.mD = QMat::id(dim);
  W.push_back(id);
  index_of[key(id.mE)] = 0;
  // simple reflection matrices
  std::vector<QMat> refE(nsimple()), refD(nsimple());
  for (int s = 0; s < nsimple(); ++s) {
    refE[s] = QMat::id(dim);
    refD[s] = QMat::id(dim);
    for (int i = 0; i < dim; ++i)
      for (int j = 0; j < dim; ++j) {
        refE[s].at(i, j) -= simples[s][i] * simple_cos[s][j];
        refD[s].at(i, j) -= simple_cos[s][i] * simples[s][j];
      }
  }
  size_t frontier_begin = 0;
  while (frontier_begin < W.size()) {
    size_t frontier_end = W.size();
    for (size_t wi = frontier_begin; wi < frontier_end; ++wi)
      for (int s = 0; s < nsimple(); ++s) {
        QMat m = W[wi].mE * refE[s];
        auto it = index_of.find(key(m));
        if (it != index_of.end()) continue;
        Welt nw;
        nw.word = W[wi].word;
        nw.word.push_back(s);
        nw.mE = m;
        nw.mD = W[wi].mD * refD[s];
        index_of[key(m)] = (int)W.size();
        W.push_back(std::move(nw));
        if (W.size() > cap)
          throw std::runtime_error("Weyl enumeration cap exceeded for " + label);
      }
    frontier_begin = frontier_end;
  }
  w0_idx = (int)W.size() - 1;
  if (weyl_length(w0_idx) != npos)
    throw std::logic_error("longest element length disagrees with |R+|");
}

int RootSystem::weyl_index_of_matrix(const QMat& mE) const {
  for (size_t i = 0; i < W.size(); ++i)
    if (W[i].mE == mE) return (int)i;
  return -1;
}

int RootSystem::simple_reflection_index(int s) const {
  for (size_t i = 0; i < W.size(); ++i)
    if (W[i].word.size() == 1 && W[i].word[0] == s) return (int)i;
  throw std::logic_error("simple reflection missing");
}

int RootSystem::weyl_mult(int wi, int wj) const {
  int idx = weyl_index_of_matrix(W[wi].mE * W[wj].mE);
  if (idx < 0) throw std::logic_error("weyl_mult: product not found");
  return idx;
}

int RootSystem::weyl_inverse(int wi) const {
  auto inv = W[wi].mE.inverse();
  if (!inv) throw std::logic_error("weyl element not invertible");
  int idx = weyl_index_of_matrix(*inv);
  if (idx < 0) throw std::logic_error("weyl_inverse: not found");
  return idx;
}

int RootSystem::w0_conj_simple(int s) const {
  // w0 s w0^{-1} = reflection in -w0(alpha_s), a simple root again
  QVec img = qvec_neg(act_E(w0_idx, simples[s]));
  for (int j = 0; j < nsimple(); ++j)
    if (simples[j] == img) return j;
  throw std::logic_error("w0 conjugate of a simple reflection is not simple");
}

std::vector<int> RootSystem::min_coset_reps(const std::vector<int>& P) const {
  // w is minimal in w W_P iff w(alpha_j) > 0 for all j in P
  std::vector<int> reps;
  for (size_t wi = 0; wi < W.size(); ++wi) {
    bool ok = true;
    for (int j : P) {
      int im = root_index(act_E((int)wi, simples[j]));
      if (!is_positive(im)) {
        ok = false;
        break;
      }
    }
    if (ok) reps.push_back((int)wi);
  }
  return reps;  // W enumerated by length, so reps ascend by length
}

std::vector<int> RootSystem::parabolic_elements(const std::vector<int>& P) const {
  std::set<int> gens(P.begin(), P.end());
  std::vector<int> elems;
  for (size_t wi = 0; wi < W.size(); ++wi) {
    bool ok = true;
    for (int s : W[wi].word)
      if (!gens.count(s)) {
        ok = false;
        break;
      }
    if (ok) elems.push_back((int)wi);
  }
  return elems;
}

RootSystem RootSystem::sub_system(const std::vector<int>& P) const {
  std::vector<QVec> sr, sc;
  std::ostringstream lab;
  lab << label << "|P{";
  for (size_t k = 0; k < P.size(); ++k) {
    sr.push_back(simples[P[k]]);
    sc.push_back(simple_cos[P[k]]);
    lab << (k ? "," : "") << P[k];
  }
  lab << "}";
  RootSystem rs;
  rs.label = lab.str();
  rs.dim = dim;
  rs.simples = sr;
  rs.simple_cos = sc;
  rs.ensure_roots();
  return rs;
}

QMat RootSystem::cartan() const {
  QMat C(nsimple(), nsimple());
  for (int i = 0; i < nsimple(); ++i)
    for (int j = 0; j < nsimple(); ++j) C.at(i, j) = dot(simples[j], simple_cos[i]);
  return C;
}

QVec RootSystem::fundamental_weight(int j) const {
  // e_j = sum_k (C^{-1})_{kj} alpha_k so that <e_j, alpha_i^vee> = delta_ij
  auto Cinv = cartan().inverse();
  if (!Cinv) throw std::logic_error("Cartan matrix singular");
  QVec e = qvec_zero(dim);
  for (int k = 0; k < nsimple(); ++k)
    e = qvec_add(e, qvec_scale(Cinv->at(k, j), simples[k]));
  return e;
}

QVec RootSystem::coweight_dual_basis(int j) const {
  // whata_j = sum_k (C^{-1})_{jk} alpha_k^vee so that <alpha_i, whata_j> = delta_ij
  auto Cinv = cartan().inverse();
  if (!Cinv) throw std::logic_error("Cartan matrix singular");
  QVec w = qvec_zero(dim);
  for (int k = 0; k < nsimple(); ++k)
    w = qvec_add(w, qvec_scale(Cinv->at(j, k), simple_cos[k]));
  return w;
}

QVec RootSystem::project_to_cospan(const QVec& sigma) const {
  // pi(sigma) = sum_k t_k alpha_k^vee with C^T t = (sigma(alpha_i))_i
  int n = nsimple();
  QMat Ct = cartan().transpose();
  QMat b(n, 1);
  for (int i = 0; i < n; ++i) b.at(i, 0) = dot(simples[i], sigma);
  auto t = Ct.solve(b);
  if (!t) throw std::logic_error("projection solve failed");
  QVec v = qvec_zero(dim);
  for (int k = 0; k < n; ++k) v = qvec_add(v, qvec_scale(t->at(k, 0), simple_cos[k]));
  return v;
}

bool RootSystem::sigma_in_cospan(const QVec& sigma) const {
  return project_to_cospan(sigma) == sigma;
}

Rat RootSystem::rho_delta(const QVec& sigma) const {
  QVec s = qvec_zero(dim);
  for (int j = 0; j < nsimple(); ++j) s = qvec_add(s, fundamental_weight(j));
  return dot(s, sigma);
}

std::vector<int> RootSystem::langlands_subset(const QVec& sigma) const {
  const int n = nsimple();
  QVec v = project_to_cospan(sigma);
  std::optional<std::vector<int>> found;
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    // columns: whata_j for j not in F, alpha_j^vee for j in F
    QMat A(dim, n), b(dim, 1);
    for (int j = 0; j < n; ++j) {
      QVec col = (mask >> j & 1) ? simple_cos[j] : coweight_dual_basis(j);
      for (int i = 0; i < dim; ++i) A.at(i, j) = col[i];
    }
    for (int i = 0; i < dim; ++i) b.at(i, 0) = v[i];
    auto sol = A.solve(b);
    if (!sol) continue;
    // solve() leaves free coordinates at zero; verify reproduction
    QVec check = qvec_zero(dim);
    bool ok = true;
    for (int j = 0; j < n; ++j) {
      QVec col = (mask >> j & 1) ? simple_cos[j] : coweight_dual_basis(j);
      check = qvec_add(check, qvec_scale(sol->at(j, 0), col));
    }
    if (!(check == v)) continue;
    for (int j = 0; j < n && ok; ++j) {
      if (mask >> j & 1) {
        if (sol->at(j, 0) > 0) ok = false;  // d_j <= 0
      } else {
        if (sol->at(j, 0) <= 0) ok = false;  // c_j > 0
      }
    }
    if (!ok) continue;
    std::vector<int> F;
    for (int j = 0; j < n; ++j)
      if (mask >> j & 1) F.push_back(j);
    if (found) throw std::logic_error("langlands subset not unique");
    found = F;
  }
  if (!found) {
    std::string s = "langlands subset not found at (";
    for (int i = 0; i < dim; ++i) s += (i ? "," : "") + rat_to_string(v[i]);
    throw std::logic_error(s + ")");
  }
  return *found;
}

bool RootSystem::weight_tempered(const QVec& sigma) const {
  if (!sigma_in_cospan(sigma)) return false;
  int n = nsimple();
  QMat Ct = cartan().transpose();
  QMat b(n, 1);
  for (int i = 0; i < n; ++i) b.at(i, 0) = dot(simples[i], sigma);
  auto t = Ct.solve(b);
  if (!t) throw std::logic_error("tempered solve failed");
  for (int k = 0; k < n; ++k)
    if (t->at(k, 0) > 0) return false;
  return true;
}

bool RootSystem::in_a_plus(const QVec& nu, const std::vector<int>& P) const {
  std::set<int> inP(P.begin(), P.end());
  for (int j = 0; j < nsimple(); ++j) {
    Rat val = dot(simples[j], nu);
    if (inP.count(j)) {
      if (val != 0) return false;
    } else {
      if (val <= 0) return false;
    }
  }
  return true;
}

bool RootSystem::levi_subset_check(const std::vector<int>& I, size_t node_cap,
                                   size_t* visited_out) const {
  // orbit of the set {alpha_i : i in I} under W; roots are tracked as indices
  // and sets canonicalized by sorting. Keys pack 7-bit root indices.
  if (roots.size() >= 127) throw std::logic_error("levi check: too many roots to pack");
  std::vector<int> start;
  for (int i : I) start.push_back(simple_root_index(i));
  std::sort(start.begin(), start.end());
  std::set<int> simple_indices;
  for (int s = 0; s < nsimple(); ++s) simple_indices.insert(simple_root_index(s));
  auto pack = [](const std::vector<int>& v) {
    std::uint64_t k = 0;
    for (int x : v) k = (k << 7) | (std::uint64_t)(x + 1);
    return k;
  };
  std::unordered_set<std::uint64_t> visited;
  std::deque<std::vector<int>> queue;
  visited.insert(pack(start));
  queue.push_back(start);
  bool ok = true;
  while (!queue.empty()) {
    std::vector<int> cur = queue.front();
    queue.pop_front();
    for (int s = 0; s < nsimple(); ++s) {
      std::vector<int> img(cur.size());
      for (size_t k = 0; k < cur.size(); ++k) img[k] = perm_simple[s][cur[k]];
      std::sort(img.begin(), img.end());
      if (!visited.insert(pack(img)).second) continue;
      bool in_delta = true;
      for (int x : img)
        if (!simple_indices.count(x)) {
          in_delta = false;
          break;
        }
      if (in_delta && img != start) ok = false;
      if (node_cap && visited.size() > node_cap)
        throw std::runtime_error("levi check: node cap exceeded");
      queue.push_back(std::move(img));
    }
    if (!ok) break;
  }
  if (visited_out) *visited_out = visited.size();
  return ok;
}

std::vector<std::vector<int>> RootSystem::levi_table_rows(const std::string& type) {
  // certified I per split exceptional type, in simple-index terms:
  // G2: {}, whole; F4: {}, B2 = {1,2} (middle pair), whole;
  // E6: {}, D4 = {2,3,4,5} forming the D4 star around node 4 (indices 1,2,3,4
  // in 0-based: alpha2, alpha3, alpha4, alpha5); E7 adds E6.
  if (type == "G2") return {{}, {0, 1}};
  if (type == "F4") return {{}, {1, 2}, {0, 1, 2, 3}};
  if (type == "E6") return {{}, {1, 2, 3, 4}, {0, 1, 2, 3, 4, 5}};
  if (type == "E7") return {{}, {1, 2, 3, 4}, {0, 1, 2, 3, 4, 5}, {0, 1, 2, 3, 4, 5, 6}};
  throw std::invalid_argument("no table rows for type " + type);
}

QMat RootSystem::diagram_automorphism(const std::vector<int>& perm) const {
  int n = nsimple();
  if ((int)perm.size() != n) throw std::invalid_argument("perm size");
  // verify Cartan symmetry
  QMat C = cartan();
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (C.at(perm[i], perm[j]) != C.at(i, j))
        throw std::invalid_argument("permutation does not preserve the Cartan matrix");
  if (n != dim) throw std::logic_error("diagram automorphism needs semisimple datum");
  // in the simply connected realization coroots are the standard basis, so the
  // automorphism is the permutation matrix on coordinates
  QMat M(dim, dim);
  for (int i = 0; i < n; ++i) M.at(perm[i], i) = Rat(1);
  // sanity: M maps alpha_i to alpha_{perm(i)}
  for (int i = 0; i < n; ++i) {
    QVec img = qvec_zero(dim);
    for (int r = 0; r < dim; ++r)
      for (int c = 0; c < dim; ++c) img[r] += M.at(r, c) * simples[i][c];
    if (!(img == simples[perm[i]]))
      throw std::logic_error("diagram automorphism failed to permute simples");
  }
  return M;
}

bool RootSystem::integral() const {
  for (const auto& v : roots)
    for (const auto& x : v)
      if (!rat_is_integer(x)) return false;
  for (const auto& v : coroots)
    for (const auto& x : v)
      if (!rat_is_integer(x)) return false;
  return true;
}

bool RootSystem::coroot_in_2X(int ri) const {
  for (const auto& x : coroots[ri]) {
    if (!rat_is_integer(x)) return false;
    if (rat_to_long(x) % 2 != 0) return false;
  }
  return true;
}

bool RootSystem::quasi_simply_connected() const {
  // X^vee must be generated by R^vee together with all y with 2y in R^vee
  if (!integral()) return false;
  std::vector<std::vector<long>> gens;
  for (const auto& c : coroots) {
    std::vector<long> row(dim);
    bool even = true;
    for (int i = 0; i < dim; ++i) {
      row[i] = rat_to_long(c[i]);
      if (row[i] % 2 != 0) even = false;
    }
    gens.push_back(row);
    if (even) {
      std::vector<long> half(dim);
      for (int i = 0; i < dim; ++i) half[i] = row[i] / 2;
      gens.push_back(half);
    }
  }
  return lattice_index(std::move(gens), dim) == 1;
}

std::string RootSystem::str() const {
  std::ostringstream os;
  os << label << " rank " << nsimple() << " dim " << dim << " roots " << roots.size();
  return os.str();
}

}  // namespace hecke

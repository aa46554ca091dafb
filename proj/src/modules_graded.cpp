#include "hecke/modules_graded.hpp"

#include <algorithm>
#include <random>
#include <set>
#include <sstream>

namespace hecke {

namespace {

QMat eval_poly_at(const GradedModule& M, const MPoly& p) {
  int d = M.dim;
  QMat out(d, d);
  for (const auto& [mono, coef] : p.c) {
    Rat scal = coef * rat_pow(M.r_scalar, mono.back());
    if (scal == 0) continue;
    QMat term = QMat::id(d).scaled(scal);
    for (size_t i = 0; i + 1 < mono.size(); ++i)
      for (int e = 0; e < mono[i]; ++e) term = term * M.x_mats[i];
    out = out + term;
  }
  return out;
}

// accumulating row span with forward elimination, for independence tests
struct SpanTracker {
  std::vector<QVec> rows;  // each with leading pivot scaled to 1, sorted by pivot
  std::vector<int> pivots;

  bool try_add(QVec v) {
    for (size_t k = 0; k < rows.size(); ++k) {
      if (v[pivots[k]] == 0) continue;
      v = qvec_sub(v, qvec_scale(v[pivots[k]], rows[k]));
    }
    int piv = -1;
    for (size_t i = 0; i < v.size(); ++i)
      if (v[i] != 0) {
        piv = (int)i;
        break;
      }
    if (piv < 0) return false;
    rows.push_back(qvec_scale(Rat(1) / v[piv], v));
    pivots.push_back(piv);
    // keep rows ordered by pivot for the forward pass
    for (size_t k = rows.size(); k-- > 1;)
      if (pivots[k] < pivots[k - 1]) {
        std::swap(pivots[k], pivots[k - 1]);
        std::swap(rows[k], rows[k - 1]);
      }
    return true;
  }
  size_t dim() const { return rows.size(); }
};

QVec flatten(const QMat& m) {
  QVec v(m.nr * m.nc);
  for (int i = 0; i < m.nr; ++i)
    for (int j = 0; j < m.nc; ++j) v[(size_t)i * m.nc + j] = m.at(i, j);
  return v;
}

std::vector<QMat> generator_mats(const GradedModule& M) {
  std::vector<QMat> g = M.t_mats;
  for (const auto& x : M.x_mats) g.push_back(x);
  return g;
}

// linear span of all products of generators, as explicit matrices
std::vector<QMat> algebra_closure(const GradedModule& M) {
  int d = M.dim;
  std::vector<QMat> basis;
  SpanTracker span;
  auto push = [&](const QMat& m) {
    if (span.try_add(flatten(m))) basis.push_back(m);
  };
  auto gens = generator_mats(M);
  push(QMat::id(d));
  for (const auto& g : gens) push(g);
  size_t frontier = 0;
  while (frontier < basis.size()) {
    size_t upto = basis.size();
    for (size_t i = frontier; i < upto; ++i)
      for (const auto& g : gens) push(basis[i] * g);
    frontier = upto;
  }
  return basis;
}

// commutant of the generator action
std::vector<QMat> commutant(const GradedModule& M) {
  int d = M.dim;
  auto gens = generator_mats(M);
  // unknown X (d x d) with g X - X g = 0 for every generator
  QMat A((int)gens.size() * d * d, d * d);
  int row = 0;
  for (const auto& g : gens) {
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < d; ++j) {
        // entry (i,j) of gX - Xg
        for (int k = 0; k < d; ++k) {
          A.at(row, k * d + j) += g.at(i, k);
          A.at(row, i * d + k) -= g.at(k, j);
        }
        ++row;
      }
  }
  QMat ker = A.kernel();
  std::vector<QMat> out;
  for (int c = 0; c < ker.nc; ++c) {
    QMat X(d, d);
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < d; ++j) X.at(i, j) = ker.at(i * d + j, c);
    out.push_back(X);
  }
  return out;
}

// monic minimal polynomial coefficients (low degree first) via Krylov
std::vector<Rat> min_poly(const QMat& z) {
  int d = z.nr;
  SpanTracker span;
  std::vector<QMat> powers;
  QMat cur = QMat::id(d);
  while (true) {
    if (!span.try_add(flatten(cur))) break;
    powers.push_back(cur);
    cur = cur * z;
  }
  // cur is dependent on powers: solve sum c_k z^k = cur
  int m = (int)powers.size();
  QMat A(d * d, m), b(d * d, 1);
  for (int k = 0; k < m; ++k) {
    QVec f = flatten(powers[k]);
    for (int i = 0; i < d * d; ++i) A.at(i, k) = f[i];
  }
  QVec fc = flatten(cur);
  for (int i = 0; i < d * d; ++i) b.at(i, 0) = fc[i];
  auto sol = A.solve(b);
  if (!sol) throw std::logic_error("min_poly: inconsistent Krylov system");
  std::vector<Rat> coeffs(m + 1);
  for (int k = 0; k < m; ++k) coeffs[k] = -sol->at(k, 0);
  coeffs[m] = 1;
  return coeffs;
}

std::vector<Rat> rational_roots(const std::vector<Rat>& poly) {
  // strip trailing zero roots first
  std::vector<Rat> p = poly;
  std::vector<Rat> roots;
  size_t low = 0;
  while (low + 1 < p.size() && p[low] == 0) ++low;
  if (low > 0) roots.push_back(Rat(0));
  if (low > 0) p.erase(p.begin(), p.begin() + (long)low);
  if (p.size() <= 1) return roots;
  // clear denominators, then candidates a/b with a | constant, b | leading
  mpz_class scale = 1;
  for (const auto& cf : p) mpz_lcm(scale.get_mpz_t(), scale.get_mpz_t(),
                                   cf.get_den().get_mpz_t());
  std::vector<mpz_class> ip;
  for (const auto& cf : p) {
    Rat t = cf * Rat(scale);
    ip.push_back(t.get_num());
  }
  mpz_class num = abs(ip.front());
  mpz_class den = abs(ip.back());
  auto divisors = [](const mpz_class& n) {
    std::vector<mpz_class> out;
    for (mpz_class i = 1; i * i <= n; ++i)
      if (n % i == 0) {
        out.push_back(i);
        out.push_back(n / i);
      }
    return out;
  };
  auto eval = [&](const Rat& x) {
    Rat acc(0);
    for (size_t k = p.size(); k-- > 0;) acc = acc * x + p[k];
    return acc;
  };
  std::set<Rat> seen;
  for (const auto& pn : divisors(num))
    for (const auto& pd : divisors(den))
      for (int sign : {1, -1}) {
        Rat cand(sign * pn, pd);
        cand.canonicalize();
        if (seen.count(cand)) continue;
        seen.insert(cand);
        if (eval(cand) == 0) roots.push_back(cand);
      }
  return roots;
}

QMat columns_to_basis(const std::vector<QVec>& cols) {
  SpanTracker span;
  std::vector<QVec> kept;
  for (const auto& c : cols)
    if (span.try_add(c)) kept.push_back(c);
  QMat B(kept.empty() ? 0 : (int)kept[0].size(), (int)kept.size());
  for (size_t j = 0; j < kept.size(); ++j)
    for (size_t i = 0; i < kept[j].size(); ++i) B.at((int)i, (int)j) = kept[j][i];
  return B;
}

}  // namespace

QMat GradedModule::act(const GradedHecke& G, const GHElt& e) const {
  QMat out(dim, dim);
  for (const auto& [w, p] : e.c) {
    QMat tw = QMat::id(dim);
    for (int s : G.rs().W[w].word) tw = tw * t_mats[s];
    out = out + tw * eval_poly_at(*this, p);
  }
  return out;
}

Rat GradedModule::trace_of(const GradedHecke& G, const GHElt& e) const {
  return act(G, e).trace();
}

std::map<QVec, long> gm_weights(const GradedHecke& G, const GradedModule& M) {
  std::map<QVec, long> out;
  std::vector<QVec> cands;
  std::set<QVec> seen;
  for (const auto& c : M.weight_candidates)
    if (seen.insert(c).second) cands.push_back(c);
  long total = 0;
  for (const auto& sigma : cands) {
    std::vector<QMat> stacked;
    for (int i = 0; i < (int)M.x_mats.size(); ++i) {
      QMat k = M.x_mats[i] - QMat::id(M.dim).scaled(sigma[i]);
      stacked.push_back(k.pow(M.dim));
    }
    QMat big = stacked[0];
    for (size_t i = 1; i < stacked.size(); ++i) big = QMat::vcat(big, stacked[i]);
    int mult = big.kernel().nc;
    if (mult > 0) {
      out[sigma] = mult;
      total += mult;
    }
  }
  if (total != M.dim)
    throw std::runtime_error("gm_weights: candidates cover " + std::to_string(total) +
                             " of " + std::to_string(M.dim) + " dimensions");
  return out;
}

bool gm_check(const GradedHecke& G, const GradedModule& M, std::string* diag) {
  const RootSystem& rs = G.rs();
  auto fail = [&](const std::string& w) {
    if (diag) *diag = w;
    return false;
  };
  int d = M.dim;
  for (int s = 0; s < rs.nsimple(); ++s)
    if (M.t_mats[s] * M.t_mats[s] != QMat::id(d))
      return fail("t_s^2 != 1 at s=" + std::to_string(s));
  QMat C = rs.cartan();
  for (int s = 0; s < rs.nsimple(); ++s)
    for (int u = s + 1; u < rs.nsimple(); ++u) {
      long prod = rat_to_long(C.at(s, u) * C.at(u, s));
      int m = prod == 0 ? 2 : prod == 1 ? 3 : prod == 2 ? 4 : 6;
      QMat lhs = QMat::id(d), rhs = QMat::id(d);
      for (int i = 0; i < m; ++i) {
        lhs = lhs * (i % 2 == 0 ? M.t_mats[s] : M.t_mats[u]);
        rhs = rhs * (i % 2 == 0 ? M.t_mats[u] : M.t_mats[s]);
      }
      if (lhs != rhs) return fail("braid fails");
    }
  for (size_t i = 0; i < M.x_mats.size(); ++i)
    for (size_t j = i + 1; j < M.x_mats.size(); ++j)
      if (M.x_mats[i] * M.x_mats[j] != M.x_mats[j] * M.x_mats[i])
        return fail("x matrices do not commute");
  for (int s = 0; s < rs.nsimple(); ++s)
    for (int i = 0; i < (int)M.x_mats.size(); ++i) {
      QVec ei = qvec_zero((int)M.x_mats.size());
      ei[i] = 1;
      QVec sei = rs.reflect_E(s, ei);
      QMat sx(d, d);
      for (int j = 0; j < (int)M.x_mats.size(); ++j)
        sx = sx + M.x_mats[j].scaled(sei[j]);
      QMat lhs = M.x_mats[i] * M.t_mats[s] - M.t_mats[s] * sx;
      QMat rhs = QMat::id(d).scaled(G.mu(s) * dot(ei, rs.simple_cos[s]) * M.r_scalar);
      if (lhs != rhs) return fail("cross relation fails at s=" + std::to_string(s));
    }
  return true;
}

GradedModule gm_principal_series(const GradedHecke& G, const QVec& sigma, const Rat& r) {
  const RootSystem& rs = G.rs();
  size_t nw = rs.W.size();
  GradedModule M;
  M.dim = (int)nw;
  M.r_scalar = r;
  // h (t_w (x) 1) = sum of normal form coefficients evaluated at (sigma, r)
  for (int s = 0; s < rs.nsimple(); ++s) {
    QMat mat((int)nw, (int)nw);
    for (size_t w = 0; w < nw; ++w) {
      GHElt img = G.mult(G.t(s), G.tw((int)w));
      for (const auto& [u, p] : img.c) mat.at(u, (int)w) += p.eval(sigma, r);
    }
    M.t_mats.push_back(mat);
  }
  for (int i = 0; i < G.nvars(); ++i) {
    QVec ei = qvec_zero(G.nvars());
    ei[i] = 1;
    QMat mat((int)nw, (int)nw);
    for (size_t w = 0; w < nw; ++w) {
      GHElt img = G.mult(G.x_lin(ei), G.tw((int)w));
      for (const auto& [u, p] : img.c) mat.at(u, (int)w) += p.eval(sigma, r);
    }
    M.x_mats.push_back(mat);
  }
  for (size_t w = 0; w < nw; ++w) M.weight_candidates.push_back(rs.act_D((int)w, sigma));
  return M;
}

GradedModule gm_character(const GradedHecke& G, const QVec& sigma, const Rat& r,
                          int tsign) {
  GradedModule M;
  M.dim = 1;
  M.r_scalar = r;
  for (int s = 0; s < G.rs().nsimple(); ++s)
    M.t_mats.push_back(QMat::id(1).scaled(Rat(tsign)));
  for (int i = 0; i < G.nvars(); ++i) M.x_mats.push_back(QMat::id(1).scaled(sigma[i]));
  M.weight_candidates.push_back(sigma);
  return M;
}

GradedModule gm_twist(const GradedModule& U, const QVec& nu) {
  GradedModule M = U;
  for (size_t i = 0; i < M.x_mats.size(); ++i)
    M.x_mats[i] = M.x_mats[i] + QMat::id(M.dim).scaled(nu[i]);
  M.weight_candidates.clear();
  for (const auto& w : U.weight_candidates)
    M.weight_candidates.push_back(qvec_add(w, nu));
  return M;
}

GradedModule gm_restrict(const GradedHecke& G, const std::vector<int>& P,
                         const GradedModule& M) {
  GradedModule R = M;
  R.t_mats.clear();
  for (int s : P) R.t_mats.push_back(M.t_mats[s]);
  return R;
}

GradedModule gm_induce(const GradedHecke& G, const GradedHecke& GP,
                       const std::vector<int>& P, const GradedModule& U) {
  const RootSystem& rs = G.rs();
  std::vector<int> reps = rs.min_coset_reps(P);
  std::vector<int> pelems = rs.parabolic_elements(P);
  std::vector<bool> in_p(rs.W.size(), false);
  for (int w : pelems) in_p[w] = true;
  // w = c v with c the unique minimal representative, v in W_P
  std::vector<int> rep_of(rs.W.size(), -1), par_of(rs.W.size(), -1);
  for (size_t w = 0; w < rs.W.size(); ++w)
    for (int c : reps) {
      int v = rs.weyl_mult(rs.weyl_inverse(c), (int)w);
      if (in_p[v]) {
        rep_of[w] = c;
        par_of[w] = v;
        break;
      }
    }
  int nc = (int)reps.size(), du = U.dim;
  std::map<int, int> rep_pos;
  for (int i = 0; i < nc; ++i) rep_pos[reps[i]] = i;

  GradedModule M;
  M.dim = nc * du;
  M.r_scalar = U.r_scalar;

  // simple index inside GP for v's reduced word translation
  std::map<int, int> p_index;
  for (size_t j = 0; j < P.size(); ++j) p_index[P[j]] = (int)j;

  auto act_block = [&](const GHElt& gen) {
    QMat mat(nc * du, nc * du);
    for (int ci = 0; ci < nc; ++ci) {
      GHElt img = G.mult(gen, G.tw(reps[ci]));
      // split each t_w p into t_c (t_v p) and act by t_v p on U
      std::map<std::pair<int, int>, GHElt> blocks;  // (dest rep pos, v) -> poly part
      for (const auto& [w, p] : img.c) {
        int c2 = rep_pos.at(rep_of[w]);
        int v = par_of[w];
        blocks[{c2, v}].add(0, p);
      }
      for (const auto& [key, pelt] : blocks) {
        auto [c2, v] = key;
        QMat hp = U.act(GP, pelt);  // polynomial part
        // then t_v through its reduced word in the ambient group
        QMat tv = QMat::id(du);
        for (int s : rs.W[v].word) tv = tv * U.t_mats[p_index.at(s)];
        QMat blockmat = tv * hp;
        for (int i = 0; i < du; ++i)
          for (int j = 0; j < du; ++j)
            mat.at(c2 * du + i, ci * du + j) += blockmat.at(i, j);
      }
    }
    return mat;
  };

  for (int s = 0; s < rs.nsimple(); ++s) M.t_mats.push_back(act_block(G.t(s)));
  for (int i = 0; i < G.nvars(); ++i) {
    QVec ei = qvec_zero(G.nvars());
    ei[i] = 1;
    M.x_mats.push_back(act_block(G.x_lin(ei)));
  }
  std::set<QVec> cands;
  for (const auto& w0 : U.weight_candidates)
    for (size_t wi = 0; wi < rs.W.size(); ++wi) cands.insert(rs.act_D((int)wi, w0));
  M.weight_candidates.assign(cands.begin(), cands.end());
  return M;
}

GradedModule gm_pullback(const GradedHecke& G, const GHMap& m, const GradedModule& M) {
  GradedModule N = M;
  for (int s = 0; s < G.rs().nsimple(); ++s)
    N.t_mats[s] = M.act(G, apply_ghmap(G, m, G.t(s)));
  for (int i = 0; i < G.nvars(); ++i) {
    QVec ei = qvec_zero(G.nvars());
    ei[i] = 1;
    N.x_mats[i] = M.act(G, apply_ghmap(G, m, G.x_lin(ei)));
  }
  N.r_scalar = M.r_scalar * Rat(m.rsign);
  std::set<QVec> cands;
  QMat xt = m.xmat.transpose();
  for (const auto& w : M.weight_candidates) cands.insert(xt.apply(w));
  N.weight_candidates.assign(cands.begin(), cands.end());
  return N;
}

QMat gm_submodule_closure(const GradedModule& M, const QMat& seeds) {
  SpanTracker span;
  std::vector<QVec> vecs;
  auto push = [&](const QVec& v) {
    if (span.try_add(v)) {
      vecs.push_back(v);
      return true;
    }
    return false;
  };
  for (int j = 0; j < seeds.nc; ++j) {
    QVec v(M.dim);
    for (int i = 0; i < M.dim; ++i) v[i] = seeds.at(i, j);
    push(v);
  }
  auto gens = generator_mats(M);
  size_t frontier = 0;
  while (frontier < vecs.size()) {
    size_t upto = vecs.size();
    for (size_t i = frontier; i < upto; ++i)
      for (const auto& g : gens) push(g.apply(vecs[i]));
    frontier = upto;
  }
  return columns_to_basis(vecs);
}

namespace {

// invertible [B | C] with C completing the submodule basis by standard vectors
QMat basis_completion(int d, const QMat& B) {
  SpanTracker span;
  for (int j = 0; j < B.nc; ++j) {
    QVec v(d);
    for (int i = 0; i < d; ++i) v[i] = B.at(i, j);
    if (!span.try_add(v)) throw std::logic_error("basis_completion: dependent basis");
  }
  QMat U(d, d);
  for (int j = 0; j < B.nc; ++j)
    for (int i = 0; i < d; ++i) U.at(i, j) = B.at(i, j);
  int col = B.nc;
  for (int i = 0; i < d && col < d; ++i) {
    QVec e = qvec_zero(d);
    e[i] = 1;
    if (span.try_add(e)) U.at(i, col++) = 1;
  }
  if (col != d) throw std::logic_error("basis_completion: failed");
  return U;
}

GradedModule transform_block(const GradedModule& M, const QMat& B, bool take_sub) {
  int d = M.dim, k = B.nc;
  QMat U = basis_completion(d, B);
  auto Ui = U.inverse();
  if (!Ui) throw std::logic_error("transform_block: singular change of basis");
  GradedModule out;
  out.dim = take_sub ? k : d - k;
  out.r_scalar = M.r_scalar;
  out.weight_candidates = M.weight_candidates;
  auto conv = [&](const QMat& m) {
    QMat t = (*Ui) * m * U;
    QMat res(out.dim, out.dim);
    int off = take_sub ? 0 : k;
    for (int i = 0; i < out.dim; ++i)
      for (int j = 0; j < out.dim; ++j) res.at(i, j) = t.at(off + i, off + j);
    return res;
  };
  for (const auto& t : M.t_mats) out.t_mats.push_back(conv(t));
  for (const auto& x : M.x_mats) out.x_mats.push_back(conv(x));
  return out;
}

}  // namespace

GradedModule gm_sub(const GradedModule& M, const QMat& basis) {
  return transform_block(M, basis, true);
}

GradedModule gm_quotient(const GradedModule& M, const QMat& sub_basis) {
  return transform_block(M, sub_basis, false);
}

QMat gm_radical_submodule(const GradedHecke& G, const GradedModule& M) {
  auto basis = algebra_closure(M);
  int n = (int)basis.size();
  int d = M.dim;
  // tr(B_i B_j) accumulated entrywise, no product matrix; form is symmetric
  QMat gram(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j) {
      Rat s(0);
      for (int a = 0; a < d; ++a)
        for (int b = 0; b < d; ++b) s += basis[i].at(a, b) * basis[j].at(b, a);
      gram.at(i, j) = s;
      gram.at(j, i) = s;
    }
  QMat ker = gram.kernel();
  // columns of every radical element span rad(A) M, already a submodule
  std::vector<QVec> cols;
  for (int c = 0; c < ker.nc; ++c) {
    QMat r(M.dim, M.dim);
    for (int k = 0; k < n; ++k)
      if (ker.at(k, c) != 0) r = r + basis[k].scaled(ker.at(k, c));
    for (int j = 0; j < M.dim; ++j) {
      QVec col(M.dim);
      for (int i = 0; i < M.dim; ++i) col[i] = r.at(i, j);
      cols.push_back(col);
    }
  }
  return columns_to_basis(cols);
}

GradedModule gm_head(const GradedHecke& G, const GradedModule& M) {
  QMat rad = gm_radical_submodule(G, M);
  if (rad.nc == 0) return M;
  return gm_quotient(M, rad);
}

namespace {

void split_semisimple(const GradedHecke& G, const GradedModule& M,
                      std::vector<GradedModule>& out) {
  if (M.dim == 0) return;
  auto comm = commutant(M);
  if (comm.size() == 1) {
    out.push_back(M);
    return;
  }
  // elements of the commutant have submodule eigenspaces; scan for a rational
  // split, deterministically
  std::vector<QMat> probes = comm;
  for (size_t i = 0; i + 1 < comm.size(); ++i) probes.push_back(comm[i] + comm[i + 1]);
  for (size_t i = 0; i + 1 < comm.size(); ++i)
    probes.push_back(comm[i] + comm[i + 1].scaled(Rat(2)));
  for (const auto& z : probes) {
    auto mp = min_poly(z);
    if (mp.size() <= 2) continue;  // scalar, no split
    for (const Rat& lam : rational_roots(mp)) {
      QMat ker = (z - QMat::id(M.dim).scaled(lam)).kernel();
      if (ker.nc == 0 || ker.nc == M.dim) continue;
      split_semisimple(G, gm_sub(M, ker), out);
      split_semisimple(G, gm_quotient(M, ker), out);
      return;
    }
  }
  throw field_extension_needed("split_semisimple: no rational eigenvalue splits a " +
                               std::to_string(M.dim) + " dim semisimple module");
}

}  // namespace

bool gm_is_simple(const GradedHecke& G, const GradedModule& M) {
  // zero radical with scalar commutant is the same as the action algebra
  // filling End(M), by double centralizer; one closure, no Gram solve
  (void)G;
  if (M.dim == 0) return false;
  return (int)algebra_closure(M).size() == M.dim * M.dim;
}

std::vector<std::pair<GradedModule, int>> gm_composition_factors(const GradedHecke& G,
                                                                 const GradedModule& M) {
  std::vector<GradedModule> flat;
  GradedModule cur = M;
  while (cur.dim > 0) {
    QMat rad = gm_radical_submodule(G, cur);
    GradedModule layer = rad.nc == 0 ? cur : gm_quotient(cur, rad);
    split_semisimple(G, layer, flat);
    if (rad.nc == 0) break;
    cur = gm_sub(cur, rad);
  }
  std::vector<std::pair<GradedModule, int>> grouped;
  for (auto& f : flat) {
    bool found = false;
    for (auto& [rep, mult] : grouped)
      if (rep.dim == f.dim && gm_isomorphic(G, rep, f)) {
        ++mult;
        found = true;
        break;
      }
    if (!found) grouped.push_back({f, 1});
  }
  return grouped;
}

bool gm_isomorphic(const GradedHecke& G, const GradedModule& A, const GradedModule& B) {
  if (A.dim != B.dim || A.r_scalar != B.r_scalar) return false;
  int d = A.dim;
  auto ga = generator_mats(A);
  auto gb = generator_mats(B);
  if (ga.size() != gb.size()) return false;
  // X with  a X = X b  for all generator pairs
  QMat S((int)ga.size() * d * d, d * d);
  int row = 0;
  for (size_t g = 0; g < ga.size(); ++g) {
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < d; ++j) {
        for (int k = 0; k < d; ++k) {
          S.at(row, k * d + j) += ga[g].at(i, k);
          S.at(row, i * d + k) -= gb[g].at(k, j);
        }
        ++row;
      }
  }
  QMat ker = S.kernel();
  auto unflat = [&](int c) {
    QMat X(d, d);
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < d; ++j) X.at(i, j) = ker.at(i * d + j, c);
    return X;
  };
  for (int c = 0; c < ker.nc; ++c)
    if (unflat(c).rank() == d) return true;
  // combinations can be invertible even if no single basis member is
  for (int c1 = 0; c1 < ker.nc; ++c1)
    for (int c2 = c1 + 1; c2 < ker.nc; ++c2)
      for (long t : {1L, -1L, 2L})
        if ((unflat(c1) + unflat(c2).scaled(Rat(t))).rank() == d) return true;
  return false;
}

GradedModule gm_langlands_J(const GradedHecke& G, const GradedHecke& GP,
                            const std::vector<int>& P, const GradedModule& U_boxtimes_nu) {
  return gm_head(G, gm_induce(G, GP, P, U_boxtimes_nu));
}

}  // namespace hecke

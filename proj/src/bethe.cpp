#include "psca/bethe.hpp"

#include <algorithm>

#include "psca/tropical.hpp"

namespace psca {

namespace {

int cartan(int a, int b) { return a == b ? 2 : (std::abs(a - b) == 1 ? -1 : 0); }

struct Idx {
  int a, i, alpha;
};

std::vector<Idx> h_index(const SolitonContent& mu) {
  std::vector<Idx> idx;
  for (int a = 1; a <= mu.n; ++a)
    for (int i = 1; i <= mu.g(a); ++i)
      for (int alpha = 1; alpha <= mu.mult(a, i); ++alpha)
        idx.push_back({a, i, alpha});
  return idx;
}

Rat frac(const Rat& x) {
  Int num = x.get_num(), den = x.get_den();
  Int q;
  mpz_fdiv_q(q.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  Rat f = x - q;
  f.canonicalize();
  return f;
}

}  // namespace

BetheData make_bethe(const SolitonContent& mu) {
  BetheData bd;
  bd.mu = mu;
  auto idx = h_index(mu);
  bd.G = (int)idx.size();
  bd.A.assign(bd.G, IVec(bd.G, 0));
  for (int u = 0; u < bd.G; ++u)
    for (int v = 0; v < bd.G; ++v) {
      long e = (long)cartan(idx[u].a, idx[v].a) *
               std::min(mu.len(idx[u].a, idx[u].i),
                        mu.len(idx[v].a, idx[v].i));
      if (idx[u].a == idx[v].a && idx[u].i == idx[v].i) e -= 1;
      if (u == v)
        e += vacancy(mu, idx[u].a, idx[u].i) + mu.mult(idx[u].a, idx[u].i);
      bd.A[u][v] = e;
    }
  return bd;
}

RVec string_centers(const BetheData& bd, const ExtRC& x) {
  auto idx = h_index(bd.mu);
  RVec rhs(bd.G);
  int u = 0;
  for (int a = 1; a <= bd.mu.n; ++a)
    for (int i = 1; i <= bd.mu.g(a); ++i)
      for (int alpha = 1; alpha <= bd.mu.mult(a, i); ++alpha, ++u)
        rhs[u] = Rat(vacancy(bd.mu, a, i) + bd.mu.mult(a, i) + 1, 2) +
                 x.win[a - 1][i - 1][alpha - 1] + (alpha - 1);
  return solve_exact(bd.A, rhs);
}

std::vector<std::vector<Rat>> canonical_centers(const BetheData& bd,
                                                const RVec& u) {
  std::vector<std::vector<Rat>> out;
  int k = 0;
  for (int a = 1; a <= bd.mu.n; ++a)
    for (int i = 1; i <= bd.mu.g(a); ++i) {
      std::vector<Rat> block;
      for (int alpha = 1; alpha <= bd.mu.mult(a, i); ++alpha)
        block.push_back(frac(u[k++]));
      std::sort(block.begin(), block.end());
      out.push_back(block);
    }
  return out;
}

Rat eigenvalue_phase(const BetheData& bd, const RVec& u, int r, int l) {
  IVec h = h_vector_G(bd.mu, r, l);
  Rat s = 0;
  for (int k = 0; k < bd.G; ++k) s += h[k] * (u[k] + Rat(1, 2));
  s.canonicalize();
  return s;
}

Int n_prime(const BetheData& bd, int r, int l) {
  IVec h = h_vector_G(bd.mu, r, l);
  Int det = det_bareiss(bd.A);
  Int N = 1;
  bool any = false;
  for (int col = 0; col < bd.G; ++col) {
    IMat M = bd.A;
    for (int row = 0; row < bd.G; ++row) M[row][col] = h[row];
    Int d = det_bareiss(M);
    if (d == 0) continue;
    any = true;
    Rat q(det, d);
    q.canonicalize();
    // reduced denominator of the Cramer component det A[col] / det A
    N = ilcm(N, abs(q.get_num()));
  }
  if (!any) throw std::runtime_error("all replaced determinants vanish");
  return N;
}

bool angle_equal(const ExtRC& x, const ExtRC& y) {
  if (x.mu != y.mu) return false;
  BetheData bd = make_bethe(x.mu);
  return canonical_centers(bd, string_centers(bd, x)) ==
         canonical_centers(bd, string_centers(bd, y));
}

}  // namespace psca

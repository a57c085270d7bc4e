#include "psca/angle.hpp"

#include <algorithm>
#include <deque>
#include <numeric>

namespace psca {

namespace {

int cartan(int a, int b) { return a == b ? 2 : (std::abs(a - b) == 1 ? -1 : 0); }

long floordiv(long a, long b) {
  long q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

}  // namespace

long ExtRC::at(int a, int i, long alpha) const {
  const auto& w = win[a - 1][i - 1];
  long m = (long)w.size();
  long q = floordiv(alpha - 1, m);
  return w[alpha - 1 - q * m] + q * vacancy(mu, a, i);
}

std::vector<long> ExtRC::omega() const {
  std::vector<long> out;
  for (const auto& color : win)
    for (const auto& w : color) out.push_back(w.front());
  return out;
}

std::vector<std::vector<long>> ExtRC::lambda() const {
  std::vector<std::vector<long>> out;
  for (const auto& color : win)
    for (const auto& w : color) {
      std::vector<long> lam(w.size());
      for (size_t k = 0; k < w.size(); ++k) lam[k] = w[k] - w.front();
      out.push_back(lam);
    }
  return out;
}

void ExtRC::shift_time(int r, int l, long t) {
  for (int i = 1; i <= mu.g(r); ++i) {
    long d = t * (l < 1 ? mu.len(r, i) : std::min(l, mu.len(r, i)));
    for (long& v : win[r - 1][i - 1]) v += d;
  }
}

void ExtRC::slide(int a, int i, long k) {
  std::vector<long> own(win[a - 1][i - 1].size());
  for (size_t b = 0; b < own.size(); ++b) own[b] = at(a, i, (long)b + 1 + k);
  win[a - 1][i - 1] = own;
  for (int bcol = 1; bcol <= mu.n; ++bcol) {
    int c = cartan(a, bcol);
    if (c == 0) continue;
    for (int j = 1; j <= mu.g(bcol); ++j) {
      long d = k * c * std::min(mu.len(a, i), mu.len(bcol, j));
      for (long& v : win[bcol - 1][j - 1]) v += d;
    }
  }
}

bool ExtRC::reducible() const {
  for (int a = 1; a <= mu.n; ++a)
    for (int i = 1; i <= mu.g(a); ++i) {
      const auto& w = win[a - 1][i - 1];
      if (w.front() < 0 || w.back() > vacancy(mu, a, i)) return false;
    }
  return true;
}

RiggedConfig ExtRC::to_rigged() const {
  if (!reducible())
    throw InvalidRiggedConfiguration("window outside the fundamental domain");
  std::vector<std::vector<long>> rig;
  for (const auto& color : win)
    for (const auto& w : color) rig.push_back(w);
  return make_rigged(mu, rig);
}

ExtRC extend(const RiggedConfig& rc) {
  ExtRC x;
  x.mu = rc.content();
  x.win.resize(x.mu.n);
  for (int a = 1; a <= x.mu.n; ++a)
    for (int i = 1; i <= x.mu.g(a); ++i)
      x.win[a - 1].push_back(rc.block_riggings(a, x.mu.len(a, i)));
  return x;
}

long order_of_symmetry(int m, long p, const std::vector<long>& lambda) {
  auto ext = [&](long alpha) {  // 1-based
    long q = floordiv(alpha - 1, m);
    return lambda[alpha - 1 - q * m] + q * p;
  };
  long g = std::gcd((long)m, p);
  if (g == 0) g = std::max<long>((long)m, std::abs(p));
  for (long gamma = g; gamma >= 1; --gamma) {
    if (g % gamma) continue;
    bool ok = true;
    for (int alpha = 1; alpha <= m && ok; ++alpha)
      ok = ext(alpha + (long)m / gamma) == lambda[alpha - 1] + p / gamma;
    if (ok) return gamma;
  }
  return 1;
}

std::vector<long> gamma_of(const ExtRC& x) {
  std::vector<long> out;
  auto lam = x.lambda();
  size_t k = 0;
  for (int a = 1; a <= x.mu.n; ++a)
    for (int i = 1; i <= x.mu.g(a); ++i)
      out.push_back(order_of_symmetry(x.mu.mult(a, i), vacancy(x.mu, a, i),
                                      lam[k++]));
  return out;
}

int g_total(const SolitonContent& mu) {
  int g = 0;
  for (int a = 1; a <= mu.n; ++a) g += mu.g(a);
  return g;
}

IVec h_vector(const SolitonContent& mu, int r, int l) {
  IVec h;
  for (int a = 1; a <= mu.n; ++a)
    for (int i = 1; i <= mu.g(a); ++i)
      h.push_back(a == r ? Int(l < 1 ? mu.len(a, i)
                                     : std::min(l, mu.len(a, i)))
                         : Int(0));
  return h;
}

IMat f_matrix(const SolitonContent& mu) {
  int g = g_total(mu);
  IMat f(g, IVec(g, 0));
  int row = 0;
  for (int a = 1; a <= mu.n; ++a)
    for (int i = 1; i <= mu.g(a); ++i, ++row) {
      int col = 0;
      for (int b = 1; b <= mu.n; ++b)
        for (int j = 1; j <= mu.g(b); ++j, ++col) {
          long v = (long)cartan(a, b) * std::min(mu.len(a, i), mu.len(b, j)) *
                   mu.mult(b, j);
          if (a == b && i == j) v += vacancy(mu, a, i);
          f[row][col] = v;
        }
    }
  return f;
}

IMat f_gamma(const SolitonContent& mu, const std::vector<long>& gamma) {
  IMat f = f_matrix(mu);
  for (size_t c = 0; c < f.size(); ++c)
    for (auto& row : f) {
      if (row[c] % gamma[c] != 0)
        throw std::runtime_error("f column not divisible by gamma");
      row[c] /= gamma[c];
    }
  return f;
}

Int dynamical_period(const IMat& f_gam, const IVec& h) {
  bool zero = std::all_of(h.begin(), h.end(),
                          [](const Int& v) { return v == 0; });
  if (zero) throw std::runtime_error("zero direction has no period");
  RVec x = solve_exact(f_gam, h);
  Int N = 1;
  for (const auto& v : x) N = ilcm(N, v.get_den());
  return N;
}

Int dynamical_period(const SolitonContent& mu, const std::vector<long>& gamma,
                     int r, int l) {
  return dynamical_period(f_gamma(mu, gamma), h_vector(mu, r, l));
}

Int omega_count(const SolitonContent& mu) {
  Rat res = det_bareiss(f_matrix(mu));
  for (int a = 1; a <= mu.n; ++a)
    for (int i = 1; i <= mu.g(a); ++i) {
      int m = mu.mult(a, i);
      res *= Rat(binom_ext(Int(vacancy(mu, a, i)) + m - 1, m - 1), m);
    }
  res.canonicalize();
  if (res.get_den() != 1)
    throw std::runtime_error("omega count is not an integer");
  return res.get_num();
}

Int lambda_count(int m, long p, long gamma) {
  long g = std::gcd((long)m, p);
  if (g == 0 || g % gamma != 0)
    return (gamma == 1 && g == 0) ? binom_ext(Int(p + m - 1), m - 1) : Int(0);
  Int total = 0;
  for (long beta = gamma; beta <= g; ++beta) {
    if (beta % gamma || g % beta) continue;
    total += mobius(beta / gamma) *
             binom_ext(Int((p + m) / beta - 1), (long)(m / beta - 1));
  }
  return total;
}

Int lambda_count_brute(int m, long p, long gamma) {
  if (p < 0) throw std::runtime_error("negative vacancy");
  std::vector<long> lam(m, 0);
  Int count = 0;
  auto rec = [&](auto&& self, int k) -> void {
    if (k == m) {
      if (order_of_symmetry(m, p, lam) == gamma) ++count;
      return;
    }
    for (long v = lam[k - 1]; v <= p; ++v) {
      lam[k] = v;
      self(self, k + 1);
    }
  };
  if (m == 1) return order_of_symmetry(1, p, lam) == gamma ? 1 : 0;
  rec(rec, 1);
  return count;
}

std::vector<DecompTerm> decompose_level_set(const SolitonContent& mu) {
  struct Block {
    int m;
    long p;
  };
  std::vector<Block> blocks;
  for (int a = 1; a <= mu.n; ++a)
    for (int i = 1; i <= mu.g(a); ++i)
      blocks.push_back({mu.mult(a, i), vacancy(mu, a, i)});
  std::vector<std::vector<long>> divs;
  for (const auto& b : blocks) {
    long g = std::gcd((long)b.m, b.p);
    divs.push_back(g == 0 ? std::vector<long>{1} : divisors(g));
  }
  std::vector<DecompTerm> out;
  std::vector<long> gamma(blocks.size(), 1);
  auto rec = [&](auto&& self, size_t k) -> void {
    if (k == blocks.size()) {
      Rat orbits = 1;
      for (size_t i = 0; i < blocks.size(); ++i)
        orbits *= Rat(lambda_count(blocks[i].m, blocks[i].p, gamma[i]),
                      Int(blocks[i].m / gamma[i]));
      orbits.canonicalize();
      if (orbits == 0) return;
      if (orbits.get_den() != 1)
        throw std::runtime_error("orbit count is not an integer");
      DecompTerm term;
      term.gamma = gamma;
      term.torus = det_bareiss(f_gamma(mu, gamma));
      term.orbits = orbits.get_num();
      out.push_back(term);
      return;
    }
    for (long d : divs[k]) {
      gamma[k] = d;
      self(self, k + 1);
    }
  };
  rec(rec, 0);
  return out;
}

std::vector<std::vector<int>> xi_indices(const SolitonContent& mu) {
  std::vector<std::vector<int>> xi(mu.n);
  for (int a = 1; a <= mu.n; ++a)
    for (int i = 1; i <= mu.g(a); ++i) {
      if (block_null(mu, a, i) && block_convex(mu, a, i))
        xi[a - 1].push_back(mu.len(a, i));
      else
        xi[a - 1].push_back((i < mu.g(a) ? mu.len(a, i + 1) : 0) + 1);
    }
  return xi;
}

LatticeData general_case_lattice(const SolitonContent& mu,
                                 const std::vector<long>& gamma) {
  auto xi = xi_indices(mu);
  int g = g_total(mu);
  LatticeData ld;
  ld.basis.assign(g, IVec(g, 0));
  int col = 0;
  for (int a = 1; a <= mu.n; ++a)
    for (int i = 1; i <= mu.g(a); ++i, ++col) {
      IVec h = h_vector(mu, a, xi[a - 1][i - 1]);
      for (int r = 0; r < g; ++r) ld.basis[r][col] = h[r];
    }
  ld.volume = 1;
  for (int a = 1; a <= mu.n; ++a)
    for (int i = 1; i <= mu.g(a); ++i)
      if (block_null(mu, a, i) && block_convex(mu, a, i))
        ld.volume *= mu.len(a, i) - (i < mu.g(a) ? mu.len(a, i + 1) : 0);
  Int det = det_bareiss(f_gamma(mu, gamma));
  if (det % ld.volume != 0)
    throw std::runtime_error("lattice volume does not divide det F_gamma");
  ld.index = det / ld.volume;
  return ld;
}

ExtRC direct_scattering(const Path& p, int n) {
  auto mu_opt = soliton_content(p, n);
  if (!mu_opt) throw std::runtime_error("path has no soliton content");
  const SolitonContent mu = *mu_opt;
  auto xi = xi_indices(mu);
  std::vector<std::pair<int, int>> gens = {{1, 1}};
  for (int a = 1; a <= mu.n; ++a)
    for (int x : xi[a - 1])
      if (std::find(gens.begin(), gens.end(), std::make_pair(a, x)) ==
          gens.end())
        gens.push_back({a, x});
  std::map<Path, std::vector<long>> word;
  std::deque<Path> queue;
  word[p] = std::vector<long>(gens.size(), 0);
  queue.push_back(p);
  Path high;
  std::vector<long> high_word;
  bool found = false;
  while (!queue.empty() && !found) {
    Path cur = queue.front();
    queue.pop_front();
    if (path_stats(cur, n).is_highest) {
      high = cur;
      high_word = word[cur];
      found = true;
      break;
    }
    for (size_t gi = 0; gi < gens.size() && !found; ++gi) {
      auto res = evolve(gens[gi].first, gens[gi].second, cur, n);
      if (!res.ok()) throw std::runtime_error("generator not evolvable");
      if (word.count(res.out)) continue;
      auto w = word[cur];
      w[gi]++;
      word[res.out] = w;
      queue.push_back(res.out);
      if (path_stats(res.out, n).is_highest) {
        high = res.out;
        high_word = w;
        found = true;
      }
    }
  }
  if (!found) throw std::runtime_error("no highest path in orbit");
  ExtRC x = extend(kkr_forward(high, n));
  for (size_t gi = 0; gi < gens.size(); ++gi)
    if (high_word[gi]) x.shift_time(gens[gi].first, gens[gi].second,
                                    -high_word[gi]);
  return x;
}

Path inverse_scattering_word(const ExtRC& x) {
  const SolitonContent& mu = x.mu;
  RiggedConfig rc0 = make_rigged(mu, x.lambda());
  Path p = kkr_backward(rc0);
  auto xi = xi_indices(mu);
  auto gamma = gamma_of(x);
  IMat fg = f_gamma(mu, gamma);
  std::vector<long> omega = x.omega();
  int off = 0;
  for (int a = 1; a <= mu.n; ++a) {
    int ga = mu.g(a);
    IMat M(ga, IVec(ga));
    IVec rhs(ga);
    for (int j = 0; j < ga; ++j) {
      rhs[j] = omega[off + j];
      for (int i = 0; i < ga; ++i)
        M[j][i] = std::min(xi[a - 1][i], mu.len(a, j + 1));
    }
    RVec d = solve_exact(M, rhs);
    for (int i = 0; i < ga; ++i) {
      if (d[i].get_den() != 1)
        throw std::runtime_error("omega not in the evolution lattice");
      Int steps = d[i].get_num();
      Int N = dynamical_period(fg, h_vector(mu, a, xi[a - 1][i]));
      steps %= N;
      if (steps < 0) steps += N;
      long t = steps.get_si();
      for (long s = 0; s < t; ++s) {
        auto res = evolve(a, xi[a - 1][i], p, mu.n);
        if (!res.ok()) throw std::runtime_error("evolution failed");
        p = res.out;
      }
    }
    off += ga;
  }
  return p;
}

IVec reduce_mod_lattice(const IMat& f, const IVec& v) {
  RVec x = solve_exact(f, v);
  IVec out(v.size());
  for (size_t i = 0; i < x.size(); ++i) {
    Int q;
    mpz_fdiv_q(q.get_mpz_t(), x[i].get_num().get_mpz_t(),
               x[i].get_den().get_mpz_t());
    x[i] = q;
  }
  for (size_t r = 0; r < v.size(); ++r) {
    Int s = v[r];
    for (size_t c = 0; c < v.size(); ++c) s -= f[r][c] * x[c].get_num();
    out[r] = s;
  }
  return out;
}

}  // namespace psca

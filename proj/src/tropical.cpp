#include "psca/tropical.hpp"

#include <algorithm>
#include <stdexcept>

namespace psca {

namespace {

int cartan(int a, int b) { return a == b ? 2 : (std::abs(a - b) == 1 ? -1 : 0); }

ThetaData build(const SolitonContent& mu, const IVec& r) {
  ThetaData td;
  td.mu = mu;
  struct Idx {
    int a, i;
  };
  std::vector<Idx> idx;
  for (int a = 1; a <= mu.n; ++a)
    for (int i = 1; i <= mu.g(a); ++i)
      for (int alpha = 1; alpha <= mu.mult(a, i); ++alpha)
        idx.push_back({a, i});
  td.G = (int)idx.size();
  td.B.assign(td.G, IVec(td.G, 0));
  td.p.resize(td.G);
  for (int u = 0; u < td.G; ++u) {
    td.p[u] = vacancy(mu, idx[u].a, idx[u].i);
    for (int v = 0; v < td.G; ++v) {
      long e = (long)cartan(idx[u].a, idx[v].a) *
               std::min(mu.len(idx[u].a, idx[u].i),
                        mu.len(idx[v].a, idx[v].i));
      if (u == v) e += td.p[u].get_si();
      td.B[u][v] = e;
    }
  }
  td.r = r;
  td.Binv = inverse_exact(td.B);
  Rat tr = 0;
  for (int u = 0; u < td.G; ++u) tr += td.Binv[u][u];
  td.lambda_lb = 1 / tr;
  td.lambda_lb.canonicalize();
  return td;
}

}  // namespace

ThetaData make_theta(const ExtRC& x) {
  IVec r;
  for (const auto& color : x.win)
    for (const auto& w : color)
      for (long v : w) r.push_back(v);
  return build(x.mu, r);
}

ThetaData make_theta(const SolitonContent& mu) {
  int G = 0;
  for (int a = 1; a <= mu.n; ++a)
    for (int i = 1; i <= mu.g(a); ++i) G += mu.mult(a, i);
  return build(mu, IVec(G, 0));
}

IVec h_vector_G(const SolitonContent& mu, int c, int l) {
  IVec h;
  for (int a = 1; a <= mu.n; ++a)
    for (int i = 1; i <= mu.g(a); ++i)
      for (int alpha = 1; alpha <= mu.mult(a, i); ++alpha)
        h.push_back(a == c ? Int(l < 1 ? mu.len(a, i)
                                       : std::min(l, mu.len(a, i)))
                           : Int(0));
  return h;
}

Int theta2(const ThetaData& td, const IVec& z2) {
  const int G = td.G;
  // continuous minimizer of f2(x) = txBx + t(z2)x
  RVec xs(G, 0);
  for (int u = 0; u < G; ++u) {
    Rat s = 0;
    for (int v = 0; v < G; ++v) s += td.Binv[u][v] * z2[v];
    xs[u] = -s / 2;
    xs[u].canonicalize();
  }
  IVec c(G);
  RVec e(G);  // c - x*
  for (int u = 0; u < G; ++u) {
    // nearest integer
    Int num = xs[u].get_num(), den = xs[u].get_den();
    Int q;
    mpz_fdiv_q(q.get_mpz_t(), Int(2 * num + den).get_mpz_t(),
               Int(2 * den).get_mpz_t());
    c[u] = q;
    e[u] = Rat(c[u]) - xs[u];
    e[u].canonicalize();
  }
  // quad = t(e) B e = f2(c) - f2(x*)
  Rat quad = 0;
  for (int u = 0; u < G; ++u) {
    Rat s = 0;
    for (int v = 0; v < G; ++v) s += td.B[u][v] * e[v];
    quad += e[u] * s;
  }
  quad.canonicalize();
  Int f2c = 0;
  IVec w(G);  // gradient 2Bc + z2 at the center; stays small
  for (int u = 0; u < G; ++u) {
    Int s = 0;
    for (int v = 0; v < G; ++v) s += td.B[u][v] * c[v];
    f2c += c[u] * s + z2[u] * c[u];
    w[u] = 2 * s + z2[u];
  }
  std::vector<long> wl(G), Bl;
  Bl.resize((size_t)G * G);
  for (int u = 0; u < G; ++u) {
    wl[u] = w[u].get_si();
    for (int v = 0; v < G; ++v) Bl[(size_t)u * G + v] = td.B[u][v].get_si();
  }
  for (long R = 1;; ++R) {
    long best = 0;  // d = 0 is in every box
    std::vector<long> d(G, 0), s(G, 0);  // s_u = sum_{v<depth} B[u][v] d_v
    auto rec = [&](auto&& self, int depth, long acc) -> void {
      if (depth == G) {
        if (acc < best) best = acc;
        return;
      }
      for (long dv = -R; dv <= R; ++dv) {
        // acc' = acc + B[depth][depth] dv^2 + 2 dv s[depth] + w[depth] dv
        long a2 = acc + Bl[(size_t)depth * G + depth] * dv * dv +
                  2 * dv * s[depth] + wl[depth] * dv;
        if (dv != 0)
          for (int u = depth + 1; u < G; ++u)
            s[u] += Bl[(size_t)u * G + depth] * dv;
        self(self, depth + 1, a2);
        if (dv != 0)
          for (int u = depth + 1; u < G; ++u)
            s[u] -= Bl[(size_t)u * G + depth] * dv;
      }
    };
    rec(rec, 0, 0);
    // any point outside the box satisfies f2 >= f2(x*) + lb (R + 1/2)^2
    Rat margin = td.lambda_lb * Rat(2 * R + 1, 2) * Rat(2 * R + 1, 2);
    if (margin >= quad + best) return -(f2c + best);
  }
}

Int tau(const ThetaData& td, long k, int d, bool bar) {
  const int G = td.G;
  IVec lin(G);
  IVec h1 = h_vector_G(td.mu, 1, 1);
  IVec hd = h_vector_G(td.mu, d, 0);
  IVec hbar = h_vector_G(td.mu, 1, 0);
  for (int u = 0; u < G; ++u) {
    lin[u] = td.r[u] - k * h1[u] + hd[u];
    if (bar) lin[u] += hbar[u];
  }
  Int best = 0;
  for (long mask = 0; mask < (1L << G); ++mask) {
    Int val = 0;
    for (int u = 0; u < G; ++u)
      if ((mask >> u) & 1) val += lin[u];
    // quadratic part: (1/2) t(N) (B - diag p) N
    Int q = 0;
    for (int u = 0; u < G; ++u) {
      if (!((mask >> u) & 1)) continue;
      for (int v = 0; v < G; ++v)
        if ((mask >> v) & 1) q += td.B[u][v] - (u == v ? td.p[u] : 0);
    }
    val += q / 2;
    if (val < best) best = val;
  }
  return -best;
}

Int tau_finite(const ThetaData& td, int M, long k, int d) {
  const int G = td.G;
  IVec lin(G);
  IVec h1 = h_vector_G(td.mu, 1, 1);
  IVec hd = h_vector_G(td.mu, d, 0);
  for (int u = 0; u < G; ++u) lin[u] = td.r[u] - k * h1[u] + hd[u];
  Int best;
  bool first = true;
  std::vector<long> nvec(G, 0);
  auto rec = [&](auto&& self, int depth) -> void {
    if (depth == G) {
      Int val = 0;
      for (int u = 0; u < G; ++u) {
        Int q = 0;
        for (int v = 0; v < G; ++v)
          q += (td.B[u][v] - (u == v ? td.p[u] : 0)) * nvec[v];
        val += q * nvec[u];
      }
      val /= 2;
      for (int u = 0; u < G; ++u)
        val += lin[u] * nvec[u] +
               td.p[u] * ((long)nvec[u] * (nvec[u] - 1) / 2);
      if (first || val < best) best = val, first = false;
      return;
    }
    for (long v = 0; v < M; ++v) {
      nvec[depth] = v;
      self(self, depth + 1);
    }
  };
  rec(rec, 0);
  return -best;
}

namespace {

// theta2 values at z2 = 2r - p - 2k h1 + 2 h^(a)_inf for the digit formulas
struct Grid {
  ThetaData td;
  std::vector<IVec> hinf2;  // 2 h^(a)_inf, a = 1..n+1
  IVec base;                // 2r - p
  IVec h1_2;

  explicit Grid(const ExtRC& x) : td(make_theta(x)) {
    base.resize(td.G);
    for (int u = 0; u < td.G; ++u) base[u] = 2 * td.r[u] - td.p[u];
    h1_2 = h_vector_G(td.mu, 1, 1);
    for (auto& v : h1_2) v *= 2;
    for (int a = 1; a <= td.mu.n + 1; ++a) {
      IVec h = h_vector_G(td.mu, a, 0);
      for (auto& v : h) v *= 2;
      hinf2.push_back(h);
    }
  }

  Int at(long k, int a, const IVec* extra = nullptr) const {
    IVec z2(td.G);
    for (int u = 0; u < td.G; ++u) {
      z2[u] = base[u] - k * h1_2[u] + hinf2[a - 1][u];
      if (extra) z2[u] += 2 * (*extra)[u];
    }
    return theta2(td, z2);
  }
};

Path digits_to_path(const std::vector<std::vector<Int>>& x, long L, int n) {
  Path p;
  for (long k = 1; k <= L; ++k) {
    Int s = 0;
    int letter = 0;
    for (int a = 2; a <= n + 1; ++a) {
      if (x[k - 1][a - 2] != 0 && x[k - 1][a - 2] != 1)
        throw std::runtime_error("digit outside {0,1}");
      if (x[k - 1][a - 2] == 1) letter = a;
      s += x[k - 1][a - 2];
    }
    if (s > 1) throw std::runtime_error("digit sum exceeds 1");
    p.push_back(letter == 0 ? 1 : letter);
  }
  return p;
}

}  // namespace

Path theta_path(const ExtRC& x) {
  Grid grid(x);
  long L = x.mu.L;
  int n = x.mu.n;
  std::vector<std::vector<Int>> T((size_t)L + 1);
  for (long k = 0; k <= L; ++k)
    for (int a = 1; a <= n + 1; ++a) T[k].push_back(grid.at(k, a));
  std::vector<std::vector<Int>> digits(L);
  for (long k = 1; k <= L; ++k)
    for (int a = 2; a <= n + 1; ++a) {
      Int num = T[k][a - 1] - T[k - 1][a - 1] - T[k][a - 2] + T[k - 1][a - 2];
      if (num % 2 != 0) throw std::runtime_error("digit is not integral");
      digits[k - 1].push_back(num / 2);
    }
  return digits_to_path(digits, L, n);
}

Path tau_path(const ExtRC& x) {
  ThetaData td = make_theta(x);
  long L = x.mu.L;
  int n = x.mu.n;
  std::vector<std::vector<Int>> T((size_t)L + 1);
  for (long k = 0; k <= L; ++k)
    for (int d = 1; d <= n + 1; ++d) T[k].push_back(tau(td, k, d));
  std::vector<std::vector<Int>> digits(L);
  for (long k = 1; k <= L; ++k)
    for (int a = 2; a <= n + 1; ++a)
      digits[k - 1].push_back(T[k][a - 1] - T[k - 1][a - 1] - T[k][a - 2] +
                              T[k - 1][a - 2]);
  return digits_to_path(digits, L, n);
}

std::vector<long> theta_carrier(const ThetaData& td, int l, long k) {
  int n = td.mu.n;
  IVec hl = h_vector_G(td.mu, 1, l);
  Grid grid{[&] {
    ExtRC x;
    x.mu = td.mu;
    x.win.resize(td.mu.n);
    int u = 0;
    for (int a = 1; a <= td.mu.n; ++a)
      for (int i = 1; i <= td.mu.g(a); ++i) {
        std::vector<long> w;
        for (int alpha = 1; alpha <= td.mu.mult(a, i); ++alpha)
          w.push_back(td.r[u++].get_si());
        x.win[a - 1].push_back(w);
      }
    return x;
  }()};
  std::vector<long> y(n + 1, 0);
  long total = l;
  for (int a = 2; a <= n + 1; ++a) {
    Int num = grid.at(k, a) - grid.at(k, a, &hl) - grid.at(k, a - 1) +
              grid.at(k, a - 1, &hl);
    if (num % 2 != 0) throw std::runtime_error("carrier entry not integral");
    y[a - 1] = Int(num / 2).get_si();
    total -= y[a - 1];
  }
  y[0] = total;
  return y;
}

Path inverse_scattering(const ExtRC& x) {
  Path primary = theta_path(x);
  Path oracle = inverse_scattering_word(x);
  if (primary != oracle)
    throw RoutesDisagree("theta route " + path_text(primary) +
                         " vs generator-word route " + path_text(oracle));
  return primary;
}

Rat time_average(const SolitonContent& mu, int l, int a) {
  ThetaData td = make_theta(mu);
  IVec hl = h_vector_G(mu, 1, l);
  IVec d(td.G);
  IVec ha = h_vector_G(mu, a, 0);
  IVec hp = h_vector_G(mu, a - 1, 0);
  for (int u = 0; u < td.G; ++u) d[u] = hp[u] - ha[u];
  Rat res = 0;
  for (int u = 0; u < td.G; ++u) {
    Rat s = 0;
    for (int v = 0; v < td.G; ++v) s += td.Binv[u][v] * d[v];
    res += hl[u] * s;
  }
  res.canonicalize();
  return res;
}

}  // namespace psca

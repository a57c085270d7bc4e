#include "psca/exact.hpp"

#include <cassert>

namespace psca {

Int det_bareiss(IMat m) {
  const size_t n = m.size();
  if (n == 0) return 1;
  for (auto& row : m) assert(row.size() == n);
  Int sign = 1, prev = 1;
  for (size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k] == 0) {
      size_t piv = k + 1;
      while (piv < n && m[piv][k] == 0) ++piv;
      if (piv == n) return 0;
      std::swap(m[k], m[piv]);
      sign = -sign;
    }
    for (size_t i = k + 1; i < n; ++i)
      for (size_t j = k + 1; j < n; ++j) {
        m[i][j] = (m[k][k] * m[i][j] - m[i][k] * m[k][j]) / prev;
      }
    prev = m[k][k];
  }
  return sign * m[n - 1][n - 1];
}

Int det_cofactor(const IMat& m) {
  const size_t n = m.size();
  if (n == 0) return 1;
  if (n == 1) return m[0][0];
  Int total = 0;
  for (size_t c = 0; c < n; ++c) {
    IMat sub(n - 1, IVec(n - 1));
    for (size_t i = 1; i < n; ++i) {
      size_t jj = 0;
      for (size_t j = 0; j < n; ++j) {
        if (j == c) continue;
        sub[i - 1][jj++] = m[i][j];
      }
    }
    Int term = m[0][c] * det_cofactor(sub);
    if (c % 2) total -= term; else total += term;
  }
  return total;
}

RVec solve_exact(const IMat& m, const RVec& b) {
  const size_t n = m.size();
  assert(b.size() == n);
  RMat a(n, RVec(n + 1));
  for (size_t i = 0; i < n; ++i) {
    for (size_t j = 0; j < n; ++j) a[i][j] = Rat(m[i][j]);
    a[i][n] = b[i];
  }
  for (size_t k = 0; k < n; ++k) {
    size_t piv = k;
    while (piv < n && a[piv][k] == 0) ++piv;
    if (piv == n) throw SingularMatrix();
    std::swap(a[k], a[piv]);
    for (size_t i = 0; i < n; ++i) {
      if (i == k || a[i][k] == 0) continue;
      Rat f = a[i][k] / a[k][k];
      for (size_t j = k; j <= n; ++j) a[i][j] -= f * a[k][j];
    }
  }
  RVec x(n);
  for (size_t i = 0; i < n; ++i) {
    x[i] = a[i][n] / a[i][i];
    x[i].canonicalize();
  }
  return x;
}

RVec solve_exact(const IMat& m, const IVec& b) {
  RVec rb(b.size());
  for (size_t i = 0; i < b.size(); ++i) rb[i] = Rat(b[i]);
  return solve_exact(m, rb);
}

RMat inverse_exact(const IMat& m) {
  const size_t n = m.size();
  RMat inv(n, RVec(n));
  for (size_t c = 0; c < n; ++c) {
    RVec e(n, Rat(0));
    e[c] = 1;
    RVec col = solve_exact(m, e);
    for (size_t r = 0; r < n; ++r) inv[r][c] = col[r];
  }
  return inv;
}

bool in_lattice(const IMat& m, const IVec& v) {
  RVec x = solve_exact(m, v);
  for (auto& xi : x)
    if (xi.get_den() != 1) return false;
  return true;
}

int mobius(unsigned long k) {
  assert(k >= 1);
  int primes = 0;
  for (unsigned long p = 2; p * p <= k; ++p) {
    if (k % p == 0) {
      k /= p;
      if (k % p == 0) return 0;
      ++primes;
    }
  }
  if (k > 1) ++primes;
  return primes % 2 ? -1 : 1;
}

Int binom_ext(const Int& a, unsigned long b) {
  Int num = 1;
  for (unsigned long i = 0; i < b; ++i) num *= a - Int(i);
  Int den;
  mpz_fac_ui(den.get_mpz_t(), b);
  assert(num % den == 0);
  return num / den;
}

std::vector<long> divisors(long k) {
  assert(k >= 1);
  std::vector<long> lo, hi;
  for (long d = 1; d * d <= k; ++d) {
    if (k % d == 0) {
      lo.push_back(d);
      if (d != k / d) hi.push_back(k / d);
    }
  }
  for (auto it = hi.rbegin(); it != hi.rend(); ++it) lo.push_back(*it);
  return lo;
}

Int ilcm(const Int& a, const Int& b) {
  Int r;
  mpz_lcm(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

Int igcd(const Int& a, const Int& b) {
  Int r;
  mpz_gcd(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

Int lcm_rationals(const std::vector<Rat>& rs) {
  assert(!rs.empty());
  Int acc = 1;
  for (Rat r : rs) {
    r.canonicalize();
    assert(r > 0);
    acc = ilcm(acc, Int(r.get_num()));
  }
  // acc must lie in every r Z: acc / r integral.
  for (Rat r : rs) {
    r.canonicalize();
    Rat q = Rat(acc) / r;
    q.canonicalize();
    assert(q.get_den() == 1);
  }
  return acc;
}

IVec mat_vec(const IMat& m, const IVec& v) {
  IVec out(m.size(), 0);
  for (size_t i = 0; i < m.size(); ++i) {
    assert(m[i].size() == v.size());
    for (size_t j = 0; j < v.size(); ++j) out[i] += m[i][j] * v[j];
  }
  return out;
}

Int dot(const IVec& a, const IVec& b) {
  assert(a.size() == b.size());
  Int s = 0;
  for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

}  // namespace psca

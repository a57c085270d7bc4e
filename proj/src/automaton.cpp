#include "psca/automaton.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <deque>
#include <numeric>

namespace psca {

Path parse_path(const std::string& word) {
  Path p;
  p.reserve(word.size());
  for (size_t i = 0; i < word.size(); ++i) {
    char ch = word[i];
    if (ch < '1' || ch > '9')
      throw std::invalid_argument("path letter out of range at position " +
                                  std::to_string(i + 1));
    p.push_back(ch - '0');
  }
  return p;
}

std::string path_text(const Path& p) {
  std::string s;
  s.reserve(p.size());
  for (int x : p) s += static_cast<char>('0' + x);
  return s;
}

long SolitonContent::size(int a) const {
  if (a <= 0) return L;
  if (a > n) return 0;
  long s = 0;
  for (auto [l, m] : diagrams[a - 1]) s += static_cast<long>(l) * m;
  return s;
}

int SolitonContent::largest_part(int a) const {
  if (a < 1 || a > n || diagrams[a - 1].empty()) return 0;
  return diagrams[a - 1].front().first;
}

std::vector<int> SolitonContent::parts(int a) const {
  std::vector<int> out;
  if (a <= 0) {
    out.assign(static_cast<size_t>(L), 1);
    return out;
  }
  if (a > n) return out;
  for (auto [l, m] : diagrams[a - 1]) out.insert(out.end(), m, l);
  return out;
}

TransportResult transport(const RTable& tb, int v0, const Path& p) {
  TransportResult res;
  res.out.reserve(p.size());
  res.energies.reserve(p.size());
  int v = v0;
  for (int c : p) {
    const ROut& o = tb.apply(v, c);
    res.out.push_back(o.letter_out);
    res.energies.push_back(o.energy);
    v = o.carrier_out;
  }
  res.carrier = v;
  return res;
}

std::vector<int> transport_carrier_at(const RTable& tb, int v0, const Path& p,
                                      long k) {
  int v = v0;
  for (long i = 0; i < k; ++i) v = tb.apply(v, p[i]).carrier_out;
  std::vector<int> counts(tb.n + 2, 0);
  for (auto& row : tb.elems[v].rows)
    for (int x : row) ++counts[x];
  return counts;
}

EvolveResult evolve(int r, int l, const Path& p, int n) {
  const RTable& tb = r_table(r, l, n);
  EvolveResult res;
  bool have = false;
  Path first_out;
  std::vector<int> first_energies;
  for (int v = 0; v < static_cast<int>(tb.elems.size()); ++v) {
    TransportResult t = transport(tb, v, p);
    if (t.carrier != v) continue;
    res.carriers.push_back(v);
    if (!have) {
      have = true;
      first_out = std::move(t.out);
      first_energies = std::move(t.energies);
    } else if (t.out != first_out || t.energies != first_energies) {
      res.status = EvolveStatus::NonUnique;
      return res;
    }
  }
  if (!have) {
    res.status = EvolveStatus::NoCarrier;
    return res;
  }
  res.out = std::move(first_out);
  res.energy = std::accumulate(first_energies.begin(), first_energies.end(), 0L);
  return res;
}

EvolveResult evolve_inf(int r, const Path& p, int n) {
  auto mu = soliton_content(p, n);
  int l = mu ? std::max(mu->largest_part(r), 1) : 1;
  return evolve(r, l, p, n);
}

Path cyclic_shift(const Path& p) {
  Path q;
  q.reserve(p.size());
  q.push_back(p.back());
  q.insert(q.end(), p.begin(), p.end() - 1);
  return q;
}

long EnergySpectrum::at(int a, int l) const {
  const auto& v = values[a - 1];
  if (l <= 0) return 0;
  if (v.empty()) return 0;
  if (l > static_cast<int>(v.size())) return v.back();
  return v[l - 1];
}

std::optional<EnergySpectrum> energy_spectrum(const Path& p, int n,
                                              bool highest_carrier) {
  EnergySpectrum es;
  es.n = n;
  es.L = static_cast<long>(p.size());
  es.values.assign(n, {});
  for (int a = 1; a <= n; ++a) {
    long prev = 0;
    for (int l = 1; l <= static_cast<int>(p.size()) + 1; ++l) {
      long e;
      if (highest_carrier) {
        const RTable& tb = r_table(a, l, n);
        TransportResult t = transport(tb, tb.highest, p);
        e = std::accumulate(t.energies.begin(), t.energies.end(), 0L);
      } else {
        EvolveResult ev = evolve(a, l, p, n);
        if (!ev.ok()) return std::nullopt;
        e = ev.energy;
      }
      // E is concave nondecreasing; the first repeat marks saturation
      if (e == prev) break;
      es.values[a - 1].push_back(e);
      prev = e;
    }
  }
  return es;
}

SolitonContent content_from_spectrum(const EnergySpectrum& es) {
  SolitonContent mu;
  mu.n = es.n;
  mu.L = es.L;
  mu.diagrams.assign(es.n, {});
  for (int a = 1; a <= es.n; ++a) {
    for (int l = static_cast<int>(es.values[a - 1].size()); l >= 1; --l) {
      long m = -es.at(a, l - 1) + 2 * es.at(a, l) - es.at(a, l + 1);
      assert(m >= 0 && "energy spectrum must be concave");
      if (m > 0) mu.diagrams[a - 1].push_back({l, static_cast<int>(m)});
    }
  }
  return mu;
}

std::optional<SolitonContent> soliton_content(const Path& p, int n) {
  auto es = energy_spectrum(p, n);
  if (!es) return std::nullopt;
  return content_from_spectrum(*es);
}

PathStats path_stats(const Path& p, int n) {
  PathStats st;
  st.weights.assign(n + 1, 0);
  std::vector<long> pref(n + 1, 0);
  st.is_highest = true;
  for (int x : p) {
    ++pref[x - 1];
    for (int a = 0; a + 1 <= n; ++a)
      if (pref[a] < pref[a + 1]) st.is_highest = false;
  }
  st.weights = pref;
  st.in_P = true;
  for (int a = 0; a + 1 <= n; ++a)
    if (st.weights[a] < st.weights[a + 1]) st.in_P = false;
  return st;
}

Path k_move(int a, const Path& p, int n) {
  PathStats st = path_stats(p, n);
  for (int b = 1; b <= n + 1; ++b)
    if (st.weights[b - 1] > st.weights[0]) throw NotInB1();
  const long L = static_cast<long>(p.size());
  // positions holding letter 1 or letter a, in cyclic order
  std::vector<long> pos;
  for (long i = 0; i < L; ++i)
    if (p[i] == 1 || p[i] == a) pos.push_back(i);
  Path q = p;
  if (pos.empty()) return q;
  // repeatedly connect cyclically adjacent "a then 1" pairs (ignoring
  // already-connected ones) until no new pair arises
  const long M = static_cast<long>(pos.size());
  std::vector<bool> paired(M, false);
  bool progress = true;
  while (progress) {
    progress = false;
    for (long i = 0; i < M; ++i) {
      if (paired[i]) continue;
      if (q[pos[i]] != a) continue;
      // next unpaired position cyclically after i
      long j = (i + 1) % M;
      while (j != i && paired[j]) j = (j + 1) % M;
      if (j == i) continue;
      if (q[pos[j]] == 1) {
        paired[i] = paired[j] = true;
        progress = true;
      }
    }
  }
  for (long i = 0; i < M; ++i)
    if (paired[i]) q[pos[i]] = (q[pos[i]] == a) ? 1 : a;
  return q;
}

Path t1_infinity(const Path& p, int n) {
  Path q = p;
  for (int a = n + 1; a >= 2; --a) q = k_move(a, q, n);
  return q;
}

long vacancy(const SolitonContent& mu, int a, int i) {
  long v = (a == 1) ? mu.L : 0;
  int li = mu.len(a, i);
  for (int b = std::max(1, a - 1); b <= std::min(mu.n, a + 1); ++b) {
    int C = (b == a) ? 2 : -1;
    for (int j = 1; j <= mu.g(b); ++j)
      v -= static_cast<long>(C) * std::min(li, mu.len(b, j)) * mu.mult(b, j);
  }
  return v;
}

bool is_configuration(const SolitonContent& mu) {
  for (int a = 1; a <= mu.n; ++a)
    for (int i = 1; i <= mu.g(a); ++i)
      if (vacancy(mu, a, i) < 0) return false;
  return true;
}

bool is_strict_configuration(const SolitonContent& mu) {
  for (int a = 1; a <= mu.n; ++a)
    for (int i = 1; i <= mu.g(a); ++i)
      if (vacancy(mu, a, i) < 1) return false;
  return true;
}

bool block_null(const SolitonContent& mu, int a, int i) {
  return vacancy(mu, a, i) == 0;
}

bool block_convex(const SolitonContent& mu, int a, int i) {
  // (mu^(a-1) u mu^(a+1)) covers the doubled block in mu^(a) u mu^(a):
  // it must have >= 2 * (m_1 + ... + m_i) parts of size >= l_i.
  std::vector<int> nb = mu.parts(a - 1);
  {
    std::vector<int> up = mu.parts(a + 1);
    nb.insert(nb.end(), up.begin(), up.end());
  }
  long cum = 0;
  for (int j = 1; j <= i; ++j) cum += mu.mult(a, j);
  int li = mu.len(a, i);
  long have = 0;
  for (int x : nb)
    if (x >= li) ++have;
  return have >= 2 * cum;
}

bool admissible(const SolitonContent& mu, int r, int l) {
  for (int i = 1; i <= mu.g(r); ++i) {
    if (!block_null(mu, r, i) || !block_convex(mu, r, i)) continue;
    int next = (i < mu.g(r)) ? mu.len(r, i + 1) : 0;
    if (mu.len(r, i) > l && l > next) return false;
  }
  return true;
}

std::map<SolitonContent, std::vector<Path>> classify_words(int n, int L,
                                                           size_t budget) {
  double total = std::pow(static_cast<double>(n + 1), L);
  if (total > static_cast<double>(budget)) throw std::runtime_error("word budget exceeded");
  std::map<SolitonContent, std::vector<Path>> out;
  Path w(L, 1);
  while (true) {
    // cheap filter: weights must weakly decrease for any evolvable path
    if (path_stats(w, n).in_P) {
      // membership requires evolvability at every (a,l); energies saturate
      // at l = L at the latest
      bool evolvable = true;
      std::vector<std::vector<long>> E(n, std::vector<long>(L + 2, 0));
      for (int a = 1; a <= n && evolvable; ++a)
        for (int l = 1; l <= L; ++l) {
          EvolveResult ev = evolve(a, l, w, n);
          if (!ev.ok()) {
            evolvable = false;
            break;
          }
          E[a - 1][l] = ev.energy;
        }
      if (evolvable) {
        SolitonContent mu;
        mu.n = n;
        mu.L = L;
        mu.diagrams.assign(n, {});
        bool concave = true;
        for (int a = 1; a <= n && concave; ++a) {
          E[a - 1][L + 1] = E[a - 1][L];
          for (int l = L; l >= 1; --l) {
            long m = -E[a - 1][l - 1] + 2 * E[a - 1][l] - E[a - 1][l + 1];
            if (m < 0) {
              concave = false;
              break;
            }
            if (m > 0) mu.diagrams[a - 1].push_back({l, static_cast<int>(m)});
          }
        }
        if (concave) out[mu].push_back(w);
      }
    }
    // next word
    int i = L - 1;
    while (i >= 0 && w[i] == n + 1) w[i--] = 1;
    if (i < 0) break;
    ++w[i];
  }
  return out;
}

OrbitClosure orbit_closure(const Path& p, int n,
                           const std::vector<std::pair<int, int>>& generators,
                           size_t budget) {
  OrbitClosure oc;
  std::deque<Path> queue;
  oc.word[p] = std::vector<long>(generators.size(), 0);
  oc.paths.push_back(p);
  queue.push_back(p);
  while (!queue.empty()) {
    Path cur = std::move(queue.front());
    queue.pop_front();
    const auto& w = oc.word.at(cur);
    for (size_t gi = 0; gi < generators.size(); ++gi) {
      auto [r, l] = generators[gi];
      EvolveResult ev = evolve(r, l, cur, n);
      if (!ev.ok()) throw std::runtime_error("orbit generator not evolvable");
      if (oc.word.count(ev.out)) continue;
      auto nw = w;
      ++nw[gi];
      oc.word.emplace(ev.out, std::move(nw));
      oc.paths.push_back(ev.out);
      queue.push_back(ev.out);
      if (oc.paths.size() > budget) throw std::runtime_error("orbit budget exceeded");
    }
  }
  return oc;
}

}  // namespace psca

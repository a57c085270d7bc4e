#include "psca/rigged.hpp"

#include <algorithm>
#include <map>

#include "json.hpp"

namespace psca {

void RiggedConfig::normalize() {
  for (auto& c : colors)
    std::sort(c.begin(), c.end(), [](const Strg& x, const Strg& y) {
      if (x.len != y.len) return x.len > y.len;
      return x.rig < y.rig;
    });
}

SolitonContent RiggedConfig::content() const {
  SolitonContent mu;
  mu.n = n;
  mu.L = L;
  mu.diagrams.resize(n);
  for (int a = 1; a <= n; ++a) {
    std::map<int, int, std::greater<>> counts;
    for (const auto& s : colors[a - 1]) counts[s.len]++;
    for (auto [len, m] : counts) mu.diagrams[a - 1].push_back({len, m});
  }
  return mu;
}

long RiggedConfig::vac(int a, int l) const {
  long p = (a == 1 && l >= 1) ? L : 0;
  for (int b = std::max(1, a - 1); b <= std::min(n, a + 1); ++b) {
    long cab = (b == a) ? 2 : -1;
    for (const auto& s : colors[b - 1]) p -= cab * std::min(l, s.len);
  }
  return p;
}

bool RiggedConfig::valid() const {
  if (n < 1 || (int)colors.size() != n || L < 0) return false;
  for (int a = 1; a <= n; ++a)
    for (const auto& s : colors[a - 1]) {
      if (s.len < 1) return false;
      if (s.rig < 0 || s.rig > vac(a, s.len)) return false;
    }
  return true;
}

std::vector<long> RiggedConfig::block_riggings(int a, int len) const {
  std::vector<long> out;
  for (const auto& s : colors[a - 1])
    if (s.len == len) out.push_back(s.rig);
  std::sort(out.begin(), out.end());
  return out;
}

std::string RiggedConfig::json() const {
  nlohmann::json j;
  j["L"] = L;
  j["colors"] = nlohmann::json::array();
  for (int a = 1; a <= n; ++a) {
    nlohmann::json blocks = nlohmann::json::array();
    std::map<int, std::vector<long>, std::greater<>> by_len;
    for (const auto& s : colors[a - 1]) by_len[s.len].push_back(s.rig);
    for (auto& [len, rigs] : by_len) {
      std::sort(rigs.begin(), rigs.end());
      blocks.push_back({{"length", len}, {"riggings", rigs}});
    }
    j["colors"].push_back({{"blocks", blocks}});
  }
  return j.dump();
}

RiggedConfig RiggedConfig::from_json(const std::string& text) {
  nlohmann::json j = nlohmann::json::parse(text);
  RiggedConfig rc;
  rc.L = j.at("L").get<long>();
  rc.n = (int)j.at("colors").size();
  rc.colors.resize(rc.n);
  for (int a = 1; a <= rc.n; ++a)
    for (const auto& blk : j["colors"][a - 1].at("blocks"))
      for (long r : blk.at("riggings"))
        rc.colors[a - 1].push_back({blk.at("length").get<int>(), r});
  rc.normalize();
  return rc;
}

RiggedConfig make_rigged(const SolitonContent& mu,
                         const std::vector<std::vector<long>>& riggings) {
  RiggedConfig rc;
  rc.n = mu.n;
  rc.L = mu.L;
  rc.colors.resize(mu.n);
  size_t k = 0;
  for (int a = 1; a <= mu.n; ++a)
    for (int i = 1; i <= mu.g(a); ++i) {
      const auto& rg = riggings.at(k++);
      if ((int)rg.size() != mu.mult(a, i))
        throw InvalidRiggedConfiguration("rigging count mismatch");
      for (long r : rg) rc.colors[a - 1].push_back({mu.len(a, i), r});
    }
  rc.normalize();
  return rc;
}

RiggedConfig kkr_forward(const Path& p, int n) {
  if (!path_stats(p, n).is_highest) throw NotHighest();
  RiggedConfig rc;
  rc.n = n;
  rc.L = 0;
  rc.colors.resize(n);
  for (int d : p) {
    if (d < 1 || d > n + 1) throw std::runtime_error("letter out of range");
    if (d == 1) {
      rc.L++;
      continue;
    }
    // select, for c = d-1 down to 1, the singular color-c string of largest
    // length <= the length selected at color c+1 (void selections allowed)
    std::vector<int> sel(n, -1);  // index into colors[c-1], -1 = void
    int cap = 1 << 30;
    for (int c = d - 1; c >= 1; --c) {
      int best = -1;
      for (int i = 0; i < (int)rc.colors[c - 1].size(); ++i) {
        const Strg& s = rc.colors[c - 1][i];
        if (s.len > cap || s.rig != rc.vac(c, s.len)) continue;
        if (best < 0 || s.len > rc.colors[c - 1][best].len) best = i;
      }
      sel[c - 1] = best;
      cap = best < 0 ? 0 : rc.colors[c - 1][best].len;
    }
    rc.L++;
    for (int c = 1; c <= d - 1; ++c) {
      if (sel[c - 1] >= 0) {
        rc.colors[c - 1][sel[c - 1]].len++;
      } else {
        rc.colors[c - 1].push_back({1, 0});
        sel[c - 1] = (int)rc.colors[c - 1].size() - 1;
      }
    }
    for (int c = 1; c <= d - 1; ++c) {
      Strg& s = rc.colors[c - 1][sel[c - 1]];
      s.rig = rc.vac(c, s.len);
    }
    rc.normalize();
  }
  return rc;
}

Path kkr_backward(RiggedConfig rc) {
  if (!rc.valid()) throw InvalidRiggedConfiguration("invalid rigged config");
  Path out;
  while (rc.L > 0) {
    std::vector<int> sel(rc.n, -1);
    int floor_len = 1;
    int d = -1;
    for (int c = 1; c <= rc.n; ++c) {
      int best = -1;
      for (int i = 0; i < (int)rc.colors[c - 1].size(); ++i) {
        const Strg& s = rc.colors[c - 1][i];
        if (s.len < floor_len || s.rig != rc.vac(c, s.len)) continue;
        if (best < 0 || s.len < rc.colors[c - 1][best].len) best = i;
      }
      if (best < 0) {
        d = c;
        break;
      }
      sel[c - 1] = best;
      floor_len = rc.colors[c - 1][best].len;
      if (c == rc.n) d = rc.n + 1;
    }
    rc.L--;
    for (int c = 1; c <= d - 1; ++c) rc.colors[c - 1][sel[c - 1]].len--;
    for (int c = 1; c <= d - 1; ++c) {
      Strg& s = rc.colors[c - 1][sel[c - 1]];
      if (s.len >= 1) s.rig = rc.vac(c, s.len);
    }
    for (int c = 1; c <= d - 1; ++c) {
      auto& v = rc.colors[c - 1];
      v.erase(std::remove_if(v.begin(), v.end(),
                             [](const Strg& s) { return s.len == 0; }),
              v.end());
    }
    rc.normalize();
    out.push_back(d);
  }
  std::reverse(out.begin(), out.end());
  return out;
}

namespace {

void rig_blocks(const SolitonContent& mu, int a, int i,
                std::vector<std::vector<long>>& acc,
                std::vector<RiggedConfig>& out, size_t budget) {
  if (a > mu.n) {
    if (out.size() >= budget) throw CapacityExceeded();
    out.push_back(make_rigged(mu, acc));
    return;
  }
  if (i > mu.g(a)) {
    rig_blocks(mu, a + 1, 1, acc, out, budget);
    return;
  }
  long p = vacancy(mu, a, i);
  int m = mu.mult(a, i);
  std::vector<long> rg(m, 0);
  // nondecreasing tuples in [0, p]^m
  while (true) {
    acc.push_back(rg);
    rig_blocks(mu, a, i + 1, acc, out, budget);
    acc.pop_back();
    int k = m - 1;
    while (k >= 0 && rg[k] == p) --k;
    if (k < 0) break;
    long v = rg[k] + 1;
    for (int j = k; j < m; ++j) rg[j] = v;
  }
}

void partitions_upto(long total, int maxpart, std::vector<int>& cur,
                     std::vector<std::vector<int>>& out) {
  out.push_back(cur);
  for (int p = std::min<long>(maxpart, total); p >= 1; --p) {
    cur.push_back(p);
    partitions_upto(total - p, p, cur, out);
    cur.pop_back();
  }
}

}  // namespace

std::vector<RiggedConfig> enumerate_rigged(const SolitonContent& mu,
                                           size_t budget) {
  std::vector<RiggedConfig> out;
  std::vector<std::vector<long>> acc;
  rig_blocks(mu, 1, 1, acc, out, budget);
  return out;
}

std::vector<SolitonContent> enumerate_configurations(int n, long L, long lo) {
  std::vector<std::vector<int>> parts;  // all partitions with |.| <= L
  std::vector<int> cur;
  partitions_upto(L, (int)L, cur, parts);
  std::vector<SolitonContent> out;
  std::vector<std::vector<int>> chosen(n);
  auto rec = [&](auto&& self, int a, long prev_size) -> void {
    if (a > n) {
      SolitonContent mu;
      mu.n = n;
      mu.L = L;
      mu.diagrams.resize(n);
      for (int b = 1; b <= n; ++b) {
        const auto& pa = chosen[b - 1];
        for (size_t i = 0; i < pa.size();) {
          size_t j = i;
          while (j < pa.size() && pa[j] == pa[i]) ++j;
          mu.diagrams[b - 1].push_back({pa[i], (int)(j - i)});
          i = j;
        }
      }
      for (int b = 1; b <= n; ++b)
        for (int i = 1; i <= mu.g(b); ++i)
          if (vacancy(mu, b, i) < lo) return;
      if (n >= 1 && !mu.diagrams[0].empty()) out.push_back(mu);
      return;
    }
    for (const auto& pa : parts) {
      long sz = 0;
      for (int x : pa) sz += x;
      if (sz > prev_size) continue;
      chosen[a - 1] = pa;
      self(self, a + 1, sz);
    }
  };
  rec(rec, 1, L);
  return out;
}

}  // namespace psca

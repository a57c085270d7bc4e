#include "psca/tableau.hpp"

#include <algorithm>
#include <cassert>

namespace psca {

bool Tableau::is_semistandard() const {
  for (size_t j = 0; j < rows.size(); ++j) {
    if (rows[j].empty()) return false;
    if (j + 1 < rows.size() && rows[j + 1].size() > rows[j].size()) return false;
    for (size_t i = 0; i + 1 < rows[j].size(); ++i)
      if (rows[j][i] > rows[j][i + 1]) return false;
    if (j + 1 < rows.size())
      for (size_t i = 0; i < rows[j + 1].size(); ++i)
        if (rows[j][i] >= rows[j + 1][i]) return false;
  }
  return true;
}

std::vector<int> Tableau::shape() const {
  std::vector<int> s;
  for (auto& r : rows) s.push_back(static_cast<int>(r.size()));
  return s;
}

std::string Tableau::text() const {
  std::string out;
  for (size_t j = 0; j < rows.size(); ++j) {
    if (j) out += '/';
    for (int x : rows[j]) out += static_cast<char>('0' + x);
  }
  return out;
}

Tableau Tableau::parse(const std::string& s) {
  Tableau t;
  t.rows.emplace_back();
  for (char ch : s) {
    if (ch == '/')
      t.rows.emplace_back();
    else
      t.rows.back().push_back(ch - '0');
  }
  return t;
}

Tableau row_insert(Tableau t, int x) {
  for (size_t j = 0;; ++j) {
    if (j == t.rows.size()) {
      t.rows.push_back({x});
      break;
    }
    auto& row = t.rows[j];
    // bump the smallest entry strictly larger than x
    auto it = std::upper_bound(row.begin(), row.end(), x);
    if (it == row.end()) {
      row.push_back(x);
      break;
    }
    std::swap(x, *it);
  }
  return t;
}

Tableau column_insert(int x, Tableau t) {
  for (size_t c = 0;; ++c) {
    // column c as (row index, value); bump the topmost entry >= x
    size_t j = 0;
    bool bumped = false;
    for (; j < t.rows.size() && c < t.rows[j].size(); ++j) {
      if (t.rows[j][c] >= x) {
        std::swap(x, t.rows[j][c]);
        bumped = true;
        break;
      }
    }
    if (!bumped) {
      // append x at the bottom of column c (j is the first row lacking it)
      if (j == t.rows.size()) t.rows.emplace_back();
      assert(t.rows[j].size() == c);
      t.rows[j].push_back(x);
      break;
    }
  }
  return t;
}

std::vector<Tableau> enumerate_tableaux(int r, int l, int n, size_t budget) {
  std::vector<Tableau> out;
  Tableau t;
  t.rows.assign(r, std::vector<int>(l, 0));
  // fill cells in row-major order, value constraints from left/up neighbors
  auto rec = [&](auto&& self, int j, int i) -> void {
    if (j == r) {
      out.push_back(t);
      if (out.size() > budget) throw CapacityExceeded();
      return;
    }
    int nj = (i + 1 == l) ? j + 1 : j;
    int ni = (i + 1 == l) ? 0 : i + 1;
    int lo = 1;
    if (i > 0) lo = std::max(lo, t.rows[j][i - 1]);
    if (j > 0) lo = std::max(lo, t.rows[j - 1][i] + 1);
    for (int v = lo; v <= n + 1; ++v) {
      t.rows[j][i] = v;
      self(self, nj, ni);
    }
    t.rows[j][i] = 0;
  };
  rec(rec, 0, 0);
  return out;
}

namespace {

// energy from the common product shape: ((l+1), l^{r-1}) -> 0, (l^r, 1) -> 1
int energy_of_shape(const std::vector<int>& s, int r, int l) {
  if (static_cast<int>(s.size()) == r && s[0] == l + 1) return 0;
  if (static_cast<int>(s.size()) == r + 1 && s.back() == 1) return 1;
  assert(!"product shape is neither ((l+1), l^{r-1}) nor (l^r, 1)");
  return -1;
}

RTable build_r_table(int r, int l, int n) {
  RTable tb;
  tb.r = r;
  tb.l = l;
  tb.n = n;
  tb.elems = enumerate_tableaux(r, l, n);
  for (size_t i = 0; i < tb.elems.size(); ++i) tb.index[tb.elems[i]] = static_cast<int>(i);
  {
    Tableau u;
    u.rows.assign(r, {});
    for (int j = 0; j < r; ++j) u.rows[j].assign(l, j + 1);
    tb.highest = tb.index.at(u);
  }
  // products of the output side: row-inserting c' into b'
  std::map<Tableau, std::pair<int, int>> by_product;
  for (size_t v = 0; v < tb.elems.size(); ++v)
    for (int c = 1; c <= n + 1; ++c) {
      Tableau prod = row_insert(tb.elems[v], c);
      bool fresh = by_product.emplace(prod, std::make_pair(c, static_cast<int>(v))).second;
      assert(fresh && "row-insertion products must be distinct");
    }
  tb.table.resize(tb.elems.size() * (n + 1));
  for (size_t v = 0; v < tb.elems.size(); ++v)
    for (int c = 1; c <= n + 1; ++c) {
      Tableau prod = column_insert(c, tb.elems[v]);
      auto it = by_product.find(prod);
      assert(it != by_product.end() && "no (c', b') reproduces the product");
      ROut o;
      o.letter_out = it->second.first;
      o.carrier_out = it->second.second;
      o.energy = energy_of_shape(prod.shape(), r, l);
      tb.table[v * (n + 1) + c - 1] = o;
    }
  return tb;
}

}  // namespace

const RTable& r_table(int r, int l, int n) {
  static std::map<std::tuple<int, int, int>, RTable> cache;
  auto key = std::make_tuple(r, l, n);
  auto it = cache.find(key);
  if (it == cache.end()) it = cache.emplace(key, build_r_table(r, l, n)).first;
  return it->second;
}

RResult combinatorial_R(const Tableau& b, int c, int n) {
  int r = static_cast<int>(b.rows.size());
  int l = static_cast<int>(b.rows[0].size());
  const RTable& tb = r_table(r, l, n);
  const ROut& o = tb.apply(tb.index.at(b), c);
  return {o.letter_out, tb.elems[o.carrier_out], o.energy};
}

}  // namespace psca

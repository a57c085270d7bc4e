#pragma once
// Semistandard tableaux (general Young shapes internally, rectangles at the
// interfaces), Schensted row/column insertion, and the combinatorial R on
// B^{r,l} x B^{1,1} with its local energy. R results are cached per (r,l,n)
// as flat index tables so that carrier transport is an array walk.

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace psca {

struct Tableau {
  // rows[j] weakly increases, columns strictly increase.
  std::vector<std::vector<int>> rows;

  bool operator==(const Tableau&) const = default;
  auto operator<=>(const Tableau&) const = default;

  bool is_semistandard() const;
  std::vector<int> shape() const;
  std::string text() const;  // rows joined by '/'
  static Tableau parse(const std::string& s);
};

Tableau row_insert(Tableau t, int x);
Tableau column_insert(int x, Tableau t);

struct CapacityExceeded : std::runtime_error {
  CapacityExceeded() : std::runtime_error("tableau enumeration over budget") {}
};

// All semistandard r x l rectangles over {1..n+1}, row-major lexicographic.
std::vector<Tableau> enumerate_tableaux(int r, int l, int n,
                                        size_t budget = 2'000'000);

struct ROut {
  int letter_out;    // c'
  int carrier_out;   // index into RTable::elems
  int energy;        // H in {0,1}
};

struct RTable {
  int r = 0, l = 0, n = 0;
  std::vector<Tableau> elems;          // B^{r,l}, enumeration order
  std::map<Tableau, int> index;
  std::vector<ROut> table;             // [v * (n+1) + (c-1)]
  int highest = 0;                     // index of u^{r,l} (row j filled with j)

  const ROut& apply(int v, int c) const { return table[v * (n + 1) + c - 1]; }
};

// Cached per (r,l,n); builds on first use.
const RTable& r_table(int r, int l, int n);

// R on B^{r,l} x B^{1,1}: (b, c) -> (c', b', h).
struct RResult {
  int letter_out;
  Tableau carrier_out;
  int energy;
};
RResult combinatorial_R(const Tableau& b, int c, int n);

}  // namespace psca

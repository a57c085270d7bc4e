#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <set>

#include "doctest.h"
#include "psca/bethe.hpp"
#include "psca/fixtures.hpp"
#include "psca/tropical.hpp"

using namespace psca;

namespace {
const char* kAA = "211332111321133112221112";

SolitonContent mu24() {
  auto fx = load_fixture("counting.json");
  return content_from_json(fx.at("omega").at("mu"), 2, 24);
}
}  // namespace

TEST_CASE("A matrix relates to B entrywise") {
  auto mu = mu24();
  auto bd = make_bethe(mu);
  auto td = make_theta(mu);
  REQUIRE(bd.G == td.G);
  // index (a,i,alpha) lex: block sizes 2,3,1,1 with (m,p) rows
  std::vector<std::pair<long, long>> block = {
      {2, 4}, {2, 4}, {3, 7}, {3, 7}, {3, 7}, {1, 2}, {1, 1}};
  std::vector<int> blk_id = {0, 0, 1, 1, 1, 2, 3};
  for (int u = 0; u < bd.G; ++u)
    for (int v = 0; v < bd.G; ++v) {
      Int expect = td.B[u][v];
      if (blk_id[u] == blk_id[v]) {
        expect += (u == v) ? Int(block[u].first - 1) : Int(-1);
      }
      CHECK(bd.A[u][v] == expect);
    }
  // 1x1 case: A = (p+m) + 2l - 1
  SolitonContent one{1, 6, {{{2, 1}}}};
  auto b1 = make_bethe(one);
  REQUIRE(b1.G == 1);
  CHECK(b1.A[0][0] == (6 - 2 * 2) + 1 + 2 * 2 - 1);
}

TEST_CASE("A is positive definite for all small configurations") {
  for (int n = 1; n <= 2; ++n)
    for (long L = 1; L <= 8; ++L)
      for (const auto& mu : enumerate_configurations(n, L, 0)) {
        auto bd = make_bethe(mu);
        for (int k = 1; k <= bd.G; ++k) {
          IMat minor(k, IVec(k));
          for (int i = 0; i < k; ++i)
            for (int j = 0; j < k; ++j) minor[i][j] = bd.A[i][j];
          CHECK(det_bareiss(minor) > 0);
        }
      }
}

TEST_CASE("string centers solve the system and respect slides") {
  Path p = parse_path(kAA);
  auto bd = make_bethe(mu24());
  auto x = direct_scattering(p, 2);
  auto u = string_centers(bd, x);
  REQUIRE((int)u.size() == bd.G);
  auto y = x;
  y.slide(1, 2, 1);
  CHECK(canonical_centers(bd, u) ==
        canonical_centers(bd, string_centers(bd, y)));
  CHECK(angle_equal(x, y));
}

TEST_CASE("time evolution shifts centers by A^{-1} h") {
  Path p = parse_path(kAA);
  auto mu = mu24();
  auto bd = make_bethe(mu);
  auto x = direct_scattering(p, 2);
  auto u = string_centers(bd, x);
  for (auto [r, l] : {std::pair{1, 1}, {1, 3}, {2, 2}}) {
    auto y = x;
    y.shift_time(r, l, 1);
    auto v = string_centers(bd, y);
    auto h = h_vector_G(mu, r, l);
    auto dh = solve_exact(bd.A, h);
    for (int i = 0; i < bd.G; ++i) CHECK(v[i] == u[i] + dh[i]);
  }
}

TEST_CASE("phases and the heuristic period") {
  Path p = parse_path(kAA);
  auto mu = mu24();
  auto bd = make_bethe(mu);
  auto u = string_centers(bd, direct_scattering(p, 2));
  for (int r = 1; r <= 2; ++r)
    for (int l = 1; l <= mu.largest_part(r); ++l) {
      Rat twice = 2 * n_prime(bd, r, l) * eigenvalue_phase(bd, u, r, l);
      CHECK(twice.get_den() == 1);
    }
  CHECK(n_prime(bd, 1, 1) == 24);
  CHECK(n_prime(bd, 2, 4) == 2328);
  // phase linearity
  auto x = direct_scattering(p, 2);
  auto y = x;
  y.shift_time(1, 2, 1);
  y.shift_time(2, 1, 1);
  Rat lhs = eigenvalue_phase(bd, string_centers(bd, y), 1, 1);
  auto d1 = solve_exact(bd.A, h_vector_G(mu, 1, 2));
  auto d2 = solve_exact(bd.A, h_vector_G(mu, 2, 1));
  auto h11 = h_vector_G(mu, 1, 1);
  Rat expect = eigenvalue_phase(bd, u, 1, 1);
  for (int i = 0; i < bd.G; ++i) expect += Rat(h11[i]) * (d1[i] + d2[i]);
  CHECK(lhs == expect);
}

TEST_CASE("the two LCM forms of N' agree") {
  auto mu = mu24();
  auto bd = make_bethe(mu);
  for (int r = 1; r <= 2; ++r)
    for (int l = 1; l <= mu.largest_part(r); ++l) {
      // F-form: LCM over the g columns of |num(det F / det F[col <- h])|
      auto F = f_matrix(mu);
      Int dF = det_bareiss(F);
      auto h = h_vector(mu, r, l);
      Int acc = 1;
      for (size_t col = 0; col < F.size(); ++col) {
        IMat Fc = F;
        for (size_t row = 0; row < F.size(); ++row) Fc[row][col] = h[row];
        Int dc = det_bareiss(Fc);
        if (dc == 0) continue;
        Rat q(dF, dc);
        q.canonicalize();
        acc = ilcm(acc, abs(Int(q.get_num())));
      }
      CHECK(acc == n_prime(bd, r, l));
    }
}

TEST_CASE("string centers separate the 40 angle variables") {
  auto fx = load_fixture("highest-40.json");
  auto mu = content_from_json(fx.at("mu"), 2, 8);
  auto bd = make_bethe(mu);
  std::set<std::vector<std::vector<Rat>>> forms;
  for (const auto& e : fx.at("entries")) {
    std::vector<std::vector<long>> rig;
    for (const auto& b : e.at("riggings"))
      rig.push_back(b.get<std::vector<long>>());
    forms.insert(canonical_centers(
        bd, string_centers(bd, extend(make_rigged(mu, rig)))));
  }
  CHECK(forms.size() == 40);
}

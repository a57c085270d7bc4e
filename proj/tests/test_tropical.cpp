#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <random>

#include "doctest.h"
#include "psca/fixtures.hpp"
#include "psca/tropical.hpp"

using namespace psca;

namespace {
SolitonContent mu24() {
  auto fx = load_fixture("counting.json");
  return content_from_json(fx.at("omega").at("mu"), 2, 24);
}

// direct minimization over a wide fixed box, as an oracle for theta2
Int theta2_brute(const ThetaData& td, const IVec& z2, long R) {
  int G = td.G;
  std::vector<long> n(G, -R);
  Int best = 0;  // n = 0 term
  while (true) {
    Int quad = 0, lin = 0;
    for (int i = 0; i < G; ++i) {
      lin += z2[i] * n[i];
      for (int j = 0; j < G; ++j) quad += td.B[i][j] * n[i] * n[j];
    }
    best = std::min(best, Int(quad + lin));
    int i = 0;
    while (i < G && n[i] == R) n[i++] = -R;
    if (i == G) break;
    ++n[i];
  }
  return -best;
}
}  // namespace

TEST_CASE("period matrix invariants") {
  auto mu = mu24();
  auto td = make_theta(mu);
  CHECK(td.G == 7);
  for (int i = 0; i < td.G; ++i)
    for (int j = 0; j < td.G; ++j) CHECK(td.B[i][j] == td.B[j][i]);
  // B 1 = L h^(1)_1
  auto h11 = h_vector_G(mu, 1, 1);
  IVec ones(td.G, 1);
  auto b1 = mat_vec(td.B, ones);
  for (int i = 0; i < td.G; ++i) CHECK(b1[i] == 24 * h11[i]);
  // t(1) h^(c)_inf = |mu^(c)|
  for (int c = 1; c <= 2; ++c)
    CHECK(dot(ones, h_vector_G(mu, c, 0)) == Int(mu.size(c)));
  // leading principal minors positive (positive definite)
  for (int k = 1; k <= td.G; ++k) {
    IMat minor(k, IVec(k));
    for (int i = 0; i < k; ++i)
      for (int j = 0; j < k; ++j) minor[i][j] = td.B[i][j];
    CHECK(det_bareiss(minor) > 0);
  }
}

TEST_CASE("fixture B, r, p reproduce") {
  auto fx = load_fixture("theta-quadratic.json");
  auto mu = content_from_json(fx.at("mu"), 2, 24);
  auto td = make_theta(mu);
  auto B = fx.at("B").get<std::vector<std::vector<long>>>();
  for (int i = 0; i < td.G; ++i)
    for (int j = 0; j < td.G; ++j) CHECK(td.B[i][j] == B[i][j]);
  auto p = fx.at("p").get<std::vector<long>>();
  for (int i = 0; i < td.G; ++i) CHECK(td.p[i] == p[i]);
  for (const auto& [key, hv] : fx.at("h").items()) {
    auto got = h_vector_G(mu, key[0] - '0', key[2] - '0');
    auto want = hv.get<std::vector<long>>();
    for (int i = 0; i < td.G; ++i) CHECK(got[i] == want[i]);
  }
}

TEST_CASE("theta2 against brute-force minimization") {
  auto fx = load_fixture("highest-40.json");
  auto mu = content_from_json(fx.at("mu"), 2, 8);
  auto td = make_theta(mu);
  IVec zero(td.G, 0);
  CHECK(theta2(td, zero) == 0);
  std::mt19937 rng(99);
  std::uniform_int_distribution<int> d(-30, 30);
  for (int trial = 0; trial < 60; ++trial) {
    IVec z2(td.G);
    for (auto& v : z2) v = d(rng);
    CHECK(theta2(td, z2) == theta2_brute(td, z2, 8));
  }
}

TEST_CASE("theta quasi-periodicity on the small system") {
  auto fx = load_fixture("highest-40.json");
  auto td = make_theta(content_from_json(fx.at("mu"), 2, 8));
  std::mt19937 rng(5);
  std::uniform_int_distribution<int> d(-20, 20), dm(-2, 2);
  for (int trial = 0; trial < 40; ++trial) {
    IVec z2(td.G), m(td.G);
    for (auto& v : z2) v = d(rng);
    for (auto& v : m) v = dm(rng);
    auto Bm = mat_vec(td.B, m);
    IVec shifted(td.G);
    for (int i = 0; i < td.G; ++i) shifted[i] = z2[i] + 2 * Bm[i];
    CHECK(theta2(td, shifted) == theta2(td, z2) + dot(m, z2) + dot(m, Bm));
  }
}

TEST_CASE("theta path equals kkr on the 40 configurations") {
  auto fx = load_fixture("highest-40.json");
  auto mu = content_from_json(fx.at("mu"), 2, 8);
  for (const auto& e : fx.at("entries")) {
    std::vector<std::vector<long>> rig;
    for (const auto& b : e.at("riggings"))
      rig.push_back(b.get<std::vector<long>>());
    auto rc = make_rigged(mu, rig);
    Path want = parse_path(e.at("path").get<std::string>());
    auto x = extend(rc);
    CHECK(theta_path(x) == want);
    CHECK(tau_path(x) == want);
  }
}

TEST_CASE("theta path is invariant under lattice shifts of the rigging") {
  Path p = parse_path("111221113221132113311322");
  auto x = extend(kkr_forward(p, 2));
  CHECK(theta_path(x) == p);
  // shifting the window of one block by its slide leaves the path fixed
  auto y = x;
  y.slide(2, 1, 1);
  CHECK(theta_path(y) == p);
}

TEST_CASE("tau satisfies the tropical Hirota equation") {
  Path p = parse_path("111221113221132113311322");
  auto td = make_theta(extend(kkr_forward(p, 2)));
  for (long k = 1; k <= 24; ++k)
    for (int d = 2; d <= 3; ++d) {
      Int lhs = tau(td, k - 1, d) + tau(td, k, d - 1, true);
      Int rhs = std::max(Int(tau(td, k, d, true) + tau(td, k - 1, d - 1)),
                         Int(tau(td, k, d) + tau(td, k - 1, d - 1, true) - 1));
      CHECK(lhs == rhs);
    }
}

TEST_CASE("finite replica tau reduces to the binary tau") {
  auto fx = load_fixture("highest-40.json");
  auto mu = content_from_json(fx.at("mu"), 2, 8);
  int checked = 0;
  for (const auto& e : fx.at("entries")) {
    if (++checked > 8) break;
    std::vector<std::vector<long>> rig;
    for (const auto& b : e.at("riggings"))
      rig.push_back(b.get<std::vector<long>>());
    auto td = make_theta(extend(make_rigged(mu, rig)));
    for (long k = 0; k <= 8; ++k)
      for (int d = 1; d <= 3; ++d) {
        Int t = tau(td, k, d);
        CHECK(tau_finite(td, 2, k, d) == t);
        CHECK(tau_finite(td, 4, k, d) == t);
      }
  }
}

TEST_CASE("theta carrier against transport") {
  Path p = parse_path("111221113221132113311322");
  auto x = extend(kkr_forward(p, 2));
  auto td = make_theta(x);
  for (int l = 1; l <= 3; ++l) {
    auto ev = evolve(1, l, p, 2);
    REQUIRE(ev.ok());
    const auto& tb = r_table(1, l, 2);
    for (long k = 0; k <= 24; ++k) {
      auto y = theta_carrier(td, l, k);
      long sum = 0;
      for (long v : y) sum += v;
      CHECK(sum == l);
      // transport counts are indexed by letter; letter a sits at occ[a]
      auto occ = transport_carrier_at(tb, ev.carriers.front(), p, k);
      REQUIRE(occ.size() == y.size() + 1);
      for (size_t a = 0; a < y.size(); ++a) CHECK(y[a] == occ[a + 1]);
    }
    CHECK(theta_carrier(td, l, 0) == theta_carrier(td, l, 24));
  }
}

TEST_CASE("ball conservation along theta paths") {
  Path p = parse_path("111221113221132113311322");
  auto x = extend(kkr_forward(p, 2));
  for (long t = 0; t < 5; ++t) {
    auto q = theta_path(x);
    long balls = 0;
    for (int v : q)
      if (v >= 2) ++balls;
    CHECK(balls == 12);  // |mu^(1)|
    x.shift_time(1, 3, 1);
  }
}

TEST_CASE("time averages") {
  auto fx = load_fixture("averages.json");
  const auto& r2 = fx.at("rank2");
  Path p = parse_path(r2.at("path").get<std::string>());
  auto mu = *soliton_content(p, 2);
  for (const auto& row : r2.at("rows")) {
    int l = row.at("l").get<int>();
    for (int a = 2; a <= 3; ++a) {
      Rat want(row.at("avg").at(a - 2).get<std::string>());
      want.canonicalize();
      CHECK(time_average(mu, l, a) == want);
    }
  }
  // l = 1 gives the plain densities
  CHECK(time_average(mu, 1, 2) == Rat(12 - 5, 24));
  CHECK(time_average(mu, 1, 3) == Rat(5, 24));
}

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <random>

#include "doctest.h"
#include "psca/automaton.hpp"
#include "psca/fixtures.hpp"

using namespace psca;

namespace {
Path random_path(std::mt19937& rng, int n, int L) {
  std::uniform_int_distribution<int> d(1, n + 1);
  Path p(L);
  for (auto& x : p) x = d(rng);
  return p;
}
const char* kAA = "211332111321133112221112";
}  // namespace

TEST_CASE("path parsing") {
  CHECK(path_text(parse_path("1213")) == "1213");
  CHECK_THROWS(parse_path("10x"));
}

TEST_CASE("T^(1)_1 is the cyclic shift") {
  std::mt19937 rng(3);
  for (int trial = 0; trial < 100; ++trial) {
    Path p = random_path(rng, 2, 12);
    auto ev = evolve(1, 1, p, 2);
    REQUIRE(ev.ok());
    CHECK(ev.out == cyclic_shift(p));
  }
}

TEST_CASE("L-fold cyclic shift is the identity") {
  Path p = parse_path(kAA);
  Path q = p;
  for (size_t t = 0; t < p.size(); ++t) q = evolve(1, 1, q, 2).out;
  CHECK(q == p);
}

TEST_CASE("evolutions commute and preserve weight") {
  Path p = parse_path(kAA);
  auto ab = evolve(2, 1, evolve(1, 2, p, 2).out, 2);
  auto ba = evolve(1, 2, evolve(2, 1, p, 2).out, 2);
  REQUIRE(ab.ok());
  REQUIRE(ba.ok());
  CHECK(ab.out == ba.out);
  auto w0 = path_stats(p, 2).weights;
  CHECK(path_stats(ab.out, 2).weights == w0);
}

TEST_CASE("non-unique evolution is detected") {
  auto ev = evolve(2, 1, parse_path("213213"), 2);
  CHECK(ev.status == EvolveStatus::NonUnique);
  CHECK(ev.carriers.size() > 1);
}

TEST_CASE("K moves factorize T^(1)_inf") {
  // t=2 row of the left table and its K-decomposition
  Path p = parse_path("331132111321111221122213");
  Path k3 = k_move(3, p, 2);
  CHECK(path_text(k3) == "113312331123111221122211");
  Path k2 = k_move(2, k3, 2);
  CHECK(path_text(k2) == "213311332113211112211122");
  CHECK(t1_infinity(p, 2) == k2);
  auto inf = evolve_inf(1, p, 2);
  REQUIRE(inf.ok());
  CHECK(inf.out == k2);
  CHECK_THROWS_AS(t1_infinity(parse_path("221"), 1), NotInB1);
}

TEST_CASE("energy spectrum and soliton content") {
  Path p = parse_path(kAA);
  auto es = energy_spectrum(p, 2);
  REQUIRE(es.has_value());
  CHECK(es->values[0] == std::vector<long>{5, 10, 12});
  CHECK(es->values[1] == std::vector<long>{2, 3, 4, 5});
  CHECK(es->at(1, 7) == 12);  // saturation
  auto mu = soliton_content(p, 2);
  REQUIRE(mu.has_value());
  CHECK(mu->parts(1) == std::vector<int>{3, 3, 2, 2, 2});
  CHECK(mu->parts(2) == std::vector<int>{4, 1});
  CHECK(mu->size(1) == 12);
  CHECK(mu->size(0) == 24);
  // the always-defined highest-carrier energies agree on highest paths
  Path hp = parse_path("111221113221132113311322");
  auto ef = energy_spectrum(hp, 2);
  auto eh = energy_spectrum(hp, 2, true);
  REQUIRE(ef.has_value());
  REQUIRE(eh.has_value());
  CHECK(eh->values == ef->values);
}

TEST_CASE("vacancy numbers") {
  Path p = parse_path(kAA);
  auto mu = *soliton_content(p, 2);
  CHECK(vacancy(mu, 1, 1) == 4);
  CHECK(vacancy(mu, 1, 2) == 7);
  CHECK(vacancy(mu, 2, 1) == 2);
  CHECK(vacancy(mu, 2, 2) == 1);
  CHECK(is_strict_configuration(mu));

  auto fx = load_fixture("counting.json");
  auto mu8 = content_from_json(fx.at("small_level_set").at("mu"), 2, 8);
  CHECK(vacancy(mu8, 1, 1) == 1);
  CHECK(vacancy(mu8, 1, 2) == 3);
  CHECK(vacancy(mu8, 2, 1) == 1);
}

TEST_CASE("transport reproduces evolution row by row") {
  Path p = parse_path("321113211222111223331111");
  auto ev = evolve(1, 3, p, 2);
  REQUIRE(ev.ok());
  const auto& tb = r_table(1, 3, 2);
  auto tr = transport(tb, ev.carriers.front(), p);
  CHECK(tr.out == ev.out);
  CHECK(tr.carrier == ev.carriers.front());
  long e = 0;
  for (int h : tr.energies) e += h;
  CHECK(e == ev.energy);
  // carrier occupancy is periodic: after L sites it returns to the start
  CHECK(transport_carrier_at(tb, ev.carriers.front(), p, 0) ==
        transport_carrier_at(tb, ev.carriers.front(), p, (long)p.size()));
}

TEST_CASE("admissible evolutions preserve the level set, inadmissible leave it") {
  auto fx = load_fixture("general-case.json");
  int n = fx.at("n").get<int>();
  for (const auto& cs : fx.at("cases")) {
    Path p = parse_path(cs.at("path").get<std::string>());
    auto mu = soliton_content(p, n);
    REQUIRE(mu.has_value());
    for (int a = 1; a <= n; ++a)
      for (int l = 1; l <= mu->largest_part(a); ++l) {
        auto ev = evolve(a, l, p, n);
        REQUIRE(ev.ok());
        auto out = soliton_content(ev.out, n);
        bool stays = out.has_value() && *out == *mu;
        CHECK(admissible(*mu, a, l) == stays);
      }
  }
}

TEST_CASE("classified words form level sets of the right size") {
  auto classes = classify_words(2, 6);
  long total = 0;
  for (const auto& [mu, paths] : classes) {
    total += (long)paths.size();
    for (const auto& p : paths) CHECK(soliton_content(p, 2) == mu);
  }
  CHECK(total <= 729);
  // the empty-content class is exactly {111111}
  SolitonContent empty{2, 6, {{}, {}}};
  REQUIRE(classes.count(empty) == 1);
  CHECK(classes.at(empty) == std::vector<Path>{parse_path("111111")});
}

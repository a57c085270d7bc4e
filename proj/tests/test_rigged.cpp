#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <set>

#include "doctest.h"
#include "psca/fixtures.hpp"
#include "psca/rigged.hpp"

using namespace psca;

TEST_CASE("backward golden and round trip") {
  auto fx = load_fixture("kkr-goldens.json");
  int n = fx.at("n").get<int>();
  const auto& bw = fx.at("backward");
  auto rc = RiggedConfig::from_json(bw.at("rc").dump());
  rc.n = n;
  Path p = kkr_backward(rc);
  CHECK(path_text(p) == bw.at("path").get<std::string>());
  CHECK(kkr_forward(p, n) == rc);
}

TEST_CASE("forward goldens") {
  auto fx = load_fixture("kkr-goldens.json");
  int n = fx.at("n").get<int>();
  for (const auto& cs : fx.at("forward")) {
    Path p = parse_path(cs.at("path").get<std::string>());
    auto rc = kkr_forward(p, n);
    CHECK(rc.valid());
    CHECK(kkr_backward(rc) == p);
    auto want = RiggedConfig::from_json(cs.at("rc").dump());
    want.n = n;
    CHECK(rc == want);
  }
}

TEST_CASE("bijection on all highest words up to L=6") {
  for (int L = 1; L <= 6; ++L) {
    long words = 1;
    for (int i = 0; i < L; ++i) words *= 3;
    for (long code = 0; code < words; ++code) {
      Path p(L);
      long c = code;
      for (int i = 0; i < L; ++i) {
        p[i] = 1 + c % 3;
        c /= 3;
      }
      if (!path_stats(p, 2).is_highest) continue;
      auto rc = kkr_forward(p, 2);
      CHECK(rc.valid());
      CHECK(kkr_backward(rc) == p);
    }
  }
  CHECK_THROWS_AS(kkr_forward(parse_path("211"), 2), NotHighest);
}

TEST_CASE("content of the image matches the energy content") {
  Path p = parse_path("111221113221132113311322");
  auto rc = kkr_forward(p, 2);
  auto mu = soliton_content(p, 2);
  REQUIRE(mu.has_value());
  CHECK(rc.content() == *mu);
  // riggings live in [0, vacancy]
  for (int a = 1; a <= 2; ++a)
    for (const auto& s : rc.colors[a - 1]) {
      CHECK(s.rig >= 0);
      CHECK(s.rig <= rc.vac(a, s.len));
    }
}

TEST_CASE("rigged enumeration matches the binomial count") {
  auto fx = load_fixture("highest-40.json");
  auto mu = content_from_json(fx.at("mu"), 2, 8);
  auto all = enumerate_rigged(mu);
  CHECK(all.size() == 40);
  std::set<RiggedConfig> seen;
  for (const auto& rc : all) {
    CHECK(rc.valid());
    CHECK(rc.content() == mu);
    CHECK(seen.insert(rc).second);
  }
  // and each one is the image of its backward path
  for (const auto& rc : all) CHECK(kkr_forward(kkr_backward(rc), 2) == rc);
}

TEST_CASE("json round trip") {
  auto rc = kkr_forward(parse_path("11213122"), 2);
  auto back = RiggedConfig::from_json(rc.json());
  back.n = rc.n;
  CHECK(back == rc);
}

TEST_CASE("make_rigged validates shape") {
  auto fx = load_fixture("highest-40.json");
  auto mu = content_from_json(fx.at("mu"), 2, 8);
  CHECK_THROWS_AS(make_rigged(mu, {{0}, {0}, {0}}),
                  InvalidRiggedConfiguration);
}

TEST_CASE("configuration enumeration is consistent") {
  for (const auto& mu : enumerate_configurations(2, 8, 1))
    CHECK(is_strict_configuration(mu));
  for (const auto& mu : enumerate_configurations(2, 6, 0))
    CHECK(is_configuration(mu));
}

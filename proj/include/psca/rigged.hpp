#pragma once
// Rigged configurations and the KKR bijection phi / phi^{-1}.

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "psca/automaton.hpp"

namespace psca {

struct InvalidRiggedConfiguration : std::runtime_error {
  explicit InvalidRiggedConfiguration(const std::string& what)
      : std::runtime_error(what) {}
};
struct NotHighest : std::runtime_error {
  NotHighest() : std::runtime_error("path is not highest") {}
};

// One string: (length, rigging). A rigged configuration is a multiset of
// strings per color together with the ambient length L.
struct Strg {
  int len = 0;
  long rig = 0;
  bool operator==(const Strg&) const = default;
  auto operator<=>(const Strg&) const = default;
};

struct RiggedConfig {
  int n = 0;
  long L = 0;
  std::vector<std::vector<Strg>> colors;  // [a-1], kept sorted

  bool operator==(const RiggedConfig&) const = default;
  auto operator<=>(const RiggedConfig&) const = default;

  void normalize();  // sort: decreasing length, then nondecreasing rigging
  SolitonContent content() const;
  // vacancy number of a (hypothetical) color-a string of length l
  long vac(int a, int l) const;
  bool valid() const;  // 0 <= riggings <= vacancy, n >= 1
  // riggings of the block of length len in color a, nondecreasing
  std::vector<long> block_riggings(int a, int len) const;

  std::string json() const;
  static RiggedConfig from_json(const std::string& text);
};

// Build from content plus per-block riggings listed in block order
// (decreasing length), each nondecreasing.
RiggedConfig make_rigged(const SolitonContent& mu,
                         const std::vector<std::vector<long>>& riggings);

RiggedConfig kkr_forward(const Path& p, int n);
Path kkr_backward(RiggedConfig rc);

// All rigged configurations over mu (riggings within [0, vacancy]).
std::vector<RiggedConfig> enumerate_rigged(const SolitonContent& mu,
                                           size_t budget = 1'000'000);

// All configurations mu (strict partitions profile with vacancy >= lo) for
// words of length L over n+1 letters.
std::vector<SolitonContent> enumerate_configurations(int n, long L, long lo);

}  // namespace psca

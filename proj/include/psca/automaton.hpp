#pragma once
// Paths, carrier transport, time evolutions T^(r)_l with evolvability
// detection, energies, soliton content, the factorized flow K_2...K_{n+1},
// level sets, orbits, and admissibility of evolutions.

#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "psca/exact.hpp"
#include "psca/tableau.hpp"

namespace psca {

using Path = std::vector<int>;  // letters in {1..n+1}

Path parse_path(const std::string& word);
std::string path_text(const Path& p);

// Soliton content: per color a (1-based), blocks (length, multiplicity) with
// strictly decreasing lengths.
struct SolitonContent {
  int n = 0;
  long L = 0;
  std::vector<std::vector<std::pair<int, int>>> diagrams;  // [a-1] -> blocks

  bool operator==(const SolitonContent&) const = default;
  auto operator<=>(const SolitonContent&) const = default;

  int g(int a) const { return static_cast<int>(diagrams[a - 1].size()); }
  int len(int a, int i) const { return diagrams[a - 1][i - 1].first; }
  int mult(int a, int i) const { return diagrams[a - 1][i - 1].second; }
  long size(int a) const;        // |mu^(a)|; a = 0 gives L, a = n+1 gives 0
  int largest_part(int a) const; // 0 if empty
  std::vector<int> parts(int a) const;
};

// Transport of carrier elems[v0] through p; returns output path, final
// carrier index, and per-site local energies.
struct TransportResult {
  Path out;
  int carrier = 0;
  std::vector<int> energies;
};
TransportResult transport(const RTable& tb, int v0, const Path& p);

// Carrier occupancy after site k (counts of each letter in the carrier).
std::vector<int> transport_carrier_at(const RTable& tb, int v0, const Path& p,
                                      long k);

enum class EvolveStatus { Ok, NoCarrier, NonUnique };

struct EvolveResult {
  EvolveStatus status = EvolveStatus::Ok;
  Path out;
  long energy = 0;                  // E^(r)_l = sum of local energies
  std::vector<int> carriers;        // all fixed-point carrier indices
  bool ok() const { return status == EvolveStatus::Ok; }
};

EvolveResult evolve(int r, int l, const Path& p, int n);

// T^(r)_inf realized as T^(r)_{l*}, l* = largest part of mu^(r).
EvolveResult evolve_inf(int r, const Path& p, int n);

Path cyclic_shift(const Path& p);

// E^(a)_l for l = 1..saturation; empty optional if some evolve fails.
// highest_carrier=true computes the always-defined variant that starts the
// carrier at u^{r,l} instead of demanding a periodic fixed point.
struct EnergySpectrum {
  int n = 0;
  long L = 0;
  std::vector<std::vector<long>> values;  // [a-1][l-1], up to saturation
  long at(int a, int l) const;            // saturates beyond the stored range
};
std::optional<EnergySpectrum> energy_spectrum(const Path& p, int n,
                                              bool highest_carrier = false);

// mu from second differences of the energies. Empty if not evolvable or the
// differences are not a valid strict partition profile.
std::optional<SolitonContent> soliton_content(const Path& p, int n);
SolitonContent content_from_spectrum(const EnergySpectrum& es);

struct PathStats {
  bool is_highest = false;
  std::vector<long> weights;  // #(1)..#(n+1)
  bool in_P = false;          // #(1) >= ... >= #(n+1)
};
PathStats path_stats(const Path& p, int n);

struct NotInB1 : std::runtime_error {
  NotInB1() : std::runtime_error("letter 1 is not weakly most frequent") {}
};

Path k_move(int a, const Path& p, int n);
Path t1_infinity(const Path& p, int n);  // K_2 K_3 ... K_{n+1}

// Vacancy number p^(a)_i of mu at ambient length L.
long vacancy(const SolitonContent& mu, int a, int i);
bool is_configuration(const SolitonContent& mu);       // all p >= 0
bool is_strict_configuration(const SolitonContent& mu); // all p >= 1

// Section "general case": null/convex blocks and admissibility of T^(r)_l.
bool block_null(const SolitonContent& mu, int a, int i);
bool block_convex(const SolitonContent& mu, int a, int i);
bool admissible(const SolitonContent& mu, int r, int l);

// All words over {1..n+1}^L that are evolvable at every (a,l), grouped by
// soliton content. Throws if (n+1)^L exceeds the budget.
std::map<SolitonContent, std::vector<Path>> classify_words(int n, int L,
                                                           size_t budget = 100'000'000);

// Breadth-first closure of p under the generators (r,l); records one
// generator word per reached path as the total count of each generator.
struct OrbitClosure {
  std::vector<Path> paths;                          // discovery order
  std::map<Path, std::vector<long>> word;           // generator multiplicities
};
OrbitClosure orbit_closure(const Path& p, int n,
                           const std::vector<std::pair<int, int>>& generators,
                           size_t budget = 5'000'000);

}  // namespace psca

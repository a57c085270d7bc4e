#pragma once
// Action-angle variables: extended rigged configurations, slides, the F
// lattice, dynamical periods, level-set decomposition and scattering maps.

#include <map>
#include <string>
#include <vector>

#include "psca/exact.hpp"
#include "psca/rigged.hpp"

namespace psca {

// Extended rigged configuration: each block carries a window of m
// quasi-periodic rigging values r_{alpha+m} = r_alpha + p (nondecreasing
// within the window).
struct ExtRC {
  SolitonContent mu;
  std::vector<std::vector<std::vector<long>>> win;  // [a-1][i-1][alpha-1]

  bool operator==(const ExtRC&) const = default;

  long at(int a, int i, long alpha) const;  // quasi-periodic extension
  std::vector<long> omega() const;          // g-dim: first window entries
  // per-block difference windows: lambda_alpha = r_alpha - r_1, size m
  std::vector<std::vector<long>> lambda() const;

  void shift_time(int r, int l, long t);  // angle image of (T^(r)_l)^t
  void slide(int a, int i, long k);       // s^{(a)}_i applied k times

  bool reducible() const;       // windows back in the fundamental domain?
  RiggedConfig to_rigged() const;
};

ExtRC extend(const RiggedConfig& rc);

// Largest gamma | gcd(m, p) with lambda_{alpha + m/gamma} = lambda_alpha +
// p/gamma for all alpha.
long order_of_symmetry(int m, long p, const std::vector<long>& lambda);
std::vector<long> gamma_of(const ExtRC& x);

// Block index bookkeeping: g-dim vectors run over (a, i) in lex order.
int g_total(const SolitonContent& mu);
IVec h_vector(const SolitonContent& mu, int r, int l);  // g-dim, l<1 => inf
IMat f_matrix(const SolitonContent& mu);
IMat f_gamma(const SolitonContent& mu, const std::vector<long>& gamma);

// Minimal N >= 1 with N h in F_gamma Z^g; throws if h = 0.
Int dynamical_period(const IMat& f_gam, const IVec& h);
Int dynamical_period(const SolitonContent& mu, const std::vector<long>& gamma,
                     int r, int l);

// Counting. omega_count = (det F) prod binom(p_i + m_i - 1, m_i - 1)/m_i.
Int omega_count(const SolitonContent& mu);
// |Lambda_gamma(m, p)| by Moebius inversion over beta with gamma | beta |
// gcd(m, p).
Int lambda_count(int m, long p, long gamma);
// brute-force oracle: windows 0 = l_1 <= ... <= l_m <= p of symmetry order
// exactly gamma
Int lambda_count_brute(int m, long p, long gamma);

struct DecompTerm {
  std::vector<long> gamma;  // per block, lex order
  Int torus;                // det F_gamma
  Int orbits;               // number of orbits with this symmetry
};
// All gamma with a nonempty stratum; sum over terms of torus*orbits =
// omega_count(mu).
std::vector<DecompTerm> decompose_level_set(const SolitonContent& mu);

// xi_i and the sublattice data of the general (non-strict) case.
std::vector<std::vector<int>> xi_indices(const SolitonContent& mu);
struct LatticeData {
  IMat basis;     // columns h^{(a)}_{xi_i}, g x g
  Int volume;     // prod (l_i - l_{i+1}) over null convex blocks
  Int index;      // det F_gamma / volume = orbit size
};
LatticeData general_case_lattice(const SolitonContent& mu,
                                 const std::vector<long>& gamma);

// Scattering. direct_scattering finds a highest path in the T-orbit of p and
// pulls its rigged configuration back along the recorded evolutions.
ExtRC direct_scattering(const Path& p, int n);

struct RoutesDisagree : std::runtime_error {
  explicit RoutesDisagree(const std::string& what)
      : std::runtime_error(what) {}
};

// Oracle route: normalize omega to zero via the xi-generator word over the
// backward KKR image, then re-apply the word with exponents lifted by the
// dynamical periods.
Path inverse_scattering_word(const ExtRC& x);
// Primary route evaluates the theta-function path formula; both routes run
// and must agree (defined alongside the tropical code).
Path inverse_scattering(const ExtRC& x);

// Canonical representative of v modulo the column lattice of f.
IVec reduce_mod_lattice(const IMat& f, const IVec& v);

}  // namespace psca

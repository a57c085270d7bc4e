#pragma once
// Linearized Bethe roots at q=0: string center equation, eigenvalue phases
// of the time evolutions, and the heuristic period N'.

#include <vector>

#include "psca/angle.hpp"
#include "psca/exact.hpp"

namespace psca {

struct BetheData {
  SolitonContent mu;
  int G = 0;
  IMat A;  // delta (p+m) + C min(l,l') - same-block correction
};

BetheData make_bethe(const SolitonContent& mu);

// String centers u = A^{-1}(c + r + rho) with c = (p+m+1)/2, rho = alpha-1.
RVec string_centers(const BetheData& bd, const ExtRC& x);

// Canonical form modulo Z and within-block permutations: per block the
// sorted fractional parts. Distinct forms = distinct Bethe roots.
std::vector<std::vector<Rat>> canonical_centers(const BetheData& bd,
                                                const RVec& u);

// Eigenvalue phase of T^(r)_l on the Bethe vector: t(h^(r)_l)(u + 1/2).
Rat eigenvalue_phase(const BetheData& bd, const RVec& u, int r, int l);

// N' = LCM(det A / det A[u]) over columns with det A[u] != 0, where A[u]
// has column u replaced by h^(r)_l.
Int n_prime(const BetheData& bd, int r, int l);

// Equality of angle variables decided through the string-center embedding.
bool angle_equal(const ExtRC& x, const ExtRC& y);

}  // namespace psca

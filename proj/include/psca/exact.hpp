#pragma once
// Exact integer/rational linear algebra and number-theoretic helpers shared
// by every module. No floating point anywhere.

#include <gmpxx.h>
#include <stdexcept>
#include <vector>

namespace psca {

using Int = mpz_class;
using Rat = mpq_class;
using IVec = std::vector<Int>;
using RVec = std::vector<Rat>;
using IMat = std::vector<std::vector<Int>>;
using RMat = std::vector<std::vector<Rat>>;

struct SingularMatrix : std::runtime_error {
  SingularMatrix() : std::runtime_error("singular matrix") {}
};

// Fraction-free (Bareiss) determinant of a square integer matrix.
Int det_bareiss(IMat m);

// Cofactor-expansion determinant; quadratic blowup, used only as a test
// oracle for det_bareiss at small sizes.
Int det_cofactor(const IMat& m);

// Solve M x = b exactly over the rationals. Throws SingularMatrix.
RVec solve_exact(const IMat& m, const RVec& b);
RVec solve_exact(const IMat& m, const IVec& b);

// Exact inverse of a square integer matrix.
RMat inverse_exact(const IMat& m);

// v in M Z^g ?  (solve + integrality check)
bool in_lattice(const IMat& m, const IVec& v);

// Moebius function.
int mobius(unsigned long k);

// Extended binomial: a(a-1)...(a-b+1)/b! for integer a (may be negative).
Int binom_ext(const Int& a, unsigned long b);

// Positive divisors of k in increasing order.
std::vector<long> divisors(long k);

// LCM of positive rationals = smallest positive element of the intersection
// of the r_i Z; equals lcm of the numerators of the reduced fractions when
// every r_i Z contains it, computed exactly as lcm(num_i) whenever that lies
// in each r_i Z (asserted).
Int lcm_rationals(const std::vector<Rat>& rs);

Int ilcm(const Int& a, const Int& b);
Int igcd(const Int& a, const Int& b);

IVec mat_vec(const IMat& m, const IVec& v);
Int dot(const IVec& a, const IVec& b);

}  // namespace psca

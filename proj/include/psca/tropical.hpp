#pragma once
// Tropical Riemann theta function, tropical tau functions, path and carrier
// reconstruction, and time averages of carrier occupancies.

#include <vector>

#include "psca/angle.hpp"
#include "psca/exact.hpp"

namespace psca {

// Quadratic data over the index set H = {(a,i,alpha)} in lex order.
struct ThetaData {
  SolitonContent mu;
  int G = 0;
  IMat B;        // delta*p + C min(l,l')
  IVec r;        // riggings per (a,i,alpha)
  IVec p;        // vacancy per (a,i,alpha)
  RMat Binv;
  Rat lambda_lb;  // 1/trace(B^{-1}) <= smallest eigenvalue of B
};

ThetaData make_theta(const ExtRC& x);
ThetaData make_theta(const SolitonContent& mu);  // r = 0

// G-dimensional velocity vector of T^(c)_l; l < 1 means l = infinity and
// c = n+1 gives the zero vector.
IVec h_vector_G(const SolitonContent& mu, int c, int l);

// 2*Theta(z2/2) where Theta(z) = -min_n (t(n) B n / 2 + t(z) n). The doubled
// argument keeps everything integral for half-integer z.
Int theta2(const ThetaData& td, const IVec& z2);

// Tropical tau function tau_{k,d}, minimum over {0,1}^H of the C-min
// quadratic form; bar=true shifts r by h^(1)_inf.
Int tau(const ThetaData& td, long k, int d, bool bar = false);
// Replica tau^M_{k,d}, minimum over {0,...,M-1}^H.
Int tau_finite(const ThetaData& td, int M, long k, int d);

// Path of the rigged configuration via theta double differences, and the
// same via tau differences (independent routes).
Path theta_path(const ExtRC& x);
Path tau_path(const ExtRC& x);

// Carrier occupancies (y_{k,1},...,y_{k,n+1}) of T^(1)_l after site k.
std::vector<long> theta_carrier(const ThetaData& td, int l, long k);

// <y_{k,a}>_l = t(h^(1)_l) B^{-1} (h^(a-1)_inf - h^(a)_inf), 2 <= a <= n+1.
Rat time_average(const SolitonContent& mu, int l, int a);

}  // namespace psca

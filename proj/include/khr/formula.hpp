#pragma once

// Closed-form superpolynomial of an (m,n) torus knot as a sum over Dyck paths.

#include "khr/dyck.hpp"
#include "khr/laurent.hpp"

namespace khr {

struct NormalizationData {
  int chi = 0;             // (m-1)(n-1)/2
  LaurentPoly prefactor;   // (a (qt)^{-1/2})^chi
};

// (m-1)(n-1)/2.
int chi(const KnotParams& params);
NormalizationData normalization(const KnotParams& params);

// t^area q^hplus prod_{v in vstar} (1 - a q^{-k(v)}).
LaurentPoly path_summand(const DyckPath& path);

// t^area q^{hplus - chi - sum k(v)} prod_{v in vstar} (q^{k(v)} - a), times 1/(1-t).
// This is the per-path contribution to HHH.
Invariant hhh_summand(const DyckPath& path);

// Unnormalized series HHH = sum of hhh_summand over all paths.
Invariant hhh_direct(const KnotParams& params);

// P_{m,n} = (a (qt)^{-1/2})^chi / (1-t) * sum of path_summand. Also checked
// against (a q^{1/2} t^{-1/2})^chi * hhh_direct; a mismatch throws InternalError.
Invariant invariant_p(const KnotParams& params);

// Graded Euler characteristic: (qt)^{1/2} -> -(qt)^{1/2} in the numerator.
Invariant euler_characteristic(const Invariant& v);

}  // namespace khr

#include "khr/formula.hpp"

#include "khr/errors.hpp"

namespace khr {

int chi(const KnotParams& params) {
  const KnotParams p = KnotParams::make(params.m, params.n);
  return (p.m - 1) * (p.n - 1) / 2;
}

NormalizationData normalization(const KnotParams& params) {
  const int c = chi(params);
  return {c, LaurentPoly::monomial({c, -c, -c})};
}

LaurentPoly path_summand(const DyckPath& path) {
  LaurentPoly s = LaurentPoly::monomial({0, 2 * hplus(path), 2 * area(path)});
  for (const auto& v : vstar(path))
    s *= LaurentPoly::constant(1) - LaurentPoly::monomial({1, -2 * k_of(path, v), 0});
  return s;
}

Invariant hhh_summand(const DyckPath& path) {
  int qexp = hplus(path) - chi(path.params());
  LaurentPoly factors = LaurentPoly::constant(1);
  for (const auto& v : vstar(path)) {
    const int k = k_of(path, v);
    qexp -= k;
    factors *= var_q(k) - var_a();
  }
  return Invariant(factors.scaled({0, 2 * qexp, 2 * area(path)}), 1);
}

Invariant hhh_direct(const KnotParams& params) {
  Invariant total;
  for (const auto& path : enumerate_paths(params)) total += hhh_summand(path);
  return total;
}

Invariant invariant_p(const KnotParams& params) {
  const auto norm = normalization(params);
  LaurentPoly sum;
  for (const auto& path : enumerate_paths(params)) sum += path_summand(path);
  Invariant p(norm.prefactor * sum, 1);

  // P = (a q^{1/2} t^{-1/2})^chi HHH
  const int c = norm.chi;
  const Invariant via_hhh = LaurentPoly::monomial({c, c, -c}) * hhh_direct(params);
  KHR_ASSERT(p == via_hhh, "display and rewritten forms of the path sum disagree");
  return p;
}

Invariant euler_characteristic(const Invariant& v) {
  return Invariant(euler_sign(v.num()), v.one_minus_t_pow());
}

}  // namespace khr

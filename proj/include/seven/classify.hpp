#pragma once

// Normal forms of circle-bundle total spaces N_t:
//   homeomorphism:  N_t ~ M^c_{l,k}
//   diffeomorphism: N_t ~ M^0_{l,k} # Sigma_r   (delta = 0)
// and comparison of descriptors through their invariant systems.

#include "seven/invariants.hpp"
#include "seven/theta.hpp"

#include <algorithm>
#include <optional>
#include <vector>

namespace seven {

struct ClassificationResult {
  ManifoldDescriptor descriptor;
  Integer witness_m;   // l = 6 m
  Integer raw_exotic;  // r before reduction mod 28 and before absorption (DIFF only)

  friend bool operator==(const ClassificationResult&, const ClassificationResult&) = default;
};

inline ClassificationResult classify_homeo(const ThetaClass& theta) {
  require_valid(theta);
  const bool even = is_even(theta.k);
  const int c = even ? theta.delta : 0;
  const Integer num = theta.p + (3 * theta.eps - 4) * theta.k - (even ? 24 * theta.delta : 0);

  ClassificationResult out;
  out.descriptor.category = Category::TOP;
  out.descriptor.core = {exact_div(num, 4, "l = (p + (3eps-4)k - 12(1+(-1)^k)delta)/4"), theta.k, c};
  out.witness_m = exact_div(out.descriptor.core.l, 6, "l = 6m");
  out.raw_exotic = 0;
  return out;
}

/// With absorb = false the raw (l, k, r) triple is kept even for k = 0, where
/// M^0_{l,0} # Sigma_r is diffeomorphic to M^0_{l,0}.
inline ClassificationResult classify_diffeo(const ThetaClass& theta, bool absorb = true) {
  require_valid(theta);
  if (theta.delta != 0) throw DomainError("delta must be 0");

  ClassificationResult out;
  out.descriptor.category = Category::DIFF;
  out.descriptor.core = {exact_div(theta.p + (3 * theta.eps - 4) * theta.k, 4, "l = (p + (3eps-4)k)/4"),
                         theta.k, 0};
  out.witness_m = exact_div(out.descriptor.core.l, 6, "l = 6m");
  out.raw_exotic = exact_div((1 - theta.eps) * (theta.p - 4 * theta.k), 24, "r = (1-eps)(p-4k)/24");
  out.descriptor.exotic = (absorb && theta.k == 0) ? 0 : reduce_exotic(out.raw_exotic);
  return out;
}

inline ClassificationResult classify(const ThetaClass& theta, Category cat) {
  return cat == Category::TOP ? classify_homeo(theta) : classify_diffeo(theta);
}

namespace detail {

/// Is there an isomorphism Z_n -> Z_n, kappa1 -> a kappa2, carrying the
/// linking form and the p1/2 coefficient of the first tuple to the second?
inline bool torsion_forms_isomorphic(const InvariantTuple& a, const InvariantTuple& b) {
  const Integer n = abs(a.h4_k);
  for (Integer u = 0; u < n; ++u) {
    if (gcd(u, n) != 1) continue;
    if (u * u * *b.linking != *a.linking) continue;
    if (floor_mod(u * a.ph.value() - b.ph.value(), n) == 0) return true;
  }
  return false;
}

}  // namespace detail

/// TOP compares {rank, H, p1/2, b, KS, s1}; DIFF compares {rank, H, p1/2, b,
/// mu}. For k = 0 the normal forms are compared literally; in DIFF the exotic
/// summand is ignored there since M^0_{l,0} # Sigma_r ~ M^0_{l,0}.
inline bool same_invariants(const ManifoldDescriptor& d1, const ManifoldDescriptor& d2) {
  if (d1.category != d2.category) throw DomainError("category mismatch");
  const InvariantTuple i1 = descriptor_invariants(d1);
  const InvariantTuple i2 = descriptor_invariants(d2);

  if (i1.b4_free_rank != i2.b4_free_rank) return false;
  if (abs(i1.h4_k) != abs(i2.h4_k)) return false;
  if (i1.ks != i2.ks) return false;

  if (i1.h4_k == 0) {
    const bool exotic_ok = d1.category == Category::DIFF || d1.exotic == d2.exotic;
    return d1.core == d2.core && exotic_ok;
  }
  if (d1.category == Category::TOP ? i1.s1 != i2.s1 : i1.mu != i2.mu) return false;
  return detail::torsion_forms_isomorphic(i1, i2);
}

/// Smallest P > 0 dividing 2688|k| such that (k, p + P, eps, delta) is valid
/// and classifies to a descriptor with the same invariant tuple. Every
/// invariant is periodic in p with period 2688|k|, so a result always exists
/// for k != 0; k = 0 yields nullopt.
inline std::optional<Integer> find_period(const ThetaClass& theta, Category cat) {
  require_valid(theta);
  if (theta.k == 0) return std::nullopt;
  const Integer bound = 2688 * abs(theta.k);
  const int step = detail::p_step(theta.eps);
  const Integer quotient = bound / step;

  std::vector<Integer> divisors;
  for (Integer j = 1; j * j <= quotient; ++j) {
    if (quotient % j != 0) continue;
    divisors.push_back(j);
    if (j * j != quotient) divisors.push_back(quotient / j);
  }
  std::sort(divisors.begin(), divisors.end());

  // Invariants are at most quadratic in p, so a shift that fixes them at two
  // consecutive admissible p fixes them along the whole progression.
  ThetaClass next = theta;
  next.p += step;
  const InvariantTuple base = descriptor_invariants(classify(theta, cat).descriptor);
  const InvariantTuple base_next = descriptor_invariants(classify(next, cat).descriptor);
  for (const Integer& j : divisors) {
    ThetaClass shifted = theta, shifted_next = next;
    shifted.p += j * step;
    shifted_next.p += j * step;
    if (!is_valid(shifted)) continue;
    if (descriptor_invariants(classify(shifted, cat).descriptor) == base &&
        descriptor_invariants(classify(shifted_next, cat).descriptor) == base_next)
      return j * step;
  }
  return std::nullopt;
}

}  // namespace seven

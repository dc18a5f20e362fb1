#pragma once

// Regular circle actions on 2-connected 7-manifolds.
//
// A manifold #_{2r} S^3 x S^4 # N_t carries a regular action with orbit space
// #_r S^3 x S^3 # N, so deciding and counting actions on a descriptor reduces
// to searching the classes [N, t] whose normal form matches its core.

#include "seven/classify.hpp"
#include "seven/invariants.hpp"
#include "seven/theta.hpp"

#include <cstdint>
#include <optional>
#include <set>
#include <stdexcept>
#include <vector>

namespace seven {

struct ActionWitness {
  ThetaClass theta;
  std::int64_t rank = 0;  // total-space S^3 x S^4 rank; the orbit space has rank / 2 copies of S^3 x S^3

  friend bool operator==(const ActionWitness&, const ActionWitness&) = default;
};

struct ActionCount {
  std::optional<std::int64_t> finite;  // nullopt means infinitely many
  ActionWitness witness;
  std::optional<Integer> period;       // present exactly when infinite

  bool is_infinite() const { return !finite.has_value(); }
};

/// #_{2r} S^3 x S^4 # M^c_{6m,(1+c)k}.
inline ManifoldDescriptor family_homeo(std::int64_t r, int c, const Integer& m, const Integer& k) {
  if (r < 0) throw DomainError("r must be nonnegative");
  if (c != 0 && c != 1) throw DomainError("c must be 0 or 1");
  return {2 * r, {6 * m, (1 + c) * k, c}, 0, Category::TOP};
}

/// #_{2r} S^3 x S^4 # M^0_{6(a+1)m,(a+1)k} # Sigma_{(1-a)m}.
inline ManifoldDescriptor family_diffeo(std::int64_t r, int a, const Integer& m, const Integer& k) {
  if (r < 0) throw DomainError("r must be nonnegative");
  if (a != 0 && a != 1) throw DomainError("a must be 0 or 1");
  return {2 * r, {6 * (a + 1) * m, (a + 1) * k, 0}, reduce_exotic((1 - a) * m), Category::DIFF};
}

namespace detail {

inline std::vector<int> delta_branches(Category cat) {
  return cat == Category::DIFF ? std::vector<int>{0} : std::vector<int>{0, 1};
}

inline ManifoldDescriptor total_space(const ThetaClass& theta, Category cat, std::int64_t rank) {
  ManifoldDescriptor d = classify(theta, cat).descriptor;
  d.rank = rank;
  return d;
}

/// Solves the classification formulas backwards: for each (eps, delta) branch
/// the core l determines p uniquely. Only the valid solutions are returned.
inline std::vector<ThetaClass> invert_core(const CoreManifold& core, Category cat) {
  std::vector<ThetaClass> out;
  const bool even = is_even(core.k);
  for (int eps = 0; eps <= 1; ++eps) {
    for (int delta : delta_branches(cat)) {
      Integer p = 4 * core.l - (3 * eps - 4) * core.k;
      if (cat == Category::TOP && even) p += 24 * delta;
      ThetaClass t{core.k, p, eps, delta};
      if (is_valid(t)) out.push_back(t);
    }
  }
  return out;
}

/// Every valid class with k in {k, -k} and p in one full period window
/// [0, 2688|k|) of each (eps, delta) progression. Requires k != 0.
template <typename Visit>
bool scan_period_window(const Integer& k, Category cat, Visit&& visit) {
  const Integer window = 2688 * abs(k);
  std::vector<Integer> signs{k};
  if (k != -k) signs.push_back(-k);
  for (const Integer& kk : signs) {
    for (int eps = 0; eps <= 1; ++eps) {
      if (eps == 1 && !is_even(kk)) continue;
      for (int delta : delta_branches(cat)) {
        const int step = p_step(eps);
        for (Integer p = first_admissible_p(0, kk, eps, delta); p < window; p += step)
          if (visit(ThetaClass{kk, p, eps, delta})) return true;
      }
    }
  }
  return false;
}

}  // namespace detail

/// A class [N, t] and orbit-space rank realizing d, or nullopt when d admits
/// no (smooth, for DIFF) regular circle action.
inline std::optional<ActionWitness> admits_action(const ManifoldDescriptor& d) {
  require_valid(d);
  if (d.rank % 2 != 0) throw DomainError("odd rank");

  std::optional<ActionWitness> found;
  auto try_theta = [&](const ThetaClass& t) {
    if (!same_invariants(detail::total_space(t, d.category, d.rank), d)) return false;
    found = ActionWitness{t, d.rank};
    return true;
  };

  for (const ThetaClass& t : detail::invert_core(d.core, d.category))
    if (try_theta(t)) return found;
  // For k = 0 the inversion above is exhaustive.
  if (d.core.k == 0) return std::nullopt;
  detail::scan_period_window(d.core.k, d.category, try_theta);
  return found;
}

inline ActionCount count_actions(const ManifoldDescriptor& d) {
  auto witness = admits_action(d);
  if (!witness) throw DomainError("not in an admitting family");

  ActionCount out;
  out.witness = *witness;
  if (d.core.k != 0) {
    out.period = find_period(witness->theta, d.category);
    if (!out.period) throw std::logic_error("no period found for a k != 0 witness");
    return out;
  }
  std::int64_t n = 0;
  for (const ThetaClass& t : detail::invert_core(d.core, d.category))
    if (same_invariants(detail::total_space(t, d.category, d.rank), d)) ++n;
  out.finite = n;
  return out;
}

/// Residues r mod 28 such that core # Sigma_r admits a smooth regular circle
/// action: every smooth class whose total space is homeomorphic to the core
/// contributes the difference of mu-invariants.
inline std::set<int> smooth_action_residues(const CoreManifold& core) {
  if (core.k == 0) throw DomainError("mu is undefined for k = 0");
  if (core.c != 0) throw DomainError("M^1 is not smooth");
  const ManifoldDescriptor target_top{0, core, 0, Category::TOP};
  const RatModZ target_mu = *core_invariants(core, Category::DIFF).mu;

  std::set<int> out;
  detail::scan_period_window(core.k, Category::DIFF, [&](const ThetaClass& t) {
    ManifoldDescriptor d = classify_diffeo(t).descriptor;
    ManifoldDescriptor as_top{0, d.core, 0, Category::TOP};
    if (!same_invariants(as_top, target_top)) return false;
    const RatModZ diff = *descriptor_invariants(d).mu - target_mu;
    const Integer r = exact_div(diff.numerator() * kExoticOrder, diff.denominator(), "28 mu-difference");
    out.insert(reduce_exotic(r));
    return false;
  });
  return out;
}

/// Residues r mod 28 such that Sigma_r admits a smooth regular circle action,
/// from the classes (+-1, 24m +- 4, 0, 0), m in [0, 27].
inline std::set<int> sphere_action_set() {
  std::set<int> out;
  for (int k : {1, -1}) {
    for (int m = 0; m < kExoticOrder; ++m) {
      const ThetaClass t{k, 24 * m + 4 * k, 0, 0};
      const RatModZ mu = *descriptor_invariants(classify_diffeo(t).descriptor).mu;
      out.insert(reduce_exotic(exact_div(mu.numerator() * kExoticOrder, mu.denominator(), "28 mu")));
    }
  }
  return out;
}

inline bool sphere_admits_action(const Integer& r) { return sphere_action_set().count(reduce_exotic(r)) > 0; }

/// The unit tangent bundle of S^4 is M^0_{-1,2}.
inline CoreManifold unit_tangent_bundle_s4() { return {-1, 2, 0}; }

/// Residues r mod 28 such that M^0_{-1,2} # Sigma_r admits a smooth regular
/// circle action.
inline std::set<int> tangent_bundle_action_set() { return smooth_action_residues(unit_tangent_bundle_s4()); }

}  // namespace seven

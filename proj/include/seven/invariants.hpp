#pragma once

// Invariant systems {H^4, p1/2, b, KS, s1, mu} of 2-connected 7-manifolds in
// the families handled here: circle-bundle total spaces N_t over a class
// [N, t], the S^3-bundles M^c_{l,k} over S^4 (c = 1: the non-smoothable
// topological analogue), homotopy spheres Sigma_r, and connected sums with
// copies of S^3 x S^4.
//
// Coefficients of p1/2 and of the linking form are stated against the
// distinguished generators (pi^* x for N_t, kappa for M^c_{l,k}).

#include "seven/exact.hpp"
#include "seven/theta.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace seven {

enum class Category { TOP, DIFF };

inline std::string_view to_string(Category c) { return c == Category::TOP ? "TOP" : "DIFF"; }

/// Order of the group of homotopy 7-spheres.
inline constexpr int kExoticOrder = 28;

struct CoreManifold {
  Integer l;
  Integer k;
  int c = 0;

  friend bool operator==(const CoreManifold&, const CoreManifold&) = default;
};

inline void require_valid(const CoreManifold& core) {
  if (core.c != 0 && core.c != 1) throw DomainError("core flag c must be 0 or 1");
  if (core.c == 1 && !is_even(core.k)) throw DomainError("M^1 requires even k");
}

/// #_{rank} S^3 x S^4 # M^c_{l,k} # Sigma_exotic.
struct ManifoldDescriptor {
  std::int64_t rank = 0;
  CoreManifold core;
  int exotic = 0;  // in [0, 28)
  Category category = Category::DIFF;

  friend bool operator==(const ManifoldDescriptor&, const ManifoldDescriptor&) = default;
};

inline int reduce_exotic(const Integer& r) {
  return floor_mod(r, kExoticOrder).convert_to<int>();
}

/// Checks the descriptor's type invariants. Rank parity is not enforced here;
/// the action operations reject odd ranks with their own error.
inline void require_valid(const ManifoldDescriptor& d) {
  require_valid(d.core);
  if (d.rank < 0) throw DomainError("negative rank");
  if (d.exotic < 0 || d.exotic >= kExoticOrder) throw DomainError("exotic index must lie in [0, 28)");
  if (d.category == Category::DIFF && d.core.c != 0) throw DomainError("M^1 is not smooth");
  if (d.category == Category::TOP && d.exotic != 0)
    throw DomainError("exotic summand is invisible in TOP; use exotic=0");
}

struct InvariantTuple {
  Integer h4_k;                 // H^4 = Z_k (Z when k = 0)
  std::int64_t b4_free_rank = 0;
  ResidueModK ph;               // p1/2 on the distinguished generator
  std::optional<RatModZ> linking;
  int ks = 0;
  std::optional<RatModZ> s1;
  std::optional<RatModZ> mu;

  friend bool operator==(const InvariantTuple&, const InvariantTuple&) = default;
};

namespace detail {

inline int even_part(const Integer& k, int flag) { return is_even(k) ? flag : 0; }

}  // namespace detail

inline InvariantTuple circle_bundle_invariants(const ThetaClass& theta, Category cat) {
  require_valid(theta);
  if (cat == Category::DIFF && theta.delta == 1)
    throw DomainError("non-smoothable theta in DIFF category");

  const Integer& k = theta.k;
  const Integer& p = theta.p;
  const Integer eps_minus_one = theta.eps - 1;

  InvariantTuple inv;
  inv.h4_k = k;
  inv.ph = residue_reduce(k, exact_div(p + theta.eps * k, 2, "(p + eps k)/2"));
  inv.ks = detail::even_part(k, theta.delta);
  if (k != 0) {
    inv.linking = ratmodz_normalize(1, k);
    inv.s1 = ratmodz_normalize(-abs(k), 8 * k) + ratmodz_normalize((p + k) * (p + k), 32 * k) +
             ratmodz_normalize(7 * eps_minus_one * (2 * p + k), 96);
    if (cat == Category::DIFF)
      inv.mu = ratmodz_normalize(-abs(k), 224 * k) + ratmodz_normalize((p + k) * (p + k), 896 * k) +
               ratmodz_normalize(eps_minus_one * (2 * p + k), 384);
  }
  return inv;
}

inline InvariantTuple core_invariants(const CoreManifold& core, Category cat) {
  require_valid(core);
  if (cat == Category::DIFF && core.c == 1) throw DomainError("M^1 is not smooth");

  const Integer& l = core.l;
  const Integer& k = core.k;

  InvariantTuple inv;
  inv.h4_k = k;
  inv.ph = residue_reduce(k, 2 * l + 12 * core.c);
  inv.ks = detail::even_part(k, core.c);
  if (k != 0) {
    inv.linking = ratmodz_normalize(1, k);
    const Integer s = 2 * l + k + 12 * core.c;
    inv.s1 = ratmodz_normalize(s * s - abs(k), 8 * k);
    if (cat == Category::DIFF) {
      const Integer m = k + 2 * l;
      inv.mu = ratmodz_normalize(m * m - abs(k), 28 * 8 * k);
    }
  }
  return inv;
}

/// mu(Sigma_r) = r mu(M^0_{1,1}) = r/28.
inline RatModZ exotic_mu(const Integer& r) { return ratmodz_normalize(r, kExoticOrder); }

/// S^3 x S^4 summands only add free rank; Sigma_r only shifts mu.
inline InvariantTuple descriptor_invariants(const ManifoldDescriptor& d) {
  require_valid(d);
  InvariantTuple inv = core_invariants(d.core, d.category);
  inv.b4_free_rank = d.rank;
  if (inv.mu) *inv.mu += exotic_mu(d.exotic);
  return inv;
}

}  // namespace seven

#pragma once

// Orbit-space classes [N, t]: the quadruple (k, p, eps, delta) with
//   t^2 = k x,  p1(N) = p x,  w2(N) = eps t mod 2,  KS(N) = delta x mod 2,
// where x in H^4(N) is pinned by <t x, [N]> = 1.

#include "seven/exact.hpp"

#include <string>
#include <variant>
#include <vector>

namespace seven {

struct ThetaClass {
  Integer k;
  Integer p;
  int eps = 0;
  int delta = 0;

  friend bool operator==(const ThetaClass&, const ThetaClass&) = default;
};

enum class ThetaClause {
  OddKForcesEpsZero,
  CongruenceViolated,
  BadFlag,
};

struct ThetaRejection {
  ThetaClause clause;
  int modulus = 0;  // 24 or 48 for CongruenceViolated
  std::string message;
};

using ThetaCheck = std::variant<ThetaClass, ThetaRejection>;

namespace detail {

/// Step between consecutive admissible p for fixed (k, eps, delta).
inline int p_step(int eps) { return eps == 0 ? 24 : 48; }

/// Residue that p must have modulo p_step(eps).
inline Integer p_offset(const Integer& k, int eps, int delta) {
  return eps == 0 ? Integer(4 * k + 24 * delta) : Integer(k + 24 * delta);
}

}  // namespace detail

inline ThetaCheck validate_theta(const Integer& k, const Integer& p, int eps, int delta) {
  if ((eps != 0 && eps != 1) || (delta != 0 && delta != 1))
    return ThetaRejection{ThetaClause::BadFlag, 0, "eps and delta must be 0 or 1"};
  if (!is_even(k) && eps == 1)
    return ThetaRejection{ThetaClause::OddKForcesEpsZero, 0, "odd k forces eps=0"};
  const int step = detail::p_step(eps);
  if (floor_mod(p - detail::p_offset(k, eps, delta), step) != 0)
    return ThetaRejection{ThetaClause::CongruenceViolated, step,
                          "congruence violated (mod " + std::to_string(step) + ")"};
  return ThetaClass{k, p, eps, delta};
}

inline ThetaCheck validate_theta(const ThetaClass& t) {
  return validate_theta(t.k, t.p, t.eps, t.delta);
}

inline bool is_valid(const ThetaClass& t) {
  return std::holds_alternative<ThetaClass>(validate_theta(t));
}

/// Throws DomainError("invalid theta: ...") unless t is a valid class.
inline void require_valid(const ThetaClass& t) {
  auto r = validate_theta(t);
  if (auto* rej = std::get_if<ThetaRejection>(&r))
    throw DomainError("invalid theta: " + rej->message);
}

/// The auxiliary coordinate m with p = 24m + 4k + 24 delta (eps = 0) or
/// p = 48m + k + 24 delta (eps = 1).
inline Integer theta_coordinate(const ThetaClass& t) {
  require_valid(t);
  return (t.p - detail::p_offset(t.k, t.eps, t.delta)) / detail::p_step(t.eps);
}

struct IntRange {
  Integer lo;
  Integer hi;  // inclusive; empty when hi < lo
  bool empty() const { return hi < lo; }
};

/// Smallest p >= lo in the admissible class for (k, eps, delta).
inline Integer first_admissible_p(const Integer& lo, const Integer& k, int eps, int delta) {
  const int step = detail::p_step(eps);
  return lo + floor_mod(detail::p_offset(k, eps, delta) - lo, step);
}

/// All valid classes in the box, in lexicographic order of (k, p, eps, delta).
inline std::vector<ThetaClass> enumerate_theta(const IntRange& ks, const IntRange& ps) {
  std::vector<ThetaClass> out;
  if (ks.empty() || ps.empty()) return out;
  for (Integer k = ks.lo; k <= ks.hi; ++k) {
    // For fixed k the admissible p of each (eps, delta) form an arithmetic
    // progression; merge the four progressions in p order.
    struct Cursor {
      Integer p;
      int eps, delta;
    };
    std::vector<Cursor> cur;
    for (int eps = 0; eps <= 1; ++eps) {
      if (eps == 1 && !is_even(k)) continue;
      for (int delta = 0; delta <= 1; ++delta)
        cur.push_back({first_admissible_p(ps.lo, k, eps, delta), eps, delta});
    }
    for (;;) {
      const Integer* next = nullptr;
      for (const auto& c : cur)
        if (c.p <= ps.hi && (!next || c.p < *next)) next = &c.p;
      if (!next) break;
      const Integer p = *next;
      // cur is ordered by (eps, delta), so ties come out lexicographically.
      for (auto& c : cur) {
        if (c.p != p) continue;
        out.push_back({k, p, c.eps, c.delta});
        c.p += detail::p_step(c.eps);
      }
    }
  }
  return out;
}

}  // namespace seven

// Acceptance suite: one PASS/FAIL line per criterion, exit 1 if any fails.

#include "seven/seven.hpp"

#include "oracle.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>

using namespace seven;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;

  void fail(const std::string& why) {
    if (ok) detail = why;
    ok = false;
  }
};

std::string set_text(const std::set<int>& s) {
  std::string out = "{";
  for (int r : s) out += (out.size() > 1 ? "," : "") + std::to_string(r);
  return out + "}";
}

std::string desc_text(const ManifoldDescriptor& d) {
  std::ostringstream os;
  os << to_string(d.category) << " rank=" << d.rank << " core=(" << d.core.l << "," << d.core.k << "," << d.core.c
     << ") exotic=" << d.exotic;
  return os.str();
}

int failures = 0;

void criterion(int id, const char* name, double limit_s, const std::function<Outcome()>& body) {
  const auto t0 = std::chrono::steady_clock::now();
  Outcome o;
  try {
    o = body();
  } catch (const std::exception& e) {
    o.fail(std::string("exception: ") + e.what());
  }
  const double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  if (s >= limit_s) o.fail("runtime " + std::to_string(s) + " s exceeds " + std::to_string(limit_s) + " s");
  if (!o.ok) ++failures;
  std::printf("%s %d %s (%.3f s)%s%s\n", o.ok ? "PASS" : "FAIL", id, name, s, o.detail.empty() ? "" : ": ",
              o.detail.c_str());
  std::fflush(stdout);
}

// Witness reproduces the target, and shifting p by the period gives another
// valid class with the same total space.
bool certificate_holds(const ManifoldDescriptor& d, const ActionCount& c) {
  if (!c.period || *c.period <= 0) return false;
  if (c.witness.rank != d.rank) return false;
  ThetaClass t = c.witness.theta;
  for (int step = 0; step < 3; ++step) {
    if (!is_valid(t)) return false;
    ManifoldDescriptor got = classify(t, d.category).descriptor;
    got.rank = c.witness.rank;
    if (!same_invariants(got, d)) return false;
    t.p += *c.period;
  }
  return true;
}

Outcome counting_sweep(Category cat) {
  Outcome o;
  for (int m = -10; m <= 10; ++m)
    for (int k = -10; k <= 10; ++k)
      for (int f = 0; f <= 1; ++f)
        for (int r = 0; r <= 2; ++r) {
          const ManifoldDescriptor d = cat == Category::TOP ? family_homeo(r, f, m, k) : family_diffeo(r, f, m, k);
          const ActionCount c = count_actions(d);
          const std::string where = desc_text(d) + " (m=" + std::to_string(m) + ", k=" + std::to_string(k) + ")";
          if (k != 0) {
            if (!c.is_infinite()) o.fail("expected infinite for " + where);
            else if (!certificate_holds(d, c)) o.fail("certificate rejected for " + where);
            continue;
          }
          std::int64_t expected;
          if (cat == Category::TOP)
            expected = m % 2 == 0 ? 2 : 1;
          else
            expected = ((1 + f) * m) % 2 == 0 ? 2 : 1;
          if (c.is_infinite() || *c.finite != expected)
            o.fail("count mismatch for " + where + ": expected " + std::to_string(expected));
        }
  return o;
}

}  // namespace

int main() {
  criterion(1, "homotopy spheres with smooth regular actions", 1.0, [] {
    Outcome o;
    const std::set<int> expected{0, 4, 6, 8, 10, 14, 18, 20, 22, 24};
    const auto got = sphere_action_set();
    if (got != expected) o.fail("got " + set_text(got) + ", expected " + set_text(expected));
    return o;
  });

  criterion(2, "smooth structures on the unit tangent bundle of S^4 with actions", 5.0, [] {
    Outcome o;
    const std::set<int> expected{0, 2, 6, 7, 8, 12, 14, 15, 16, 19, 20, 23, 26};
    const auto got = tangent_bundle_action_set();
    if (got != expected) o.fail("got " + set_text(got) + ", expected " + set_text(expected));
    return o;
  });

  criterion(3, "topological action counts on the TOP families", 30.0, [] { return counting_sweep(Category::TOP); });

  criterion(4, "smooth action counts on the DIFF families", 30.0, [] { return counting_sweep(Category::DIFF); });

  criterion(5, "normal forms carry the circle bundle invariants exactly", 60.0, [] {
    Outcome o;
    std::int64_t checked = 0;
    for (const auto& t : enumerate_theta({-50, 50}, {-2000, 2000})) {
      if (t.k == 0) continue;
      ++checked;
      if (descriptor_invariants(classify_homeo(t).descriptor) != circle_bundle_invariants(t, Category::TOP))
        o.fail("TOP mismatch at theta (" + t.k.str() + "," + t.p.str() + "," + std::to_string(t.eps) + "," +
               std::to_string(t.delta) + ")");
      if (t.delta == 0 &&
          descriptor_invariants(classify_diffeo(t).descriptor) != circle_bundle_invariants(t, Category::DIFF))
        o.fail("DIFF mismatch at theta (" + t.k.str() + "," + t.p.str() + "," + std::to_string(t.eps) + ",0)");
    }
    if (o.ok) o.detail = std::to_string(checked) + " classes";
    return o;
  });

  criterion(6, "classification divisions are exact and l = 0 mod 6", 60.0, [] {
    Outcome o;
    std::int64_t violations = 0;
    for (const auto& t : enumerate_theta({-50, 50}, {-2000, 2000})) {
      const Integer top = t.p + (3 * t.eps - 4) * t.k - (is_even(t.k) ? 24 * t.delta : 0);
      if (top % 4 != 0 || (top / 4) % 6 != 0) ++violations;
      if (classify_homeo(t).descriptor.core.l != top / 4) ++violations;
      if (t.delta != 0) continue;
      const Integer dl = t.p + (3 * t.eps - 4) * t.k;
      const Integer dr = (1 - t.eps) * (t.p - 4 * t.k);
      if (dl % 4 != 0 || dr % 24 != 0 || (dl / 4) % 6 != 0) ++violations;
      const auto d = classify_diffeo(t, false);
      if (d.descriptor.core.l != dl / 4 || d.raw_exotic != dr / 24) ++violations;
    }
    if (violations != 0) o.fail(std::to_string(violations) + " violations");
    return o;
  });

  criterion(7, "exotic sphere group structure", 5.0, [] {
    Outcome o;
    std::set<std::string> values;
    for (int r = 0; r < 56; ++r) values.insert(exotic_mu(r).str());
    if (values.size() != 28) o.fail(std::to_string(values.size()) + " distinct exotic_mu values");
    if (core_invariants({1, 1, 0}, Category::DIFF).mu != ratmodz_normalize(1, 28)) o.fail("mu(M_{1,1}) != 1/28");
    const auto s = sphere_action_set();
    for (int r : s)
      if (!s.count((28 - r) % 28)) o.fail("sphere set not symmetric at " + std::to_string(r));
    return o;
  });

  criterion(8, "k = 0 counts agree with exhaustive enumeration", 30.0, [] {
    // A class (0, p, eps, delta) has p1/2 = p/2 and ks = delta; the core
    // (l, 0, c) has p1/2 = 2l + 12c and ks = c. So every match has
    // p = 4l + 24c and |p| <= 4|l| + 24.
    Outcome o;
    for (int m = -10; m <= 10; ++m)
      for (int f = 0; f <= 1; ++f)
        for (Category cat : {Category::TOP, Category::DIFF}) {
          const ManifoldDescriptor d = cat == Category::TOP ? family_homeo(0, f, m, 0) : family_diffeo(0, f, m, 0);
          const long long l = d.core.l.convert_to<long long>();
          const int c = d.core.c;
          const long long bound = 4 * std::llabs(l) + 48;
          std::int64_t n = 0;
          for (long long p = -bound; p <= bound; ++p)
            for (int eps = 0; eps <= 1; ++eps)
              for (int delta = 0; delta <= 1; ++delta) {
                if (cat == Category::DIFF && delta != 0) continue;
                if (!oracle::theta_valid(0, p, eps, delta)) continue;
                if (p % 2 == 0 && p / 2 == 2 * l + 12 * c && delta == c) ++n;
              }
          const ActionCount got = count_actions(d);
          if (got.is_infinite() || *got.finite != n)
            o.fail("mismatch for " + desc_text(d) + ": enumeration gives " + std::to_string(n));
        }
    return o;
  });

  std::printf("%d of 8 criteria failed\n", failures);
  return failures == 0 ? 0 : 1;
}

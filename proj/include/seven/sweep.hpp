#pragma once

// Classify every valid class in a (k, p) box and check that the normal form
// carries the same invariant tuple as the circle bundle itself. Work is split
// by k into contiguous chunks; results are concatenated in chunk order so the
// output does not depend on the thread count.

#include "seven/classify.hpp"
#include "seven/invariants.hpp"
#include "seven/theta.hpp"

#include <algorithm>
#include <cstddef>
#include <future>
#include <vector>

namespace seven {

struct SweepRecord {
  ThetaClass theta;
  ClassificationResult classification;
  InvariantTuple bundle;  // of N_t
  InvariantTuple model;   // of the normal form
  bool consistent = false;
};

struct SweepOptions {
  Category category = Category::TOP;
  Integer kmax = 0;
  Integer pmax = 0;
  unsigned threads = 1;
  bool absorb = true;
};

inline SweepRecord sweep_one(const ThetaClass& t, Category cat, bool absorb) {
  SweepRecord r;
  r.theta = t;
  r.classification = cat == Category::TOP ? classify_homeo(t) : classify_diffeo(t, absorb);
  r.bundle = circle_bundle_invariants(t, cat);
  r.model = descriptor_invariants(r.classification.descriptor);
  r.consistent = r.bundle == r.model;
  return r;
}

inline std::vector<SweepRecord> sweep(const SweepOptions& opt) {
  std::vector<SweepRecord> out;
  if (opt.kmax < 0 || opt.pmax < 0) return out;

  const std::int64_t kmax = opt.kmax.convert_to<std::int64_t>();
  const std::int64_t nk = 2 * kmax + 1;
  const std::int64_t chunks = std::clamp<std::int64_t>(opt.threads, 1, nk);

  auto work = [&](std::int64_t lo, std::int64_t hi) {
    std::vector<SweepRecord> part;
    for (const ThetaClass& t : enumerate_theta({lo, hi}, {-opt.pmax, opt.pmax})) {
      if (opt.category == Category::DIFF && t.delta != 0) continue;
      part.push_back(sweep_one(t, opt.category, opt.absorb));
    }
    return part;
  };

  std::vector<std::future<std::vector<SweepRecord>>> parts;
  for (std::int64_t i = 0; i < chunks; ++i) {
    const std::int64_t lo = -kmax + nk * i / chunks;
    const std::int64_t hi = -kmax + nk * (i + 1) / chunks - 1;
    parts.push_back(std::async(chunks == 1 ? std::launch::deferred : std::launch::async, work, lo, hi));
  }
  for (auto& f : parts) {
    auto part = f.get();
    out.insert(out.end(), std::make_move_iterator(part.begin()), std::make_move_iterator(part.end()));
  }
  return out;
}

}  // namespace seven

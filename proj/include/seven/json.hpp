#pragma once

// JSON forms of the domain types. Integers that fit in 64 bits are written as
// numbers and larger ones as decimal strings; both are accepted on input.

#include "seven/actions.hpp"
#include "seven/classify.hpp"
#include "seven/invariants.hpp"
#include "seven/theta.hpp"

#include <json.hpp>

#include <limits>
#include <string>

namespace seven::json {

using Json = nlohmann::ordered_json;

inline constexpr const char* kUndefined = "undefined";

inline Json integer(const Integer& v) {
  if (v >= std::numeric_limits<std::int64_t>::min() && v <= std::numeric_limits<std::int64_t>::max())
    return v.convert_to<std::int64_t>();
  return v.str();
}

inline Integer to_integer(const Json& j) {
  if (j.is_number_integer()) return Integer(j.get<std::int64_t>());
  if (j.is_string()) {
    try {
      return Integer(j.get<std::string>());
    } catch (const std::exception&) {
    }
  }
  throw DomainError("expected an integer, got " + j.dump());
}

inline int to_flag(const Json& j, const char* name) {
  const Integer v = to_integer(j);
  if (v != 0 && v != 1) throw DomainError(std::string(name) + " must be 0 or 1");
  return v.convert_to<int>();
}

inline Json to_json(const RatModZ& r) { return r.str(); }

inline Json to_json(const std::optional<RatModZ>& r) { return r ? to_json(*r) : Json(kUndefined); }

inline Json to_json(const ResidueModK& r) { return {{"mod", integer(r.modulus())}, {"val", integer(r.value())}}; }

inline Json to_json(const ThetaClass& t) {
  return {{"k", integer(t.k)}, {"p", integer(t.p)}, {"eps", t.eps}, {"delta", t.delta}};
}

inline Json to_json(const CoreManifold& c) { return {{"l", integer(c.l)}, {"k", integer(c.k)}, {"c", c.c}}; }

inline Json to_json(const ManifoldDescriptor& d) {
  return {{"category", std::string(to_string(d.category))},
          {"rank", d.rank},
          {"core", to_json(d.core)},
          {"exotic", d.exotic}};
}

inline Json to_json(const InvariantTuple& inv) {
  return {{"h4_k", integer(inv.h4_k)}, {"b4_free_rank", inv.b4_free_rank}, {"ph", to_json(inv.ph)},
          {"linking", to_json(inv.linking)}, {"ks", inv.ks},   {"s1", to_json(inv.s1)},
          {"mu", to_json(inv.mu)}};
}

inline Json to_json(const ClassificationResult& r) {
  return {{"descriptor", to_json(r.descriptor)},
          {"witness_m", integer(r.witness_m)},
          {"raw_exotic", integer(r.raw_exotic)}};
}

inline Json to_json(const ActionWitness& w) { return {{"theta", to_json(w.theta)}, {"rank", w.rank}}; }

inline Json to_json(const ActionCount& c) {
  Json j;
  if (c.is_infinite())
    j["count"] = "infinite";
  else
    j["count"] = {{"finite", *c.finite}};
  j["witness"] = to_json(c.witness);
  if (c.period) j["period"] = integer(*c.period);
  return j;
}

inline Category category_from_string(const std::string& s) {
  if (s == "TOP" || s == "top") return Category::TOP;
  if (s == "DIFF" || s == "diff") return Category::DIFF;
  throw DomainError("unknown category '" + s + "'");
}

inline ThetaClass theta_from_json(const Json& j) {
  try {
    return {to_integer(j.at("k")), to_integer(j.at("p")), to_flag(j.at("eps"), "eps"),
            to_flag(j.at("delta"), "delta")};
  } catch (const nlohmann::json::exception& e) {
    throw DomainError(std::string("malformed theta: ") + e.what());
  }
}

inline CoreManifold core_from_json(const Json& j) {
  try {
    return {to_integer(j.at("l")), to_integer(j.at("k")), to_flag(j.at("c"), "c")};
  } catch (const nlohmann::json::exception& e) {
    throw DomainError(std::string("malformed core: ") + e.what());
  }
}

inline ManifoldDescriptor descriptor_from_json(const Json& j) {
  try {
    ManifoldDescriptor d;
    d.category = category_from_string(j.at("category").get<std::string>());
    d.rank = to_integer(j.at("rank")).convert_to<std::int64_t>();
    d.core = core_from_json(j.at("core"));
    d.exotic = reduce_exotic(to_integer(j.at("exotic")));
    return d;
  } catch (const nlohmann::json::exception& e) {
    throw DomainError(std::string("malformed descriptor: ") + e.what());
  }
}

}  // namespace seven::json

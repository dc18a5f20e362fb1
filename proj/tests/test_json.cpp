#include "seven/json.hpp"

#include <catch2/catch_amalgamated.hpp>

using namespace seven;
using seven::json::Json;

TEST_CASE("scalar encodings", "[json]") {
  CHECK(json::to_json(ratmodz_normalize(22, 28)).dump() == R"("11/14")");
  CHECK(json::to_json(std::optional<RatModZ>{}).dump() == R"("undefined")");
  CHECK(json::to_json(residue_reduce(-5, 7)).dump() == R"({"mod":-5,"val":2})");
  CHECK(json::integer(Integer(1) << 70).dump() == R"("1180591620717411303424")");
  CHECK(json::to_integer(Json("1180591620717411303424")) == (Integer(1) << 70));
  CHECK_THROWS_AS(json::to_integer(Json("x1")), DomainError);
  CHECK_THROWS_AS(json::to_integer(Json(1.5)), DomainError);
}

TEST_CASE("structured encodings", "[json]") {
  CHECK(json::to_json(ThetaClass{1, 28, 0, 0}).dump() == R"({"k":1,"p":28,"eps":0,"delta":0})");
  CHECK(json::to_json(classify_diffeo({1, 28, 0, 0})).dump() ==
        R"({"descriptor":{"category":"DIFF","rank":0,"core":{"l":6,"k":1,"c":0},"exotic":1},"witness_m":1,"raw_exotic":1})");
  CHECK(json::to_json(circle_bundle_invariants({2, 2, 1, 0}, Category::DIFF)).dump() ==
        R"({"h4_k":2,"b4_free_rank":0,"ph":{"mod":2,"val":0},"linking":"1/2","ks":0,"s1":"1/8","mu":"1/224"})");
  CHECK(json::to_json(count_actions({0, {12, 0, 0}, 0, Category::TOP})).dump() ==
        R"({"count":{"finite":2},"witness":{"theta":{"k":0,"p":48,"eps":0,"delta":0},"rank":0}})");
  const auto inf = json::to_json(count_actions({0, {0, 2, 1}, 0, Category::TOP}));
  CHECK(inf.at("count") == "infinite");
  CHECK(inf.contains("period"));
}

TEST_CASE("descriptor round trip", "[json][property]") {
  for (int k = -4; k <= 4; ++k)
    for (int l = -12; l <= 12; l += 6)
      for (int r = 0; r < 28; r += 9) {
        const ManifoldDescriptor d{2, {l, k, 0}, r, Category::DIFF};
        REQUIRE(json::descriptor_from_json(json::to_json(d)) == d);
        const ManifoldDescriptor t{0, {l, 2 * k, 1}, 0, Category::TOP};
        REQUIRE(json::descriptor_from_json(json::to_json(t)) == t);
      }
  CHECK(json::theta_from_json(json::to_json(ThetaClass{-3, -1000, 0, 1})) == ThetaClass{-3, -1000, 0, 1});
}

TEST_CASE("malformed input is a domain error", "[json]") {
  CHECK_THROWS_AS(json::descriptor_from_json(Json::parse(R"({"category":"TOP"})")), DomainError);
  CHECK_THROWS_AS(json::theta_from_json(Json::parse(R"({"k":1,"p":4,"eps":2,"delta":0})")), DomainError);
  CHECK_THROWS_AS(json::category_from_string("PL"), DomainError);
}

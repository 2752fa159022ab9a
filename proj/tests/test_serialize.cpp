#include <doctest.h>

#include "rcoh/random.hpp"
#include "rcoh/serialize.hpp"

using namespace rcoh;

TEST_CASE("m_0^lambda round trip") {
  Rng rng(4);
  for (Residue p : {2u, 3u, 5u, 7u}) {
    const auto doc = document_for(make_m0_lambda(p, rng.vector(p, p)));
    const auto j = to_json(doc);
    CHECK(j["prime"] == p);
    CHECK(j["dim"] == p);
    CHECK(j.contains("lambda"));
    const auto back = algebra_from_json(Json::parse(j.dump()));
    CHECK(back == doc);
    CHECK(to_json(back).dump() == j.dump());
    CHECK(back.restricted() == make_m0_lambda(p, *doc.lambda));
  }
}

TEST_CASE("extension round trip keeps provenance") {
  const auto r = make_m0_lambda(5, {0, 1, 0, 0, 2});
  const auto ext = extend_restricted(r, ebar(5, 5, 2));
  const Json base = {{"prime", 5}, {"lambda", {0, 1, 0, 0, 2}}};
  const auto doc = document_for(ext, base);
  const auto j = to_json(doc);
  CHECK(j["extension_of"]["cocycle"] == "(0, ē^3)");
  CHECK(j["extension_of"]["central_index"] == 6);
  CHECK(j["labels"].back() == "c");
  const auto back = algebra_from_json(Json::parse(j.dump()));
  CHECK(back == doc);
  CHECK(back.algebra.labels() == ext.algebra.labels());
  CHECK(back.restricted().pmap() == *ext.pmap);
}

TEST_CASE("brackets are 1-based in JSON") {
  const auto j = to_json(document_for(make_m0_lambda(3, {0, 0, 0})));
  REQUIRE(j["brackets"].size() == 1);
  CHECK(j["brackets"][0]["i"] == 1);
  CHECK(j["brackets"][0]["j"] == 2);
  CHECK(j["brackets"][0]["coeffs"] == Json::array({0, 0, 1}));
}

TEST_CASE("malformed algebra files are rejected") {
  auto good = to_json(document_for(make_m0_lambda(3, {0, 0, 1})));
  auto bad = good;
  bad["prime"] = 4;
  CHECK_THROWS_AS(algebra_from_json(bad), std::invalid_argument);
  bad = good;
  bad["brackets"][0]["coeffs"] = Json::array({1, 2});
  CHECK_THROWS_AS(algebra_from_json(bad), std::invalid_argument);
  bad = good;
  bad["brackets"].push_back(good["brackets"][0]);
  CHECK_THROWS_AS(algebra_from_json(bad), std::invalid_argument);
  bad = good;
  bad["brackets"][0]["i"] = 0;
  CHECK_THROWS_AS(algebra_from_json(bad), std::invalid_argument);
  bad = good;
  bad.erase("dim");
  CHECK_THROWS_AS(algebra_from_json(bad), std::invalid_argument);
  bad = good;
  bad["lambda"] = Json::array({1, 2});
  CHECK_THROWS_AS(algebra_from_json(bad), std::invalid_argument);
  bad = good;
  bad["brackets"] = Json::array();
  CHECK_THROWS_AS(algebra_from_json(bad), std::invalid_argument);
}

TEST_CASE("algebras without a p-map") {
  Json j = {{"prime", 5}, {"dim", 2}, {"brackets", Json::array()}};
  const auto doc = algebra_from_json(j);
  CHECK(doc.algebra.dim() == 2);
  CHECK_FALSE(doc.pmap.has_value());
  CHECK_THROWS_AS(doc.restricted(), std::logic_error);
}

TEST_CASE("cochain JSON") {
  Cochain2 c(7, 7);
  c.add({1, 4}, 1);
  c.add({2, 3}, 6);
  const auto j = to_json(c);
  CHECK(j.dump() == R"([{"indices":[2,5],"coefficient":1},{"indices":[3,4],"coefficient":6}])");
  CHECK(cochain_from_json<2>(7, 7, j) == c);
  CHECK_THROWS(cochain_from_json<2>(7, 7, Json::parse(R"([{"indices":[1,2,3],"coefficient":1}])")));
  CHECK_THROWS(cochain_from_json<2>(7, 7, Json::parse(R"([{"indices":[0,2],"coefficient":1}])")));
  const RestrictedTwoCochain rc{c, {1, 0, 0, 0, 0, 0, 3}};
  CHECK(restricted_from_json(7, 7, Json::parse(to_json(rc).dump())) == rc);
}

TEST_CASE("summary JSON fields") {
  const auto j = to_json(h2_star(make_m0_lambda(3, {1, 1, 1})));
  for (const char* key : {"prime", "lambda", "degree", "restricted", "dim", "kernel_dim", "image_dim", "representatives"})
    CHECK(j.contains(key));
  CHECK(j["dim"] == 3);
  CHECK(j["representatives"][0] == "(0, ē^1)");
}

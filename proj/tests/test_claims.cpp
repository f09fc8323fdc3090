#include <doctest.h>

#include "twisted/claims.hpp"

using namespace twisted;

TEST_CASE("closed forms") {
  CHECK(expected_value("lem-conn", 5) == 5);
  CHECK(expected_value("lem-kappa1", 6) == 10);
  CHECK(expected_value("lem-kappa2", 5) == 10);
  CHECK(expected_value("thm-k13", 4) == 2);
  CHECK(expected_value("thm-k13", 5) == 3);
  CHECK(expected_value("thm-k14", 6) == 3);
  CHECK(expected_value("thm-p2", 6) == 5);
  CHECK(expected_value("thm-p2", 80) == 79);
  CHECK(expected_value("thm-p2", 81) == 81);
  CHECK(expected_value("thm-pk", 5, 3) == 3);
  CHECK(expected_value("thm-pk", 6, 4) == 3);
  CHECK(expected_value("thm-pk", 6, 6) == 2);
  CHECK_THROWS(expected_value("thm-pk", 6, 7));
  CHECK_THROWS(expected_value("nope", 6));
}

TEST_CASE("registry") {
  CHECK(claim_registry().size() == 8);
  CHECK(find_claim("thm-k14").min_n == 4);
  CHECK_THROWS_AS(find_claim("thm-k15"), std::invalid_argument);
}

TEST_CASE("verify small cells") {
  for (int n = 4; n <= 5; ++n) {
    for (const auto& c : claim_registry()) {
      for (const auto& r : verify_claim(c.id, n)) {
        CHECK_MESSAGE(r.status() != "fail", r.to_line(false));
      }
    }
  }
  const auto k13 = verify_claim("thm-k13", 4);
  REQUIRE(k13.size() == 1);
  CHECK(k13[0].value == 2);
  const auto pk = verify_claim("thm-pk", 5);
  CHECK(pk.size() == 3);
  CHECK(verify_claim("lem-kappa2", 4)[0].status() == "skip");
}

TEST_CASE("verify uses construction checks above the search limit") {
  VerifyOptions options;
  options.search_limit = 3;
  const auto r = verify_claim("thm-k14", 20, options);
  CHECK(r[0].status() == "pass");
  CHECK(r[0].mode == "construction-only");
  const auto p2 = verify_claim("thm-p2", 100, options);
  CHECK(p2[0].status() == "pass");
  CHECK(p2[0].value == 100);
}

TEST_CASE("report rendering") {
  VerificationReport r;
  r.claim = "thm-k13";
  r.n = 4;
  r.expected = 2;
  r.value = 2;
  r.value_key = "actual";
  r.pass = true;
  r.witness = "a b";
  r.add_detail("x", "1");
  CHECK(r.to_line(false) == "claim=thm-k13 n=4 expected=2 actual=2 status=pass witness=\"a b\" x=1");
  const auto j = r.to_json(false);
  CHECK(j["actual"] == 2);
  CHECK(j["status"] == "pass");
  CHECK(j["details"]["x"] == "1");
}

TEST_CASE("single-family P2 audit") {
  const auto r = audit_p2_single_family(100, 50);
  CHECK(r.pass);
  CHECK(r.value == 100);
  CHECK_THROWS(audit_p2_single_family(10, 5));
}

#include <gtest/gtest.h>

#include "lfdb/catalog/catalog.hpp"
#include "lfdb/store/store.hpp"
#include "lfdb/webapi/api.hpp"
#include "test_support.hpp"

using namespace lfdb;
using namespace lfdb::webapi;
using nlohmann::json;

namespace {

const Api& api() {
  static const Api instance = [] {
    auto s = store::Store::in_memory();
    testing_support::populate(*s, 20, 30.0);
    return Api(std::shared_ptr<const store::Store>(std::move(s)));
  }();
  return instance;
}

Response get(const std::string& path, std::multimap<std::string, std::string> params = {}) {
  Request r;
  r.path = path;
  r.params = std::move(params);
  return api().handle(r);
}

Response post(const std::string& path, const json& body) {
  Request r;
  r.method = "POST";
  r.path = path;
  r.body = body.dump();
  return api().handle(r);
}

std::string prop(const json& doc, const std::string& name) {
  for (const auto& p : doc["properties"]) {
    if (p["name"] == name) return p["value"].get<std::string>();
  }
  return "<missing>";
}

}  // namespace

TEST(Api, Health) {
  const auto r = get("/health");
  EXPECT_EQ(r.status, 200);
  EXPECT_EQ(r.json()["status"], "ok");
}

TEST(Api, RiemannHomepage) {
  const auto r = get("/api/L/Riemann");
  ASSERT_EQ(r.status, 200) << r.body;
  const auto d = r.json();
  EXPECT_EQ(d["degree"], 1);
  EXPECT_EQ(d["conductor"], "1");
  ASSERT_FALSE(d["zeros"].empty());
  const double t0 = d["zeros"][0]["t"];
  EXPECT_GT(t0, 14.0);
  EXPECT_LT(t0, 14.2);
  EXPECT_EQ(d["plot"]["samples"].size(), 300u);
  EXPECT_EQ(d["plot"]["points"], 300);
  EXPECT_EQ(d["plot"]["sign_changes"], 3);
  EXPECT_TRUE(d.contains("functional_equation"));
  for (const auto& k : d["knowls"]) EXPECT_TRUE(k["resolved"].get<bool>()) << k["id"];
}

TEST(Api, CurveHomepage) {
  const auto d = get("/api/EllipticCurve/Q/5077/a/1").json();
  EXPECT_EQ(d["label"], "5077a1");
  EXPECT_NE(d["note"].get<std::string>().find("Goldfeld"), std::string::npos);
  ASSERT_FALSE(d["related"].empty());
  EXPECT_EQ(d["related"][0]["url"], "/L/EllipticCurve/Q/5077/a/1");
  EXPECT_FALSE(d["euler_factors"].empty());
  EXPECT_EQ(get("/api/EllipticCurve/Q/5077/b/1").status, 404);
  EXPECT_EQ(get("/api/EllipticCurve/Q/5077/B/1").status, 400);
  const auto err = get("/api/EllipticCurve/Q/5077/b/1").json();
  EXPECT_EQ(err["code"], "not_found");
  EXPECT_TRUE(err.contains("message"));
}

TEST(Api, NumberFieldHomepage) {
  const auto r = get("/api/NumberField/3.1.23.1");
  ASSERT_EQ(r.status, 200);
  const auto d = r.json();
  EXPECT_EQ(prop(d, "Class number"), "1");
  EXPECT_EQ(prop(d, "Defining polynomial"), "x^3 - x^2 + 1");
  EXPECT_EQ(get("/api/NumberField/3.2.23.1").status, 400);
  EXPECT_EQ(get("/api/NumberField/3.1.31.1").status, 404);
}

TEST(Api, CharacterHomepage) {
  const auto d = get("/api/Character/Dirichlet/4/2").json();
  EXPECT_EQ(d["label"], "4.2");
  EXPECT_EQ(get("/api/Character/Dirichlet/4/3").status, 404);
  EXPECT_EQ(get("/api/L/Character/Dirichlet/4/2").status, 200);
}

TEST(Api, SearchCurvesRankTwo) {
  const auto r = post("/api/search/elliptic_curves_q", {{"filters", {{"rank", 2}, {"conductor", {{"max", 1000}}}}}});
  ASSERT_EQ(r.status, 200) << r.body;
  const auto d = r.json();
  EXPECT_GE(d["total"].get<int>(), 1);
  for (const auto& row : d["rows"]) {
    EXPECT_EQ(row["summary"]["rank"], 2);
    const auto page = get("/api" + row["url"].get<std::string>());
    EXPECT_EQ(page.status, 200) << row["url"];
  }
}

TEST(Api, SearchPagingAndErrors) {
  const auto first = post("/api/search/number_fields", {{"page_size", 10}}).json();
  EXPECT_EQ(first["rows"].size(), 10u);
  EXPECT_EQ(post("/api/search/number_fields", {{"page_size", 10}}).body, post("/api/search/number_fields", {{"page_size", 10}}).body);
  const auto ramps = post("/api/search/number_fields", {{"filters", {{"ramps", "23"}}}}).json();
  bool found = false;
  for (const auto& row : ramps["rows"]) found = found || row["label"] == "3.1.23.1";
  EXPECT_TRUE(found);
  const auto bad = post("/api/search/number_fields", {{"filters", {{"colour", 1}}}});
  EXPECT_EQ(bad.status, 400);
  EXPECT_EQ(bad.json()["code"], "unknown_field");
  EXPECT_FALSE(bad.json()["valid_fields"].empty());
  EXPECT_EQ(post("/api/search/nothing", json::object()).status, 404);
  EXPECT_EQ(post("/api/search/number_fields", {{"page_size", 0}}).status, 400);
  EXPECT_EQ(get("/api/search/number_fields").status, 405);
}

TEST(Api, ZetaZeros) {
  const auto d = get("/api/zeros/zeta", {{"from", "0"}, {"count", "3"}}).json();
  ASSERT_EQ(d["zeros"].size(), 3u);
  const double first = d["zeros"][0]["t"];
  EXPECT_GT(first, 14.0);
  EXPECT_LT(first, 14.2);
  double prev = 0;
  for (const auto& z : d["zeros"]) {
    EXPECT_GT(z["t"].get<double>(), prev);
    prev = z["t"];
  }
  EXPECT_TRUE(get("/api/zeros/zeta", {{"from", "1000000"}}).json()["zeros"].empty());
  EXPECT_EQ(get("/api/zeros/zeta", {{"count", "0"}}).status, 400);
  EXPECT_EQ(get("/api/zeros/zeta", {{"count", "1001"}}).status, 400);
  EXPECT_EQ(get("/api/zeros/zeta", {{"from", "-1"}}).status, 400);
}

TEST(Api, DownloadsAndKnowls) {
  const auto dl = get("/api/download/NumberField/3.1.23.1");
  EXPECT_EQ(dl.status, 200);
  EXPECT_NE(dl.body.find("x^3 - x^2 + 1"), std::string::npos);
  EXPECT_EQ(get("/api/download/EllipticCurve/5077/a/1").status, 200);
  EXPECT_EQ(get("/api/knowl/lfunction").status, 200);
  EXPECT_EQ(get("/api/knowl/nope").status, 404);
  EXPECT_EQ(get("/knowledge/show/lfunction").status, 200);
  const auto fe = get("/api/knowl/lfunction.functionalequation", {{"depth", "3"}});
  ASSERT_EQ(fe.status, 200);
}

TEST(Api, HomepagesAreDeterministic) {
  for (const char* path : {"/api/L/Riemann", "/api/EllipticCurve/Q/37/a/1", "/api/NumberField/2.0.4.1",
                           "/api/Character/Dirichlet/5/2", "/api/L/EllipticCurve/Q/11/a/1"}) {
    EXPECT_EQ(get(path).body, get(path).body) << path;
    EXPECT_EQ(get(path).status, 200) << path;
  }
}

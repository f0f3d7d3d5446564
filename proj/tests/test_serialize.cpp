#include <algorithm>
#include <regex>
#include <string>

#include "doctest.h"
#include "json.hpp"
#include "thompson/freeness.hpp"
#include "thompson/serialize.hpp"

using namespace thompson;
using nlohmann::json;

TEST_SUITE("serialize") {

TEST_CASE("element text round trips") {
  TElement t = make_t_element("1010100", "1101000", 1);
  CHECK(element_text(t) == "T:1010100:1101000:1");
  CHECK(parse_t_element(element_text(t)) == t);
  VElement v = make_v_element("10100", "11000", {2, 0, 1});
  CHECK(element_text(v) == "V:10100:11000:2,0,1");
  CHECK(parse_v_element(element_text(v)) == v);
  CHECK(element_text_group("T:100:100:1") == Group::T);
  CHECK(element_text_group("V:100:100:0,1") == Group::V);
}

TEST_CASE("malformed element text is rejected") {
  CHECK_THROWS_AS(parse_t_element("X:100:100:1"), ParseError);
  CHECK_THROWS_AS(parse_t_element("T:100:100"), ParseError);
  CHECK_THROWS_AS(parse_t_element("T:100:100:zz"), ParseError);
  CHECK_THROWS_AS(parse_t_element("V:100:100:0,1"), ParseError);
  CHECK_THROWS_AS(parse_v_element("V:100:100:0,0"), ConstraintError);
  CHECK_THROWS_AS(parse_v_element("V:10100:10100:0,1,5"), ConstraintError);
  CHECK_THROWS_AS(element_text_group("Q:100:100:1"), ParseError);
}

TEST_CASE("double text is shortest round trip") {
  CHECK(double_text(0.04) == "0.04");
  CHECK(double_text(0.0) == "0.0");
  for (double x : {0.1, 1.0 / 3.0, 0.0625, 6.0e-8}) {
    CHECK(std::stod(double_text(x)) == x);
  }
}

TEST_CASE("dynamics report serializes locations and kinds") {
  DynamicsReport r = fixed_points(to_pl_map(make_t_element("1010100", "1101000", 1)));
  json doc = json::parse(dynamics_report_json(r));
  CHECK(doc["is_north_south"] == true);
  REQUIRE(doc["fixed_points"].size() == 2);
  CHECK(doc["fixed_points"][0]["location"] == "1/3");
  CHECK(doc["fixed_points"][0]["kind"] == "Attracting");
  CHECK(doc["fixed_points"][1]["location"] == "5/6");
  CHECK(doc["fixed_points"][1]["kind"] == "Repelling");
  CHECK(doc["neutral_intervals"].empty());
}

TEST_CASE("interval sets serialize as dyadic arc objects") {
  IntervalSet s = IntervalSet::from({CircleInterval(Dyadic(BigInt(7), 3), Dyadic::pow2(2))});
  json doc = json::parse(interval_set_json(s));
  REQUIRE(doc.size() == 1);
  CHECK(doc[0]["lo"] == "7/2^3");
  CHECK(doc[0]["len"] == "1/2^2");
}

TEST_CASE("certificate json carries four arcs and the pair") {
  PingPongPair pair = sample_pingpong_pair(Group::T, 6, 0);
  CertificateSearch search = find_certificate(pair.u, pair.v, 8);
  REQUIRE(search.certificate.has_value());
  json doc = json::parse(certificate_json(*search.certificate, pair.u_text, pair.v_text));
  std::regex arc_form("^[0-9]+/2\\^[0-9]+$");
  for (const char* key : {"P_u", "Q_u", "P_v", "Q_v"}) {
    CHECK(std::regex_match(doc[key]["lo"].get<std::string>(), arc_form));
    CHECK(std::regex_match(doc[key]["len"].get<std::string>(), arc_form));
  }
  CHECK(doc["depth"] == search.certificate->depth);
  CHECK(doc["pair"]["u"] == pair.u_text);
  CHECK(doc["pair"]["v"] == pair.v_text);
}

TEST_CASE("density reports embed the sphere parameters and the exact value") {
  SphereSpec spec{Group::T, 3, 1};
  DensityEstimate est = exact_density(spec, named_predicate("ns-family"));
  json doc = json::parse(density_json(spec, "ns-family", est));
  CHECK(doc["group"] == "T");
  CHECK(doc["n"] == 3);
  CHECK(doc["k"] == 1);
  CHECK(doc["predicate"] == "ns-family");
  CHECK(doc["method"] == "Exact");
  CHECK(doc["hits"] == 4);
  CHECK(doc["trials"] == 100);
  CHECK(doc["exact_value"] == "1/25");
  CHECK(doc["estimate"] == 0.04);
  CHECK(!doc.contains("seed"));

  DensityEstimate mc = mc_density(spec, named_predicate("ns-family"), 1000, 7, 1);
  json mdoc = json::parse(density_json(spec, "ns-family", mc));
  CHECK(mdoc["seed"] == 7);
  CHECK(mdoc["method"] == "MonteCarlo");
}

TEST_CASE("csv rows match their headers") {
  CHECK(density_csv_header() ==
        "group,n,k,predicate,method,hits,trials,estimate,ci_low,ci_high,seed");
  SphereSpec spec{Group::V, 3, 1};
  DensityEstimate est = exact_density(spec, named_predicate("identity"));
  std::string row = density_csv_row(spec, "identity", est);
  CHECK(row.substr(0, 11) == "V,3,1,ident");
  CHECK(std::count(row.begin(), row.end(), ',') == 10);

  CHECK(growth_csv_header() == "k,exact_log,model_log,ratio");
  std::string grow = growth_csv_row(growth_sample_T(10));
  CHECK(grow.substr(0, 3) == "10,");
  CHECK(std::count(grow.begin(), grow.end(), ',') == 3);
}

}  // TEST_SUITE

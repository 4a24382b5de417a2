#include "doctest.h"

#include "exc/experiments.hpp"
#include "exc/json_io.hpp"

using namespace exc;

TEST_CASE("matrix json round trip") {
  PositiveMatrix z = random_positive(4, 6, 9);
  Json j = matrix_to_json(z.matrix());
  CHECK(matrix_from_json(j) == z.matrix());
  CHECK(j["rows"] == 4);
  CHECK(j["cols"] == 6);
  CHECK(j["entries"][0][0].is_string());
}

TEST_CASE("json output is byte-identical across runs for a fixed seed") {
  std::string a = matrix_to_json(random_positive(4, 7, 42).matrix()).dump();
  std::string b = matrix_to_json(random_positive(4, 7, 42).matrix()).dump();
  CHECK(a == b);
  std::string c = matrix_to_json(random_positive(4, 7, 43).matrix()).dump();
  CHECK(a != c);
}

TEST_CASE("exterior vector json uses comma-joined ascending keys") {
  ExteriorVector v(2, 4);
  v.add_term({1, 3}, make_rational(-5, 3));
  v.add_term({2, 4}, Rational(7));
  Json j = exterior_to_json(v);
  CHECK(j["degree"] == 2);
  CHECK(j["dim"] == 4);
  CHECK(j["coeffs"]["1,3"] == "-5/3");
  CHECK(j["coeffs"]["2,4"] == "7");
  CHECK(exterior_from_json(j) == v);
}

TEST_CASE("cone json carries rays, facets and incidence") {
  PointedCone c = PointedCone::from_rays(
      std::vector<IntVec>{{Int(1), Int(0)}, {Int(1), Int(1)}, {Int(1), Int(2)}}, Pairing::identity(2));
  Json j = cone_to_json(c);
  CHECK(j["dim"] == 2);
  CHECK(j["rays"].size() == 2);  // the middle generator is not extreme
  CHECK(j["facets"].size() == 2);
  CHECK(j["incidence"].size() == j["facets"].size());
}

TEST_CASE("graph json round trip") {
  EdgeGraph g({{3, 1}, {2, 5}});
  Json j = graph_to_json(g);
  CHECK(j.dump() == "[[1,3],[2,5]]");
  CHECK(graph_from_json(j) == g);
}

TEST_CASE("malformed json reports a byte offset") {
  try {
    parse_json("{\"rows\": 2, ");
    FAIL("expected parse error");
  } catch (const std::domain_error& e) {
    CHECK(std::string(e.what()).find("byte") != std::string::npos);
  }
}

TEST_CASE("experiment registry lists the named checks and rejects unknowns") {
  const auto& names = experiment_names();
  CHECK(names.size() == 17);
  CHECK(std::find(names.begin(), names.end(), "table1") != names.end());
  CHECK(std::find(names.begin(), names.end(), "oracle-equivalence") != names.end());
  CHECK_THROWS_AS(run_experiment("no-such-experiment", {}), std::domain_error);
}

TEST_CASE("quick experiment smoke: counts and poset") {
  ExperimentOptions opt;
  opt.quick = true;
  ExperimentReport r1 = run_experiment("c226-counts", opt);
  CHECK(r1.ok());
  CHECK(r1.observed["bases"] == 3345);
  ExperimentReport r2 = run_experiment("basis-poset", opt);
  CHECK(r2.ok());
  Json j = r2.to_json();
  CHECK(j["status"] == "PASS");
  CHECK(j["name"] == "basis-poset");
}

#include <doctest.h>

#include <fstream>
#include <sstream>
#include <string>

#include "foliacoh/foliacoh.h"

namespace {

std::string data(const std::string& name) {
  std::ifstream in(std::string(FOLIACOH_TEST_DATA) + "/" + name);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

std::string take(char* s) {
  std::string out(s);
  fc_string_free(s);
  return out;
}

}  // namespace

TEST_CASE("product model handle") {
  fc_product_model* m = nullptr;
  REQUIRE(fc_product_model_from_json(data("circle3.json").c_str(), &m) == FC_OK);
  size_t dims[4] = {0, 0, 0, 0};
  size_t count = 0;
  CHECK(fc_product_model_vertical_cohomology(m, dims, 4, &count) == FC_OK);
  CHECK(count == 2);
  CHECK(dims[0] == 3);
  CHECK(dims[1] == 3);

  char* report = nullptr;
  REQUIRE(fc_product_model_report(m, nullptr, &report) == FC_OK);
  const std::string text = take(report);
  CHECK(text.find("\"verdict\": \"pass\"") != std::string::npos);

  CHECK(fc_product_model_report(m, "0,1;1,9", &report) == FC_INPUT_ERROR);
  CHECK(std::string(fc_last_error()).find("base point 9") != std::string::npos);
  fc_product_model_free(m);
}

TEST_CASE("errors map to status codes") {
  fc_product_model* m = nullptr;
  CHECK(fc_product_model_from_json(data("malformed.json").c_str(), &m) == FC_INPUT_ERROR);
  CHECK(m == nullptr);
  CHECK(std::string(fc_last_error()).find("malformed JSON") != std::string::npos);
  CHECK(fc_product_model_from_json(nullptr, &m) == FC_INPUT_ERROR);

  fc_leaf_map* h = nullptr;
  CHECK(fc_leaf_map_from_json(data("bad_map.json").c_str(), &h) == FC_INPUT_ERROR);

  double out = 0;
  const double x[3] = {1, 1, 0}, v[3] = {0, 0, 0};
  CHECK(fc_pendulum_energy(x, v, &out) == FC_INPUT_ERROR);
  char* s = nullptr;
  CHECK(fc_pendulum_molecule_dot(1.0, &s) == FC_INPUT_ERROR);
  CHECK(fc_pendulum_bifurcation_csv("0.2:3:10", &s) == FC_INPUT_ERROR);
}

TEST_CASE("cover model handle and dispatch") {
  fc_cover_model* c = nullptr;
  REQUIRE(fc_cover_model_from_json(data("torus_by_circles.json").c_str(), &c) == FC_OK);
  char* report = nullptr;
  REQUIRE(fc_cover_model_report(c, &report) == FC_OK);
  const std::string text = take(report);
  CHECK(text.find("\"global_leaf_classes\": 2") != std::string::npos);
  fc_cover_model_free(c);

  REQUIRE(fc_cohomology_report(data("torus_by_circles.json").c_str(), nullptr, &report) == FC_OK);
  CHECK(take(report) == text);
  CHECK(fc_cohomology_report(data("torus_by_circles.json").c_str(), "0", &report) == FC_INPUT_ERROR);
  CHECK(fc_cohomology_report(data("missing_subtuple.json").c_str(), nullptr, &report) == FC_INPUT_ERROR);
}

TEST_CASE("leaf maps") {
  fc_leaf_map* a = nullptr;
  fc_leaf_map* b = nullptr;
  REQUIRE(fc_leaf_map_random(7, &a) == FC_OK);
  REQUIRE(fc_leaf_map_random(7, &b) == FC_OK);
  char* ja = nullptr;
  char* jb = nullptr;
  REQUIRE(fc_leaf_map_to_json(a, &ja) == FC_OK);
  REQUIRE(fc_leaf_map_to_json(b, &jb) == FC_OK);
  CHECK(take(ja) == take(jb));

  char* report = nullptr;
  REQUIRE(fc_leaf_map_les_report(a, &report) == FC_OK);
  CHECK(take(report).find("\"verdict\": \"pass\"") != std::string::npos);
  fc_leaf_map_free(a);
  fc_leaf_map_free(b);

  fc_leaf_map* r = nullptr;
  REQUIRE(fc_leaf_map_from_json(data("rotation_map.json").c_str(), &r) == FC_OK);
  REQUIRE(fc_leaf_map_les_report(r, &report) == FC_OK);
  CHECK(take(report).find("\"verdict\": \"pass\"") != std::string::npos);
  fc_leaf_map_free(r);
  fc_leaf_map_free(nullptr);
}

TEST_CASE("pendulum entry points") {
  const double x[3] = {1, 0, 0}, v[3] = {0, 1, 0};
  double e = 0, i = 0;
  REQUIRE(fc_pendulum_energy(x, v, &e) == FC_OK);
  REQUIRE(fc_pendulum_moment(x, v, &i) == FC_OK);
  CHECK(e == 0.5);
  CHECK(i == 1);

  char* s = nullptr;
  REQUIRE(fc_pendulum_critical_json(0.5, &s) == FC_OK);
  CHECK(take(s).find("2.02001132315") != std::string::npos);
  REQUIRE(fc_pendulum_molecule_dot(2.0, &s) == FC_OK);
  CHECK(take(s).find("r=1/2") != std::string::npos);
  REQUIRE(fc_pendulum_h0_json(0.5, 5, &s) == FC_OK);
  CHECK(take(s).find("\"h0_dimension\": 7") != std::string::npos);
  const double es[2] = {0.5, 2.0};
  REQUIRE(fc_pendulum_discrepancy_csv(es, 2, &s) == FC_OK);
  CHECK(take(s).rfind("e,oracle_phi0", 0) == 0);
  REQUIRE(fc_pendulum_bifurcation_csv("1:3:100", &s) == FC_OK);
  CHECK(take(s).rfind("alpha,E,I\n1,-1,0\n", 0) == 0);
  CHECK(std::string(fc_version()) == "0.1.0");
}

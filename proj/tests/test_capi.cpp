#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <json.hpp>
#include <string>

#include "arbor/arbor.h"

using nlohmann::json;

namespace {

struct Family {
  arbor_family* ptr = nullptr;
  Family(const char* gamma, const char* c) { REQUIRE(arbor_family_create(gamma, c, &ptr) == ARBOR_OK); }
  ~Family() { arbor_family_destroy(ptr); }
};

struct Map {
  arbor_map* ptr = nullptr;
  Map(const Family& f, const char* a) { REQUIRE(arbor_family_specialize(f.ptr, a, &ptr) == ARBOR_OK); }
  ~Map() { arbor_map_destroy(ptr); }
};

std::string take(char* s) {
  REQUIRE(s != nullptr);
  std::string out(s);
  arbor_string_free(s);
  return out;
}

}  // namespace

TEST_CASE("version and status names") {
  CHECK(std::string(arbor_version()) == "0.1.0");
  CHECK(std::string(arbor_status_name(ARBOR_OK)) == "Ok");
  CHECK(std::string(arbor_status_name(ARBOR_E_ISOTRIVIAL)) == "Isotrivial");
  CHECK(arbor_is_budget_error(ARBOR_E_DIGIT_BUDGET));
  CHECK(arbor_is_budget_error(ARBOR_E_INCOMPLETE_FACTORIZATION));
  CHECK_FALSE(arbor_is_budget_error(ARBOR_E_PARSE));
}

TEST_CASE("family handles") {
  arbor_family* f = nullptr;
  CHECK(arbor_family_create("0", "1,x", &f) == ARBOR_E_PARSE);
  CHECK(f == nullptr);
  CHECK(std::string(arbor_last_error()).size() > 0);
  CHECK(arbor_family_create(nullptr, "0,1", &f) == ARBOR_E_INVALID_ARGUMENT);
  CHECK(arbor_family_create("0", "0,1", nullptr) == ARBOR_E_INVALID_ARGUMENT);

  Family fam("0", "0,1");
  arbor_map* m = nullptr;
  CHECK(arbor_family_specialize(fam.ptr, "abc", &m) == ARBOR_E_PARSE);
  arbor_family_destroy(nullptr);
  arbor_map_destroy(nullptr);
}

TEST_CASE("family info") {
  Family fam("0", "0,1");
  arbor_budget budget;
  arbor_budget_init(&budget);
  char* out = nullptr;
  REQUIRE(arbor_family_info(fam.ptr, &budget, &out) == ARBOR_OK);
  auto j = json::parse(take(out));
  CHECK(j["m_phi"] == 17);
  CHECK(j["exceptional_set"] == json::array({"-2", "-1", "0", "1", "2"}));
  CHECK(j["exceptional_polynomial"] == "0,0,0,2,5,4,1");

  Family iso("0,1", "5,1");
  out = nullptr;
  CHECK(arbor_family_info(iso.ptr, &budget, &out) == ARBOR_OK);
  auto k = json::parse(take(out));
  CHECK(k["isotrivial"] == true);

  out = nullptr;
  CHECK(arbor_nphi_bound(iso.ptr, 1, 0, 0, &out) == ARBOR_E_ISOTRIVIAL);
  CHECK(out == nullptr);
  CHECK(arbor_nphi_bound(fam.ptr, 0, 0, 0, &out) == ARBOR_E_INVALID_CONSTANTS);
  REQUIRE(arbor_nphi_bound(fam.ptr, 1, 1, 1, &out) == ARBOR_OK);
  CHECK(json::parse(take(out))["n_phi"] == 28);
}

TEST_CASE("index bound") {
  char* out = nullptr;
  REQUIRE(arbor_index_bound(8, nullptr, &out) == ARBOR_OK);
  auto j = json::parse(take(out));
  CHECK(j["value"] == "226156424291633194186662080095093570025917938800079226639565593765455331328");
}

TEST_CASE("orbits") {
  Family fam("0", "0,1");
  Map m(fam, "1");
  char* out = nullptr;
  REQUIRE(arbor_critical_orbit(m.ptr, 6, nullptr, &out) == ARBOR_OK);
  auto j = json::parse(take(out));
  CHECK(j["values"] == json::array({"1", "2", "5", "26", "677", "458330"}));
  CHECK(j["sigma_identity"] == true);

  REQUIRE(arbor_orbit(m.ptr, "0", 3, nullptr, &out) == ARBOR_OK);
  const std::string lines = take(out);
  CHECK(lines.find("\"value\":\"5\"") != std::string::npos);

  arbor_budget tight;
  arbor_budget_init(&tight);
  tight.max_bits = 100;
  Map m3(fam, "3");
  REQUIRE(arbor_orbit(m3.ptr, "0", 40, &tight, &out) == ARBOR_E_DIGIT_BUDGET);
  // partial output survives the budget error
  const std::string partial = take(out);
  CHECK(partial.find("218162369067631212") != std::string::npos);
}

TEST_CASE("certificates and divisors") {
  Family fam("0", "0,1");
  Map m(fam, "2");
  char* out = nullptr;
  REQUIRE(arbor_certify_tower(m.ptr, 1, 6, nullptr, &out) == ARBOR_OK);
  auto j = json::parse(take(out));
  CHECK(j["summary"]["CertifiedMaximal"] == 5);
  CHECK(j["levels"][5]["witness"] == "38350334059");

  CHECK(arbor_certify_tower(m.ptr, 4, 2, nullptr, &out) == ARBOR_E_INVALID_ARGUMENT);

  Map one(fam, "1");
  REQUIRE(arbor_primitive_divisors(one.ptr, 4, nullptr, &out) == ARBOR_OK);
  auto p = json::parse(take(out));
  CHECK(p["exact"]["primes"] == json::array({"13"}));
  CHECK(p["certificate"]["certified"] == true);

  REQUIRE(arbor_discriminant(one.ptr, 2, nullptr, &out) == ARBOR_OK);
  auto d = json::parse(take(out));
  CHECK(d["abs_discriminant"] == "512");
  CHECK(d["agrees"] == true);

  REQUIRE(arbor_stability_scan(one.ptr, 6, nullptr, &out) == ARBOR_OK);
  auto s = json::parse(take(out));
  CHECK(s["verdict"] == "SquareFoundAt");
  CHECK(s["level"] == 1);
}

TEST_CASE("curves and heights") {
  Family fam("0", "0,1");
  Map one(fam, "1");
  char* out = nullptr;
  REQUIRE(arbor_curve(one.ptr, 4, 1, 5, nullptr, &out) == ARBOR_OK);
  auto c = json::parse(take(out));
  CHECK(c["forced_point"]["x"] == "5");
  CHECK(c["forced_point"]["y"] == "52");
  CHECK(c["forced_point_verified"] == true);
  CHECK(c["points"].size() == 3);

  // x² - 1: level 2 vanishes, so the model has a repeated root
  Map minus(fam, "-1");
  CHECK(arbor_curve(minus.ptr, 3, 1, 0, nullptr, &out) == ARBOR_E_SINGULAR_MODEL);
  Map zero(fam, "0");
  CHECK(arbor_curve(zero.ptr, 3, 1, 0, nullptr, &out) == ARBOR_E_ZERO_INPUT);

  REQUIRE(arbor_canonical_height(one.ptr, "0", 1e-6, &out) == ARBOR_OK);
  auto h = json::parse(take(out));
  CHECK(h["ingram_bound_holds"] == true);
  Map pcf(fam, "-1");
  CHECK(arbor_canonical_height(pcf.ptr, "0", 1e-6, &out) == ARBOR_OK);
  arbor_string_free(out);
}

TEST_CASE("density and factoring") {
  Family fam("0", "0,1");
  Map one(fam, "1");
  arbor_density_options opt;
  arbor_density_options_init(&opt);
  opt.X = 1000;
  opt.csv = 1;
  char* out = nullptr;
  REQUIRE(arbor_density(one.ptr, "0", &opt, &out) == ARBOR_OK);
  CHECK(take(out) ==
        "X,primes_tested,members,proportion\n10,4,2,0.5000000000\n100,25,4,0.1600000000\n1000,168,17,0.1011904762\n");

  REQUIRE(arbor_factorize("4294967297", nullptr, &out) == ARBOR_OK);
  auto f = json::parse(take(out));
  CHECK(f["complete"] == true);
  CHECK(f["factors"].size() == 2);
  CHECK(arbor_factorize("0", nullptr, &out) == ARBOR_E_ZERO_INPUT);
}

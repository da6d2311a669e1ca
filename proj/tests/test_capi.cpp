// Exercises the public C surface through the shared library, the way an
// external client would.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <json.hpp>

#include <string>

#include "wnlie/wnlie.h"

namespace {

struct Sess {
  wn_session* s = nullptr;
  Sess(const char* cfg = "") {
    char* err = nullptr;
    s = wn_session_create(cfg, &err);
    if (err) wn_string_free(err);
  }
  ~Sess() { wn_session_free(s); }
};

std::string take(char* p) {
  std::string out = p ? p : "";
  wn_string_free(p);
  return out;
}

}  // namespace

TEST_CASE("session lifecycle and config") {
  Sess sess;
  REQUIRE(sess.s != nullptr);
  char* cfg = nullptr;
  REQUIRE(wn_session_config(sess.s, &cfg) == WN_OK);
  auto j = nlohmann::json::parse(take(cfg));
  CHECK(j["n"] == 2);
  CHECK(j["params"].size() == 2);
}

TEST_CASE("bad config reports an error") {
  char* err = nullptr;
  wn_session* s = wn_session_create("{\"n\": 99}", &err);
  CHECK(s == nullptr);
  REQUIRE(err != nullptr);
  CHECK(take(err).find("n must be") != std::string::npos);
}

TEST_CASE("element handles: parse, arithmetic, centralizer") {
  Sess sess;
  wn_elem *x = nullptr, *y = nullptr, *c = nullptr;
  REQUIRE(wn_parse(sess.s, "d1", &x) == WN_OK);
  REQUIRE(wn_parse(sess.s, "t1*d1", &y) == WN_OK);
  REQUIRE(wn_elem_commutator(sess.s, x, y, &c) == WN_OK);
  char* str = nullptr;
  REQUIRE(wn_elem_str(sess.s, c, &str) == WN_OK);
  CHECK(take(str) == "d1");

  wn_elem* z = nullptr;
  REQUIRE(wn_parse(sess.s, "(t1*d2)*d1*d2^-1 - t1*d1", &z) == WN_OK);
  int flag = -1;
  REQUIRE(wn_elem_centralizes(sess.s, z, &flag) == WN_OK);
  CHECK(flag == 1);
  REQUIRE(wn_elem_centralizes(sess.s, y, &flag) == WN_OK);
  CHECK(flag == 0);

  wn_elem* sum = nullptr;
  REQUIRE(wn_elem_add(sess.s, x, y, &sum) == WN_OK);
  wn_elem* prod = nullptr;
  REQUIRE(wn_elem_mul(sess.s, x, y, &prod) == WN_OK);
  wn_elem_free(sum);
  wn_elem_free(prod);
  wn_elem_free(x);
  wn_elem_free(y);
  wn_elem_free(c);
  wn_elem_free(z);
}

TEST_CASE("parse errors surface through status codes") {
  Sess sess;
  wn_elem* e = nullptr;
  wn_status st = wn_parse(sess.s, "t1^-1", &e);
  CHECK(st == WN_ERR_PARSE);
  CHECK(std::string(wn_session_last_error(sess.s)).find("negative") != std::string::npos);
  CHECK(std::string(wn_status_name(st)) == "parse_error");
}

TEST_CASE("command dispatch returns report JSON") {
  Sess sess;
  char* rep = nullptr;
  REQUIRE(wn_command(sess.s, "bracket", "{\"x\": \"d1\", \"y\": \"t1*d1\"}", &rep) == WN_OK);
  std::string report = take(rep);
  CHECK(wn_report_ok(report.c_str()) == 1);
  auto j = nlohmann::json::parse(report);
  CHECK(j["results"]["bracket"] == "d1");

  CHECK(wn_command(sess.s, "no-such", "{}", &rep) == WN_ERR_BAD_ARG);
}

TEST_CASE("reports are byte-identical across sessions with one seed") {
  Sess a, b;
  char *ra = nullptr, *rb = nullptr;
  REQUIRE(wn_command(a.s, "complex-check", "{}", &ra) == WN_OK);
  REQUIRE(wn_command(b.s, "complex-check", "{}", &rb) == WN_OK);
  CHECK(take(ra) == take(rb));
}

TEST_CASE("version string") {
  CHECK(std::string(wn_version()) == "0.1.0");
}

#include <doctest.h>

#include "commands/commands.hpp"

using namespace wnlie;

namespace {

Session make_session() { return Session(Config::defaults(2)); }

}  // namespace

TEST_CASE("config round-trip and validation") {
  Config c = Config::defaults(2);
  Json j = c.to_json();
  Config c2 = Config::from_json(j);
  CHECK(c2.to_json() == j);
  Json bad = j;
  bad["alpha"] = Json::array({"a1"});
  CHECK_THROWS_AS(Config::from_json(bad), error);
  bad = j;
  bad["n"] = 9;
  CHECK_THROWS_AS(Config::from_json(bad), error);
}

TEST_CASE("bracket command") {
  Session s = make_session();
  Json rep = run_command(s, "bracket", Json{{"x", "d1"}, {"y", "t1*d1"}});
  CHECK(rep["results"]["bracket"] == "d1");
  CHECK(report_ok(rep));
}

TEST_CASE("decompose command matches the displayed coordinates") {
  Session s = make_session();
  Json rep = run_command(s, "decompose", Json{{"expr", "t1*d2"}});
  REQUIRE(rep["results"]["terms"].size() == 2);
  CHECK(rep["results"]["terms"][0]["triple"] == "X[(1,0),2]*d1^-1*d2");
  CHECK(report_ok(rep));
}

TEST_CASE("make-z and make-x commands") {
  Session s = make_session();
  Json z = run_command(s, "make-z", Json{{"indices", Json::array({1, 2})}});
  CHECK(z["results"]["name"] == "z[1,2]");
  CHECK(report_ok(z));
  Json x = run_command(s, "make-x", Json{{"m", "1,1"}, {"j", 1}});
  CHECK(report_ok(x));
  CHECK(x["results"].contains("shape"));
}

TEST_CASE("phi command") {
  Session s = make_session();
  Json rep = run_command(s, "phi", Json{{"expr", "t1*d2"}});
  CHECK(rep["results"]["phi"] == "t1*d2(x)1 + 1(x)E12");
}

TEST_CASE("separation command uses config defaults") {
  Session s = make_session();
  Json rep = run_command(s, "separation",
                         Json{{"gamma", "a1,a1"}, {"lambda", "a1+1/2,a1"}});
  CHECK(rep["results"]["disjoint"] == true);
  CHECK(report_ok(rep));
  Json rep2 = run_command(s, "separation", Json{{"gamma", "a1,a1"}, {"lambda", "a1,a1"}});
  CHECK(rep2["results"]["disjoint"] == false);
}

TEST_CASE("whittaker command") {
  Session s = make_session();
  Json rep = run_command(s, "whittaker",
                         Json{{"module", "im-pi"}, {"k", 0}, {"bound", 3}});
  CHECK(rep["results"]["dim"] == 1);
  CHECK(rep["results"]["stable"] == true);
  CHECK(report_ok(rep));
}

TEST_CASE("glrep serialization round-trip") {
  Session s = make_session();
  Json rep = run_command(s, "glrep", Json{{"lambda", "2,0"}});
  CHECK(report_ok(rep));
  GlRep v = glrep_from_json(rep["results"]["rep"], s.config.params);
  CHECK(v.dim == 3);
  CHECK(glrep_to_json(v, s.config.params) == rep["results"]["rep"]);
}

TEST_CASE("hrep serialization round-trip") {
  Session s = make_session();
  GlRep v = exterior_power(2, 1);
  auto rho = HRep::from_glrep(v, *s.xcache, false);
  Json j = hrep_to_json(*rho, s.config.params);
  auto back = hrep_from_json(j, s.config.params);
  CHECK(back->dim() == rho->dim());
  for (int i = 0; i < 2; ++i) {
    CHECK(back->z_i(i) == rho->z_i(i));
    for (int k = 0; k < 2; ++k) {
      CHECK(back->z_ij(i, k) == rho->z_ij(i, k));
      for (int l = 0; l < 2; ++l) CHECK(back->z_ilj(i, l, k) == rho->z_ilj(i, l, k));
    }
  }
  CHECK(hrep_to_json(*back, s.config.params) == j);
}

TEST_CASE("cuspidal-check negative control through the command surface") {
  Session s = make_session();
  Json rep = run_command(s, "cuspidal-check",
                         Json{{"lambda", "2,0"}, {"alpha", "0,0"}, {"radius", 2}, {"scan", -1}});
  CHECK(!report_ok(rep));
  bool found = false;
  for (const auto& d : rep["results"]["determinants"])
    if (d.contains("zero")) found = true;
  CHECK(found);
}

TEST_CASE("reports are deterministic for a fixed config") {
  Session s1 = make_session();
  Session s2 = make_session();
  for (const char* cmd : {"h-basis", "complex-check"}) {
    Json a = run_command(s1, cmd, Json::object());
    Json b = run_command(s2, cmd, Json::object());
    CHECK(a.dump() == b.dump());
  }
}

TEST_CASE("q1 command") {
  Session s = make_session();
  Json rep = run_command(s, "q1", Json{{"op", "d1"}});
  CHECK(rep["results"]["image"] == "v");
  CHECK(rep["results"]["whittaker_vector"] == true);
}

TEST_CASE("dmod-apply command") {
  Session s = make_session();
  Json rep = run_command(s, "dmod-apply",
                         Json{{"module", "A^1"}, {"op", "d1"}, {"vec", "t1"}});
  CHECK(rep["results"]["result"] == "t1 + 1");
}

TEST_CASE("unknown command is rejected") {
  Session s = make_session();
  CHECK_THROWS_AS(run_command(s, "no-such-command", Json::object()), error);
}

TEST_CASE("verify-all reports the cuspidality failure for excluded alpha") {
  Config c = Config::defaults(2);
  c.alpha = {Scalar(0), Scalar(0)};
  Session s{std::move(c)};
  Json rep = run_command(s, "verify-all", Json::object());
  bool saw_cusp_fail = false, saw_separation_pass = false;
  for (const auto& chk : rep["checks"]) {
    std::string name = chk["name"].get<std::string>();
    if (name.rfind("12a", 0) == 0) saw_cusp_fail = chk["status"] == "fail";
    if (name.rfind("13", 0) == 0) saw_separation_pass = chk["status"] == "pass";
  }
  CHECK(saw_cusp_fail);
  CHECK(saw_separation_pass);
  CHECK(!report_ok(rep));
}

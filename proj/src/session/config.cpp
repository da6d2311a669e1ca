#include "session/config.hpp"

#include "expr/parse.hpp"

namespace wnlie {

Config Config::defaults(int n) {
  Config c;
  c.n = n;
  c.params.clear();
  for (int i = 0; i < n; ++i) c.params.push_back("a" + std::to_string(i + 1));
  for (int i = 0; i < n; ++i) {
    c.alpha.push_back(Scalar::param(i, n));
    c.mu.push_back(Scalar::param(i, n));
    c.gamma.push_back(Scalar::param(0, n));
    c.a.push_back(Scalar(1));
    c.lambda.push_back(Scalar(0));
  }
  if (n >= 1) c.lambda[0] = Scalar(2);
  return c;
}

void Config::validate() const {
  if (n < 1 || n > 4) fail(errc::bad_argument, "n must be in 1..4");
  auto check_vec = [&](const std::vector<Scalar>& v, const std::string& name) {
    if (static_cast<int>(v.size()) != n)
      fail(errc::bad_argument, name + " must have length n = " + std::to_string(n));
  };
  check_vec(alpha, "alpha");
  check_vec(lambda, "lambda");
  check_vec(gamma, "gamma");
  check_vec(mu, "mu");
  check_vec(a, "a");
  if (degree < 1) fail(errc::bad_argument, "degree must be >= 1");
  if (radius < 1) fail(errc::bad_argument, "radius must be >= 1");
}

Config Config::from_json(const Json& j) {
  int n = j.value("n", 2);
  Config c = defaults(n);
  if (j.contains("params")) c.params = j.at("params").get<std::vector<std::string>>();
  auto vec = [&](const char* key, std::vector<Scalar>& out) {
    if (!j.contains(key)) return;
    out.clear();
    for (const auto& s : j.at(key)) out.push_back(parse_scalar(s.get<std::string>(), c.params));
  };
  vec("alpha", c.alpha);
  vec("lambda", c.lambda);
  vec("gamma", c.gamma);
  vec("mu", c.mu);
  vec("a", c.a);
  c.degree = j.value("degree", c.degree);
  c.radius = j.value("radius", c.radius);
  c.seed = j.value("seed", c.seed);
  c.output = j.value("output", c.output);
  c.extended = j.value("extended", c.extended);
  c.validate();
  return c;
}

Json Config::to_json() const {
  Json j;
  j["n"] = n;
  j["params"] = params;
  auto emit = [&](const char* key, const std::vector<Scalar>& v) {
    Json arr = Json::array();
    for (const Scalar& s : v) arr.push_back(s.str(params));
    j[key] = arr;
  };
  emit("alpha", alpha);
  emit("lambda", lambda);
  emit("gamma", gamma);
  emit("mu", mu);
  emit("a", a);
  j["degree"] = degree;
  j["radius"] = radius;
  j["seed"] = seed;
  j["output"] = output;
  j["extended"] = extended;
  return j;
}

}  // namespace wnlie

#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "centralizer/centralizer.hpp"
#include "kernel/scalar.hpp"

#include <json.hpp>

namespace wnlie {

using Json = nlohmann::ordered_json;

/// Session configuration: the rank n, the declared formal parameters, the
/// standard weight/twist vectors, truncation bounds and the seed.
struct Config {
  int n = 2;
  std::vector<std::string> params = {"a1", "a2"};
  std::vector<Scalar> alpha, lambda, gamma, mu, a;
  long degree = 3;
  int radius = 2;
  std::uint64_t seed = 12345;
  std::string output;
  bool extended = false;

  static Config defaults(int n = 2);
  static Config from_json(const Json& j);
  Json to_json() const;
  void validate() const;
};

/// A config plus the shared caches the commands need.
struct Session {
  Config config;
  std::shared_ptr<XCache> xcache;

  explicit Session(Config c) : config(std::move(c)), xcache(std::make_shared<XCache>(config.n)) {
    config.validate();
  }
};

}  // namespace wnlie

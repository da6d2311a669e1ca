#include "wnlie/wnlie.h"

#include <cstdlib>
#include <cstring>
#include <string>

#include "commands/commands.hpp"
#include "expr/parse.hpp"

using namespace wnlie;

struct wn_session {
  Session impl;
  std::string last_error;
  explicit wn_session(Config c) : impl(std::move(c)) {}
};

struct wn_elem {
  UElem impl;
};

namespace {

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out) std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

wn_status status_of(errc code) {
  switch (code) {
    case errc::parse_error: return WN_ERR_PARSE;
    case errc::dimension_mismatch: return WN_ERR_DIMENSION;
    case errc::param_mismatch: return WN_ERR_PARAM;
    case errc::division_by_zero: return WN_ERR_DIV_ZERO;
    case errc::domain_error: return WN_ERR_DOMAIN;
    case errc::not_invertible: return WN_ERR_NOT_INVERTIBLE;
    case errc::degree_bound_exceeded: return WN_ERR_DEGREE_BOUND;
    case errc::unstable_truncation: return WN_ERR_UNSTABLE;
    case errc::verification_failure: return WN_ERR_VERIFICATION;
    case errc::bad_argument: return WN_ERR_BAD_ARG;
    case errc::internal_error: return WN_ERR_INTERNAL;
  }
  return WN_ERR_INTERNAL;
}

template <typename F>
wn_status guarded(wn_session* s, F&& f) {
  if (!s) return WN_ERR_BAD_ARG;
  try {
    s->last_error.clear();
    f();
    return WN_OK;
  } catch (const error& e) {
    s->last_error = e.what();
    return status_of(e.code());
  } catch (const std::exception& e) {
    s->last_error = e.what();
    return WN_ERR_INTERNAL;
  }
}

}  // namespace

extern "C" {

const char* wn_version(void) { return "0.1.0"; }

const char* wn_status_name(wn_status status) {
  switch (status) {
    case WN_OK: return "ok";
    case WN_ERR_PARSE: return "parse_error";
    case WN_ERR_DIMENSION: return "dimension_mismatch";
    case WN_ERR_PARAM: return "param_mismatch";
    case WN_ERR_DIV_ZERO: return "division_by_zero";
    case WN_ERR_DOMAIN: return "domain_error";
    case WN_ERR_NOT_INVERTIBLE: return "not_invertible";
    case WN_ERR_DEGREE_BOUND: return "degree_bound_exceeded";
    case WN_ERR_UNSTABLE: return "unstable_truncation";
    case WN_ERR_VERIFICATION: return "verification_failure";
    case WN_ERR_BAD_ARG: return "bad_argument";
    case WN_ERR_INTERNAL: return "internal_error";
  }
  return "unknown";
}

wn_session* wn_session_create(const char* config_json, char** err_out) {
  if (err_out) *err_out = nullptr;
  try {
    Config c;
    if (config_json && config_json[0] != '\0')
      c = Config::from_json(Json::parse(config_json));
    else
      c = Config::defaults();
    return new wn_session(std::move(c));
  } catch (const std::exception& e) {
    if (err_out) *err_out = dup_string(e.what());
    return nullptr;
  }
}

void wn_session_free(wn_session* session) { delete session; }

const char* wn_session_last_error(const wn_session* session) {
  return session ? session->last_error.c_str() : "null session";
}

wn_status wn_session_config(wn_session* session, char** json_out) {
  return guarded(session, [&] {
    if (!json_out) fail(errc::bad_argument, "null output pointer");
    *json_out = dup_string(session->impl.config.to_json().dump(2));
  });
}

wn_status wn_parse(wn_session* session, const char* text, wn_elem** elem_out) {
  return guarded(session, [&] {
    if (!text || !elem_out) fail(errc::bad_argument, "null argument");
    UElem u = parse_u_expr(text, session->impl.config.n, session->impl.config.params);
    *elem_out = new wn_elem{std::move(u)};
  });
}

void wn_elem_free(wn_elem* elem) { delete elem; }

wn_status wn_elem_str(wn_session* session, const wn_elem* elem, char** str_out) {
  return guarded(session, [&] {
    if (!elem || !str_out) fail(errc::bad_argument, "null argument");
    *str_out = dup_string(u_str(elem->impl, session->impl.config.params));
  });
}

wn_status wn_elem_add(wn_session* session, const wn_elem* x, const wn_elem* y,
                      wn_elem** elem_out) {
  return guarded(session, [&] {
    if (!x || !y || !elem_out) fail(errc::bad_argument, "null argument");
    *elem_out = new wn_elem{x->impl + y->impl};
  });
}

wn_status wn_elem_mul(wn_session* session, const wn_elem* x, const wn_elem* y,
                      wn_elem** elem_out) {
  return guarded(session, [&] {
    if (!x || !y || !elem_out) fail(errc::bad_argument, "null argument");
    *elem_out = new wn_elem{mul(x->impl, y->impl)};
  });
}

wn_status wn_elem_commutator(wn_session* session, const wn_elem* x, const wn_elem* y,
                             wn_elem** elem_out) {
  return guarded(session, [&] {
    if (!x || !y || !elem_out) fail(errc::bad_argument, "null argument");
    *elem_out = new wn_elem{commutator(x->impl, y->impl)};
  });
}

wn_status wn_elem_centralizes(wn_session* session, const wn_elem* x, int* flag_out) {
  return guarded(session, [&] {
    if (!x || !flag_out) fail(errc::bad_argument, "null argument");
    *flag_out = centralizes(x->impl, session->impl.config.n).ok ? 1 : 0;
  });
}

wn_status wn_command(wn_session* session, const char* name, const char* args_json,
                     char** report_out) {
  return guarded(session, [&] {
    if (!name || !report_out) fail(errc::bad_argument, "null argument");
    Json args = Json::object();
    if (args_json && args_json[0] != '\0') {
      try {
        args = Json::parse(args_json);
      } catch (const std::exception& e) {
        fail(errc::parse_error, std::string("bad args JSON: ") + e.what());
      }
    }
    Json rep = run_command(session->impl, name, args);
    *report_out = dup_string(rep.dump(2));
  });
}

int wn_report_ok(const char* report_json) {
  if (!report_json) return -1;
  try {
    return report_ok(Json::parse(report_json)) ? 1 : 0;
  } catch (const std::exception&) {
    return -1;
  }
}

void wn_string_free(char* str) { std::free(str); }

}  // extern "C"

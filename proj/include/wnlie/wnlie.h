/* wnlie: exact symbolic computation for the Lie algebra of polynomial vector
 * fields, its localized enveloping algebra, the centralizer algebra H_n,
 * tensor/Whittaker modules and cuspidal weight modules.
 *
 * C89-compatible surface over the C++ core: opaque handles, integer status
 * codes, and JSON strings for structured data. Every string returned through
 * a char** out-parameter is owned by the library and must be released with
 * wn_string_free. Handles are not thread-safe individually; distinct
 * sessions are independent.
 */
#ifndef WNLIE_H
#define WNLIE_H

#ifdef __cplusplus
extern "C" {
#endif

typedef enum wn_status {
  WN_OK = 0,
  WN_ERR_PARSE = 1,
  WN_ERR_DIMENSION = 2,
  WN_ERR_PARAM = 3,
  WN_ERR_DIV_ZERO = 4,
  WN_ERR_DOMAIN = 5,
  WN_ERR_NOT_INVERTIBLE = 6,
  WN_ERR_DEGREE_BOUND = 7,
  WN_ERR_UNSTABLE = 8,
  WN_ERR_VERIFICATION = 9,
  WN_ERR_BAD_ARG = 10,
  WN_ERR_INTERNAL = 11
} wn_status;

typedef struct wn_session wn_session;
typedef struct wn_elem wn_elem;

const char* wn_version(void);
const char* wn_status_name(wn_status status);

/* Session lifecycle. config_json may be NULL or "" for the defaults
 * (n = 2, parameters a1, a2, symbolic alpha, degree 3, radius 2). On
 * failure returns NULL and, when err_out is non-NULL, stores a message
 * (release with wn_string_free). */
wn_session* wn_session_create(const char* config_json, char** err_out);
void wn_session_free(wn_session* session);

/* Last error message recorded on this session (empty when none). */
const char* wn_session_last_error(const wn_session* session);

/* The effective configuration as JSON. */
wn_status wn_session_config(wn_session* session, char** json_out);

/* Elements of the localized enveloping algebra. Expressions use the term
 * grammar: t1^2*d2 is t^(2,0) d_2, h1 = t1*d1, E = h1+...+hn, [x,y] is the
 * commutator, and d<i> admits negative powers. Parsing yields the PBW
 * normal form. */
wn_status wn_parse(wn_session* session, const char* text, wn_elem** elem_out);
void wn_elem_free(wn_elem* elem);
wn_status wn_elem_str(wn_session* session, const wn_elem* elem, char** str_out);
wn_status wn_elem_add(wn_session* session, const wn_elem* x, const wn_elem* y,
                      wn_elem** elem_out);
wn_status wn_elem_mul(wn_session* session, const wn_elem* x, const wn_elem* y,
                      wn_elem** elem_out);
wn_status wn_elem_commutator(wn_session* session, const wn_elem* x, const wn_elem* y,
                             wn_elem** elem_out);
/* 1 if the element commutes with every d_i and h_i, else 0. */
wn_status wn_elem_centralizes(wn_session* session, const wn_elem* x, int* flag_out);

/* Runs a named subcommand (bracket, normal-form, commutator, decompose,
 * make-z, make-x, h-basis, phi, tensor-apply, complex-check, whittaker, q1,
 * glrep, cuspidal-check, separation, roundtrip, dmod-apply, verify-all)
 * with JSON arguments; the full Report JSON is returned. */
wn_status wn_command(wn_session* session, const char* name, const char* args_json,
                     char** report_out);

/* 1 when every check in a report passed, 0 otherwise, -1 on parse failure. */
int wn_report_ok(const char* report_json);

void wn_string_free(char* str);

#ifdef __cplusplus
}
#endif

#endif /* WNLIE_H */

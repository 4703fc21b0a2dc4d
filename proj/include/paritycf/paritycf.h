#ifndef PARITYCF_H
#define PARITYCF_H

/* C interface to the parity-constrained best approximation library.
 *
 * Every object is an opaque handle released with its *_free function.
 * Functions returning pcf_status leave a message (and, for parse errors, a
 * character offset) in thread-local storage, readable with pcf_last_error
 * and pcf_last_error_position. Strings returned through row/step/item
 * structs are owned by the handle and live as long as it does. */

#include <stddef.h>
#include <stdint.h>

#if defined(__GNUC__)
#define PCF_API __attribute__((visibility("default")))
#else
#define PCF_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum pcf_status {
  PCF_OK = 0,
  PCF_ERR_ARGUMENT = 1,  /* bad option, unknown name, unsupported request */
  PCF_ERR_PARSE = 2,     /* malformed input text; see pcf_last_error_position */
  PCF_ERR_PRECISION = 3, /* a decimal input cannot certify what was asked */
  PCF_ERR_MISMATCH = 4,  /* two routes disagree */
  PCF_ERR_IO = 5,
  PCF_ERR_RATIONAL = 6,  /* the input is rational */
  PCF_ERR_INTERNAL = 7
} pcf_status;

/* Symbols 0, 1, inf; also parity classes even/odd, odd/odd, odd/even. */
enum { PCF_SYM_NONE = -1, PCF_SYM_0 = 0, PCF_SYM_1 = 1, PCF_SYM_INF = 2 };

typedef enum pcf_route { PCF_ROUTE_RCF = 0, PCF_ROUTE_DELTA = 1, PCF_ROUTE_ORACLE = 2, PCF_ROUTE_ALL = 3 } pcf_route;

typedef enum pcf_limit_mode { PCF_LIMIT_DENOMINATOR = 0, PCF_LIMIT_COUNT = 1 } pcf_limit_mode;

typedef struct pcf_input pcf_input;
typedef struct pcf_table pcf_table;
typedef struct pcf_delta pcf_delta;
typedef struct pcf_orbit pcf_orbit;
typedef struct pcf_report pcf_report;

PCF_API const char* pcf_version(void);
PCF_API const char* pcf_status_name(pcf_status s);
PCF_API const char* pcf_last_error(void);
/* Offset into the parsed text, or -1. */
PCF_API long pcf_last_error_position(void);
/* "0", "1", "inf"; "" for PCF_SYM_NONE. */
PCF_API const char* pcf_symbol_name(int sym);

/* ---- inputs ---------------------------------------------------------- */

/* "sqrt(2)-1", "(1+sqrt(5))/2", "0.41421356..." (truncated decimal). */
PCF_API pcf_status pcf_input_parse(const char* text, pcf_input** out);
/* Deterministic pseudo-random surd; unit != 0 reduces it into (0, 1). */
PCF_API pcf_status pcf_input_sample(uint64_t seed, uint64_t index, int unit, pcf_input** out);
PCF_API void pcf_input_free(pcf_input* x);
/* Normalized form "(a+b*sqrt(d))/c", or the decimal literal. */
PCF_API const char* pcf_input_text(const pcf_input* x);
PCF_API int pcf_input_is_exact(const pcf_input* x);
PCF_API double pcf_input_approx(const pcf_input* x);

/* ---- approximation tables -------------------------------------------- */

/* Membership columns, in order: B0, B1, Binf, B01, B0inf, B1inf. */
#define PCF_MEMBERSHIPS 6
PCF_API const char* pcf_membership_name(size_t j);

typedef struct pcf_row {
  const char* value;       /* "p/q" or "p" */
  const char* numerator;
  const char* denominator;
  int classified;          /* 0 when the value is not a signed best approximation */
  int kind;                /* 0 principal p_n/q_n, 1 intermediate p_{n,k}/q_{n,k} */
  long n;
  const char* k;           /* "0" for principal convergents */
  int parity;              /* PCF_SYM_* */
  int in_b;
  int in_s;
  int s_class;             /* PCF_SYM_* or PCF_SYM_NONE */
  int member[PCF_MEMBERSHIPS];
  const char* delta_word;  /* witnessing Delta-word, NULL when unavailable */
  long m;                  /* witnessing index, 0 when unavailable */
} pcf_row;

/* set: "B", "S", "B0", "B1", "Binf", "B01", "B0inf", "B1inf", "S0", "S1", "Sinf".
 * limit_value: a non-negative decimal integer. PCF_ROUTE_ALL fails with
 * PCF_ERR_MISMATCH when the three routes disagree. */
PCF_API pcf_status pcf_approximations(const pcf_input* x, const char* set, pcf_route route, pcf_limit_mode mode,
                                      const char* limit_value, pcf_table** out);
PCF_API size_t pcf_table_size(const pcf_table* t);
PCF_API pcf_status pcf_table_row(const pcf_table* t, size_t i, pcf_row* out);
PCF_API void pcf_table_free(pcf_table* t);

/* ---- Delta-expressions ----------------------------------------------- */

#define PCF_DELTA_GEOMETRIC 1u /* geometric route instead of the cutting sequence */
#define PCF_DELTA_CYLINDERS 2u /* also compute cylinder endpoints */

typedef struct pcf_cylinder {
  const char* word;       /* a_1..a_m, comma separated */
  const char* end_beta;   /* "inf" for the point at infinity */
  const char* end_gamma;
  int beta;               /* parity class of end_beta (PCF_SYM_*) */
  int gamma;
  double beta_approx;     /* 0 when infinite */
  double gamma_approx;
  int beta_infinite;
  int gamma_infinite;
} pcf_cylinder;

PCF_API pcf_status pcf_delta_expand(const pcf_input* x, size_t terms, unsigned flags, pcf_delta** out);
PCF_API size_t pcf_delta_size(const pcf_delta* d);
/* a_{i+1}. */
PCF_API int pcf_delta_symbol(const pcf_delta* d, size_t i);
/* "inf,1,0,1"; "" when empty. */
PCF_API const char* pcf_delta_text(const pcf_delta* d);
/* Cylinder I_{a_1..a_{i+1}}; requires PCF_DELTA_CYLINDERS. */
PCF_API pcf_status pcf_delta_cylinder(const pcf_delta* d, size_t i, pcf_cylinder* out);
PCF_API void pcf_delta_free(pcf_delta* d);

/* Value of a Delta-word "a,b,(x,y)*" as text ("p/q" or "inf"). Copies at
 * most cap - 1 bytes plus a terminator into buf; *len receives the full
 * length. */
PCF_API pcf_status pcf_delta_word_value(const char* word, char* buf, size_t cap, size_t* len);

/* ---- continued fraction maps ------------------------------------------ */

typedef struct pcf_map_step {
  const char* input;
  const char* output;
  const char* branch;    /* "[[a,b],[c,d]]", output = branch . input */
  size_t consumed;       /* Delta-symbols shifted out */
  const char* relabel;   /* "I", "J", "K", "JK", "KJ", "JKJ" */
  const char* m;
} pcf_map_step;

/* map: "farey", "gauss", "by-excess", "even", "odd", "oddodd". x must be an
 * exact surd in (0, 1). */
PCF_API pcf_status pcf_map_orbit(const pcf_input* x, const char* map, size_t steps, pcf_orbit** out);
PCF_API size_t pcf_orbit_size(const pcf_orbit* o);
PCF_API pcf_status pcf_orbit_step(const pcf_orbit* o, size_t i, pcf_map_step* out);
PCF_API void pcf_orbit_free(pcf_orbit* o);

/* which: "even" (inverse orbit of 0, giving B0inf) or "oddodd" (inverse
 * orbit of 1, giving B1). Rows are in orbit order i = 0 .. count - 1. */
PCF_API pcf_status pcf_map_recover(const pcf_input* x, const char* which, size_t count, pcf_table** out);

/* ---- verification ----------------------------------------------------- */

typedef struct pcf_check {
  const char* name;
  int ok;
  const char* detail;
} pcf_check;

/* Cross-checks every route and identity on x, or on `samples` seeded
 * pseudo-random surds when x is NULL. q_max bounds the set comparisons. */
PCF_API pcf_status pcf_oracle_check(const pcf_input* x, uint64_t seed, size_t samples, int64_t q_max,
                                    pcf_report** out);
PCF_API size_t pcf_report_size(const pcf_report* r);
PCF_API pcf_status pcf_report_item(const pcf_report* r, size_t i, pcf_check* out);
PCF_API int pcf_report_ok(const pcf_report* r);
PCF_API void pcf_report_free(pcf_report* r);

/* Test hook: "rcf", "delta" or "oracle" perturbs that route's output;
 * NULL or "" clears. Process-wide. */
PCF_API pcf_status pcf_debug_inject_fault(const char* route);

#ifdef __cplusplus
}
#endif

#endif /* PARITYCF_H */

/* C API for the nichols library: opaque handles, status codes, text reports.
 * Every report is heap-allocated; release it with nichols_string_free. All
 * functions are safe to call from multiple threads on distinct handles. */
#ifndef NICHOLS_H
#define NICHOLS_H

#ifdef __cplusplus
extern "C" {
#endif

typedef enum {
  NICHOLS_OK = 0,
  NICHOLS_ERR_PARSE = 1,
  NICHOLS_ERR_CAP = 2,
  NICHOLS_ERR_VERIFY = 3,
  NICHOLS_ERR_ARG = 4,
  NICHOLS_ERR_INTERNAL = 5
} nichols_status;

typedef struct nichols_braiding nichols_braiding;
typedef struct nichols_hopf nichols_hopf;

typedef struct {
  long object_cap;   /* <= 0 selects the default */
  long root_cap;
  long degree_cap;
  long block_cap;
  long max_degree;            /* hilbert */
  const char* specialization; /* "q=z^2,r=z^3" over the target order, or NULL */
  long target_order;          /* field order for the specialization */
  int verify;                 /* relations: run the symmetrizer check */
  int minimal;                /* relations: reduced power-root-vector set */
  int threads;
} nichols_options;

void nichols_options_init(nichols_options* opt);

nichols_status nichols_braiding_parse(const char* text, nichols_braiding** out);
void nichols_braiding_free(nichols_braiding* b);
nichols_status nichols_hopf_parse(const char* text, nichols_hopf** out);
void nichols_hopf_free(nichols_hopf* h);

/* braiding -> canonical text form (round-trips through the parser) */
nichols_status nichols_braiding_serialize(const nichols_braiding* b, char** report);

nichols_status nichols_classify(const nichols_braiding* b, const nichols_options* opt, char** report);
nichols_status nichols_roots(const nichols_braiding* b, const nichols_options* opt, char** report);
nichols_status nichols_weyl(const nichols_braiding* b, const nichols_options* opt, char** report);
nichols_status nichols_hilbert(const nichols_braiding* b, const nichols_options* opt, char** report);
nichols_status nichols_relations(const nichols_braiding* b, const nichols_options* opt, char** report);
nichols_status nichols_dot(const nichols_braiding* b, const nichols_options* opt, char** report);
nichols_status nichols_bosonize(const nichols_hopf* h, const nichols_options* opt, char** report);

void nichols_string_free(char* s);

/* message for the most recent failing call on this thread */
const char* nichols_last_error(void);

#ifdef __cplusplus
}
#endif
#endif /* NICHOLS_H */

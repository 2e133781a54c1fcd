/* caclab: chain/antichain workbench over finite posets.
 *
 * C API over the C++ core: opaque handles plus one-shot JSON operations.
 * Every char** output is a NUL-terminated string owned by the caller and
 * released with caclab_string_free. Status codes mirror the CLI exit codes.
 */
#ifndef CACLAB_H
#define CACLAB_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

#ifndef CACLAB_API
#define CACLAB_API __attribute__((visibility("default")))
#endif

typedef enum caclab_status {
  CACLAB_OK = 0,          /* accepted / succeeded */
  CACLAB_VERIFY_FAIL = 1, /* well-formed input rejected by a check */
  CACLAB_BAD_INPUT = 2    /* malformed or inconsistent input */
} caclab_status;

CACLAB_API const char* caclab_version(void);

/* Message for the most recent failure on this thread; empty when the last
 * call succeeded. The pointer stays valid until the next API call. */
CACLAB_API const char* caclab_last_error(void);

CACLAB_API void caclab_string_free(char* s);

/* ---------- opaque poset handles ---------- */

typedef struct caclab_poset caclab_poset;

CACLAB_API caclab_status caclab_poset_parse(const char* json,
                                            caclab_poset** out);
CACLAB_API void caclab_poset_free(caclab_poset* p);
CACLAB_API caclab_status caclab_poset_to_json(const caclab_poset* p,
                                              char** out_json);
CACLAB_API caclab_status caclab_poset_to_dot(const caclab_poset* p,
                                             char** out_dot);
CACLAB_API size_t caclab_poset_size(const caclab_poset* p);
/* 1 / 0; -1 when an element is outside the universe. */
CACLAB_API int caclab_poset_leq(const caclab_poset* p, uint64_t x, uint64_t y);
CACLAB_API int caclab_poset_is_omega_ordered(const caclab_poset* p);
CACLAB_API int caclab_poset_is_chain(const caclab_poset* p, const uint64_t* xs,
                                     size_t n);
CACLAB_API int caclab_poset_is_antichain(const caclab_poset* p,
                                         const uint64_t* xs, size_t n);
CACLAB_API caclab_status caclab_poset_dual(const caclab_poset* p,
                                           caclab_poset** out);
CACLAB_API caclab_status caclab_poset_restrict(const caclab_poset* p,
                                               const uint64_t* xs, size_t n,
                                               caclab_poset** out);

/* ---------- one-shot JSON operations (the CLI surface) ----------
 *
 * kind: CAC, SCAC, OMEGA_CAC, OMEGA_SCAC, SCAC_SMALL, SCAC_LARGE, SCAC_TYPE.
 * min_size: pass -1 to fall back to the instance's policy object, then to
 * the default of 3.
 */

CACLAB_API caclab_status caclab_gen(const char* kind, uint64_t size,
                                    uint64_t seed, int64_t min_size,
                                    char** out_json);

CACLAB_API caclab_status caclab_check_instance(const char* kind,
                                               const char* instance_json,
                                               int64_t min_size,
                                               char** report_json);

CACLAB_API caclab_status caclab_check_solution(const char* kind,
                                               const char* instance_json,
                                               const char* solution_json,
                                               int64_t min_size,
                                               char** report_json);

CACLAB_API caclab_status caclab_solve(const char* kind,
                                      const char* instance_json,
                                      int64_t min_size, char** solution_json);

/* op: split-plus, split-minus, compose, thin, greedy-chain,
 * greedy-antichain, dualize, append-type. start only matters for
 * greedy-chain (pass -1 for the least element). with_trace attaches the
 * thinning stages to the thin output. */
CACLAB_API caclab_status caclab_reduce(const char* op,
                                       const char* instance_json,
                                       int64_t min_size, int with_trace,
                                       int64_t start, char** out_json);

/* strategy: "builtin-cac", or "file" with machine_json carrying the
 * strategy machine. Returns CACLAB_OK exactly when Player II wins; the
 * transcript is written in every case. */
CACLAB_API caclab_status caclab_play_game(const char* p_kind,
                                          const char* q_kind,
                                          const char* strategy,
                                          const char* machine_json,
                                          const char* instance_json,
                                          uint32_t max_rounds, int64_t min_size,
                                          char** transcript_json);

/* side: "small" or "large". p0_json may be NULL for the empty condition. */
CACLAB_API caclab_status caclab_force(const char* machines_json,
                                      uint32_t stages, const char* side,
                                      const char* p0_json, char** out_json);

CACLAB_API caclab_status caclab_check_condition(const char* condition_json,
                                                int strict_isolated,
                                                char** report_json);

CACLAB_API caclab_status caclab_mind_change(const char* condition_json,
                                            char** out_condition_json);

/* e_csv / i_csv: comma-separated naturals ("" for the empty set).
 * format: "json" or "dot". */
CACLAB_API caclab_status caclab_build_tree(const char* e_csv, const char* i_csv,
                                           const char* machine_json, uint64_t n,
                                           uint64_t w_max, uint64_t kappa,
                                           const char* format, char** out);

#ifdef __cplusplus
}
#endif

#endif /* CACLAB_H */

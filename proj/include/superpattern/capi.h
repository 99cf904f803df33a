#ifndef SUPERPATTERN_CAPI_H
#define SUPERPATTERN_CAPI_H

/* C interface to the superpattern library.  Posets travel as opaque handles,
 * everything else as JSON or CSV text.  Every function returns a status code;
 * sp_last_error() describes the most recent failure on the calling thread.
 * Strings returned through char** are owned by the caller and must be
 * released with sp_string_free(). */

#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum sp_status {
  SP_OK = 0,
  SP_ERR_INPUT = 1,      /* malformed input, unknown atoms, bad flags */
  SP_ERR_CYCLE = 2,      /* relations close to a cycle */
  SP_ERR_DOMAIN = 3,     /* preconditions violated (subposet, reference, ...) */
  SP_ERR_CAP = 4,        /* a size cap was exceeded */
  SP_ERR_MATH = 5,       /* pole or division by zero */
  SP_ERR_INTERNAL = 6
} sp_status;

typedef struct sp_poset sp_poset;

typedef struct sp_caps {
  uint64_t max_nn;          /* antichain enumeration cap */
  uint64_t max_group_order; /* concrete group enumeration cap */
  int max_antipode_atoms;   /* ground-set cap for antipode sums */
} sp_caps;

sp_caps sp_caps_default(void);

const char* sp_last_error(void);
void sp_string_free(char* s);

/* {"elements": ["1","2"], "relations": [["1","2"]]} */
sp_status sp_poset_from_json(const char* json_text, sp_poset** out);
void sp_poset_free(sp_poset* p);
sp_status sp_poset_to_json(const sp_poset* p, char** json_out);
int sp_poset_atom_count(const sp_poset* p);

sp_status sp_nn_count(const sp_poset* p, const sp_caps* caps, uint64_t* out);
sp_status sp_nn_enumerate(const sp_poset* p, const sp_caps* caps, char** json_out);

/* Co-ideals, irreducibles and the two labeling maps of the normal lattice. */
sp_status sp_lattice(const sp_poset* p, const sp_caps* caps, char** json_out);

/* Supercharacter table with both determinants; q_value may be NULL for the
 * symbolic table or a rational like "2" for column-wise evaluation. */
sp_status sp_table(const sp_poset* p, const sp_caps* caps, const char* q_value,
                   int as_csv, char** out);

/* Restriction of chi^label from r to the subposet q (same atoms). */
sp_status sp_restrict(const sp_poset* r, const sp_poset* q,
                      const char* label_json, char** json_out);

/* basis: "delta" | "chi" | "subgroup-chi" | "subgroup-delta" */
sp_status sp_product(const sp_poset* left, const char* left_label_json,
                     const sp_poset* right, const char* right_label_json,
                     const char* basis, char** json_out);

/* left/right atom lists as JSON arrays, e.g. ["1","2"]. */
sp_status sp_coproduct(const sp_poset* p, const char* label_json,
                       const char* left_atoms_json, const char* right_atoms_json,
                       const char* basis, char** json_out);

/* basis: "chi" | "subgroup-delta"; method: "takeuchi" | "closed-form";
 * label_json may be NULL (empty partition for chi, the whole group for
 * subgroup-delta). */
sp_status sp_antipode(const sp_poset* p, const char* basis, const char* label_json,
                      const char* method, const sp_caps* caps, char** json_out);

/* Primitive generator of the atomic pair (ambient, subgroup) marked at atom. */
sp_status sp_primitive(const sp_poset* ambient, const sp_poset* subgroup,
                       const char* atom, char** json_out);

/* suites_csv like "axioms,catalan" or NULL for all; primes_csv like "2,3".
 * Writes a one-line-per-check report and the number of failed checks. */
sp_status sp_verify(const char* suites_csv, int max_atoms, const char* primes_csv,
                    uint64_t seed, const sp_caps* caps, char** report_out,
                    int* failures_out);

/* The acceptance criteria at their stated bounds. */
sp_status sp_acceptance(char** report_out, int* failures_out);

#ifdef __cplusplus
}
#endif

#endif /* SUPERPATTERN_CAPI_H */

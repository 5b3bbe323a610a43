#ifndef GRPKIT_GRPKIT_H
#define GRPKIT_GRPKIT_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum grpkit_status {
  GRPKIT_OK = 0,
  GRPKIT_PARSE_ERROR = 1,
  GRPKIT_INVALID_ARGUMENT = 2,
  GRPKIT_RESOURCE_ERROR = 3,
  GRPKIT_INTERNAL_ERROR = 4
} grpkit_status;

typedef struct grpkit_presentation grpkit_presentation;
typedef struct grpkit_subgroups grpkit_subgroups;

/* Message of the last failed call on this thread; never NULL. */
const char* grpkit_last_error(void);

/* Strings returned through char** are heap allocated; release them here. */
void grpkit_string_free(char* s);

grpkit_status grpkit_presentation_parse(const char* text, grpkit_presentation** out);
/* A catalog key such as "GammaW", or a path to a .grp file. */
grpkit_status grpkit_presentation_load(const char* name_or_path, grpkit_presentation** out);
void grpkit_presentation_free(grpkit_presentation* p);
grpkit_status grpkit_presentation_render(const grpkit_presentation* p, char** out);
grpkit_status grpkit_abelian_invariants(const grpkit_presentation* p, char** out);

/* Conjugacy classes of subgroups with index in [from, to], in canonical order. */
grpkit_status grpkit_low_index(const grpkit_presentation* p, size_t from, size_t to, uint64_t node_budget,
                               unsigned jobs, grpkit_subgroups** out);
void grpkit_subgroups_free(grpkit_subgroups* s);
size_t grpkit_subgroups_count(const grpkit_subgroups* s);
/* Accessors take a 0-based position; they return 0 when it is out of range. */
size_t grpkit_subgroups_index(const grpkit_subgroups* s, size_t i);
size_t grpkit_subgroups_class_size(const grpkit_subgroups* s, size_t i);

/* Reidemeister-Schreier presentation of class i, optionally simplified. */
grpkit_status grpkit_subgroup_presentation(const grpkit_presentation* p, const grpkit_subgroups* s, size_t i,
                                           int simplify, grpkit_presentation** out);
/* Generator permutations of the coset action, one "name: cycles" per line. */
grpkit_status grpkit_coset_action(const grpkit_subgroups* s, const grpkit_presentation* p, size_t i,
                                  char** out);
grpkit_status grpkit_coset_image_order(const grpkit_subgroups* s, size_t i, char** out);
grpkit_status grpkit_coset_image_is_simple(const grpkit_subgroups* s, size_t i, int* out);

int grpkit_is_prime(uint64_t n);
/* Splitting of p in a field given by label ("Qomega", "Kweeks") or polynomial; "(e,f) (e,f) ...". */
grpkit_status grpkit_split_prime(const char* field, uint64_t p, char** out);

/* Epimorphisms onto a built-in target (A4, A5, S3, PSL27, Z2, Z3, Z5). aut_order may be NULL. */
grpkit_status grpkit_count_epimorphisms(const grpkit_presentation* p, const char* target, const char* aut_order,
                                        char** total, char** automorphisms, char** classes);

/* H1 of the mapping torus of matrix^power; matrix as "[[a,b],[c,d]]". */
grpkit_status grpkit_mapping_torus_h1(const char* matrix, unsigned long power, char** out);

/* verdict: 0 all passed, 1 some check failed, 2 no failures but some errors. */
grpkit_status grpkit_verify(const char* manifest_path, unsigned jobs, size_t max_cosets, uint64_t node_budget,
                            int with_timing, char** report, int* verdict);

/* name is a scenario name or "all"; passed is 1 when every scenario passed. */
grpkit_status grpkit_scenario_run(const char* name, uint64_t node_budget, unsigned jobs, char** report,
                                  int* passed);

#ifdef __cplusplus
}
#endif

#endif

#ifndef SYMDYN_H
#define SYMDYN_H

/* C interface to the symdyn library. Every call returns an sd_status; on
 * failure sd_last_error() holds a message for the calling thread. Strings
 * returned through char** belong to the caller and go back via
 * sd_string_free. */

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

#if defined(SYMDYN_BUILDING)
#define SD_API __attribute__((visibility("default")))
#else
#define SD_API
#endif

typedef enum sd_status {
  SD_OK = 0,
  SD_INVALID_ARGUMENT = 1,
  SD_EMPTY_SHIFT,
  SD_NOT_ESSENTIAL,
  SD_PARTIAL_BLOCK_MAP,
  SD_BRACKET_UNDEFINED,
  SD_ALPHABET_MISMATCH,
  SD_STATE_BLOWUP,
  SD_SYMBOL_NOT_IN_SUBSET,
  SD_NOT_ALLOWED_POINT,
  SD_NON_UNIFORM_RELATION,
  SD_NOT_IN_IMAGE,
  SD_INFINITE_PREIMAGE,
  SD_EMPTY_FIBER,
  SD_NOT_RESOLVING,
  SD_RHO1_NOT_INJECTIVE,
  SD_HYPOTHESIS_FAILED,
  SD_NON_CONSTANT,
  SD_NOT_FINITE_TO_ONE,
  SD_CAP_EXCEEDED,
  SD_WINDOW_TOO_SMALL,
  SD_WINDOW_MISMATCH,
  SD_MISMATCH,
  SD_NOT_PERMUTATION,
  SD_NON_UNIQUE_V,
  SD_AMBIGUOUS_COMPONENT,
  SD_PARSE_ERROR,
  SD_UNKNOWN_NAME,
  SD_INTERNAL = 100
} sd_status;

typedef struct sd_manifest sd_manifest;
typedef struct sd_code sd_code;

SD_API const char* sd_version(void);
SD_API const char* sd_status_name(sd_status status);
SD_API const char* sd_last_error(void);
SD_API void sd_string_free(char* s);

SD_API sd_status sd_manifest_parse(const char* text, size_t len, sd_manifest** out);
SD_API sd_status sd_manifest_load(const char* path, sd_manifest** out);
SD_API void sd_manifest_free(sd_manifest* m);
SD_API sd_status sd_manifest_print(const sd_manifest* m, char** out);
SD_API sd_status sd_manifest_counts(const sd_manifest* m, size_t* systems, size_t* codes);
SD_API sd_status sd_manifest_equal(const sd_manifest* a, const sd_manifest* b, int* equal);
/* key: "P", "L", "kcap" or "subset_cap". */
SD_API sd_status sd_manifest_set_option(sd_manifest* m, const char* key, uint64_t value);

/* argv[0] is the command name. The report is always produced; exit_code is
 * 0 (property holds), 1 (fails) or 2 (input error). */
SD_API sd_status sd_run(const sd_manifest* m, int argc, const char* const* argv, int json, char** report,
                        int* exit_code);

/* A code handle keeps its domain alive independently of the manifest. */
SD_API sd_status sd_code_lookup(const sd_manifest* m, const char* name, sd_code** out);
SD_API void sd_code_free(sd_code* c);
SD_API sd_status sd_code_symbols(const sd_code* c, size_t* symbols, size_t* letters);
/* dir: 'u' or 's'. */
SD_API sd_status sd_code_resolving(const sd_code* c, char dir, int* resolving);
SD_API sd_status sd_code_finite_to_one(const sd_code* c, int* finite_to_one);
SD_API sd_status sd_code_degree(const sd_code* c, uint32_t P, size_t* K, size_t* d, uint64_t* D);
SD_API sd_status sd_code_image_equal(const sd_code* a, const sd_code* b, int* equal);
/* relation: "alpha" or "theta". */
SD_API sd_status sd_code_cover(const sd_code* c, const char* relation, size_t* cover_symbols, size_t* classes);
SD_API sd_status sd_system_entropy(const sd_manifest* m, const char* name, double* entropy);

#ifdef __cplusplus
}
#endif

#endif /* SYMDYN_H */

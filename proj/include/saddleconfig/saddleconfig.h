#ifndef SADDLECONFIG_H
#define SADDLECONFIG_H

/* C API for the saddle-tower gluing-configuration toolkit.
 *
 * All functions return an sc_status; SC_OK is 0. Outputs are heap-allocated
 * NUL-terminated strings owned by the caller, released with sc_string_free.
 * Configurations are opaque handles released with sc_config_free. The last
 * error message is thread-local and owned by the library.
 */

#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef struct sc_config sc_config;

typedef enum sc_status {
  SC_OK = 0,
  SC_ERR_IO = 1,
  SC_ERR_USAGE = 2,
  SC_ERR_SCHEMA = 3,
  SC_ERR_INVARIANT = 4,
  SC_ERR_NOT_RIGID = 5,
  SC_ERR_PHASE_NOT_BALANCED = 6,
  SC_ERR_NEWTON_DIVERGENCE = 7,
  SC_ERR_PRECONDITION = 8,
  SC_ERR_INTERNAL = 9
} sc_status;

const char* sc_version(void);

/* Thread-local message for the most recent failing call in this thread. */
const char* sc_last_error(void);

void sc_string_free(char* s);
void sc_config_free(sc_config* config);

/* Load or parse a configuration (validates all invariants). */
sc_status sc_config_load(const char* path, sc_config** out);
sc_status sc_config_from_json(const char* json_text, sc_config** out);
sc_status sc_config_save(const sc_config* config, const char* path);
sc_status sc_config_to_json(const sc_config* config, char** json_out);

/* Validation report for a file; *report_out is filled when the document
 * parses, even if invariants fail. */
sc_status sc_validate_file(const char* path, char** report_out);

/* Full analysis report (graph summary, horizontal/vertical analysis and the
 * embeddedness verdict). with_certificate additionally runs the constructive
 * rigidity certificate. */
sc_status sc_analyze(const sc_config* config, uint64_t seed, int with_certificate,
                     char** report_out);

/* Balanced phase functions found for the configuration's graph. */
sc_status sc_phases(const sc_config* config, uint64_t seed, char** report_out);

/* Embeddedness verdict with per-pair evidence. probes may be NULL to use the
 * defaults (0.08, 0.04, 0.02). */
sc_status sc_embed(const sc_config* config, const double* probes, int probe_count,
                   char** report_out);

/* Deterministic SVG of the limit graph and its deformation at eps. */
sc_status sc_render_svg(const sc_config* config, double eps, char** svg_out);

/* Built-in example gallery. k is honored by parametrized entries (polygram);
 * pass 0 for the default. */
sc_status sc_example(const char* name, int k, char** config_json_out);
sc_status sc_example_list(char** names_json_out);

#ifdef __cplusplus
}
#endif

#endif /* SADDLECONFIG_H */

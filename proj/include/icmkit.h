/* icmkit C API: exact Cohen-Macaulay classification for simplicial
 * complexes and graph edge ideals.
 *
 * Every object is an opaque handle. Functions return a status code; when a
 * call fails, icmkit_last_error() describes why (per thread). Strings the
 * library hands out are owned by the caller and released with
 * icmkit_free_text().
 */

#ifndef ICMKIT_H
#define ICMKIT_H

#ifdef __cplusplus
extern "C" {
#endif

typedef enum icmkit_status {
    ICMKIT_OK = 0,
    ICMKIT_ERR_PARSE = 2,    /* malformed input text or spec */
    ICMKIT_ERR_GUARD = 3,    /* a size guard refused the computation */
    ICMKIT_ERR_INTERNAL = 4, /* internal inconsistency; report a bug */
    ICMKIT_ERR_INVALID = 5   /* bad arguments or domain violation */
} icmkit_status;

/* A simplicial complex. */
typedef struct icmkit_complex icmkit_complex;

/* Options shared by report/betti/atlas computations. */
typedef struct icmkit_options {
    const char* field;   /* "Q" (default when NULL) or "Fp:<p>" */
    int homology_guard;  /* max n for depth/report work; 0 selects default 25 */
    int betti_guard;     /* max n for full Betti tables; 0 selects default 20 */
    int atlas_guard;     /* max n for atlas enumeration; 0 selects default 7 */
    int with_timing;     /* nonzero: include wall_time_ms in documents */
} icmkit_options;

/* Fills opts with the defaults described above. */
void icmkit_options_init(icmkit_options* opts);

/* Message for the most recent failure on this thread; never NULL. */
const char* icmkit_last_error(void);

/* Releases any text returned by this library. NULL is fine. */
void icmkit_free_text(char* text);

/* Releases a complex handle. NULL is fine. */
void icmkit_complex_free(icmkit_complex* c);

/* --- Building complexes --------------------------------------------- */

/* Parses facet-file text (one facet per line; see the README). */
icmkit_status icmkit_parse_facets(const char* text, icmkit_complex** out);

/* Parses edge-list text and takes the named complex of the graph.
 * complex_kind is "independence" or "clique". */
icmkit_status icmkit_parse_edges(const char* text, const char* complex_kind,
                                 icmkit_complex** out);

/* Builds a generated graph ("path:<n>", "cycle:<n>", "complete:<n>",
 * "dtree:<recipe>") and takes the named complex. */
icmkit_status icmkit_generate(const char* spec, const char* complex_kind,
                              icmkit_complex** out);

/* --- Transformations ------------------------------------------------ */

icmkit_status icmkit_alexander_dual(const icmkit_complex* c, icmkit_complex** out);

/* i >= -1. */
icmkit_status icmkit_skeleton(const icmkit_complex* c, int i, icmkit_complex** out);

/* mindeg <= k <= n; the complex must have a non-face. */
icmkit_status icmkit_truncate(const icmkit_complex* c, int k, icmkit_complex** out);

/* --- Output --------------------------------------------------------- */

/* Facet-file text for the complex. */
icmkit_status icmkit_facet_text(const icmkit_complex* c, char** out);

/* JSON invariant report. input_name labels the document. */
icmkit_status icmkit_report_json(const icmkit_complex* c, const char* input_name,
                                 const icmkit_options* opts, char** out);

/* JSON Betti table document. subject is "quotient_ring" or "ideal". */
icmkit_status icmkit_betti_json(const icmkit_complex* c, const char* input_name,
                                const char* subject, const icmkit_options* opts,
                                char** out);

/* Atlas of all graph isomorphism classes on 1..nmax vertices; CSV, or JSON
 * lines when jsonl is nonzero. */
icmkit_status icmkit_atlas_text(int nmax, int jsonl, const icmkit_options* opts,
                                char** out);

/* Library version string, static storage. */
const char* icmkit_version(void);

#ifdef __cplusplus
}
#endif

#endif

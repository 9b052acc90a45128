/* fxnet — currency-network analysis library.
 *
 * C interface over the C++ core: opaque handles, status-code returns,
 * thread-local error messages. Every *_new/*_parse/*_build function that
 * yields a handle transfers ownership to the caller; release it with the
 * matching *_free. Strings returned through char** are released with
 * fxnet_string_free. Borrowed const char* pointers stay valid for the
 * lifetime of the handle they came from.
 */

#ifndef FXNET_H
#define FXNET_H

#include <stddef.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum fxnet_status {
    FXNET_OK = 0,
    FXNET_ERR_PARSE = 1,
    FXNET_ERR_SCHEMA = 2,
    FXNET_ERR_MISSING_DATA = 3,
    FXNET_ERR_UNRECOVERABLE_COLUMN = 4,
    FXNET_ERR_UNKNOWN_CURRENCY = 5,
    FXNET_ERR_INSUFFICIENT_DATA = 6,
    FXNET_ERR_DEGENERATE_INPUT = 7,
    FXNET_ERR_UNDEFINED_NORMALIZATION = 8,
    FXNET_ERR_USAGE = 9,
    FXNET_ERR_CONSISTENCY = 10,
    FXNET_ERR_IO = 11,
    FXNET_ERR_INVALID_ARGUMENT = 12,
    FXNET_ERR_INTERNAL = 13
} fxnet_status;

typedef enum fxnet_kind {
    FXNET_KIND_RETURN = 0,
    FXNET_KIND_SIGN = 1,
    FXNET_KIND_AMPLITUDE = 2
} fxnet_kind;

typedef enum fxnet_path_mode {
    FXNET_PATH_HOP = 0,
    FXNET_PATH_WEIGHTED = 1
} fxnet_path_mode;

typedef struct fxnet_schema fxnet_schema;   /* column mapping of an input table */
typedef struct fxnet_panel fxnet_panel;     /* reference-quoted rate panel */
typedef struct fxnet_cross fxnet_cross;     /* panel rebased to one base currency */
typedef struct fxnet_returns fxnet_returns; /* log-return panel */
typedef struct fxnet_bundle fxnet_bundle;   /* returns + signs + amplitudes */
typedef struct fxnet_matrix fxnet_matrix;   /* correlation/distance/weight matrix */
typedef struct fxnet_tree fxnet_tree;       /* minimal spanning tree */
typedef struct fxnet_series fxnet_series;   /* one rolling metric series */
typedef struct fxnet_series_list fxnet_series_list;
typedef struct fxnet_config fxnet_config;   /* full pipeline run description */

const char* fxnet_version(void);

/* Message for the most recent failing call on this thread. Never NULL. */
const char* fxnet_last_error(void);

void fxnet_string_free(char* text);

/* ---- schema ------------------------------------------------------- */

fxnet_status fxnet_schema_new(fxnet_schema** out);
fxnet_status fxnet_schema_load(const char* path, fxnet_schema** out);
/* keys: date_column, date_format, delimiter, missing_token, reference */
fxnet_status fxnet_schema_set(fxnet_schema* schema, const char* key, const char* value);
void fxnet_schema_free(fxnet_schema* schema);

/* ---- rate panels --------------------------------------------------- */

fxnet_status fxnet_panel_parse_file(const char* path, const fxnet_schema* schema,
                                    fxnet_panel** out);
fxnet_status fxnet_panel_parse_text(const char* text, const fxnet_schema* schema,
                                    fxnet_panel** out);
/* mode: "drop-date" | "forward-fill" | "error". Out-params may be NULL. */
fxnet_status fxnet_panel_align(const fxnet_panel* panel, const char* mode, int max_fill_run,
                               fxnet_panel** out, long* dates_dropped, long* cells_filled);
fxnet_status fxnet_panel_rebase(const fxnet_panel* panel, const char* base, fxnet_cross** out);

long fxnet_panel_rows(const fxnet_panel* panel);
long fxnet_panel_cols(const fxnet_panel* panel);
const char* fxnet_panel_reference(const fxnet_panel* panel);
const char* fxnet_panel_currency(const fxnet_panel* panel, long index);
const char* fxnet_panel_date(const fxnet_panel* panel, long row); /* ISO-8601 */
double fxnet_panel_rate(const fxnet_panel* panel, long row, long col);
void fxnet_panel_free(fxnet_panel* panel);

long fxnet_cross_rows(const fxnet_cross* cross);
long fxnet_cross_cols(const fxnet_cross* cross);
const char* fxnet_cross_base(const fxnet_cross* cross);
const char* fxnet_cross_currency(const fxnet_cross* cross, long index);
const char* fxnet_cross_date(const fxnet_cross* cross, long row);
double fxnet_cross_rate(const fxnet_cross* cross, long row, long col);
void fxnet_cross_free(fxnet_cross* cross);

/* ---- signals ------------------------------------------------------- */

fxnet_status fxnet_cross_log_returns(const fxnet_cross* cross, fxnet_returns** out);
/* total_clipped may be NULL. */
fxnet_status fxnet_returns_clip(const fxnet_returns* returns, double k_sigma,
                                fxnet_returns** out, long* total_clipped);
fxnet_status fxnet_returns_decompose(const fxnet_returns* returns, fxnet_bundle** out);

long fxnet_returns_rows(const fxnet_returns* returns);
long fxnet_returns_cols(const fxnet_returns* returns);
const char* fxnet_returns_currency(const fxnet_returns* returns, long index);
const char* fxnet_returns_date(const fxnet_returns* returns, long row);
double fxnet_returns_value(const fxnet_returns* returns, long row, long col);
void fxnet_returns_free(fxnet_returns* returns);

long fxnet_bundle_rows(const fxnet_bundle* bundle);
long fxnet_bundle_cols(const fxnet_bundle* bundle);
const char* fxnet_bundle_currency(const fxnet_bundle* bundle, long index);
/* kind selects which component matrix the cell is read from */
double fxnet_bundle_value(const fxnet_bundle* bundle, fxnet_kind kind, long row, long col);
void fxnet_bundle_free(fxnet_bundle* bundle);

/* ---- networks ------------------------------------------------------ */

fxnet_status fxnet_bundle_correlation(const fxnet_bundle* bundle, fxnet_kind kind,
                                      fxnet_matrix** out);
fxnet_status fxnet_matrix_distance(const fxnet_matrix* corr, fxnet_matrix** out);
fxnet_status fxnet_matrix_weights(const fxnet_matrix* corr, fxnet_matrix** out);

long fxnet_matrix_size(const fxnet_matrix* matrix);
const char* fxnet_matrix_label(const fxnet_matrix* matrix, long index);
double fxnet_matrix_get(const fxnet_matrix* matrix, long row, long col);
void fxnet_matrix_free(fxnet_matrix* matrix);

fxnet_status fxnet_mst_build(const fxnet_matrix* dist, const fxnet_matrix* weights,
                             fxnet_tree** out);
long fxnet_tree_nodes(const fxnet_tree* tree);
const char* fxnet_tree_node(const fxnet_tree* tree, long index);
long fxnet_tree_edges(const fxnet_tree* tree);
fxnet_status fxnet_tree_edge(const fxnet_tree* tree, long index, const char** node_a,
                             const char** node_b, double* distance, double* weight);
void fxnet_tree_free(fxnet_tree* tree);

/* ---- metrics ------------------------------------------------------- */

fxnet_status fxnet_tree_path_length(const fxnet_tree* tree, fxnet_path_mode mode, double* out);
fxnet_status fxnet_weighted_clustering(const fxnet_matrix* weights, double* out);
fxnet_status fxnet_tree_degree(const fxnet_tree* tree, const char* node, int* out);
/* hub = max-degree node, smallest code on ties; out-params may be NULL */
fxnet_status fxnet_tree_hub(const fxnet_tree* tree, const char** node, int* degree);

/* ---- rolling ------------------------------------------------------- */

/* metrics: comma-separated subset of "L,C" */
fxnet_status fxnet_bundle_rolling(const fxnet_bundle* bundle, fxnet_kind kind, long width,
                                  long step, const char* metrics, fxnet_path_mode mode,
                                  fxnet_series_list** out);
long fxnet_series_list_size(const fxnet_series_list* list);
const fxnet_series* fxnet_series_list_get(const fxnet_series_list* list, long index);
void fxnet_series_list_free(fxnet_series_list* list);

const char* fxnet_series_metric(const fxnet_series* series);
long fxnet_series_size(const fxnet_series* series);
const char* fxnet_series_date(const fxnet_series* series, long index);
double fxnet_series_value(const fxnet_series* series, long index);
/* out-params may be NULL */
fxnet_status fxnet_series_trend(const fxnet_series* series, double* slope, double* intercept,
                                double* residual_se);

/* ---- serialization ------------------------------------------------- */

/* format: "dot" | "graphml" */
fxnet_status fxnet_tree_render(const fxnet_tree* tree, const char* format, char** out_text);
fxnet_status fxnet_series_render(const fxnet_series* series, const char* format, char** out_text);

/* ---- whole-pipeline driver ----------------------------------------- */

fxnet_status fxnet_config_new(fxnet_config** out);
/* scalar keys: input, out, clip_sigma, window, step, path_mode, rolling,
 * missing_mode, max_fill_run, table_l_decimals, table_c_decimals,
 * plus every schema key prefixed "schema.", or schema_file=<path>. */
fxnet_status fxnet_config_set(fxnet_config* config, const char* key, const char* value);
/* list keys: base, kind, format, metric */
fxnet_status fxnet_config_add(fxnet_config* config, const char* key, const char* value);
void fxnet_config_free(fxnet_config* config);

/* Runs the pipeline; *manifest_json receives the manifest regardless of
 * success so callers can inspect partial results. */
fxnet_status fxnet_run(const fxnet_config* config, char** manifest_json);

/* formats: comma separated, e.g. "dot,csv" */
fxnet_status fxnet_export_cache(const char* cache_path, const char* formats,
                                const char* out_dir, char** manifest_json);

#ifdef __cplusplus
}
#endif

#endif /* FXNET_H */

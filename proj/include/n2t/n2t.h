// Copyright 2026 The N2T Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


/* C interface to the narrative-to-trajectory pipeline.
 *
 * All functions returning n2t_status set a thread-local message readable
 * with n2t_last_error() on failure. Strings returned through char** are
 * owned by the caller and released with n2t_string_free(). A pipeline may
 * be shared by several threads for extraction once it is fully loaded.
 */

#ifndef N2T_N2T_H_
#define N2T_N2T_H_

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#if defined(N2T_BUILDING_LIBRARY)
#define N2T_API __declspec(dllexport)
#else
#define N2T_API __declspec(dllimport)
#endif
#else
#define N2T_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum n2t_status {
  N2T_OK = 0,
  N2T_ERR_IO = 1,
  N2T_ERR_PARSE = 2,
  N2T_ERR_EMPTY = 3,
  N2T_ERR_INVALID_ARGUMENT = 4,
  N2T_ERR_NOT_FOUND = 5,
  N2T_ERR_INTERNAL = 6
} n2t_status;

typedef enum n2t_method {
  N2T_METHOD_ST = 0,
  N2T_METHOD_ST_GEO_AUG = 1,
  N2T_METHOD_MWT = 2,
  N2T_METHOD_MWT_GEO_AUG = 3
} n2t_method;

typedef enum n2t_format {
  N2T_FORMAT_JSON = 0,
  N2T_FORMAT_GEOJSON = 1,
  N2T_FORMAT_SVG = 2
} n2t_format;

typedef struct n2t_pipeline n2t_pipeline;
typedef struct n2t_trajectory n2t_trajectory;
typedef struct n2t_report n2t_report;

typedef struct n2t_gazetteer_stats {
  size_t entries;
  size_t index_keys;
  size_t lines_read;
  size_t lines_skipped;
  size_t lexicon_entries;
} n2t_gazetteer_stats;

typedef struct n2t_visit {
  size_t sequence; /* 1-based position in the trajectory */
  size_t temporal_index;
  const char* name; /* valid while the trajectory lives */
  int64_t geoname_id;
  double latitude;
  double longitude;
  size_t span_start;
  size_t span_end;
} n2t_visit;

typedef struct n2t_score {
  size_t true_positives;
  size_t false_positives;
  size_t false_negatives;
  double precision;
  double recall;
  double f1;
  double order_score;
} n2t_score;

N2T_API const char* n2t_version(void);
N2T_API const char* n2t_last_error(void);
N2T_API const char* n2t_status_string(n2t_status status);
N2T_API void n2t_string_free(char* s);

/* "st", "st-geo", "mwt", "mwt-geo" or the upper-case method names. */
N2T_API n2t_status n2t_method_parse(const char* text, n2t_method* out);
N2T_API const char* n2t_method_name(n2t_method method);
N2T_API const char* n2t_method_flag(n2t_method method);

N2T_API n2t_status n2t_pipeline_create(n2t_pipeline** out);
N2T_API void n2t_pipeline_destroy(n2t_pipeline* p);

/* Replaces any loaded gazetteer. Malformed rows are skipped and listed by
 * n2t_pipeline_diagnostic(); zero valid rows yields N2T_ERR_EMPTY. */
N2T_API n2t_status n2t_pipeline_load_gazetteer(n2t_pipeline* p, const char* path);
N2T_API n2t_status n2t_pipeline_load_gazetteer_text(n2t_pipeline* p,
                                                    const char* data, size_t len);
N2T_API n2t_status n2t_pipeline_gazetteer_stats(const n2t_pipeline* p,
                                                n2t_gazetteer_stats* out);
N2T_API size_t n2t_pipeline_diagnostic_count(const n2t_pipeline* p);
N2T_API n2t_status n2t_pipeline_diagnostic(const n2t_pipeline* p, size_t i,
                                           size_t* line, const char** message);

/* Require a loaded gazetteer. */
N2T_API n2t_status n2t_pipeline_load_homonyms(n2t_pipeline* p, const char* path);
N2T_API n2t_status n2t_pipeline_add_homonym(n2t_pipeline* p, int64_t geoname_id,
                                            const char* name);

/* Extra multi-word names, one per line. */
N2T_API n2t_status n2t_pipeline_load_lexicon(n2t_pipeline* p, const char* path);
/* Replace the geo-stoplist, abbreviation list or sentence-initial stoplist. */
N2T_API n2t_status n2t_pipeline_load_stoplist(n2t_pipeline* p, const char* path);
N2T_API n2t_status n2t_pipeline_load_abbreviations(n2t_pipeline* p, const char* path);
N2T_API n2t_status n2t_pipeline_load_initial_stoplist(n2t_pipeline* p,
                                                      const char* path);

/* "population", "feature" or "country:CC[,CC...]". */
N2T_API n2t_status n2t_pipeline_set_policy(n2t_pipeline* p, const char* policy);
/* 0 disables the threshold. */
N2T_API n2t_status n2t_pipeline_set_min_population(n2t_pipeline* p, int64_t min);
N2T_API n2t_status n2t_pipeline_set_collapse_repeats(n2t_pipeline* p, int enabled);

/* `id` may be NULL. */
N2T_API n2t_status n2t_extract_text(const n2t_pipeline* p, const char* id,
                                    const char* text, size_t len,
                                    n2t_method method, n2t_trajectory** out);
/* Reads a narrative file and its optional JSON sidecar. */
N2T_API n2t_status n2t_extract_file(const n2t_pipeline* p, const char* path,
                                    n2t_method method, n2t_trajectory** out);

/* JSON array of [token, tag, geo_flag, longitude, latitude] tuples. */
N2T_API n2t_status n2t_tag_text(const n2t_pipeline* p, const char* text,
                                size_t len, char** out);

N2T_API void n2t_trajectory_destroy(n2t_trajectory* t);
N2T_API const char* n2t_trajectory_id(const n2t_trajectory* t);
N2T_API size_t n2t_trajectory_size(const n2t_trajectory* t);
N2T_API n2t_status n2t_trajectory_visit(const n2t_trajectory* t, size_t i,
                                        n2t_visit* out);
N2T_API n2t_status n2t_trajectory_render(const n2t_trajectory* t,
                                         n2t_format format, char** out);

N2T_API n2t_status n2t_evaluate(const n2t_pipeline* p, const char* corpus_dir,
                                const char* truth_path, n2t_report** out);
N2T_API void n2t_report_destroy(n2t_report* r);
N2T_API n2t_status n2t_report_score(const n2t_report* r, n2t_method method,
                                    n2t_score* out);
N2T_API n2t_status n2t_report_json(const n2t_report* r, char** out);
N2T_API n2t_status n2t_report_table(const n2t_report* r, char** out);
N2T_API size_t n2t_report_skipped_count(const n2t_report* r);
N2T_API const char* n2t_report_skipped_id(const n2t_report* r, size_t i);

#ifdef __cplusplus
}
#endif

#endif /* N2T_N2T_H_ */

/* Copyright 2026 The sbs Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *      http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

/* C interface of the sbs engine. All functions return a status code;
 * sbs_last_error() describes the most recent failure on the calling thread.
 * Handles are opaque and must be released with their _close function.
 */

#ifndef SBS_H_
#define SBS_H_

#include <stddef.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum sbs_status {
  SBS_OK = 0,
  SBS_ERR_IO = 1,         /* unreadable or unwritable paths */
  SBS_ERR_VALIDATION = 2, /* malformed or inconsistent input data */
  SBS_ERR_CONFIG = 3,     /* bad run configuration */
  SBS_ERR_LOOKUP = 4,     /* a requested term is not in the network */
  SBS_ERR_DEGENERATE = 5, /* numerically degenerate result */
  SBS_ERR_ARGUMENT = 6,   /* bad argument to a C API call */
  SBS_ERR_INTERNAL = 7
} sbs_status;

typedef struct sbs_config sbs_config;

/* Library version, e.g. "0.1.0". */
const char* sbs_version(void);

/* Stable name of a status code, e.g. "validation". */
const char* sbs_status_name(sbs_status status);

/* Message of the last failure on this thread; empty string if none. The
 * buffer stays valid until the next sbs_* call on the same thread. */
const char* sbs_last_error(void);

/* Loads and validates a JSON run configuration. On success *out_config owns
 * the handle. */
sbs_status sbs_config_open(const char* path, sbs_config** out_config);

/* Overrides "window", "min_weight" or "top_n". */
sbs_status sbs_config_override_int(sbs_config* config, const char* key,
                                   long long value);

void sbs_config_close(sbs_config* config);

/* Writes stats.json and stats.csv into the configured output directory. */
sbs_status sbs_run_stats(const sbs_config* config);

/* Runs the full pipeline: network, SBS scores, associations, concept
 * distances, embedding and the run manifest. */
sbs_status sbs_run_analyze(const sbs_config* config);

/* Stems one word ("english" or "italian"). Fails with SBS_ERR_ARGUMENT when
 * the buffer is too small. */
sbs_status sbs_stem_word(const char* language, const char* word, char* buffer,
                         size_t buffer_size);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* SBS_H_ */

// Copyright 2026 The Model Hub Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef MODELHUB_H
#define MODELHUB_H

/* C interface to the model hub: pure helpers (ONNX inspection, metrics,
 * splits), local registry administration, the HTTP server and an HTTP client.
 *
 * Conventions:
 *  - Every fallible call returns hub_status; HUB_OK is 0.
 *  - On failure, hub_last_error() and hub_last_error_json() describe the error
 *    for the calling thread until its next failing call.
 *  - Strings returned through char ** are NUL-terminated, heap-allocated and
 *    released with hub_free(). */

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define HUB_API __declspec(dllexport)
#else
#define HUB_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum hub_status {
  HUB_OK = 0,
  HUB_E_VALIDATION = 1,
  HUB_E_MALFORMED_BODY = 2,
  HUB_E_LENGTH_MISMATCH = 3,
  HUB_E_TYPE_MISMATCH = 4,
  HUB_E_UNAUTHORIZED = 5,
  HUB_E_FORBIDDEN = 6,
  HUB_E_NOT_FOUND = 7,
  HUB_E_CONFLICT = 8,
  HUB_E_TRACK_FINALIZED = 9,
  HUB_E_NO_RUNTIME_MODEL = 10,
  HUB_E_PAYLOAD_TOO_LARGE = 11,
  HUB_E_ONNX_PARSE = 12,
  HUB_E_GRAPH_INVALID = 13,
  HUB_E_UNSUPPORTED_OP = 14,
  HUB_E_SHAPE = 15,
  HUB_E_SPEC_INVALID = 16,
  HUB_E_INVALID_METRIC = 17,
  HUB_E_CORRUPTION = 18,
  HUB_E_STORAGE = 19,
  HUB_E_INTERNAL = 20,
  /* Local conditions with no server-side counterpart. */
  HUB_E_NETWORK = 100,
  HUB_E_INVALID_ARGUMENT = 101,
  HUB_E_IO = 102
} hub_status;

/* Stable lower-case name, identical to the "code" field of HTTP error bodies
 * ("validation_error", "not_found", ...; "network_error", "invalid_argument",
 * "io_error" for the local codes). */
HUB_API const char *hub_status_name(hub_status status);
HUB_API const char *hub_last_error(void);
HUB_API const char *hub_last_error_json(void);
HUB_API void hub_free(void *p);
HUB_API const char *hub_version(void);

/* ---- Pure helpers ------------------------------------------------------ */

/* Lower-case hex SHA-256; out must hold 65 bytes. */
HUB_API void hub_sha256_hex(const void *data, size_t size, char out[65]);

/* {"n", "seed", "secret_fraction", "secret_indices"}; same inputs give
 * byte-identical output. */
HUB_API hub_status hub_split(int64_t n, double secret_fraction, uint64_t seed, char **out_json);

/* OnnxModelSummary JSON / the architecture table as text. */
HUB_API hub_status hub_onnx_summary(const void *bytes, size_t size, char **out_json);
HUB_API hub_status hub_onnx_render(const void *bytes, size_t size, char **out_text);

/* ModelDiff JSON, or its text rendering when as_text is nonzero. */
HUB_API hub_status hub_onnx_compare(const void *left, size_t left_size, const void *right, size_t right_size,
                                    int as_text, char **out);

/* task: "classification" | "regression"; y_true/y_pred are JSON arrays. */
HUB_API hub_status hub_metrics(const char *task, const char *y_true_json, const char *y_pred_json, char **out_json);

/* ---- Local registry ---------------------------------------------------- */

typedef struct hub_registry hub_registry;

HUB_API hub_status hub_registry_open(const char *data_dir, hub_registry **out);
HUB_API void hub_registry_close(hub_registry *reg);
/* "hub_<16 hex key id>_<32 hex secret>"; only a salted hash is stored. */
HUB_API hub_status hub_registry_mint_key(hub_registry *reg, const char *user_id, char **out_key);
HUB_API hub_status hub_registry_revoke_key(hub_registry *reg, const char *key_id);
HUB_API hub_status hub_registry_export(hub_registry *reg, char **out_json);
/* {"ok", "tracks", "versions", "blobs", "problems"} */
HUB_API hub_status hub_registry_verify(hub_registry *reg, char **out_json);

/* ---- Server ------------------------------------------------------------ */

typedef struct hub_server hub_server;

typedef struct hub_server_options {
  const char *host;     /* default "127.0.0.1" */
  int port;             /* default 8080; 0 picks a free port */
  const char *data_dir; /* default "hub-data" */
  const char *ui_dir;   /* optional static UI served under /ui/ */
  uint64_t max_model_bytes;
  uint64_t max_predictions_bytes;
  uint64_t max_json_bytes;
  int threads;
} hub_server_options;

HUB_API void hub_server_options_init(hub_server_options *opts);
/* Opens the data directory and reloads active deployments. */
HUB_API hub_status hub_server_create(const hub_server_options *opts, hub_server **out);
HUB_API hub_status hub_server_bind(hub_server *srv, int *out_port);
/* Blocks until hub_server_stop() is called from another thread. */
HUB_API hub_status hub_server_run(hub_server *srv);
HUB_API void hub_server_stop(hub_server *srv);
HUB_API void hub_server_destroy(hub_server *srv);

/* ---- Client ------------------------------------------------------------ */

typedef struct hub_client hub_client;

typedef struct hub_response {
  int status;          /* HTTP status; 0 when no response arrived */
  char *body;          /* NUL-terminated; body_size excludes the NUL */
  size_t body_size;
  char *content_type;
  char *content_hash;  /* X-Content-Hash header, if any */
} hub_response;

typedef struct hub_part {
  const char *name;
  const void *data;
  size_t size;
  const char *filename;
  const char *content_type;
} hub_part;

/* base_url: "http://host:port". api_key may be NULL for anonymous access. */
HUB_API hub_status hub_client_create(const char *base_url, const char *api_key, hub_client **out);
HUB_API void hub_client_destroy(hub_client *client);
HUB_API void hub_client_set_timeout(hub_client *client, int seconds);

/* HUB_OK for 2xx. For 4xx/5xx the response is still filled and the status is
 * the server's error code; HUB_E_NETWORK when the server was unreachable. */
HUB_API hub_status hub_client_request(hub_client *client, const char *method, const char *path,
                                      const char *content_type, const void *body, size_t body_size,
                                      hub_response *out);
HUB_API hub_status hub_client_multipart(hub_client *client, const char *path, const hub_part *parts, size_t n_parts,
                                        hub_response *out);
HUB_API void hub_response_free(hub_response *resp);

#ifdef __cplusplus
}
#endif

#endif /* MODELHUB_H */

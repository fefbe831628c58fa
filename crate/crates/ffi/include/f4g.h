#ifndef F4G_H
#define F4G_H

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

// Which question a certificate answers.
typedef enum F4gQuestion {
  F4G_QUESTION_PLANAR = 0,
  F4G_QUESTION_RP2 = 1,
  F4G_QUESTION_RP2_MULTI = 2,
} F4gQuestion;

// Result of a library call.
typedef enum F4gStatus {
  // The property holds or the pattern was found.
  F4G_STATUS_YES = 0,
  // The property fails or the pattern was not found.
  F4G_STATUS_NO = 1,
  // A required pointer was null.
  F4G_STATUS_NULL_POINTER = 2,
  // Input text was not valid UTF-8.
  F4G_STATUS_INVALID_UTF8 = 3,
  // Input text is not a valid fcd file.
  F4G_STATUS_PARSE_ERROR = 4,
  // Unknown named pattern or otherwise invalid argument.
  F4G_STATUS_INVALID_ARGUMENT = 5,
  // A produced certificate failed validation.
  F4G_STATUS_INVALID_CERTIFICATE = 6,
  // Unexpected internal failure.
  F4G_STATUS_INTERNAL = 7,
} F4gStatus;

// Opaque framed 4-valent graph.
typedef struct F4gGraph F4gGraph;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

// Parses fcd text into a new graph stored in `*out`.
//
// # Safety
// `fcd` must be a nul-terminated string and `out` a valid pointer.
enum F4gStatus f4g_graph_from_fcd(const char *fcd, struct F4gGraph **out);

// Releases a graph. Null is ignored.
//
// # Safety
// `g` must come from `f4g_graph_from_fcd` and not be used afterwards.
void f4g_graph_free(struct F4gGraph *g);

// Number of vertices, or 0 for null.
//
// # Safety
// `g` must be null or a live graph handle.
size_t f4g_graph_vertex_count(const struct F4gGraph *g);

// Number of connected components, free circles included, or 0 for null.
//
// # Safety
// `g` must be null or a live graph handle.
size_t f4g_graph_component_count(const struct F4gGraph *g);

// Answers `question` for `g`. When `certificate` is non-null it receives
// the validated JSON certificate, to be released with `f4g_string_free`.
//
// # Safety
// `g` must be a live graph handle; `certificate` null or a valid pointer.
enum F4gStatus f4g_check(const struct F4gGraph *g, enum F4gQuestion question, char **certificate);

// Whether `g` is planar.
//
// # Safety
// `g` must be a live graph handle.
enum F4gStatus f4g_is_planar(const struct F4gGraph *g);

// Whether `g` is checkerboard embeddable in the projective plane. With
// `multi` set, at most one component may be non-planar.
//
// # Safety
// `g` must be a live graph handle.
enum F4gStatus f4g_rp2_embeddable(const struct F4gGraph *g, bool multi);

// Searches `g` for `pattern` (a name such as `gamma` or `odd_gon(2)`, or fcd
// text) as a minor, or as an s-minor when `s_minor` is set.
//
// # Safety
// `g` must be a live graph handle, `pattern` a nul-terminated string, and
// `certificate` null or a valid pointer.
enum F4gStatus f4g_contains(const struct F4gGraph *g,
                            const char *pattern,
                            bool s_minor,
                            char **certificate);

// Message for the last failed call on this thread, or null. The pointer
// stays valid until the next library call on the same thread.
const char *f4g_last_error(void);

// Releases a string returned by the library. Null is ignored.
//
// # Safety
// `s` must come from this library and not be used afterwards.
void f4g_string_free(char *s);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* F4G_H */

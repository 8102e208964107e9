#ifndef KGRAPH_C_H
#define KGRAPH_C_H

#ifdef __cplusplus
extern "C" {
#endif

#if defined(_WIN32)
#define KG_API __declspec(dllexport)
#else
#define KG_API __attribute__((visibility("default")))
#endif

/* Status codes double as process exit codes of the command-line tool. */
typedef enum kg_status {
  KG_OK = 0,
  KG_VALIDATION_FAILED = 1,
  KG_SYNTAX_ERROR = 2,
  KG_CAP_INSUFFICIENT = 3,
  KG_INVALID_ARGUMENT = 4,
  KG_INTERNAL_ERROR = 5
} kg_status;

typedef struct kg_graph kg_graph;

KG_API const char* kg_version(void);
KG_API const char* kg_status_name(kg_status status);

/* Parses the text format. A graph that parses but fails validation is still
   returned with KG_OK; commands other than "validate" and "emit" then report
   KG_VALIDATION_FAILED. On KG_SYNTAX_ERROR, *diagnostic holds
   "line:column: message". Strings returned through out-parameters are freed
   with kg_string_free. */
KG_API kg_status kg_graph_parse(const char* text, kg_graph** out, char** diagnostic);
KG_API void kg_graph_free(kg_graph* graph);

KG_API unsigned kg_graph_rank(const kg_graph* graph);
KG_API unsigned kg_graph_vertex_count(const kg_graph* graph);
KG_API int kg_graph_is_valid(const kg_graph* graph);

/* Runs one command. options_json is an object with optional keys "cap",
   "format", "vertex", "paths", "sets", "hset", "window", "shift",
   "assume_c", "require_exact" and "minimal"; NULL means {}. On success
   *output holds the rendered result; otherwise *output holds the error
   message. A KG_CAP_INSUFFICIENT result still carries the full output. */
KG_API kg_status kg_run(const kg_graph* graph, const char* command, const char* options_json, char** output);

/* Seeded random valid graph in the text format. Options: "rank" (1 or 2),
   "max_vertices", "max_edges", "seed". */
KG_API kg_status kg_random(const char* options_json, char** output);

KG_API void kg_string_free(char* s);

#ifdef __cplusplus
}
#endif

#endif

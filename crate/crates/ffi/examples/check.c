/* Reads an fcd file and prints planarity and RP2 verdicts with certificates. */
#include <stdio.h>
#include <stdlib.h>
#include "f4g.h"

static char *slurp(const char *path) {
  FILE *f = fopen(path, "rb");
  if (!f) return NULL;
  fseek(f, 0, SEEK_END);
  long n = ftell(f);
  rewind(f);
  char *buf = malloc(n + 1);
  size_t got = fread(buf, 1, n, f);
  buf[got] = '\0';
  fclose(f);
  return buf;
}

int main(int argc, char **argv) {
  if (argc != 2) {
    fprintf(stderr, "usage: %s FILE.fcd\n", argv[0]);
    return 2;
  }
  char *text = slurp(argv[1]);
  if (!text) {
    perror(argv[1]);
    return 2;
  }
  F4gGraph *g = NULL;
  F4gStatus s = f4g_graph_from_fcd(text, &g);
  free(text);
  if (s != F4G_STATUS_YES) {
    fprintf(stderr, "error: %s\n", f4g_last_error());
    return 2;
  }
  char *cert = NULL;
  s = f4g_check(g, F4G_QUESTION_PLANAR, &cert);
  printf("planar: %s\n%s\n", s == F4G_STATUS_YES ? "yes" : "no", cert);
  f4g_string_free(cert);
  s = f4g_check(g, F4G_QUESTION_RP2, &cert);
  printf("rp2: %s\n%s\n", s == F4G_STATUS_YES ? "yes" : "no", cert);
  f4g_string_free(cert);
  f4g_graph_free(g);
  return 0;
}

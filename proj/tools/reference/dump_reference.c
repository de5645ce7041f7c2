/*
 * Dumps known-answer data from the upstream lyra2re-hash-python sources
 * (Lyra2.c, Sponge.c and the sph sha3 cores). Built only by
 * tools/reference/regenerate.sh; never linked into the project.
 *
 *   dump_reference corpus COUNT SEED   per-stage corpus records
 *   dump_reference golden              intermediate values for unit tests
 */
#include <stdint.h>
#include <stdio.h>
#include <stdlib.h>
#include <string.h>

#include "Lyra2.h"
#include "Sponge.h"
#include "sph_blake.h"
#include "sph_bmw.h"
#include "sph_cubehash.h"
#include "sph_keccak.h"
#include "sph_skein.h"

static uint64_t rng_state;

static uint64_t splitmix64(void) {
  uint64_t z = (rng_state += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

static void hex(const void *p, size_t n) {
  const unsigned char *b = p;
  for (size_t i = 0; i < n; i++) printf("%02x", b[i]);
}

static void words(const uint64_t *w, size_t n) {
  for (size_t i = 0; i < n; i++) printf("%s%016llx", i ? " " : "", (unsigned long long)w[i]);
}

static void blake(const void *in, void *out) {
  sph_blake256_context c;
  sph_blake256_init(&c);
  sph_blake256(&c, in, 80);
  sph_blake256_close(&c, out);
}
static void keccak(const void *in, void *out) {
  sph_keccak256_context c;
  sph_keccak256_init(&c);
  sph_keccak256(&c, in, 32);
  sph_keccak256_close(&c, out);
}
static void cube(const void *in, void *out) {
  sph_cubehash256_context c;
  sph_cubehash256_init(&c);
  sph_cubehash256(&c, in, 32);
  sph_cubehash256_close(&c, out);
}
static void skein(const void *in, void *out) {
  sph_skein256_context c;
  sph_skein256_init(&c);
  sph_skein256(&c, in, 32);
  sph_skein256_close(&c, out);
}
static void bmw(const void *in, void *out) {
  sph_bmw256_context c;
  sph_bmw256_init(&c);
  sph_bmw256(&c, in, 32);
  sph_bmw256_close(&c, out);
}

static void corpus(long count, uint64_t seed) {
  rng_state = seed;
  for (long r = 0; r < count; r++) {
    uint64_t hdr[10];
    for (int i = 0; i < 10; i++) hdr[i] = splitmix64();
    uint32_t s[12][8];
    blake(hdr, s[0]);
    keccak(s[0], s[1]);
    cube(s[1], s[2]);
    LYRA2(s[3], 32, s[2], 32, s[2], 32, 1, 4, 4);
    skein(s[3], s[4]);
    cube(s[4], s[5]);
    bmw(s[5], s[6]);
    memcpy(s[7], s[0], 32);
    LYRA2_3(s[8], 32, s[7], 32, s[7], 32, 1, 4, 4);
    cube(s[8], s[9]);
    LYRA2_3(s[10], 32, s[9], 32, s[9], 32, 1, 4, 4);
    bmw(s[10], s[11]);
    /* header, then REV2 stages 0..6, then REV3 stages 0..4 */
    hex(hdr, 80);
    for (int i = 0; i < 12; i++) {
      putchar('\t');
      hex(s[i], 32);
    }
    putchar('\n');
  }
}

/* Straight re-run of LYRA2 / LYRA2_3 at T=1, R=C=4 printing intermediates. */
static void lyra2_trace(const char *tag, const unsigned char pwd[32], int mod) {
  uint64_t M[4][48];
  uint64_t state[16];
  unsigned char buf[128] = {0};
  uint64_t params[6] = {32, 32, 32, 1, 4, 4};
  memcpy(buf, pwd, 32);
  memcpy(buf + 32, pwd, 32);
  memcpy(buf + 64, params, 48);
  buf[112] = 0x80;
  buf[127] ^= 0x01;
  initState(state);
  printf("%s.pad1 ", tag); words((uint64_t *)(buf + 64), 8); putchar('\n');
  absorbBlockBlake2Safe(state, (uint64_t *)buf);
  printf("%s.absorb1 ", tag); words(state, 16); putchar('\n');
  absorbBlockBlake2Safe(state, (uint64_t *)(buf + 64));
  printf("%s.bootstrap ", tag); words(state, 16); putchar('\n');
  reducedSqueezeRow0(state, M[0], 4);
  for (int c = 0; c < 4; c++) { printf("%s.setup0.M0_%d ", tag, c); words(M[0] + 12 * c, 12); putchar('\n'); }
  printf("%s.setup0.state ", tag); words(state, 16); putchar('\n');
  reducedDuplexRow1(state, M[0], M[1], 4);
  reducedDuplexRowSetup(state, M[1], M[0], M[2], 4);
  reducedDuplexRowSetup(state, M[2], M[1], M[3], 4);
  printf("%s.setup.state ", tag); words(state, 16); putchar('\n');
  for (int r = 0; r < 4; r++)
    for (int c = 0; c < 4; c++) { printf("%s.setup.M%d_%d ", tag, r, c); words(M[r] + 12 * c, 12); putchar('\n'); }
  uint64_t index = 0, rowa = 0, prev = 3;
  for (uint64_t row = 0; row < 4; row++) {
    if (mod) {
      index = state[index % 16];
      rowa = state[index % 16] % 4;
      printf("%s.wander%llu instance=%llu row1=%llu\n", tag, (unsigned long long)row,
             (unsigned long long)(index % 16), (unsigned long long)rowa);
    } else {
      rowa = state[0] % 4;
      printf("%s.wander%llu row1=%llu\n", tag, (unsigned long long)row, (unsigned long long)rowa);
    }
    reducedDuplexRow(state, M[prev], M[rowa], M[row], 4);
    prev = row;
  }
  printf("%s.wander.state ", tag); words(state, 16); putchar('\n');
  for (int r = 0; r < 4; r++)
    for (int c = 0; c < 4; c++) { printf("%s.wander.M%d_%d ", tag, r, c); words(M[r] + 12 * c, 12); putchar('\n'); }
  absorbBlock(state, M[rowa]);
  printf("%s.wrapup.state ", tag); words(state, 16); putchar('\n');
  unsigned char k[32];
  squeeze(state, k, 32);
  printf("%s.K ", tag); hex(k, 32); putchar('\n');
  unsigned char ref[32];
  if (mod) LYRA2_3(ref, 32, pwd, 32, pwd, 32, 1, 4, 4);
  else LYRA2(ref, 32, pwd, 32, pwd, 32, 1, 4, 4);
  printf("%s.K_ref ", tag); hex(ref, 32); putchar('\n');
}

static void golden(void) {
  uint64_t v[16];
  memset(v, 0, sizeof v);
  v[0] = 1;
  G(0, 0, v[0], v[1], v[2], v[3]);
  printf("g.1000 "); words(v, 4); putchar('\n');
  v[0] = 0x0123456789abcdefULL; v[1] = 0xfedcba9876543210ULL; v[2] = 0x0f1e2d3c4b5a6978ULL; v[3] = 0x8877665544332211ULL;
  G(0, 0, v[0], v[1], v[2], v[3]);
  printf("g.mixed "); words(v, 4); putchar('\n');
  initState(v);
  ROUND_LYRA(0);
  printf("round.init "); words(v, 16); putchar('\n');

  unsigned char zero[80] = {0}, out[32];
  blake(zero, out); printf("blake.zero80 "); hex(out, 32); putchar('\n');
  keccak(zero, out); printf("keccak.zero32 "); hex(out, 32); putchar('\n');
  cube(zero, out); printf("cubehash.zero32 "); hex(out, 32); putchar('\n');
  skein(zero, out); printf("skein.zero32 "); hex(out, 32); putchar('\n');
  bmw(zero, out); printf("bmw.zero32 "); hex(out, 32); putchar('\n');
  LYRA2(out, 32, zero, 32, zero, 32, 1, 4, 4); printf("lyra2.zero32 "); hex(out, 32); putchar('\n');
  LYRA2_3(out, 32, zero, 32, zero, 32, 1, 4, 4); printf("lyra2mod.zero32 "); hex(out, 32); putchar('\n');
  char rev2[32], rev3[32];
  lyra2re2_hash((const char *)zero, rev2); printf("chain.rev2.zero80 "); hex(rev2, 32); putchar('\n');
  lyra2re3_hash((const char *)zero, rev3); printf("chain.rev3.zero80 "); hex(rev3, 32); putchar('\n');

  lyra2_trace("rev2.zero", zero, 0);
  lyra2_trace("mod.zero", zero, 1);
  unsigned char pwd[32];
  for (int i = 0; i < 32; i++) pwd[i] = (unsigned char)(i * 7 + 3);
  lyra2_trace("rev2.seq", pwd, 0);
  lyra2_trace("mod.seq", pwd, 1);
}

int main(int argc, char **argv) {
  if (argc >= 2 && strcmp(argv[1], "golden") == 0) {
    golden();
    return 0;
  }
  if (argc == 4 && strcmp(argv[1], "corpus") == 0) {
    corpus(atol(argv[2]), strtoull(argv[3], NULL, 0));
    return 0;
  }
  fprintf(stderr, "usage: %s golden | corpus COUNT SEED\n", argv[0]);
  return 1;
}

#include <benchmark/benchmark.h>

// The packaged benchmark_main archive is built with a different LTO version,
// so the entry point is compiled here.
BENCHMARK_MAIN();

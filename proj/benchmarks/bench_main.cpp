#include <benchmark/benchmark.h>

// The packaged benchmark_main archive carries LTO bytecode that does not
// link with every compiler release, so the entry point lives here.
BENCHMARK_MAIN();

#pragma once

#include "hdense/hypergraph.hpp"

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace hdense::cli {

struct BenchConfig {
    std::vector<std::string> algos;  // miners (path, flow, flow+, all) or drivers (dsd, dsd+)
    int k = 5;
    int delta = 1;
    int repeat = 3;
    double timeout_seconds = 60.0;
    std::size_t mem_limit_mb = 0;  // 0: no limit
    bool deterministic = false;    // zero out timings and memory
    std::string label;             // input name printed in every row
};

struct BenchRow {
    std::string algo;
    int run = 0;
    std::string status;  // ok, UNM (timeout), OOM, ERR
    double millis = 0.0;
    long peak_rss_kb = 0;
    std::uint64_t size = 0;  // |D|, or k_max for drivers
    std::uint64_t hash = 0;  // FNV-1a over the result
};

/// Every run happens in a forked child, so a timeout or an allocation
/// failure costs one row, not the harness. One warmup run per algorithm is
/// made first and not reported.
std::vector<BenchRow> run_bench(const Hypergraph& h, const BenchConfig& config);

void write_bench_tsv(const std::vector<BenchRow>& rows, const BenchConfig& config, std::ostream& out);

/// FNV-1a, 64 bit, over the little-endian bytes of each value.
std::uint64_t fnv1a(const std::vector<std::uint32_t>& values);

}  // namespace hdense::cli

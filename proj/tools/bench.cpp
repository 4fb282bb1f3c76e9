#include "bench.hpp"

#include "hdense/decomp.hpp"
#include "hdense/dsm.hpp"

#include <sys/resource.h>
#include <sys/wait.h>
#include <unistd.h>

#include <cerrno>
#include <chrono>
#include <csignal>
#include <cstdio>
#include <new>
#include <ostream>
#include <thread>

namespace hdense::cli {

namespace {

struct ChildResult {
    double millis;
    std::uint64_t size;
    std::uint64_t hash;
};

constexpr int kChildOom = 4;
constexpr int kChildError = 5;

ChildResult measure(const Hypergraph& h, const std::string& algo, const BenchConfig& c) {
    const auto start = std::chrono::steady_clock::now();
    ChildResult r{};
    if (algo == "dsd" || algo == "dsd+") {
        auto d = algo == "dsd" ? dsd(h, c.delta) : dsd_plus(h, c.delta);
        r.size = static_cast<std::uint64_t>(d.k_max);
        std::vector<std::uint32_t> idn(d.idn.begin(), d.idn.end());
        r.hash = fnv1a(idn);
    } else {
        auto d = mine(h, c.k, c.delta, parse_miner(algo));
        r.size = d.vertices.size();
        r.hash = fnv1a(d.vertices);
    }
    r.millis = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    return r;
}

[[noreturn]] void child_main(const Hypergraph& h, const std::string& algo, const BenchConfig& c, int fd) {
    if (c.mem_limit_mb > 0) {
        rlimit lim{};
        lim.rlim_cur = lim.rlim_max = static_cast<rlim_t>(c.mem_limit_mb) << 20;
        setrlimit(RLIMIT_AS, &lim);
    }
    int code = 0;
    try {
        auto r = measure(h, algo, c);
        if (write(fd, &r, sizeof r) != static_cast<ssize_t>(sizeof r)) {
            code = kChildError;
        }
    } catch (const std::bad_alloc&) {
        code = kChildOom;
    } catch (...) {
        code = kChildError;
    }
    close(fd);
    _exit(code);
}

BenchRow run_once(const Hypergraph& h, const std::string& algo, const BenchConfig& c) {
    BenchRow row;
    row.algo = algo;
    int fds[2];
    if (pipe(fds) != 0) {
        row.status = "ERR";
        return row;
    }
    std::fflush(nullptr);
    const pid_t pid = fork();
    if (pid < 0) {
        close(fds[0]);
        close(fds[1]);
        row.status = "ERR";
        return row;
    }
    if (pid == 0) {
        close(fds[0]);
        child_main(h, algo, c, fds[1]);
    }
    close(fds[1]);

    const auto deadline = std::chrono::steady_clock::now() + std::chrono::duration<double>(c.timeout_seconds);
    int status = 0;
    rusage usage{};
    bool timed_out = false;
    auto nap = std::chrono::microseconds(100);
    while (true) {
        const pid_t got = wait4(pid, &status, WNOHANG, &usage);
        if (got == pid) {
            break;
        }
        if (got < 0 && errno != EINTR) {
            break;
        }
        if (std::chrono::steady_clock::now() >= deadline) {
            kill(pid, SIGKILL);
            wait4(pid, &status, 0, &usage);
            timed_out = true;
            break;
        }
        std::this_thread::sleep_for(nap);
        nap = std::min(nap * 2, std::chrono::microseconds(20000));
    }
    row.peak_rss_kb = usage.ru_maxrss;

    ChildResult r{};
    const bool have = !timed_out && read(fds[0], &r, sizeof r) == static_cast<ssize_t>(sizeof r);
    close(fds[0]);
    if (timed_out) {
        row.status = "UNM";
    } else if (have && WIFEXITED(status) && WEXITSTATUS(status) == 0) {
        row.status = "ok";
        row.millis = r.millis;
        row.size = r.size;
        row.hash = r.hash;
    } else if (WIFEXITED(status) && WEXITSTATUS(status) == kChildOom) {
        row.status = "OOM";
    } else if (WIFSIGNALED(status) && c.mem_limit_mb > 0) {
        // allocation failures under RLIMIT_AS can also surface as a crash
        row.status = "OOM";
    } else {
        row.status = "ERR";
    }
    if (c.deterministic) {
        row.millis = 0.0;
        row.peak_rss_kb = 0;
    }
    return row;
}

}  // namespace

std::uint64_t fnv1a(const std::vector<std::uint32_t>& values) {
    std::uint64_t h = 14695981039346656037ull;
    for (std::uint32_t v : values) {
        for (int i = 0; i < 4; ++i) {
            h ^= (v >> (8 * i)) & 0xffu;
            h *= 1099511628211ull;
        }
    }
    return h;
}

std::vector<BenchRow> run_bench(const Hypergraph& h, const BenchConfig& config) {
    std::vector<BenchRow> rows;
    for (const auto& algo : config.algos) {
        auto warm = run_once(h, algo, config);
        for (int run = 1; run <= config.repeat; ++run) {
            // a warmup that already failed would only fail again, slower
            auto row = warm.status == "ok" ? run_once(h, algo, config) : warm;
            row.run = run;
            rows.push_back(row);
        }
    }
    return rows;
}

void write_bench_tsv(const std::vector<BenchRow>& rows, const BenchConfig& config, std::ostream& out) {
    out << "schema\tinput\talgo\tk\tdelta\trun\tstatus\tmillis\tpeak_rss_kb\tsize\thash\n";
    char hash[17];
    char millis[32];
    for (const auto& r : rows) {
        std::snprintf(hash, sizeof hash, "%016llx", static_cast<unsigned long long>(r.hash));
        std::snprintf(millis, sizeof millis, "%.3f", r.millis);
        const bool driver = r.algo == "dsd" || r.algo == "dsd+";
        out << 1 << '\t' << config.label << '\t' << r.algo << '\t';
        if (driver) {
            out << '-';
        } else {
            out << config.k;
        }
        out << '\t' << config.delta << '\t' << r.run << '\t' << r.status << '\t' << millis << '\t'
            << r.peak_rss_kb << '\t' << r.size << '\t' << (r.status == "ok" ? hash : "-") << '\n';
    }
}

}  // namespace hdense::cli

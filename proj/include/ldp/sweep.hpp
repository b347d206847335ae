#pragma once

#include "ldp/compactify.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace ldp {

struct SweepOptions {
    std::int64_t max_d = 5;
    std::int64_t max_n = 6;
    std::int64_t max_c = 4;
    std::size_t samples = 100;
    std::uint64_t seed = 1;
    /// D_4 .. D_{max_dk} in the RDP suites.
    int max_dk = 12;
    /// Run suites with std::async.
    bool parallel = true;
};

/// Every cyclic model (d, n, m, c, a) in the ranges with n >= 1, the simple
/// roots 1..d, and every a that passes the conditions. Ordered by
/// (d, n, m, c, a).
struct CyclicSample {
    std::int64_t d, n, m, c, a;
};
std::vector<CyclicSample> cyclic_sweep(std::int64_t max_d, std::int64_t max_n, std::int64_t max_c);

struct SuiteResult {
    std::string name;
    std::size_t cases = 0;
    std::size_t failures = 0;
    /// The first few failing cases.
    std::vector<std::string> examples;
    double seconds = 0;

    bool passed() const { return failures == 0; }
};

struct SweepResult {
    std::vector<SuiteResult> suites;
    bool passed() const;
};

/// Suites: weights, conditions, adjunction, rdp-table, topology, jacobian,
/// birational, hj.
SweepResult run_sweep(const SweepOptions& options);

} // namespace ldp

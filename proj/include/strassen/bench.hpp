#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "strassen/dense.hpp"

namespace strassen {

/// Timing and accuracy comparison of the recursive and naive double paths
/// on the same random inputs (entries uniform in [-1, 1]).
struct BenchReport {
    std::size_t n = 0;
    std::size_t cutoff = 0;
    std::vector<double> recursive_seconds;  // one sample per rep
    std::vector<double> naive_seconds;
    double median_recursive = 0.0;
    double median_naive = 0.0;
    /// max over entries of |recursive - naive| / max(1, |naive|); the
    /// denominator floor keeps near-zero reference entries from dominating.
    double max_rel_error = 0.0;
    bool coeffs_exact = true;  // whether the scheme's coefficients converted to double exactly

    /// CSV rows: path,n,cutoff,median_seconds,max_rel_error
    std::string csv() const;
};

BenchReport bench(const BilinearAlgorithm& alg, std::size_t n, std::size_t cutoff, int reps,
                  std::uint64_t seed = 0xB45E);

}  // namespace strassen

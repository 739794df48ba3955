#include "strassen/bench.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <random>

namespace strassen {

namespace {

double median(std::vector<double> xs) {
    std::sort(xs.begin(), xs.end());
    std::size_t h = xs.size() / 2;
    return xs.size() % 2 ? xs[h] : (xs[h - 1] + xs[h]) / 2.0;
}

DenseMatrix<double> random_matrix(std::size_t n, std::mt19937_64& rng) {
    DenseMatrix<double> m(n, 0.0);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            m.at(i, j) = 2.0 * (static_cast<double>(rng()) / static_cast<double>(UINT64_MAX)) - 1.0;
    return m;
}

std::string format_double(double x) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.9g", x);
    return buf;
}

}  // namespace

std::string BenchReport::csv() const {
    std::string out = "path,n,cutoff,median_seconds,max_rel_error\n";
    out += "recursive," + std::to_string(n) + "," + std::to_string(cutoff) + "," +
           format_double(median_recursive) + "," + format_double(max_rel_error) + "\n";
    out += "naive," + std::to_string(n) + "," + std::to_string(cutoff) + "," +
           format_double(median_naive) + ",0\n";
    return out;
}

BenchReport bench(const BilinearAlgorithm& alg, std::size_t n, std::size_t cutoff, int reps,
                  std::uint64_t seed) {
    if (reps < 1) throw std::invalid_argument("reps must be >= 1");
    using clock = std::chrono::steady_clock;

    BenchReport report;
    report.n = n;
    report.cutoff = cutoff;
    report.coeffs_exact = algorithm_as_doubles(alg).exact;

    std::mt19937_64 rng(seed);
    DenseMatrix<double> a = random_matrix(n, rng);
    DenseMatrix<double> b = random_matrix(n, rng);

    DenseMatrix<double> recursive_result(n, 0.0);
    DenseMatrix<double> naive_result(n, 0.0);

    for (int r = 0; r < reps; ++r) {
        auto t0 = clock::now();
        recursive_result = multiply_recursive(alg, a, b, cutoff).first;
        auto t1 = clock::now();
        report.recursive_seconds.push_back(std::chrono::duration<double>(t1 - t0).count());

        auto t2 = clock::now();
        naive_result = multiply_naive(a, b);
        auto t3 = clock::now();
        report.naive_seconds.push_back(std::chrono::duration<double>(t3 - t2).count());
    }

    report.median_recursive = median(report.recursive_seconds);
    report.median_naive = median(report.naive_seconds);

    double worst = 0.0;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            double ref = naive_result.at(i, j);
            double err = std::abs(recursive_result.at(i, j) - ref) / std::max(1.0, std::abs(ref));
            worst = std::max(worst, err);
        }
    report.max_rel_error = worst;
    return report;
}

}  // namespace strassen

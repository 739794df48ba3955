#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "strassen/bilinear.hpp"
#include "strassen/errors.hpp"

namespace strassen {

/// Exact operation counts, additive across subcalls. Subtractions count as
/// additions; scalar_multiplications includes the base-block products that
/// base_multiplications tracks separately.
struct OpCounter {
    std::uint64_t base_multiplications = 0;  // multiplication events inside base-case blocks
    std::uint64_t scalar_multiplications = 0;
    std::uint64_t scalar_additions = 0;

    OpCounter& operator+=(const OpCounter& o) {
        base_multiplications += o.base_multiplications;
        scalar_multiplications += o.scalar_multiplications;
        scalar_additions += o.scalar_additions;
        return *this;
    }
    bool operator==(const OpCounter& o) const {
        return base_multiplications == o.base_multiplications &&
               scalar_multiplications == o.scalar_multiplications &&
               scalar_additions == o.scalar_additions;
    }
};

/// Row-major n x n matrix with exact (Scalar) or double entries.
template <class T>
class DenseMatrix {
public:
    DenseMatrix(std::size_t n, const T& fill) : n_(n), e_(n * n, fill) {
        if (n == 0) throw DimensionMismatch("matrix dimension must be >= 1");
    }

    std::size_t n() const { return n_; }
    T& at(std::size_t i, std::size_t j) { return e_[i * n_ + j]; }
    const T& at(std::size_t i, std::size_t j) const { return e_[i * n_ + j]; }

    bool operator==(const DenseMatrix& o) const { return n_ == o.n_ && e_ == o.e_; }
    bool operator!=(const DenseMatrix& o) const { return !(*this == o); }

private:
    std::size_t n_;
    std::vector<T> e_;
};

namespace engine_detail {

enum class CoeffKind { zero, one, minus_one, general };

inline CoeffKind classify(const Scalar& s) {
    if (s.is_zero()) return CoeffKind::zero;
    if (s.is_one()) return CoeffKind::one;
    if ((-s).is_one()) return CoeffKind::minus_one;
    return CoeffKind::general;
}

inline CoeffKind classify(double d) {
    if (d == 0.0) return CoeffKind::zero;
    if (d == 1.0) return CoeffKind::one;
    if (d == -1.0) return CoeffKind::minus_one;
    return CoeffKind::general;
}

inline Scalar zero_like(const Scalar& s) { return Scalar::zero(s.field()); }
inline double zero_like(double) { return 0.0; }

/// Block coefficients of one term: x[2i+j] scales input block a_ij, y[2i+j]
/// scales b_ij, z[2i+j] is the term's weight in output block c_ij.
template <class T>
struct TermCoeffs {
    std::array<T, 4> x, y, z;
};

template <class T>
DenseMatrix<T> naive_counted(const DenseMatrix<T>& a, const DenseMatrix<T>& b, const T& zero,
                             OpCounter& ops) {
    const std::size_t n = a.n();
    DenseMatrix<T> c(n, zero);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            T acc = a.at(i, 0) * b.at(0, j);
            for (std::size_t k = 1; k < n; ++k) acc = acc + a.at(i, k) * b.at(k, j);
            c.at(i, j) = std::move(acc);
        }
    ops.base_multiplications += static_cast<std::uint64_t>(n) * n * n;
    ops.scalar_multiplications += static_cast<std::uint64_t>(n) * n * n;
    ops.scalar_additions += static_cast<std::uint64_t>(n) * n * (n - 1);
    return c;
}

template <class T>
void add_in_place(DenseMatrix<T>& dst, const DenseMatrix<T>& src, bool subtract, OpCounter& ops) {
    const std::size_t n = dst.n();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            dst.at(i, j) = subtract ? dst.at(i, j) - src.at(i, j) : dst.at(i, j) + src.at(i, j);
    ops.scalar_additions += static_cast<std::uint64_t>(n) * n;
}

template <class T>
void mul_add_in_place(DenseMatrix<T>& dst, const DenseMatrix<T>& src, const T& coeff, OpCounter& ops) {
    const std::size_t n = dst.n();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) dst.at(i, j) = dst.at(i, j) + coeff * src.at(i, j);
    ops.scalar_multiplications += static_cast<std::uint64_t>(n) * n;
    ops.scalar_additions += static_cast<std::uint64_t>(n) * n;
}

template <class T>
DenseMatrix<T> scaled_copy(const DenseMatrix<T>& src, const T& coeff, OpCounter& ops) {
    const std::size_t n = src.n();
    DenseMatrix<T> dst = src;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) dst.at(i, j) = coeff * src.at(i, j);
    ops.scalar_multiplications += static_cast<std::uint64_t>(n) * n;
    return dst;
}

/// Accumulates coeff * src into an optional block under the fixed cost rule:
/// the leading summand is a copy (coefficient one) or a scaled copy, later
/// summands add, subtract, or multiply-add.
template <class T>
void accumulate(std::optional<DenseMatrix<T>>& acc, const DenseMatrix<T>& src, const T& coeff,
                OpCounter& ops) {
    CoeffKind kind = classify(coeff);
    if (kind == CoeffKind::zero) return;
    if (!acc.has_value()) {
        acc = kind == CoeffKind::one ? src : scaled_copy(src, coeff, ops);
        return;
    }
    if (kind == CoeffKind::general)
        mul_add_in_place(*acc, src, coeff, ops);
    else
        add_in_place(*acc, src, kind == CoeffKind::minus_one, ops);
}

template <class T>
DenseMatrix<T> quadrant(const DenseMatrix<T>& a, int qi, int qj, const T& zero) {
    const std::size_t h = a.n() / 2;
    DenseMatrix<T> q(h, zero);
    for (std::size_t i = 0; i < h; ++i)
        for (std::size_t j = 0; j < h; ++j) q.at(i, j) = a.at(qi * h + i, qj * h + j);
    return q;
}

/// Strassen-style recursion: split while the block size exceeds the cutoff,
/// multiply naively below it. The seven products are combined in term order,
/// so the result is identical whether or not subproducts run concurrently.
template <class T>
DenseMatrix<T> recurse(const std::vector<TermCoeffs<T>>& terms, const DenseMatrix<T>& a,
                       const DenseMatrix<T>& b, std::size_t cutoff, const T& zero, OpCounter& ops) {
    const std::size_t m = a.n();
    if (m <= cutoff || m == 1) return naive_counted(a, b, zero, ops);

    const std::size_t h = m / 2;
    std::array<DenseMatrix<T>, 4> qa = {quadrant(a, 0, 0, zero), quadrant(a, 0, 1, zero),
                                        quadrant(a, 1, 0, zero), quadrant(a, 1, 1, zero)};
    std::array<DenseMatrix<T>, 4> qb = {quadrant(b, 0, 0, zero), quadrant(b, 0, 1, zero),
                                        quadrant(b, 1, 0, zero), quadrant(b, 1, 1, zero)};

    std::array<std::optional<DenseMatrix<T>>, 4> qc;
    for (const auto& t : terms) {
        std::optional<DenseMatrix<T>> s, u;
        for (int q = 0; q < 4; ++q) accumulate(s, qa[q], t.x[q], ops);
        for (int q = 0; q < 4; ++q) accumulate(u, qb[q], t.y[q], ops);
        if (!s.has_value()) s = DenseMatrix<T>(h, zero);
        if (!u.has_value()) u = DenseMatrix<T>(h, zero);
        DenseMatrix<T> product = recurse(terms, *s, *u, cutoff, zero, ops);
        for (int q = 0; q < 4; ++q) accumulate(qc[q], product, t.z[q], ops);
    }

    DenseMatrix<T> c(m, zero);
    for (int qi = 0; qi < 2; ++qi)
        for (int qj = 0; qj < 2; ++qj) {
            const auto& block = qc[2 * qi + qj];
            if (!block.has_value()) continue;  // stays zero
            for (std::size_t i = 0; i < h; ++i)
                for (std::size_t j = 0; j < h; ++j) c.at(qi * h + i, qj * h + j) = block->at(i, j);
        }
    return c;
}

inline std::size_t next_pow2(std::size_t n) {
    std::size_t m = 1;
    while (m < n) m *= 2;
    return m;
}

template <class T>
DenseMatrix<T> zero_pad(const DenseMatrix<T>& a, std::size_t m, const T& zero) {
    DenseMatrix<T> p(m, zero);
    for (std::size_t i = 0; i < a.n(); ++i)
        for (std::size_t j = 0; j < a.n(); ++j) p.at(i, j) = a.at(i, j);
    return p;
}

template <class T>
DenseMatrix<T> crop(const DenseMatrix<T>& a, std::size_t n, const T& zero) {
    DenseMatrix<T> c(n, zero);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) c.at(i, j) = a.at(i, j);
    return c;
}

template <class T>
std::pair<DenseMatrix<T>, OpCounter> run_recursive(const std::vector<TermCoeffs<T>>& terms,
                                                   const DenseMatrix<T>& a, const DenseMatrix<T>& b,
                                                   std::size_t cutoff, const T& zero) {
    if (cutoff < 1) throw std::invalid_argument("cutoff must be >= 1");
    if (a.n() != b.n())
        throw DimensionMismatch("left matrix is " + std::to_string(a.n()) + "x" + std::to_string(a.n()) +
                                ", right is " + std::to_string(b.n()) + "x" + std::to_string(b.n()));
    OpCounter ops;
    const std::size_t n = a.n();
    if (n <= cutoff || n == 1) return {naive_counted(a, b, zero, ops), ops};

    const std::size_t m = next_pow2(n);
    if (m == n) return {recurse(terms, a, b, cutoff, zero, ops), ops};
    DenseMatrix<T> pa = zero_pad(a, m, zero), pb = zero_pad(b, m, zero);
    DenseMatrix<T> pc = recurse(terms, pa, pb, cutoff, zero, ops);
    return {crop(pc, n, zero), ops};
}

}  // namespace engine_detail

/// Textbook triple loop; the oracle every other path is compared against.
template <class T>
DenseMatrix<T> multiply_naive(const DenseMatrix<T>& a, const DenseMatrix<T>& b,
                              OpCounter* counter = nullptr) {
    if (a.n() != b.n())
        throw DimensionMismatch("left matrix is " + std::to_string(a.n()) + "x" + std::to_string(a.n()) +
                                ", right is " + std::to_string(b.n()) + "x" + std::to_string(b.n()));
    OpCounter local;
    auto c = engine_detail::naive_counted(a, b, engine_detail::zero_like(a.at(0, 0)), local);
    if (counter) *counter += local;
    return c;
}

/// Block coefficients of the exact scheme, plus whether the double
/// conversion was exact (always true for integer-matrix schemes).
struct DoubleCoeffs {
    std::vector<engine_detail::TermCoeffs<double>> terms;
    bool exact = true;
};

DoubleCoeffs algorithm_as_doubles(const BilinearAlgorithm& alg);

/// Applies a verified scheme recursively, zero-padding to the next power of
/// two. Exact path: equals multiply_naive bit for bit. Throws
/// UnverifiedAlgorithm when the scheme fails its 16-pair verification.
std::pair<DenseMatrix<Scalar>, OpCounter> multiply_recursive(const BilinearAlgorithm& alg,
                                                             const DenseMatrix<Scalar>& a,
                                                             const DenseMatrix<Scalar>& b,
                                                             std::size_t cutoff);

/// Double-precision path for benchmarking; requires a rational-field scheme.
std::pair<DenseMatrix<double>, OpCounter> multiply_recursive(const BilinearAlgorithm& alg,
                                                             const DenseMatrix<double>& a,
                                                             const DenseMatrix<double>& b,
                                                             std::size_t cutoff);

/// Per-split-level combination work in units of (block size)^2, derived from
/// the scheme's coefficients under the same cost rule the engine applies.
struct LevelCosts {
    std::uint64_t mults = 0;
    std::uint64_t adds = 0;
};
LevelCosts combination_costs(const BilinearAlgorithm& alg);

/// Exact model for n = 2^depth at cutoff 1: base_multiplications = 7^depth,
/// additions follow the linear recurrence with the scheme's level costs.
/// Instrumented runs must match this count for count.
OpCounter predict_counts(const BilinearAlgorithm& alg, int depth);

}  // namespace strassen

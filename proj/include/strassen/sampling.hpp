#pragma once

#include <cstdint>
#include <random>

#include "strassen/generator.hpp"

namespace strassen {

/// Deterministic source for randomized checks. A fixed seed reproduces the
/// exact same value stream on every platform (mt19937_64 is pinned by the
/// standard; no distribution objects are used).
class RandomSource {
public:
    explicit RandomSource(std::uint64_t seed) : rng_(seed) {}

    std::uint64_t next() { return rng_(); }

    /// Uniform-ish integer in [lo, hi]; bias is irrelevant for test data.
    std::int64_t int_in(std::int64_t lo, std::int64_t hi) {
        return lo + static_cast<std::int64_t>(next() % static_cast<std::uint64_t>(hi - lo + 1));
    }

private:
    std::mt19937_64 rng_;
};

/// Rational with numerator in [-num_range, num_range] and denominator in
/// [1, den_range]; for prime fields, a uniform residue.
Scalar random_scalar(RandomSource& rs, const FieldDesc& field, std::int64_t num_range = 9,
                     std::int64_t den_range = 1);

Scalar random_nonzero_scalar(RandomSource& rs, const FieldDesc& field, std::int64_t num_range = 9,
                             std::int64_t den_range = 1);

Vec2 random_vec2(RandomSource& rs, const FieldDesc& field, std::int64_t range = 3);
Vec2 random_nonzero_vec2(RandomSource& rs, const FieldDesc& field, std::int64_t range = 3);
CoVec2 random_covec2(RandomSource& rs, const FieldDesc& field, std::int64_t range = 3);
Mat2 random_mat2(RandomSource& rs, const FieldDesc& field, std::int64_t num_range = 9,
                 std::int64_t den_range = 1);

/// The kernel form (-v[1], v[0]) of a nonzero vector, so l(v) = 0.
CoVec2 kernel_form(const Vec2& v);

/// Sextuple satisfying the hypothesis (nonzero entries, l_i(v_i) = 0, with
/// l_i a random nonzero multiple of the kernel form); validity not implied.
Params random_hypothesis_params(RandomSource& rs, const FieldDesc& field);

/// Rejection-samples hypothesis sextuples until validation passes.
Params random_valid_params(RandomSource& rs, const FieldDesc& field);

/// Hypothesis sextuple whose noncolinearity and independence conditions
/// all fail (two proportional vector/form pairs).
Params degenerate_params(RandomSource& rs, const FieldDesc& field);

}  // namespace strassen

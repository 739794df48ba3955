#pragma once

#include <array>
#include <cstddef>
#include <string>
#include <vector>

#include "strassen/bilinear.hpp"

namespace strassen {

/// One basis-pair mismatch: the scheme's output for (e_ij, e_kl) differed
/// from the true product.
struct BasisPairFailure {
    std::size_t i, j, k, l;  // 0-based basis indices
    Mat2 expected;
    Mat2 got;

    std::string str() const;
};

struct VerificationReport {
    bool passed = false;
    std::vector<BasisPairFailure> failures;
    std::size_t checked_count = 0;
};

/// Exact extensional check on all 16 elementary-matrix pairs. By
/// bilinearity, passing proves the scheme correct for every input over
/// its field.
VerificationReport verify_bilinear(const BilinearAlgorithm& alg);

/// Evaluates the scheme on concrete matrices: sum_r tr(x_r a) tr(y_r b) z_r.
Mat2 apply_algorithm(const BilinearAlgorithm& alg, const Mat2& a, const Mat2& b);

/// Same, also reporting the number of scalar multiplication events
/// tr(x a) * tr(y b), which equals the scheme's rank.
struct ApplyResult {
    Mat2 product;
    std::size_t multiplication_events;
};
ApplyResult apply_algorithm_counted(const BilinearAlgorithm& alg, const Mat2& a, const Mat2& b);

/// Coefficient-level check of the factor-matrix form: for all index pairs,
/// sum_r u_r[2i+j] v_r[2k+l] w_r[2m+n] = [j==k][i==m][l==n].
/// Cross-check path for exported matrices; equivalent to verify_bilinear.
bool brent_check(const std::vector<std::array<Scalar, 4>>& u,
                 const std::vector<std::array<Scalar, 4>>& v,
                 const std::vector<std::array<Scalar, 4>>& w);

}  // namespace strassen

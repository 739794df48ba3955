#include "strassen/verify.hpp"

#include "strassen/forms.hpp"

namespace strassen {

std::string BasisPairFailure::str() const {
    return "pair (e" + std::to_string(i + 1) + std::to_string(j + 1) + ", e" + std::to_string(k + 1) +
           std::to_string(l + 1) + "): expected " + expected.str() + ", got " + got.str();
}

VerificationReport verify_bilinear(const BilinearAlgorithm& alg) {
    const FieldDesc field = alg.field();
    VerificationReport report;

    for (std::size_t i = 0; i < 2; ++i)
        for (std::size_t j = 0; j < 2; ++j)
            for (std::size_t k = 0; k < 2; ++k)
                for (std::size_t l = 0; l < 2; ++l) {
                    Mat2 a = Mat2::elementary(i, j, field);
                    Mat2 b = Mat2::elementary(k, l, field);
                    Mat2 expected = j == k ? Mat2::elementary(i, l, field) : Mat2::zero(field);
                    Mat2 got = apply_algorithm(alg, a, b);
                    ++report.checked_count;
                    if (got != expected)
                        report.failures.push_back(BasisPairFailure{i, j, k, l, expected, got});
                }

    report.passed = report.failures.empty();
    return report;
}

Mat2 apply_algorithm(const BilinearAlgorithm& alg, const Mat2& a, const Mat2& b) {
    return apply_algorithm_counted(alg, a, b).product;
}

ApplyResult apply_algorithm_counted(const BilinearAlgorithm& alg, const Mat2& a, const Mat2& b) {
    if (a.field() != alg.field() || b.field() != alg.field())
        throw FieldMismatch("matrices not in the algorithm's field");

    Mat2 acc = Mat2::zero(alg.field());
    std::size_t events = 0;
    for (const auto& t : alg.terms()) {
        Scalar m = trace_pairing(t.x, a) * trace_pairing(t.y, b);
        ++events;
        acc = acc + t.z.scaled(m);
    }
    return ApplyResult{std::move(acc), events};
}

bool brent_check(const std::vector<std::array<Scalar, 4>>& u,
                 const std::vector<std::array<Scalar, 4>>& v,
                 const std::vector<std::array<Scalar, 4>>& w) {
    if (u.empty() || u.size() != v.size() || u.size() != w.size()) return false;
    const FieldDesc field = u[0][0].field();

    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            for (int k = 0; k < 2; ++k)
                for (int l = 0; l < 2; ++l)
                    for (int m = 0; m < 2; ++m)
                        for (int n = 0; n < 2; ++n) {
                            Scalar sum = Scalar::zero(field);
                            for (std::size_t r = 0; r < u.size(); ++r)
                                sum += u[r][2 * i + j] * v[r][2 * k + l] * w[r][2 * m + n];
                            bool want_one = (j == k) && (i == m) && (l == n);
                            if (want_one ? !sum.is_one() : !sum.is_zero()) return false;
                        }
    return true;
}

}  // namespace strassen

#include "strassen/dense.hpp"

#include "strassen/verify.hpp"

namespace strassen {

namespace {

using engine_detail::CoeffKind;
using engine_detail::TermCoeffs;

std::vector<TermCoeffs<Scalar>> exact_coeffs(const BilinearAlgorithm& alg) {
    std::vector<TermCoeffs<Scalar>> out;
    out.reserve(alg.rank());
    const Scalar zero = Scalar::zero(alg.field());
    for (const auto& t : alg.terms()) {
        TermCoeffs<Scalar> c{{zero, zero, zero, zero}, {zero, zero, zero, zero}, {zero, zero, zero, zero}};
        for (std::size_t i = 0; i < 2; ++i)
            for (std::size_t j = 0; j < 2; ++j) {
                c.x[2 * i + j] = t.x.at(j, i);  // tr(x a) weights a_ij by x_ji
                c.y[2 * i + j] = t.y.at(j, i);
                c.z[2 * i + j] = t.z.at(i, j);
            }
        out.push_back(std::move(c));
    }
    return out;
}

void ensure_verified(const BilinearAlgorithm& alg) {
    auto report = verify_bilinear(alg);
    if (!report.passed)
        throw UnverifiedAlgorithm("scheme fails basis-pair verification; first " +
                                  report.failures.front().str());
}

double to_double_checked(const Scalar& s, bool& exact) {
    const Rational& r = s.rational();
    double d = r.raw().get_d();
    if (mpq_class(d) != r.raw()) exact = false;
    return d;
}

}  // namespace

DoubleCoeffs algorithm_as_doubles(const BilinearAlgorithm& alg) {
    if (!alg.field().is_rational())
        throw std::invalid_argument("only rational-field schemes convert to doubles");
    DoubleCoeffs out;
    for (const auto& sc : exact_coeffs(alg)) {
        TermCoeffs<double> c{};
        for (int q = 0; q < 4; ++q) {
            c.x[q] = to_double_checked(sc.x[q], out.exact);
            c.y[q] = to_double_checked(sc.y[q], out.exact);
            c.z[q] = to_double_checked(sc.z[q], out.exact);
        }
        out.terms.push_back(c);
    }
    return out;
}

std::pair<DenseMatrix<Scalar>, OpCounter> multiply_recursive(const BilinearAlgorithm& alg,
                                                             const DenseMatrix<Scalar>& a,
                                                             const DenseMatrix<Scalar>& b,
                                                             std::size_t cutoff) {
    ensure_verified(alg);
    if (a.at(0, 0).field() != alg.field() || b.at(0, 0).field() != alg.field())
        throw FieldMismatch("matrix entries not in the scheme's field");
    return engine_detail::run_recursive(exact_coeffs(alg), a, b, cutoff, Scalar::zero(alg.field()));
}

std::pair<DenseMatrix<double>, OpCounter> multiply_recursive(const BilinearAlgorithm& alg,
                                                             const DenseMatrix<double>& a,
                                                             const DenseMatrix<double>& b,
                                                             std::size_t cutoff) {
    ensure_verified(alg);
    return engine_detail::run_recursive(algorithm_as_doubles(alg).terms, a, b, cutoff, 0.0);
}

LevelCosts combination_costs(const BilinearAlgorithm& alg) {
    LevelCosts costs;
    auto tally = [&costs](const std::vector<CoeffKind>& kinds) {
        bool leading = true;
        for (CoeffKind k : kinds) {
            if (k == CoeffKind::zero) continue;
            if (leading) {
                if (k != CoeffKind::one) costs.mults += 1;
                leading = false;
            } else if (k == CoeffKind::general) {
                costs.mults += 1;
                costs.adds += 1;
            } else {
                costs.adds += 1;
            }
        }
    };

    auto coeffs = exact_coeffs(alg);
    for (const auto& t : coeffs) {
        std::vector<CoeffKind> xs, ys;
        for (int q = 0; q < 4; ++q) {
            xs.push_back(engine_detail::classify(t.x[q]));
            ys.push_back(engine_detail::classify(t.y[q]));
        }
        tally(xs);
        tally(ys);
    }
    for (int q = 0; q < 4; ++q) {
        std::vector<CoeffKind> zs;
        for (const auto& t : coeffs) zs.push_back(engine_detail::classify(t.z[q]));
        tally(zs);
    }
    return costs;
}

OpCounter predict_counts(const BilinearAlgorithm& alg, int depth) {
    if (depth < 0) throw std::invalid_argument("depth must be >= 0");
    LevelCosts level = combination_costs(alg);
    OpCounter c{1, 1, 0};  // 1x1 base block: one multiplication
    std::uint64_t block_sq = 1;  // (2^j)^2 for the blocks combined at step j
    for (int j = 0; j < depth; ++j) {
        OpCounter next;
        next.base_multiplications = alg.rank() * c.base_multiplications;
        next.scalar_multiplications = alg.rank() * c.scalar_multiplications + level.mults * block_sq;
        next.scalar_additions = alg.rank() * c.scalar_additions + level.adds * block_sq;
        c = next;
        block_sq *= 4;
    }
    return c;
}

}  // namespace strassen

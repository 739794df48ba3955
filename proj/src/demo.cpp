#include "strassen/demo.hpp"

#include <array>
#include <optional>
#include <stdexcept>

#include "strassen/generator.hpp"
#include "strassen/verify.hpp"

namespace strassen {

namespace {

Mat2 transpose(const Mat2& m) {
    Mat2 t(m.field());
    for (std::size_t i = 0; i < 2; ++i)
        for (std::size_t j = 0; j < 2; ++j) t.at(i, j) = m.at(j, i);
    return t;
}

/// Renders sum_ij F[i][j] x^{i+1,j+1} with monomials in index order;
/// multi-monomial forms are parenthesized.
std::string linear_form(const Mat2& coeffs, const std::string& var) {
    std::string body;
    int monomials = 0;
    for (std::size_t i = 0; i < 2; ++i)
        for (std::size_t j = 0; j < 2; ++j) {
            const Scalar& c = coeffs.at(i, j);
            if (c.is_zero()) continue;
            std::string mono = var + "^{" + std::to_string(i + 1) + "," + std::to_string(j + 1) + "}";
            if (c.is_one())
                body += monomials ? " + " + mono : mono;
            else if ((-c).is_one())
                body += monomials ? " - " + mono : "-" + mono;
            else
                body += (monomials ? " + " : "") + c.str() + " " + mono;
            ++monomials;
        }
    if (monomials == 0) return "0";
    return monomials > 1 ? "(" + body + ")" : body;
}

struct PublishedForm {
    const char* label;
    Mat2 fa;  // coefficients of the a^{i,j}
    Mat2 fb;  // coefficients of the b^{i,j}
};

/// Strassen's classical multiplication forms I..VII.
std::array<PublishedForm, 7> published_forms(const FieldDesc& f) {
    return {PublishedForm{"I", Mat2::from_ints({1, 0, 0, 1}, f), Mat2::from_ints({1, 0, 0, 1}, f)},
            PublishedForm{"II", Mat2::from_ints({0, 0, 1, 1}, f), Mat2::from_ints({1, 0, 0, 0}, f)},
            PublishedForm{"III", Mat2::from_ints({1, 0, 0, 0}, f), Mat2::from_ints({0, 1, 0, -1}, f)},
            PublishedForm{"IV", Mat2::from_ints({0, 0, 0, 1}, f), Mat2::from_ints({-1, 0, 1, 0}, f)},
            PublishedForm{"V", Mat2::from_ints({1, 1, 0, 0}, f), Mat2::from_ints({0, 0, 0, 1}, f)},
            PublishedForm{"VI", Mat2::from_ints({-1, 0, 1, 0}, f), Mat2::from_ints({1, 1, 0, 0}, f)},
            PublishedForm{"VII", Mat2::from_ints({0, 1, 0, -1}, f), Mat2::from_ints({0, 0, 1, 1}, f)}};
}

}  // namespace

std::string demo_text() {
    const FieldDesc field = FieldDesc::rationals();
    const Params p = strassen_params(field);
    const Scalar denom = param_denominator(p);
    const BilinearAlgorithm alg = build_algorithm(p);

    if (!verify_bilinear(alg).passed) throw std::logic_error("canonical scheme failed verification");

    std::string out;
    out += "derivation of the classical 2x2 scheme from the canonical parameters\n\n";
    out += "parameters:\n";
    for (int i = 0; i < 3; ++i)
        out += "v" + std::to_string(i + 1) + " = " + p.v[i].str() + "   lambda" + std::to_string(i + 1) +
               " = " + p.l[i].str() + "\n";
    out += "denominator lambda1(v2) lambda2(v3) lambda3(v1) = " + denom.str() + "\n";

    out += "\nrank-one matrices c_{i,j} = v_i lambda_j:\n";
    const std::array<std::pair<int, int>, 6> order = {{{1, 2}, {1, 3}, {2, 3}, {2, 1}, {3, 1}, {3, 2}}};
    for (auto [i, j] : order)
        out += "c_{" + std::to_string(i) + "," + std::to_string(j) + "} = " + pair_matrix(p, i, j).str() +
               "\n";

    out += "\nseven-term expansion:\n";
    out += "ab = tr(a) tr(b) I\n";
    for (const Perm3& s : Perm3::all()) {
        auto c_name = [&s](int a, int b) {
            return "c_{" + std::to_string(s(a) + 1) + "," + std::to_string(s(b) + 1) + "}";
        };
        out += std::string("   ") + (s.signature() == 1 ? "+" : "-") + " tr(a " + c_name(0, 1) +
               ") tr(b " + c_name(1, 2) + ") " + c_name(2, 0) + "\n";
    }

    // Match each generated term against the published forms, allowing the
    // sign of a term to move between its three factors.
    const auto published = published_forms(field);
    std::array<std::optional<std::size_t>, 7> term_for_label;  // label index -> term index
    std::array<Mat2, 7> z_for_label = {Mat2(field), Mat2(field), Mat2(field), Mat2(field),
                                       Mat2(field), Mat2(field), Mat2(field)};

    for (std::size_t r = 0; r < alg.rank(); ++r) {
        Mat2 fa = transpose(alg.term(r).x);
        Mat2 fb = transpose(alg.term(r).y);
        for (std::size_t n = 0; n < published.size(); ++n) {
            for (int s = 1; s >= -1; s -= 2)
                for (int t = 1; t >= -1; t -= 2) {
                    Mat2 sfa = s == 1 ? fa : -fa;
                    Mat2 tfb = t == 1 ? fb : -fb;
                    if (sfa != published[n].fa || tfb != published[n].fb) continue;
                    if (term_for_label[n].has_value())
                        throw std::logic_error("two terms matched one published form");
                    term_for_label[n] = r;
                    z_for_label[n] = s * t == 1 ? alg.term(r).z : -alg.term(r).z;
                }
        }
    }
    for (std::size_t n = 0; n < published.size(); ++n)
        if (!term_for_label[n].has_value())
            throw std::logic_error(std::string("no generated term matches form ") + published[n].label);

    out += "\nbilinear forms:\n";
    for (std::size_t n = 0; n < published.size(); ++n) {
        std::string label = published[n].label;
        out += label + std::string(4 - label.size(), ' ') + "= " + linear_form(published[n].fa, "a") +
               " " + linear_form(published[n].fb, "b") + "\n";
    }

    out += "\nproduct coefficients:\n";
    for (std::size_t i = 0; i < 2; ++i)
        for (std::size_t j = 0; j < 2; ++j) {
            std::string line = "(ab)^{" + std::to_string(i + 1) + "," + std::to_string(j + 1) + "} =";
            int printed = 0;
            for (std::size_t n = 0; n < published.size(); ++n) {
                const Scalar& c = z_for_label[n].at(i, j);
                if (c.is_zero()) continue;
                if (!c.is_one() && !(-c).is_one())
                    throw std::logic_error("non-unit product coefficient in the canonical scheme");
                if (c.is_one())
                    line += (printed ? " + " : " ") + std::string(published[n].label);
                else
                    line += (printed ? " - " : " -") + std::string(published[n].label);
                ++printed;
            }
            out += line + "\n";
        }

    return out;
}

}  // namespace strassen

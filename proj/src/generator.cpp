#include "strassen/generator.hpp"

namespace strassen {

namespace {

// Coordinates of a trace-zero form mu in the basis dual to (e11, e12, e21):
// mu(e_jk) = v[k] * l[j], and mu(e22) = -mu(e11) is forced by mu(I) = 0.
std::array<Scalar, 3> trace_zero_coords(const Vec2& v, const CoVec2& l) {
    return {v[0] * l[0], v[1] * l[0], v[0] * l[1]};
}

Scalar det3(const std::array<std::array<Scalar, 3>, 3>& m) {
    return m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) -
           m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
           m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
}

const Perm3 kCycle = Perm3::cycle123();

}  // namespace

ValidationReport validate_params(const Params& p) {
    ValidationReport r;

    r.hypothesis_ok = true;
    for (int i = 0; i < 3; ++i) {
        if (p.v[i].is_zero()) {
            r.hypothesis_ok = false;
            r.failures.push_back("hypothesis: v" + std::to_string(i + 1) + " is zero");
        }
        if (p.l[i].is_zero()) {
            r.hypothesis_ok = false;
            r.failures.push_back("hypothesis: lambda" + std::to_string(i + 1) + " is zero");
        }
        if (!p.l[i].eval(p.v[i]).is_zero()) {
            r.hypothesis_ok = false;
            r.failures.push_back("hypothesis: lambda" + std::to_string(i + 1) + "(v" +
                                 std::to_string(i + 1) + ") != 0");
        }
    }

    r.vectors_noncolinear = true;
    r.forms_noncolinear = true;
    for (int i = 0; i < 3; ++i)
        for (int j = i + 1; j < 3; ++j) {
            if (colinear(p.v[i], p.v[j])) {
                r.vectors_noncolinear = false;
                r.failures.push_back("condition 1 (pairwise noncolinearity): v" + std::to_string(i + 1) +
                                     " and v" + std::to_string(j + 1) + " are colinear");
            }
            if (colinear(p.l[i], p.l[j])) {
                r.forms_noncolinear = false;
                r.failures.push_back("condition 2 (pairwise noncolinearity): lambda" +
                                     std::to_string(i + 1) + " and lambda" + std::to_string(j + 1) +
                                     " are colinear");
            }
        }

    std::array<std::array<Scalar, 3>, 3> coords = {trace_zero_coords(p.v[0], p.l[0]),
                                                   trace_zero_coords(p.v[1], p.l[1]),
                                                   trace_zero_coords(p.v[2], p.l[2])};
    r.forms_independent = !det3(coords).is_zero();
    if (!r.forms_independent)
        r.failures.push_back("condition 3 (independence): the rank-one forms are linearly dependent");

    return r;
}

Scalar param_denominator(const Params& p) {
    auto report = validate_params(p);
    if (!report.valid())
        throw InvalidParams(report.failures.empty() ? "validation failed" : report.failures.front());
    return p.l[0].eval(p.v[1]) * p.l[1].eval(p.v[2]) * p.l[2].eval(p.v[0]);
}

Scalar volume_form_scale(const std::array<TraceZeroForm, 3>& basis,
                         const Mat2& c1, const Mat2& c2, const Mat2& c3) {
    const FieldDesc field = c1.field();
    if (eval_volume_form(c1, c2, c3) != Scalar::one(field))
        throw BadCalibration("volume form of the calibration triple is not 1");

    const std::array<const Mat2*, 3> c = {&c1, &c2, &c3};
    Scalar sum = Scalar::zero(field);
    for (const Perm3& s : Perm3::all()) {
        Scalar prod = Scalar::one(field);
        for (int i = 0; i < 3; ++i) prod *= basis[s(i)].eval(*c[i]);
        sum += s.signature() == 1 ? prod : -prod;
    }
    if (sum.is_zero()) throw DegenerateBasis("antisymmetrized sum vanishes on the calibration triple");
    return sum.inv();
}

Scalar DefectDecomposition::eval(const Mat2& a1, const Mat2& a2, const Mat2& a3) const {
    const std::array<const Mat2*, 3> a = {&a1, &a2, &a3};
    Scalar sum = Scalar::zero(a1.field());
    for (const auto& t : terms) {
        Scalar prod = Scalar::one(a1.field());
        for (int i = 0; i < 3; ++i) prod *= rank_one_form_eval(t.factors[i].v, t.factors[i].l, *a[i]);
        sum += t.sign == 1 ? prod : -prod;
    }
    return coefficient * sum;
}

Mat8 DefectDecomposition::as_operator(const FieldDesc& field) const {
    std::vector<FormTerm> formal;
    formal.reserve(6);
    for (const auto& t : terms) {
        Scalar c = t.sign == 1 ? coefficient : -coefficient;
        formal.push_back(FormTerm::rank_one(c, t.factors));
    }
    return form_to_operator(formal, field);
}

DefectDecomposition decompose_trace_defect(const Params& p) {
    Scalar denom = param_denominator(p);  // validates
    Scalar coeff = -denom.inv();

    const auto& perms = Perm3::all();
    auto term_for = [&p](const Perm3& s) {
        std::array<RankOneFactor, 3> factors = {
            RankOneFactor{p.v[s(0)], p.l[s(kCycle(0))]},
            RankOneFactor{p.v[s(1)], p.l[s(kCycle(1))]},
            RankOneFactor{p.v[s(2)], p.l[s(kCycle(2))]}};
        return DefectTerm{s, s.signature(), factors};
    };

    return DefectDecomposition{coeff,
                               {term_for(perms[0]), term_for(perms[1]), term_for(perms[2]),
                                term_for(perms[3]), term_for(perms[4]), term_for(perms[5])}};
}

Mat2 pair_matrix(const Params& p, int i, int j) {
    if (i < 1 || i > 3 || j < 1 || j > 3 || i == j)
        throw InvalidIndex("pair_matrix wants distinct indices in {1,2,3}, got (" + std::to_string(i) +
                           "," + std::to_string(j) + ")");
    return outer_product(p.v[i - 1], p.l[j - 1]);
}

BilinearAlgorithm build_algorithm(const Params& p) {
    Scalar denom = param_denominator(p);  // validates
    Scalar denom_inv = denom.inv();
    const FieldDesc field = p.field();

    std::vector<BilinearTerm> terms;
    terms.reserve(7);
    Mat2 id = Mat2::identity(field);
    terms.push_back(BilinearTerm{id, id, id});

    for (const Perm3& s : Perm3::all()) {
        Scalar scale = s.signature() == 1 ? denom_inv : -denom_inv;
        Mat2 x = pair_matrix(p, s(0) + 1, s(1) + 1);
        Mat2 y = pair_matrix(p, s(1) + 1, s(2) + 1);
        Mat2 z = pair_matrix(p, s(2) + 1, s(0) + 1).scaled(scale);
        terms.push_back(BilinearTerm{std::move(x), std::move(y), std::move(z)});
    }
    return BilinearAlgorithm(field, std::move(terms));
}

Params strassen_params(const FieldDesc& field) {
    return Params{{Vec2::from_ints(1, 0, field), Vec2::from_ints(0, 1, field), Vec2::from_ints(1, 1, field)},
                  {CoVec2::from_ints(0, 1, field), CoVec2::from_ints(1, 0, field),
                   CoVec2::from_ints(1, -1, field)}};
}

}  // namespace strassen

#include "strassen/property_suite.hpp"

#include <functional>
#include <optional>

#include "strassen/forms.hpp"
#include "strassen/generator.hpp"
#include "strassen/sampling.hpp"
#include "strassen/verify.hpp"

namespace strassen {

namespace {

using TrialFn = std::function<std::optional<std::string>(RandomSource&, int)>;

std::uint64_t mix_seed(std::uint64_t seed, std::size_t index) {
    std::uint64_t x = seed + 0x9E3779B97F4A7C15ull * (index + 1);
    x ^= x >> 30;
    x *= 0xBF58476D1CE4E5B9ull;
    x ^= x >> 27;
    return x;
}

void run_check(SuiteReport& report, const std::string& name, int trials, const TrialFn& fn) {
    RandomSource rs(mix_seed(report.seed, report.checks.size()));
    PropertyCheck check{name, true, ""};
    for (int t = 0; t < trials; ++t) {
        std::optional<std::string> bad;
        try {
            bad = fn(rs, t);
        } catch (const std::exception& e) {
            bad = std::string("exception: ") + e.what();
        }
        if (bad) {
            check.passed = false;
            check.counterexample = "trial " + std::to_string(t) + ": " + *bad;
            break;
        }
    }
    report.checks.push_back(std::move(check));
}

std::string triple_str(const Mat2& a1, const Mat2& a2, const Mat2& a3) {
    return a1.str() + ", " + a2.str() + ", " + a3.str();
}

Mat2 scaled_identity(const Scalar& c) {
    return Mat2::identity(c.field()).scaled(c);
}

}  // namespace

std::string SuiteReport::str() const {
    std::string out;
    for (const auto& c : checks) {
        out += c.passed ? "PASS " : "FAIL ";
        out += c.name;
        if (!c.passed) out += ": " + c.counterexample;
        out += "\n";
    }
    return out;
}

SuiteReport run_property_suite(std::uint64_t seed, int trials, const FieldDesc& field) {
    if (trials < 1) throw std::invalid_argument("trials must be >= 1");

    SuiteReport report;
    report.seed = seed;
    report.trials = trials;
    report.field = field;

    const Scalar zero = Scalar::zero(field);
    const Scalar one = Scalar::one(field);
    const Mat2 id2 = Mat2::identity(field);

    // (v l) (u m) = l(u) (v m)
    run_check(report, "outer_product_composition", trials, [&](RandomSource& rs, int) -> std::optional<std::string> {
        Vec2 v = random_vec2(rs, field), u = random_vec2(rs, field);
        CoVec2 l = random_covec2(rs, field), m = random_covec2(rs, field);
        Mat2 lhs = outer_product(v, l) * outer_product(u, m);
        Mat2 rhs = outer_product(v, m).scaled(l.eval(u));
        if (lhs != rhs) return "v=" + v.str() + " l=" + l.str() + " u=" + u.str() + " m=" + m.str();
        return std::nullopt;
    });

    // the form of (v,l) evaluated on the matrix of (u,m) is l(u) m(v)
    run_check(report, "rank_one_form_pairing", trials, [&](RandomSource& rs, int) -> std::optional<std::string> {
        Vec2 v = random_vec2(rs, field), u = random_vec2(rs, field);
        CoVec2 l = random_covec2(rs, field), m = random_covec2(rs, field);
        Scalar lhs = rank_one_form_eval(v, l, outer_product(u, m));
        Scalar rhs = l.eval(u) * m.eval(v);
        if (lhs != rhs) return "v=" + v.str() + " l=" + l.str() + " u=" + u.str() + " m=" + m.str();
        return std::nullopt;
    });

    run_check(report, "outer_product_trace", trials, [&](RandomSource& rs, int) -> std::optional<std::string> {
        Vec2 v = random_vec2(rs, field);
        CoVec2 l = random_covec2(rs, field);
        if (outer_product(v, l).trace() != l.eval(v)) return "v=" + v.str() + " l=" + l.str();
        return std::nullopt;
    });

    // evaluating the rank-one form equals trace pairing against its matrix
    run_check(report, "trace_dual_of_outer_product", trials, [&](RandomSource& rs, int) -> std::optional<std::string> {
        Vec2 v = random_vec2(rs, field);
        CoVec2 l = random_covec2(rs, field);
        Mat2 a = random_mat2(rs, field);
        if (rank_one_form_eval(v, l, a) != trace_pairing(outer_product(v, l), a))
            return "v=" + v.str() + " l=" + l.str() + " a=" + a.str();
        return std::nullopt;
    });

    // tr((ab)c) = tr(a(bc)) = tr(b(ca)): the trace dual shifts across products
    run_check(report, "trace_pairing_shift", trials, [&](RandomSource& rs, int) -> std::optional<std::string> {
        Mat2 a = random_mat2(rs, field), b = random_mat2(rs, field), c = random_mat2(rs, field);
        Scalar lhs = trace_pairing(a * b, c);
        if (lhs != trace_pairing(a, b * c) || lhs != trace_pairing(b, c * a))
            return triple_str(a, b, c);
        return std::nullopt;
    });

    run_check(report, "perm_form_closed_forms", trials, [&](RandomSource& rs, int) -> std::optional<std::string> {
        Mat2 a1 = random_mat2(rs, field), a2 = random_mat2(rs, field), a3 = random_mat2(rs, field);
        bool ok = perm_form_eval(Perm3::identity(), a1, a2, a3) == a1.trace() * a2.trace() * a3.trace() &&
                  perm_form_eval(Perm3::cycle123(), a1, a2, a3) == (a1 * a2 * a3).trace() &&
                  perm_form_eval(Perm3::cycle321(), a1, a2, a3) == (a3 * a2 * a1).trace();
        if (!ok) return triple_str(a1, a2, a3);
        return std::nullopt;
    });

    // exhaustive: operator composition reverses, P_s P_t = P_{t o s}
    run_check(report, "perm_operator_composition", 1, [&](RandomSource&, int) -> std::optional<std::string> {
        for (const Perm3& s : Perm3::all())
            for (const Perm3& t : Perm3::all()) {
                Mat8 lhs = perm_operator(s, field) * perm_operator(t, field);
                if (lhs != perm_operator(t.after(s), field)) return "s=" + s.str() + " t=" + t.str();
            }
        Mat8 prod = perm_operator(Perm3::cycle123(), field) * perm_operator(Perm3::cycle321(), field);
        if (prod != Mat8::identity(field)) return "(123)(321) is not the identity operator";
        return std::nullopt;
    });

    run_check(report, "volume_form_antisymmetry", trials, [&](RandomSource& rs, int) -> std::optional<std::string> {
        Mat2 a = random_mat2(rs, field), b = random_mat2(rs, field), c = random_mat2(rs, field);
        Scalar g = eval_volume_form(a, b, c);
        bool ok = eval_volume_form(b, a, c) == -g && eval_volume_form(a, c, b) == -g &&
                  eval_volume_form(c, b, a) == -g;
        if (field.characteristic() == 2)  // sign collapse: swaps leave the value fixed
            ok = ok && eval_volume_form(b, a, c) == g;
        if (!ok) return triple_str(a, b, c);
        return std::nullopt;
    });

    run_check(report, "volume_form_quotient_vanishing", trials, [&](RandomSource& rs, int) -> std::optional<std::string> {
        Mat2 a = random_mat2(rs, field), b = random_mat2(rs, field);
        Mat2 ci = scaled_identity(random_scalar(rs, field));
        bool ok = eval_volume_form(ci, a, b) == zero && eval_volume_form(a, ci, b) == zero &&
                  eval_volume_form(a, b, ci) == zero && eval_volume_form(a, a, b) == zero &&
                  eval_volume_form(a, b, b) == zero && eval_volume_form(a, b, a) == zero;
        if (!ok) return "a=" + a.str() + " b=" + b.str() + " cI=" + ci.str();
        return std::nullopt;
    });

    // trace defect = volume form composed with the (321) shift, as operators
    // and under evaluation
    run_check(report, "defect_from_volume_form", trials, [&](RandomSource& rs, int t) -> std::optional<std::string> {
        if (t == 0 &&
            compose_with_perm(volume_form_operator(field), Perm3::cycle321()) != trace_defect_operator(field))
            return "operator identity failed";
        Mat2 a1 = random_mat2(rs, field), a2 = random_mat2(rs, field), a3 = random_mat2(rs, field);
        Scalar via_op = form_eval(trace_defect_operator(field), a1, a2, a3);
        if (via_op != eval_trace_defect(a1, a2, a3)) return triple_str(a1, a2, a3);
        return std::nullopt;
    });

    // composing a triple rank-one form with the shift permutes its covectors
    run_check(report, "rank_one_form_shift", trials, [&](RandomSource& rs, int) -> std::optional<std::string> {
        std::array<Vec2, 3> v = {random_vec2(rs, field), random_vec2(rs, field), random_vec2(rs, field)};
        std::array<CoVec2, 3> l = {random_covec2(rs, field), random_covec2(rs, field),
                                   random_covec2(rs, field)};
        for (const Perm3& s : Perm3::all()) {
            Perm3 si = s.inverse();
            Mat8 lhs = compose_with_perm(kron3(outer_product(v[0], l[0]), outer_product(v[1], l[1]),
                                               outer_product(v[2], l[2])),
                                         s);
            Mat8 rhs = kron3(outer_product(v[0], l[si(0)]), outer_product(v[1], l[si(1)]),
                             outer_product(v[2], l[si(2)]));
            if (lhs != rhs) return "s=" + s.str();
        }
        return std::nullopt;
    });

    // left action of the permutation operator permutes the vector slots
    run_check(report, "perm_action_on_rank_one", trials, [&](RandomSource& rs, int) -> std::optional<std::string> {
        std::array<Vec2, 3> u = {random_vec2(rs, field), random_vec2(rs, field), random_vec2(rs, field)};
        std::array<CoVec2, 3> z = {random_covec2(rs, field), random_covec2(rs, field),
                                   random_covec2(rs, field)};
        for (const Perm3& s : Perm3::all()) {
            Mat8 lhs = perm_operator(s, field) * kron3(outer_product(u[0], z[0]), outer_product(u[1], z[1]),
                                                       outer_product(u[2], z[2]));
            Mat8 rhs = kron3(outer_product(u[s(0)], z[0]), outer_product(u[s(1)], z[1]),
                             outer_product(u[s(2)], z[2]));
            if (lhs != rhs) return "s=" + s.str();
        }
        return std::nullopt;
    });

    // exhaustive: shifting the cyclic trace form by (321) collapses it to
    // the product-of-traces form
    run_check(report, "cyclic_shift_collapse", 1, [&](RandomSource&, int) -> std::optional<std::string> {
        Mat8 lhs = compose_with_perm(perm_operator(Perm3::cycle123(), field), Perm3::cycle321());
        if (lhs != perm_operator(Perm3::identity(), field)) return "operator identity failed";
        return std::nullopt;
    });

    // rank-6 expansion of the volume form in a rank-one basis
    run_check(report, "volume_form_expansion", trials, [&](RandomSource& rs, int) -> std::optional<std::string> {
        Params p = random_valid_params(rs, field);
        std::array<TraceZeroForm, 3> basis = {TraceZeroForm(p.v[0], p.l[0]), TraceZeroForm(p.v[1], p.l[1]),
                                              TraceZeroForm(p.v[2], p.l[2])};
        Mat2 c1 = Mat2::elementary(0, 0, field), c2 = Mat2::elementary(0, 1, field),
             c3 = Mat2::elementary(1, 0, field);
        Scalar alpha = volume_form_scale(basis, c1, c2, c3);
        if (alpha != -param_denominator(p).inv())
            return "alpha mismatch for v1=" + p.v[0].str() + " v2=" + p.v[1].str() + " v3=" + p.v[2].str();

        Mat2 a1 = random_mat2(rs, field), a2 = random_mat2(rs, field), a3 = random_mat2(rs, field);
        const std::array<const Mat2*, 3> a = {&a1, &a2, &a3};
        Scalar sum = zero;
        for (const Perm3& s : Perm3::all()) {
            Scalar prod = one;
            for (int i = 0; i < 3; ++i) prod *= basis[s(i)].eval(*a[i]);
            sum += s.signature() == 1 ? prod : -prod;
        }
        if (alpha * sum != eval_volume_form(a1, a2, a3)) return triple_str(a1, a2, a3);
        return std::nullopt;
    });

    // the three numbered validity conditions agree under the hypothesis
    run_check(report, "basis_conditions_equivalence", trials, [&](RandomSource& rs, int t) -> std::optional<std::string> {
        Params p = t % 5 == 4 ? degenerate_params(rs, field) : random_hypothesis_params(rs, field);
        auto r = validate_params(p);
        if (!r.hypothesis_ok) return "hypothesis violated by the sampler";
        if (r.vectors_noncolinear != r.forms_noncolinear || r.vectors_noncolinear != r.forms_independent)
            return "conditions disagree for v1=" + p.v[0].str() + " v2=" + p.v[1].str() +
                   " v3=" + p.v[2].str();
        return std::nullopt;
    });

    // the six-term expansion equals the trace defect on all 64 basis triples
    run_check(report, "defect_decomposition_on_basis", trials, [&](RandomSource& rs, int) -> std::optional<std::string> {
        Params p = random_valid_params(rs, field);
        DefectDecomposition d = decompose_trace_defect(p);
        for (int b = 0; b < 64; ++b) {
            Mat2 a1 = Mat2::elementary((b >> 5) & 1, (b >> 4) & 1, field);
            Mat2 a2 = Mat2::elementary((b >> 3) & 1, (b >> 2) & 1, field);
            Mat2 a3 = Mat2::elementary((b >> 1) & 1, b & 1, field);
            if (d.eval(a1, a2, a3) != eval_trace_defect(a1, a2, a3))
                return "basis triple " + triple_str(a1, a2, a3);
        }
        return std::nullopt;
    });

    // tr(a1 a2 a3) recovered from traces plus the signed rank-one sum
    run_check(report, "trace_product_identity", trials, [&](RandomSource& rs, int) -> std::optional<std::string> {
        Params p = random_valid_params(rs, field);
        Scalar denom_inv = param_denominator(p).inv();
        Mat2 a1 = random_mat2(rs, field), a2 = random_mat2(rs, field), a3 = random_mat2(rs, field);
        const std::array<const Mat2*, 3> a = {&a1, &a2, &a3};
        const Perm3 cyc = Perm3::cycle123();
        Scalar sum = zero;
        for (const Perm3& s : Perm3::all()) {
            Scalar prod = one;
            for (int i = 0; i < 3; ++i)
                prod *= p.l[s(cyc(i))].eval(apply(*a[i], p.v[s(i)]));
            sum += s.signature() == 1 ? prod : -prod;
        }
        Scalar lhs = (a1 * a2 * a3).trace();
        Scalar rhs = a1.trace() * a2.trace() * a3.trace() + denom_inv * sum;
        if (lhs != rhs) return triple_str(a1, a2, a3);
        return std::nullopt;
    });

    // on the defining rank-one triple, only the full cycle contributes to
    // the expansion; its term is the squared denominator
    run_check(report, "scale_factor_single_survivor", trials, [&](RandomSource& rs, int) -> std::optional<std::string> {
        Params p = random_valid_params(rs, field);
        Scalar denom = param_denominator(p);
        DefectDecomposition d = decompose_trace_defect(p);
        std::array<Mat2, 3> a = {outer_product(p.v[0], p.l[0]), outer_product(p.v[1], p.l[1]),
                                 outer_product(p.v[2], p.l[2])};
        for (const auto& term : d.terms) {
            Scalar prod = one;
            for (int i = 0; i < 3; ++i)
                prod *= rank_one_form_eval(term.factors[i].v, term.factors[i].l, a[i]);
            bool is_full_cycle = term.sigma == Perm3::cycle123();
            if (is_full_cycle ? prod != denom * denom : !prod.is_zero())
                return "sigma=" + term.sigma.str();
        }
        if (d.eval(a[0], a[1], a[2]) != -denom) return "expansion value is not -denominator";
        return std::nullopt;
    });

    // every generated scheme has the fixed shape and verifies exactly
    run_check(report, "generated_schemes_verify", trials, [&](RandomSource& rs, int) -> std::optional<std::string> {
        Params p = random_valid_params(rs, field);
        BilinearAlgorithm alg = build_algorithm(p);
        if (alg.rank() != 7) return "rank != 7";
        if (alg.term(0).x != id2 || alg.term(0).y != id2 || alg.term(0).z != id2)
            return "term 0 is not (I, I, I)";
        auto rep = verify_bilinear(alg);
        if (!rep.passed) return rep.failures.front().str();
        return std::nullopt;
    });

    return report;
}

}  // namespace strassen

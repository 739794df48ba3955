#include <doctest.h>

#include "strassen/generator.hpp"
#include "strassen/sampling.hpp"
#include "strassen/verify.hpp"

using namespace strassen;

namespace {

const FieldDesc kQ = FieldDesc::rationals();

Params canonical() { return strassen_params(kQ); }

}  // namespace

TEST_SUITE_BEGIN("generator");

TEST_CASE("canonical parameters validate") {
    auto r = validate_params(canonical());
    CHECK(r.hypothesis_ok);
    CHECK(r.vectors_noncolinear);
    CHECK(r.forms_noncolinear);
    CHECK(r.forms_independent);
    CHECK(r.valid());
    CHECK(r.failures.empty());
}

TEST_CASE("repeated vector fails pairwise noncolinearity") {
    Params p = canonical();
    p.v[1] = p.v[0];
    p.l[1] = p.l[0];  // keep the hypothesis intact
    auto r = validate_params(p);
    CHECK(r.hypothesis_ok);
    CHECK_FALSE(r.vectors_noncolinear);
    CHECK_FALSE(r.valid());
    bool cites_noncolinearity = false;
    for (const auto& f : r.failures)
        if (f.find("noncolinear") != std::string::npos) cites_noncolinearity = true;
    CHECK(cites_noncolinearity);
}

TEST_CASE("nonvanishing l_i(v_i) fails the hypothesis") {
    Params p = canonical();
    p.l[0] = CoVec2::from_ints(1, 0, kQ);  // l1(v1) = 1
    auto r = validate_params(p);
    CHECK_FALSE(r.hypothesis_ok);
    CHECK_FALSE(r.valid());
}

TEST_CASE("param_denominator") {
    CHECK(param_denominator(canonical()) == Scalar::one(kQ));

    Params p{{Vec2::from_ints(1, 0, kQ), Vec2::from_ints(0, 1, kQ), Vec2::from_ints(1, 2, kQ)},
             {CoVec2::from_ints(0, 1, kQ), CoVec2::from_ints(1, 0, kQ), CoVec2::from_ints(2, -1, kQ)}};
    REQUIRE(validate_params(p).valid());
    CHECK(param_denominator(p) == Scalar::from_int(2, kQ));  // 1 * 1 * 2

    Params bad = canonical();
    bad.v[2] = bad.v[0];
    bad.l[2] = bad.l[0];
    CHECK_THROWS_AS(param_denominator(bad), InvalidParams);

    RandomSource rs(23);
    for (int t = 0; t < 100; ++t)
        CHECK_FALSE(param_denominator(random_valid_params(rs, kQ)).is_zero());
}

TEST_CASE("trace-defect decomposition matches the defect form") {
    DefectDecomposition d = decompose_trace_defect(canonical());
    CHECK(d.coefficient == Scalar::from_int(-1, kQ));

    Mat2 a = Mat2::elementary(0, 1, kQ), b = Mat2::elementary(1, 0, kQ), c = Mat2::elementary(0, 0, kQ);
    CHECK(d.eval(a, b, c) == Scalar::from_int(-1, kQ));
    CHECK(d.eval(a, b, c) == eval_trace_defect(a, b, c));

    RandomSource rs(29);
    for (int t = 0; t < 25; ++t) {
        Params p = random_valid_params(rs, kQ);
        DefectDecomposition dp = decompose_trace_defect(p);

        Mat2 a2 = random_mat2(rs, kQ), a3 = random_mat2(rs, kQ);
        Mat2 id = Mat2::identity(kQ);
        CHECK(dp.eval(id, a2, a3) == eval_trace_defect(id, a2, a3));

        for (int bits = 0; bits < 64; ++bits) {
            Mat2 b1 = Mat2::elementary((bits >> 5) & 1, (bits >> 4) & 1, kQ);
            Mat2 b2 = Mat2::elementary((bits >> 3) & 1, (bits >> 2) & 1, kQ);
            Mat2 b3 = Mat2::elementary((bits >> 1) & 1, bits & 1, kQ);
            CHECK(dp.eval(b1, b2, b3) == eval_trace_defect(b1, b2, b3));
        }

        // on its defining rank-one triple the expansion evaluates to minus
        // the denominator
        Mat2 r1 = outer_product(p.v[0], p.l[0]);
        Mat2 r2 = outer_product(p.v[1], p.l[1]);
        Mat2 r3 = outer_product(p.v[2], p.l[2]);
        CHECK(dp.eval(r1, r2, r3) == -param_denominator(p));
    }
}

TEST_CASE("decomposition as operator equals the defect operator") {
    DefectDecomposition d = decompose_trace_defect(canonical());
    CHECK(d.as_operator(kQ) == trace_defect_operator(kQ));
}

TEST_CASE("volume_form_scale") {
    Params p = canonical();
    std::array<TraceZeroForm, 3> basis = {TraceZeroForm(p.v[0], p.l[0]), TraceZeroForm(p.v[1], p.l[1]),
                                          TraceZeroForm(p.v[2], p.l[2])};
    Mat2 c1 = Mat2::elementary(0, 0, kQ);
    Mat2 c2 = Mat2::elementary(0, 1, kQ);
    Mat2 c3 = Mat2::elementary(1, 0, kQ);
    REQUIRE(eval_volume_form(c1, c2, c3) == Scalar::one(kQ));

    Scalar alpha = volume_form_scale(basis, c1, c2, c3);
    CHECK(alpha == Scalar::from_int(-1, kQ));                 // equals -1/denominator
    CHECK(alpha == -param_denominator(p).inv());

    // reconstruction: alpha times the antisymmetrized sum equals the form
    RandomSource rs(31);
    for (int t = 0; t < 200; ++t) {
        Mat2 a1 = random_mat2(rs, kQ), a2 = random_mat2(rs, kQ), a3 = random_mat2(rs, kQ);
        Scalar sum = Scalar::zero(kQ);
        for (const Perm3& s : Perm3::all()) {
            Scalar prod = basis[s(0)].eval(a1) * basis[s(1)].eval(a2) * basis[s(2)].eval(a3);
            sum += s.signature() == 1 ? prod : -prod;
        }
        CHECK(alpha * sum == eval_volume_form(a1, a2, a3));
    }

    // dependent basis: mu2 proportional to mu1
    std::array<TraceZeroForm, 3> dependent = {TraceZeroForm(p.v[0], p.l[0]),
                                              TraceZeroForm(p.v[0], CoVec2(p.l[0][0] + p.l[0][0], p.l[0][1] + p.l[0][1])),
                                              TraceZeroForm(p.v[2], p.l[2])};
    CHECK_THROWS_AS(volume_form_scale(dependent, c1, c2, c3), DegenerateBasis);

    // calibration triple with volume form != 1
    CHECK_THROWS_AS(volume_form_scale(basis, c2, c1, c3), BadCalibration);

    CHECK_THROWS_AS(TraceZeroForm(Vec2::from_ints(1, 0, kQ), CoVec2::from_ints(1, 0, kQ)),
                    std::invalid_argument);
}

TEST_CASE("pair_matrix canonical values and index errors") {
    Params p = canonical();
    CHECK(pair_matrix(p, 2, 3) == Mat2::from_ints({0, 0, 1, -1}, kQ));
    CHECK(pair_matrix(p, 3, 1) == Mat2::from_ints({0, 1, 0, 1}, kQ));
    CHECK(pair_matrix(p, 1, 3) == Mat2::from_ints({1, -1, 0, 0}, kQ));
    CHECK(pair_matrix(p, 2, 1) == Mat2::from_ints({0, 0, 0, 1}, kQ));
    CHECK(pair_matrix(p, 1, 2) == Mat2::from_ints({1, 0, 0, 0}, kQ));
    CHECK(pair_matrix(p, 3, 2) == Mat2::from_ints({1, 0, 1, 0}, kQ));
    CHECK_THROWS_AS(pair_matrix(p, 1, 1), InvalidIndex);
    CHECK_THROWS_AS(pair_matrix(p, 0, 2), InvalidIndex);
    CHECK_THROWS_AS(pair_matrix(p, 1, 4), InvalidIndex);
}

TEST_CASE("build_algorithm term structure") {
    Params p = canonical();
    BilinearAlgorithm alg = build_algorithm(p);
    REQUIRE(alg.rank() == 7);

    Mat2 id = Mat2::identity(kQ);
    CHECK(alg.term(0).x == id);
    CHECK(alg.term(0).y == id);
    CHECK(alg.term(0).z == id);

    // term order follows the permutation enumeration: identity cycle first
    CHECK(alg.term(1).x == pair_matrix(p, 1, 2));
    CHECK(alg.term(1).y == pair_matrix(p, 2, 3));
    CHECK(alg.term(1).z == pair_matrix(p, 3, 1));  // +1 sign, denominator 1

    // the (12) transposition term carries the negative sign on z
    CHECK(alg.term(4).x == pair_matrix(p, 2, 1));
    CHECK(alg.term(4).y == pair_matrix(p, 1, 3));
    CHECK(alg.term(4).z == -pair_matrix(p, 3, 2));
}

TEST_CASE("generated schemes verify over prime fields") {
    for (FieldDesc field : {FieldDesc::prime(7), FieldDesc::prime(5)}) {
        RandomSource rs(37);
        for (int t = 0; t < 25; ++t) {
            BilinearAlgorithm alg = build_algorithm(random_valid_params(rs, field));
            CHECK(verify_bilinear(alg).passed);
        }
    }
}

TEST_CASE("canonical parameters work over GF(2)") {
    FieldDesc f2 = FieldDesc::prime(2);
    Params p = strassen_params(f2);
    CHECK(p.l[2] == CoVec2::from_ints(1, 1, f2));  // -1 collapses to 1
    CHECK(validate_params(p).valid());
    CHECK(verify_bilinear(build_algorithm(p)).passed);
}

TEST_CASE("the three validity conditions agree under the hypothesis") {
    for (FieldDesc field : {kQ, FieldDesc::prime(2), FieldDesc::prime(5)}) {
        RandomSource rs(41);
        for (int t = 0; t < 150; ++t) {
            Params p = random_hypothesis_params(rs, field);
            auto r = validate_params(p);
            REQUIRE(r.hypothesis_ok);
            CHECK(r.vectors_noncolinear == r.forms_noncolinear);
            CHECK(r.vectors_noncolinear == r.forms_independent);
        }
        for (int t = 0; t < 30; ++t) {
            auto r = validate_params(degenerate_params(rs, field));
            REQUIRE(r.hypothesis_ok);
            CHECK_FALSE(r.vectors_noncolinear);
            CHECK_FALSE(r.forms_noncolinear);
            CHECK_FALSE(r.forms_independent);
        }
    }
}

TEST_SUITE_END();

#include <doctest.h>

#include "strassen/forms.hpp"
#include "strassen/sampling.hpp"

using namespace strassen;

namespace {

const FieldDesc kQ = FieldDesc::rationals();

// Independent 2x2 product, written out entry by entry; the oracle for every
// trace identity below.
Mat2 ref_mul(const Mat2& a, const Mat2& b) {
    Mat2 c(a.field());
    c.at(0, 0) = a.at(0, 0) * b.at(0, 0) + a.at(0, 1) * b.at(1, 0);
    c.at(0, 1) = a.at(0, 0) * b.at(0, 1) + a.at(0, 1) * b.at(1, 1);
    c.at(1, 0) = a.at(1, 0) * b.at(0, 0) + a.at(1, 1) * b.at(1, 0);
    c.at(1, 1) = a.at(1, 0) * b.at(0, 1) + a.at(1, 1) * b.at(1, 1);
    return c;
}

Mat2 e(std::size_t i, std::size_t j) { return Mat2::elementary(i, j, kQ); }

}  // namespace

TEST_SUITE_BEGIN("tensor_core");

TEST_CASE("outer_product values") {
    CHECK(outer_product(Vec2::from_ints(1, 0, kQ), CoVec2::from_ints(0, 1, kQ)) ==
          Mat2::from_ints({0, 1, 0, 0}, kQ));

    // canonical parameter pairs
    Vec2 v1 = Vec2::from_ints(1, 0, kQ), v3 = Vec2::from_ints(1, 1, kQ);
    CoVec2 l2 = CoVec2::from_ints(1, 0, kQ);
    CHECK(outer_product(v1, l2) == Mat2::from_ints({1, 0, 0, 0}, kQ));
    CHECK(outer_product(v3, l2) == Mat2::from_ints({1, 0, 1, 0}, kQ));
}

TEST_CASE("rank_one_form_eval values and commuting triangle") {
    Vec2 v = Vec2::from_ints(1, 0, kQ);
    CoVec2 l = CoVec2::from_ints(0, 1, kQ);
    CHECK(rank_one_form_eval(v, l, Mat2::identity(kQ)) == Scalar::zero(kQ));
    CHECK(rank_one_form_eval(v, l, Mat2::from_ints({0, 0, 1, 0}, kQ)) == Scalar::one(kQ));

    RandomSource rs(3);
    for (int t = 0; t < 200; ++t) {
        Vec2 w = random_vec2(rs, kQ);
        CoVec2 m = random_covec2(rs, kQ);
        Mat2 a = random_mat2(rs, kQ);
        CHECK(rank_one_form_eval(w, m, a) == trace_pairing(outer_product(w, m), a));
    }
}

TEST_CASE("trace_pairing values") {
    CHECK(trace_pairing(Mat2::identity(kQ), Mat2::identity(kQ)) == Scalar::from_int(2, kQ));
    CHECK(trace_pairing(e(0, 1), e(1, 0)) == ref_mul(e(0, 1), e(1, 0)).trace());
    CHECK(trace_pairing(e(0, 1), e(1, 0)) == Scalar::one(kQ));
}

TEST_CASE("outer product equations") {
    RandomSource rs(5);
    for (int t = 0; t < 200; ++t) {
        Vec2 v = random_vec2(rs, kQ), u = random_vec2(rs, kQ);
        CoVec2 l = random_covec2(rs, kQ), m = random_covec2(rs, kQ);
        CHECK(ref_mul(outer_product(v, l), outer_product(u, m)) ==
              outer_product(v, m).scaled(l.eval(u)));
        CHECK(rank_one_form_eval(v, l, outer_product(u, m)) == l.eval(u) * m.eval(v));
        CHECK(outer_product(v, l).trace() == l.eval(v));
    }
}

TEST_CASE("kron3 conventions") {
    CHECK(kron3(Mat2::identity(kQ), Mat2::identity(kQ), Mat2::identity(kQ)) == Mat8::identity(kQ));
    CHECK(kron3(e(0, 0), e(0, 0), e(0, 0)) == Mat8::elementary(0, 0, kQ));
    // big-endian index: e11 (x) e11 (x) e12 hits column 1 = (0,0,1)
    CHECK(kron3(e(0, 0), e(0, 0), e(0, 1)) == Mat8::elementary(0, 1, kQ));
    CHECK(kron3(e(1, 0), e(0, 0), e(0, 0)) == Mat8::elementary(4, 0, kQ));

    RandomSource rs(7);
    for (int t = 0; t < 100; ++t) {
        Mat2 a = random_mat2(rs, kQ), b = random_mat2(rs, kQ), c = random_mat2(rs, kQ);
        CHECK(kron3(a, b, c).trace() == a.trace() * b.trace() * c.trace());
    }
}

TEST_CASE("perm_operator composition follows the reversed order") {
    CHECK(perm_operator(Perm3::identity(), kQ) == Mat8::identity(kQ));

    // worked out from the tensor-factor action: applying t first, then s,
    // permutes factors by t-after-s
    for (const Perm3& s : Perm3::all())
        for (const Perm3& t : Perm3::all())
            CHECK(perm_operator(s, kQ) * perm_operator(t, kQ) == perm_operator(t.after(s), kQ));

    CHECK(perm_operator(Perm3::cycle123(), kQ) * perm_operator(Perm3::cycle321(), kQ) ==
          Mat8::identity(kQ));
}

TEST_CASE("perm_form_eval closed forms") {
    Mat2 a = e(0, 1), b = e(1, 0), c = e(0, 0);
    CHECK(perm_form_eval(Perm3::identity(), c, c, c) == Scalar::one(kQ));
    CHECK(perm_form_eval(Perm3::cycle123(), a, b, c) == Scalar::one(kQ));   // tr(e12 e21 e11) = 1
    CHECK(perm_form_eval(Perm3::cycle321(), a, b, c) == Scalar::zero(kQ));  // tr(e11 e21 e12) = 0

    RandomSource rs(9);
    for (int t = 0; t < 200; ++t) {
        Mat2 a1 = random_mat2(rs, kQ), a2 = random_mat2(rs, kQ), a3 = random_mat2(rs, kQ);
        CHECK(perm_form_eval(Perm3::identity(), a1, a2, a3) == a1.trace() * a2.trace() * a3.trace());
        CHECK(perm_form_eval(Perm3::cycle123(), a1, a2, a3) == ref_mul(ref_mul(a1, a2), a3).trace());
        CHECK(perm_form_eval(Perm3::cycle321(), a1, a2, a3) == ref_mul(ref_mul(a3, a2), a1).trace());
    }
}

TEST_CASE("cycle convention pin: (123) evaluates the forward product") {
    // a triple on which the two cyclic orders differ; a swapped convention
    // would flip these values
    Mat2 a = e(0, 0), b = e(0, 1), c = e(1, 0);
    CHECK(ref_mul(ref_mul(a, b), c).trace() == Scalar::one(kQ));
    CHECK(ref_mul(ref_mul(c, b), a).trace() == Scalar::zero(kQ));
    CHECK(perm_form_eval(Perm3::cycle123(), a, b, c) == Scalar::one(kQ));
    CHECK(perm_form_eval(Perm3::cycle321(), a, b, c) == Scalar::zero(kQ));
}

TEST_CASE("volume form values and antisymmetry") {
    CHECK(eval_volume_form(e(0, 0), e(0, 1), e(1, 0)) == Scalar::one(kQ));

    RandomSource rs(11);
    for (int t = 0; t < 100; ++t) {
        Mat2 a = random_mat2(rs, kQ), b = random_mat2(rs, kQ);
        CHECK(eval_volume_form(Mat2::identity(kQ), a, b) == Scalar::zero(kQ));
        CHECK(eval_volume_form(a, a, b) == Scalar::zero(kQ));
        Mat2 c = random_mat2(rs, kQ);
        Scalar g = eval_volume_form(a, b, c);
        CHECK(eval_volume_form(b, a, c) == -g);
        CHECK(eval_volume_form(c, b, a) == -g);
        CHECK(eval_volume_form(a, c, b) == -g);
    }
}

TEST_CASE("volume form in characteristic 2 is swap-invariant") {
    FieldDesc f2 = FieldDesc::prime(2);
    RandomSource rs(13);
    for (int t = 0; t < 100; ++t) {
        Mat2 a = random_mat2(rs, f2), b = random_mat2(rs, f2), c = random_mat2(rs, f2);
        CHECK(eval_volume_form(b, a, c) == eval_volume_form(a, b, c));
    }
}

TEST_CASE("trace defect values") {
    CHECK(eval_trace_defect(Mat2::identity(kQ), Mat2::identity(kQ), Mat2::identity(kQ)) ==
          Scalar::from_int(6, kQ));
    CHECK(eval_trace_defect(e(0, 0), e(0, 0), e(0, 0)) == Scalar::zero(kQ));
    CHECK(eval_trace_defect(e(0, 1), e(1, 0), e(0, 0)) == Scalar::from_int(-1, kQ));
}

TEST_CASE("form_to_operator on permutation and rank-one terms") {
    CHECK(form_to_operator({FormTerm::perm(Scalar::one(kQ), Perm3::identity())}, kQ) ==
          Mat8::identity(kQ));

    // the volume form as a formal difference of permutation forms
    CHECK(form_to_operator({FormTerm::perm(Scalar::one(kQ), Perm3::cycle123()),
                            FormTerm::perm(Scalar::from_int(-1, kQ), Perm3::cycle321())},
                           kQ) == volume_form_operator(kQ));

    RandomSource rs(17);
    for (int t = 0; t < 50; ++t) {
        std::array<RankOneFactor, 3> f = {RankOneFactor{random_vec2(rs, kQ), random_covec2(rs, kQ)},
                                          RankOneFactor{random_vec2(rs, kQ), random_covec2(rs, kQ)},
                                          RankOneFactor{random_vec2(rs, kQ), random_covec2(rs, kQ)}};
        Mat8 op = form_to_operator({FormTerm::rank_one(Scalar::one(kQ), f)}, kQ);
        CHECK(op == kron3(outer_product(f[0].v, f[0].l), outer_product(f[1].v, f[1].l),
                          outer_product(f[2].v, f[2].l)));

        // evaluation agrees with the product of the three factor evaluations
        Mat2 a1 = random_mat2(rs, kQ), a2 = random_mat2(rs, kQ), a3 = random_mat2(rs, kQ);
        Scalar direct = rank_one_form_eval(f[0].v, f[0].l, a1) * rank_one_form_eval(f[1].v, f[1].l, a2) *
                        rank_one_form_eval(f[2].v, f[2].l, a3);
        CHECK(form_eval(op, a1, a2, a3) == direct);
    }
}

TEST_CASE("compose_with_perm carries the volume form to the trace defect") {
    CHECK(compose_with_perm(volume_form_operator(kQ), Perm3::cycle321()) == trace_defect_operator(kQ));

    RandomSource rs(19);
    Mat8 g = volume_form_operator(kQ);
    CHECK(compose_with_perm(g, Perm3::identity()) == g);
    for (const Perm3& s : Perm3::all())
        CHECK(compose_with_perm(compose_with_perm(g, s), s.inverse()) == g);

    for (int t = 0; t < 50; ++t) {
        Mat2 a1 = random_mat2(rs, kQ), a2 = random_mat2(rs, kQ), a3 = random_mat2(rs, kQ);
        CHECK(form_eval(trace_defect_operator(kQ), a1, a2, a3) == eval_trace_defect(a1, a2, a3));
        CHECK(form_eval(g, a1, a2, a3) == eval_volume_form(a1, a2, a3));
    }
}

TEST_CASE("shifting the cyclic form by its inverse collapses to the identity form") {
    CHECK(compose_with_perm(perm_operator(Perm3::cycle123(), kQ), Perm3::cycle321()) ==
          perm_operator(Perm3::identity(), kQ));
}

TEST_SUITE_END();

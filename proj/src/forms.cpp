#include "strassen/forms.hpp"

namespace strassen {

Mat2 outer_product(const Vec2& v, const CoVec2& l) {
    Mat2 m(v.field());
    for (std::size_t i = 0; i < 2; ++i)
        for (std::size_t j = 0; j < 2; ++j) m.at(i, j) = v[i] * l[j];
    return m;
}

Scalar rank_one_form_eval(const Vec2& v, const CoVec2& l, const Mat2& a) {
    return l.eval(apply(a, v));
}

Scalar trace_pairing(const Mat2& a, const Mat2& b) { return trace_of_product(a, b); }

namespace {

// Unpacks b = 4*i1 + 2*i2 + i3 into {i1, i2, i3}.
std::array<int, 3> bits(int b) { return {(b >> 2) & 1, (b >> 1) & 1, b & 1}; }

}  // namespace

Mat8 kron3(const Mat2& a1, const Mat2& a2, const Mat2& a3) {
    Mat8 k(a1.field());
    for (int row = 0; row < 8; ++row) {
        auto r = bits(row);
        for (int col = 0; col < 8; ++col) {
            auto c = bits(col);
            k.at(row, col) = a1.at(r[0], c[0]) * a2.at(r[1], c[1]) * a3.at(r[2], c[2]);
        }
    }
    return k;
}

Mat8 perm_operator(const Perm3& sigma, const FieldDesc& field) {
    Mat8 m(field);
    for (int col = 0; col < 8; ++col) {
        auto i = bits(col);
        int row = (i[sigma(0)] << 2) | (i[sigma(1)] << 1) | i[sigma(2)];
        m.at(row, col) = Scalar::one(field);
    }
    return m;
}

Scalar perm_form_eval(const Perm3& sigma, const Mat2& a1, const Mat2& a2, const Mat2& a3) {
    return trace_of_product(perm_operator(sigma, a1.field()), kron3(a1, a2, a3));
}

Scalar eval_volume_form(const Mat2& a1, const Mat2& a2, const Mat2& a3) {
    return (a1 * a2 * a3).trace() - (a3 * a2 * a1).trace();
}

Scalar eval_trace_defect(const Mat2& a1, const Mat2& a2, const Mat2& a3) {
    return a1.trace() * a2.trace() * a3.trace() - (a1 * a2 * a3).trace();
}

Mat8 form_to_operator(const std::vector<FormTerm>& terms, const FieldDesc& field) {
    Mat8 acc(field);
    for (const auto& t : terms) {
        Mat8 part = std::holds_alternative<Perm3>(t.body)
                        ? perm_operator(std::get<Perm3>(t.body), field)
                        : [&] {
                              const auto& f = std::get<std::array<RankOneFactor, 3>>(t.body);
                              return kron3(outer_product(f[0].v, f[0].l),
                                           outer_product(f[1].v, f[1].l),
                                           outer_product(f[2].v, f[2].l));
                          }();
        acc = acc + (t.coeff.is_one() ? part : part.scaled(t.coeff));
    }
    return acc;
}

Scalar form_eval(const Mat8& op, const Mat2& a1, const Mat2& a2, const Mat2& a3) {
    return trace_of_product(op, kron3(a1, a2, a3));
}

Mat8 compose_with_perm(const Mat8& op, const Perm3& sigma) {
    return op * perm_operator(sigma, op.field());
}

Mat8 volume_form_operator(const FieldDesc& field) {
    return perm_operator(Perm3::cycle123(), field) - perm_operator(Perm3::cycle321(), field);
}

Mat8 trace_defect_operator(const FieldDesc& field) {
    return perm_operator(Perm3::identity(), field) - perm_operator(Perm3::cycle123(), field);
}

}  // namespace strassen

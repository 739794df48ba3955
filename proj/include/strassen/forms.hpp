#pragma once

#include <array>
#include <variant>
#include <vector>

#include "strassen/linalg.hpp"
#include "strassen/perm.hpp"

namespace strassen {

/// Outer product v * lambda: the rank <= 1 map u -> lambda(u) v.
Mat2 outer_product(const Vec2& v, const CoVec2& l);

/// The rank-one linear form a -> lambda(a(v)), evaluated at a.
/// Agrees with trace_pairing(outer_product(v, l), a).
Scalar rank_one_form_eval(const Vec2& v, const CoVec2& l, const Mat2& a);

/// tr(a b), the trace pairing identifying a matrix with a linear form.
Scalar trace_pairing(const Mat2& a, const Mat2& b);

/// Kronecker product a1 (x) a2 (x) a3 on V^(x3), basis index b = 4*i1 + 2*i2 + i3.
Mat8 kron3(const Mat2& a1, const Mat2& a2, const Mat2& a3);

/// The operator permuting tensor factors: sends basis vector (i1,i2,i3)
/// to (i_{s(1)}, i_{s(2)}, i_{s(3)}).
Mat8 perm_operator(const Perm3& sigma, const FieldDesc& field);

/// tr(perm_operator(s) * kron3(a1,a2,a3)). Closed forms: identity gives
/// tr(a1)tr(a2)tr(a3), (123) gives tr(a1 a2 a3), (321) gives tr(a3 a2 a1).
Scalar perm_form_eval(const Perm3& sigma, const Mat2& a1, const Mat2& a2, const Mat2& a3);

/// The volume form on trace-split 2x2 matrices: tr(a1 a2 a3) - tr(a3 a2 a1).
/// Antisymmetric, and vanishes whenever any argument is a multiple of identity.
Scalar eval_volume_form(const Mat2& a1, const Mat2& a2, const Mat2& a3);

/// tr(a1)tr(a2)tr(a3) - tr(a1 a2 a3), the defect of the trace-product rule.
Scalar eval_trace_defect(const Mat2& a1, const Mat2& a2, const Mat2& a3);

/// One rank-one linear form on L(V), held as its defining pair.
struct RankOneFactor {
    Vec2 v;
    CoVec2 l;
};

/// One summand of a formal trilinear form: either a permutation trace form
/// or a triple tensor of rank-one forms, with a scalar coefficient.
struct FormTerm {
    Scalar coeff;
    std::variant<Perm3, std::array<RankOneFactor, 3>> body;

    static FormTerm perm(Scalar c, Perm3 s) { return FormTerm{std::move(c), std::move(s)}; }
    static FormTerm rank_one(Scalar c, std::array<RankOneFactor, 3> f) {
        return FormTerm{std::move(c), std::move(f)};
    }
};

/// Dual-operator representation: returns T with
/// F(a1,a2,a3) = tr(T * kron3(a1,a2,a3)) for the formal sum F.
Mat8 form_to_operator(const std::vector<FormTerm>& terms, const FieldDesc& field);

/// Evaluates a form given by its dual operator.
Scalar form_eval(const Mat8& op, const Mat2& a1, const Mat2& a2, const Mat2& a3);

/// Post-composition with left multiplication by the permutation operator:
/// the form represented by T becomes T * perm_operator(sigma).
Mat8 compose_with_perm(const Mat8& op, const Perm3& sigma);

/// The volume form as a dual operator: perm (123) minus perm (321).
Mat8 volume_form_operator(const FieldDesc& field);

/// The trace-defect form as a dual operator: identity minus perm (123).
Mat8 trace_defect_operator(const FieldDesc& field);

}  // namespace strassen

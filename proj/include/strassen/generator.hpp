#pragma once

#include <array>
#include <string>
#include <vector>

#include "strassen/bilinear.hpp"
#include "strassen/forms.hpp"

namespace strassen {

/// Generator input: three vectors and three forms with l_i(v_i) = 0.
struct Params {
    std::array<Vec2, 3> v;
    std::array<CoVec2, 3> l;

    FieldDesc field() const { return v[0].field(); }
};

/// Per-condition validation outcome for a parameter sextuple.
/// The three numbered conditions are equivalent whenever the hypothesis
/// holds; they are evaluated independently here so the equivalence itself
/// is testable.
struct ValidationReport {
    bool hypothesis_ok = false;         // nonzero v_i, nonzero l_i, l_i(v_i) = 0
    bool vectors_noncolinear = false;   // condition 1: v_i pairwise noncolinear
    bool forms_noncolinear = false;     // condition 2: l_i pairwise noncolinear
    bool forms_independent = false;     // condition 3: the rank-one forms are independent
    std::vector<std::string> failures;  // names each failed requirement

    bool valid() const { return hypothesis_ok && vectors_noncolinear; }
};

ValidationReport validate_params(const Params& p);

/// l1(v2) * l2(v3) * l3(v1); nonzero for every valid parameter set.
/// Throws InvalidParams when validation fails.
Scalar param_denominator(const Params& p);

/// A linear form on L(V) vanishing on the identity, held as a rank-one
/// pair (v, l) with l(v) = 0.
class TraceZeroForm {
public:
    TraceZeroForm(Vec2 v, CoVec2 l) : v_(std::move(v)), l_(std::move(l)) {
        if (!l_.eval(v_).is_zero())
            throw std::invalid_argument("form does not vanish on the identity: l(v) != 0");
    }

    const Vec2& vec() const { return v_; }
    const CoVec2& form() const { return l_; }

    /// mu(a) = l(a(v))
    Scalar eval(const Mat2& a) const { return rank_one_form_eval(v_, l_, a); }

private:
    Vec2 v_;
    CoVec2 l_;
};

/// Scale factor of the antisymmetrized expansion of the volume form in the
/// given basis: the inverse of sum_s sign(s) * prod_i mu_{s(i)}(c_i),
/// calibrated against a triple with volume form value 1.
/// Throws BadCalibration if the triple is miscalibrated and DegenerateBasis
/// if the forms are dependent (the defining sum vanishes).
Scalar volume_form_scale(const std::array<TraceZeroForm, 3>& basis,
                         const Mat2& c1, const Mat2& c2, const Mat2& c3);

/// One signed summand of the trace-defect expansion.
struct DefectTerm {
    Perm3 sigma;
    int sign;                              // signature of sigma
    std::array<RankOneFactor, 3> factors;  // factor i pairs v_{s(i)} with l_{s((123)(i))}
};

/// Rank-6 expansion of the trace-defect form determined by a valid
/// parameter set: coefficient * sum over the six signed terms.
struct DefectDecomposition {
    Scalar coefficient;  // -1 / param_denominator
    std::array<DefectTerm, 6> terms;

    Scalar eval(const Mat2& a1, const Mat2& a2, const Mat2& a3) const;
    Mat8 as_operator(const FieldDesc& field) const;
};

DefectDecomposition decompose_trace_defect(const Params& p);

/// The rank-one matrix v_i * l_j (1-based indices, i != j).
Mat2 pair_matrix(const Params& p, int i, int j);

/// Builds the rank-7 multiplication scheme: term 0 is (I, I, I); each
/// permutation s contributes x = v_{s(1)} l_{s(2)}, y = v_{s(2)} l_{s(3)},
/// z = sign(s)/denominator * v_{s(3)} l_{s(1)}.
BilinearAlgorithm build_algorithm(const Params& p);

/// The parameter choice whose scheme is Strassen's original algorithm:
/// v = (1,0), (0,1), (1,1) and l = (0,1), (1,0), (1,-1).
Params strassen_params(const FieldDesc& field);

}  // namespace strassen

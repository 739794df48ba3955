#include "strassen/sampling.hpp"

namespace strassen {

Scalar random_scalar(RandomSource& rs, const FieldDesc& field, std::int64_t num_range,
                     std::int64_t den_range) {
    if (field.is_rational()) {
        std::int64_t num = rs.int_in(-num_range, num_range);
        std::int64_t den = den_range > 1 ? rs.int_in(1, den_range) : 1;
        return Scalar(Rational(num, den));
    }
    return Scalar(PrimeFieldElem(rs.int_in(0, static_cast<std::int64_t>(field.p) - 1), field.p));
}

Scalar random_nonzero_scalar(RandomSource& rs, const FieldDesc& field, std::int64_t num_range,
                             std::int64_t den_range) {
    for (;;) {
        Scalar s = random_scalar(rs, field, num_range, den_range);
        if (!s.is_zero()) return s;
    }
}

Vec2 random_vec2(RandomSource& rs, const FieldDesc& field, std::int64_t range) {
    Scalar a = random_scalar(rs, field, range);
    Scalar b = random_scalar(rs, field, range);
    return Vec2(std::move(a), std::move(b));
}

Vec2 random_nonzero_vec2(RandomSource& rs, const FieldDesc& field, std::int64_t range) {
    for (;;) {
        Vec2 v = random_vec2(rs, field, range);
        if (!v.is_zero()) return v;
    }
}

CoVec2 random_covec2(RandomSource& rs, const FieldDesc& field, std::int64_t range) {
    Scalar a = random_scalar(rs, field, range);
    Scalar b = random_scalar(rs, field, range);
    return CoVec2(std::move(a), std::move(b));
}

Mat2 random_mat2(RandomSource& rs, const FieldDesc& field, std::int64_t num_range,
                 std::int64_t den_range) {
    Mat2 m(field);
    for (std::size_t i = 0; i < 2; ++i)
        for (std::size_t j = 0; j < 2; ++j) m.at(i, j) = random_scalar(rs, field, num_range, den_range);
    return m;
}

CoVec2 kernel_form(const Vec2& v) { return CoVec2(-v[1], v[0]); }

Params random_hypothesis_params(RandomSource& rs, const FieldDesc& field) {
    auto make_pair = [&](Vec2 v) {
        CoVec2 k = kernel_form(v);
        Scalar scale = random_nonzero_scalar(rs, field, 3);
        return std::pair<Vec2, CoVec2>(std::move(v), CoVec2(k[0] * scale, k[1] * scale));
    };
    auto p1 = make_pair(random_nonzero_vec2(rs, field));
    auto p2 = make_pair(random_nonzero_vec2(rs, field));
    auto p3 = make_pair(random_nonzero_vec2(rs, field));
    return Params{{p1.first, p2.first, p3.first}, {p1.second, p2.second, p3.second}};
}

Params random_valid_params(RandomSource& rs, const FieldDesc& field) {
    for (;;) {
        Params p = random_hypothesis_params(rs, field);
        if (validate_params(p).valid()) return p;
    }
}

Params degenerate_params(RandomSource& rs, const FieldDesc& field) {
    Vec2 v1 = random_nonzero_vec2(rs, field);
    Scalar c = random_nonzero_scalar(rs, field, 3);
    Vec2 v2(v1[0] * c, v1[1] * c);  // forces every condition to fail
    Vec2 v3 = random_nonzero_vec2(rs, field);

    auto scaled_kernel = [&](const Vec2& v) {
        CoVec2 k = kernel_form(v);
        Scalar s = random_nonzero_scalar(rs, field, 3);
        return CoVec2(k[0] * s, k[1] * s);
    };
    return Params{{v1, v2, v3}, {scaled_kernel(v1), scaled_kernel(v2), scaled_kernel(v3)}};
}

}  // namespace strassen

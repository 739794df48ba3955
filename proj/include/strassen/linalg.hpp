#pragma once

#include <array>
#include <cstddef>
#include <initializer_list>
#include <string>

#include "strassen/scalar.hpp"

namespace strassen {

class CoVec2;

/// Column vector in the fixed basis of V = k^2.
class Vec2 {
public:
    Vec2(Scalar x0, Scalar x1) : e_{std::move(x0), std::move(x1)} {
        if (e_[0].field() != e_[1].field()) throw FieldMismatch("vector coordinates");
    }

    static Vec2 from_ints(std::int64_t x0, std::int64_t x1, const FieldDesc& f) {
        return Vec2(Scalar::from_int(x0, f), Scalar::from_int(x1, f));
    }

    const Scalar& operator[](std::size_t i) const { return e_[i]; }
    FieldDesc field() const { return e_[0].field(); }
    bool is_zero() const { return e_[0].is_zero() && e_[1].is_zero(); }

    bool operator==(const Vec2& o) const { return e_[0] == o.e_[0] && e_[1] == o.e_[1]; }

    std::string str() const { return "(" + e_[0].str() + ", " + e_[1].str() + ")"; }

private:
    std::array<Scalar, 2> e_;
};

/// Linear form on V, row convention.
class CoVec2 {
public:
    CoVec2(Scalar x0, Scalar x1) : e_{std::move(x0), std::move(x1)} {
        if (e_[0].field() != e_[1].field()) throw FieldMismatch("covector coordinates");
    }

    static CoVec2 from_ints(std::int64_t x0, std::int64_t x1, const FieldDesc& f) {
        return CoVec2(Scalar::from_int(x0, f), Scalar::from_int(x1, f));
    }

    const Scalar& operator[](std::size_t i) const { return e_[i]; }
    FieldDesc field() const { return e_[0].field(); }
    bool is_zero() const { return e_[0].is_zero() && e_[1].is_zero(); }

    /// lambda(v)
    Scalar eval(const Vec2& v) const { return e_[0] * v[0] + e_[1] * v[1]; }

    bool operator==(const CoVec2& o) const { return e_[0] == o.e_[0] && e_[1] == o.e_[1]; }

    std::string str() const { return "(" + e_[0].str() + ", " + e_[1].str() + ")"; }

private:
    std::array<Scalar, 2> e_;
};

/// Two vectors (or two covectors) spanning the same line.
inline bool colinear(const Vec2& a, const Vec2& b) {
    return (a[0] * b[1] - a[1] * b[0]).is_zero();
}
inline bool colinear(const CoVec2& a, const CoVec2& b) {
    return (a[0] * b[1] - a[1] * b[0]).is_zero();
}

/// Dense N x N matrix of exact scalars, row-major. All entries share one field.
template <std::size_t N>
class SqMat {
public:
    explicit SqMat(const FieldDesc& f) {
        e_.fill(Scalar::zero(f));
    }

    static SqMat zero(const FieldDesc& f) { return SqMat(f); }

    static SqMat identity(const FieldDesc& f) {
        SqMat m(f);
        for (std::size_t i = 0; i < N; ++i) m.at(i, i) = Scalar::one(f);
        return m;
    }

    /// Elementary matrix with a single 1 at (i, j).
    static SqMat elementary(std::size_t i, std::size_t j, const FieldDesc& f) {
        SqMat m(f);
        m.at(i, j) = Scalar::one(f);
        return m;
    }

    static SqMat from_ints(std::initializer_list<std::int64_t> entries, const FieldDesc& f) {
        SqMat m(f);
        std::size_t k = 0;
        for (std::int64_t v : entries) m.e_[k++] = Scalar::from_int(v, f);
        return m;
    }

    Scalar& at(std::size_t i, std::size_t j) { return e_[i * N + j]; }
    const Scalar& at(std::size_t i, std::size_t j) const { return e_[i * N + j]; }

    FieldDesc field() const { return e_[0].field(); }

    SqMat operator+(const SqMat& o) const {
        SqMat r(*this);
        for (std::size_t k = 0; k < N * N; ++k) r.e_[k] += o.e_[k];
        return r;
    }

    SqMat operator-(const SqMat& o) const {
        SqMat r(*this);
        for (std::size_t k = 0; k < N * N; ++k) r.e_[k] -= o.e_[k];
        return r;
    }

    SqMat operator-() const {
        SqMat r(*this);
        for (auto& x : r.e_) x = -x;
        return r;
    }

    SqMat operator*(const SqMat& o) const {
        SqMat r(field());
        for (std::size_t i = 0; i < N; ++i)
            for (std::size_t k = 0; k < N; ++k) {
                if (at(i, k).is_zero()) continue;
                for (std::size_t j = 0; j < N; ++j) r.at(i, j) += at(i, k) * o.at(k, j);
            }
        return r;
    }

    SqMat scaled(const Scalar& c) const {
        SqMat r(*this);
        for (auto& x : r.e_) x *= c;
        return r;
    }

    Scalar trace() const {
        Scalar t = Scalar::zero(field());
        for (std::size_t i = 0; i < N; ++i) t += at(i, i);
        return t;
    }

    bool is_zero() const {
        for (const auto& x : e_)
            if (!x.is_zero()) return false;
        return true;
    }

    bool operator==(const SqMat& o) const {
        for (std::size_t k = 0; k < N * N; ++k)
            if (e_[k] != o.e_[k]) return false;
        return true;
    }
    bool operator!=(const SqMat& o) const { return !(*this == o); }

    /// "[[a,b],[c,d]]" with canonical scalar text.
    std::string str() const {
        std::string s = "[";
        for (std::size_t i = 0; i < N; ++i) {
            s += i ? ",[" : "[";
            for (std::size_t j = 0; j < N; ++j) {
                if (j) s += ",";
                s += at(i, j).str();
            }
            s += "]";
        }
        return s + "]";
    }

private:
    std::array<Scalar, N * N> e_;
};

using Mat2 = SqMat<2>;
using Mat8 = SqMat<8>;

/// tr(a * b) without forming the product.
template <std::size_t N>
Scalar trace_of_product(const SqMat<N>& a, const SqMat<N>& b) {
    Scalar t = Scalar::zero(a.field());
    for (std::size_t i = 0; i < N; ++i)
        for (std::size_t j = 0; j < N; ++j) t += a.at(i, j) * b.at(j, i);
    return t;
}

/// a applied to v as a linear map.
inline Vec2 apply(const Mat2& a, const Vec2& v) {
    return Vec2(a.at(0, 0) * v[0] + a.at(0, 1) * v[1],
                a.at(1, 0) * v[0] + a.at(1, 1) * v[1]);
}

}  // namespace strassen

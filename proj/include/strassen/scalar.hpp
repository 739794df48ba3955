#pragma once

#include <cstdint>
#include <string>
#include <variant>

#include "strassen/errors.hpp"
#include "strassen/prime_field.hpp"
#include "strassen/rational.hpp"

namespace strassen {

/// Describes the field all scalars of one computation live in.
struct FieldDesc {
    enum class Kind { rational, prime };

    Kind kind = Kind::rational;
    std::uint64_t p = 0;  // modulus, meaningful for Kind::prime only

    static FieldDesc rationals() { return FieldDesc{Kind::rational, 0}; }
    static FieldDesc prime(std::uint64_t p) {
        PrimeFieldElem::check_modulus(p);
        return FieldDesc{Kind::prime, p};
    }

    bool is_rational() const { return kind == Kind::rational; }
    std::uint64_t characteristic() const { return kind == Kind::prime ? p : 0; }

    bool operator==(const FieldDesc& o) const {
        return kind == o.kind && (kind == Kind::rational || p == o.p);
    }
    bool operator!=(const FieldDesc& o) const { return !(*this == o); }

    std::string str() const {
        return kind == Kind::rational ? "rational" : "GF(" + std::to_string(p) + ")";
    }
};

/// Exact field element: arbitrary-precision rational or GF(p) value.
/// Mixing fields in one operation throws FieldMismatch, never coerces.
class Scalar {
public:
    Scalar() : v_(Rational(0)) {}
    Scalar(Rational r) : v_(std::move(r)) {}            // NOLINT(google-explicit-constructor)
    Scalar(PrimeFieldElem e) : v_(std::move(e)) {}      // NOLINT(google-explicit-constructor)

    static Scalar zero(const FieldDesc& f) { return from_int(0, f); }
    static Scalar one(const FieldDesc& f) { return from_int(1, f); }

    static Scalar from_int(std::int64_t n, const FieldDesc& f) {
        if (f.is_rational()) return Scalar(Rational(n));
        return Scalar(PrimeFieldElem(n, f.p));
    }

    FieldDesc field() const {
        if (const auto* e = std::get_if<PrimeFieldElem>(&v_)) return FieldDesc::prime(e->modulus());
        return FieldDesc::rationals();
    }

    bool is_rational() const { return std::holds_alternative<Rational>(v_); }
    const Rational& rational() const { return std::get<Rational>(v_); }
    const PrimeFieldElem& prime_elem() const { return std::get<PrimeFieldElem>(v_); }

    bool is_zero() const {
        return std::visit([](const auto& x) { return x.is_zero(); }, v_);
    }
    bool is_one() const {
        return std::visit([](const auto& x) { return x.is_one(); }, v_);
    }

    Scalar operator-() const {
        return std::visit([](const auto& x) { return Scalar(-x); }, v_);
    }

    Scalar operator+(const Scalar& o) const { return binop(o, [](const auto& a, const auto& b) { return a + b; }); }
    Scalar operator-(const Scalar& o) const { return binop(o, [](const auto& a, const auto& b) { return a - b; }); }
    Scalar operator*(const Scalar& o) const { return binop(o, [](const auto& a, const auto& b) { return a * b; }); }
    Scalar operator/(const Scalar& o) const { return binop(o, [](const auto& a, const auto& b) { return a / b; }); }

    Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
    Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
    Scalar& operator*=(const Scalar& o) { return *this = *this * o; }

    Scalar inv() const {
        return std::visit([](const auto& x) { return Scalar(x.inv()); }, v_);
    }

    bool operator==(const Scalar& o) const {
        if (v_.index() != o.v_.index()) throw FieldMismatch("comparing rational with prime-field value");
        return std::visit([&o](const auto& a) {
            return a == std::get<std::decay_t<decltype(a)>>(o.v_);
        }, v_);
    }
    bool operator!=(const Scalar& o) const { return !(*this == o); }

    std::string str() const {
        return std::visit([](const auto& x) { return x.str(); }, v_);
    }

private:
    template <class Op>
    Scalar binop(const Scalar& o, Op op) const {
        if (v_.index() != o.v_.index()) throw FieldMismatch("rational vs prime-field operand");
        if (const auto* a = std::get_if<Rational>(&v_)) return Scalar(op(*a, std::get<Rational>(o.v_)));
        return Scalar(op(std::get<PrimeFieldElem>(v_), std::get<PrimeFieldElem>(o.v_)));
    }

    std::variant<Rational, PrimeFieldElem> v_;
};

inline Scalar inv(const Scalar& s) { return s.inv(); }

/// Parses `-?digits(/digits)?` in the given field. The sign may only
/// appear on the numerator; a zero denominator raises DivisionByZero.
Scalar parse_scalar(const std::string& text, const FieldDesc& field);

/// Canonical text form; round-trips through parse_scalar.
std::string format_scalar(const Scalar& s);

}  // namespace strassen

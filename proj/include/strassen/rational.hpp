#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <utility>

#include "strassen/errors.hpp"

namespace strassen {

/// Arbitrary-precision rational, always stored in canonical form:
/// denominator > 0 and gcd(|numerator|, denominator) = 1.
class Rational {
public:
    Rational() : q_(0) {}
    Rational(std::int64_t n) : q_(static_cast<long>(n)) {}  // NOLINT(google-explicit-constructor)

    Rational(std::int64_t num, std::int64_t den) {
        if (den == 0) throw DivisionByZero("rational with zero denominator");
        q_ = mpq_class(static_cast<long>(num), static_cast<long>(den));
        q_.canonicalize();
    }

    explicit Rational(mpq_class q) : q_(std::move(q)) { q_.canonicalize(); }

    const mpq_class& raw() const { return q_; }
    mpz_class numerator() const { return q_.get_num(); }
    mpz_class denominator() const { return q_.get_den(); }

    bool is_zero() const { return q_ == 0; }
    bool is_one() const { return q_ == 1; }

    Rational operator-() const { return Rational(mpq_class(-q_)); }
    Rational operator+(const Rational& o) const { return Rational(mpq_class(q_ + o.q_)); }
    Rational operator-(const Rational& o) const { return Rational(mpq_class(q_ - o.q_)); }
    Rational operator*(const Rational& o) const { return Rational(mpq_class(q_ * o.q_)); }

    Rational operator/(const Rational& o) const {
        if (o.is_zero()) throw DivisionByZero("rational division");
        return Rational(mpq_class(q_ / o.q_));
    }

    Rational inv() const {
        if (is_zero()) throw DivisionByZero("inverse of zero rational");
        return Rational(mpq_class(1 / q_));
    }

    bool operator==(const Rational& o) const { return q_ == o.q_; }
    bool operator!=(const Rational& o) const { return q_ != o.q_; }

    /// "n" when the denominator is 1, otherwise "n/d".
    std::string str() const { return q_.get_str(); }

private:
    mpq_class q_;  // GMP keeps this canonical after each canonicalize()
};

}  // namespace strassen

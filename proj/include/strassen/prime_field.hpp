#pragma once

#include <cstdint>
#include <string>

#include "strassen/errors.hpp"

namespace strassen {

namespace detail {

/// Trial division; only used for moduli below 2^16.
inline bool is_small_prime(std::uint64_t p) {
    if (p < 2) return false;
    if (p % 2 == 0) return p == 2;
    for (std::uint64_t d = 3; d * d <= p; d += 2)
        if (p % d == 0) return false;
    return true;
}

inline std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
    return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % p);
}

inline std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t p) {
    std::uint64_t acc = 1 % p;
    while (exp > 0) {
        if (exp & 1) acc = mul_mod(acc, base, p);
        base = mul_mod(base, base, p);
        exp >>= 1;
    }
    return acc;
}

}  // namespace detail

/// Element of GF(p) for p < 2^62. Primality of p is checked for p < 2^16
/// and trusted above.
class PrimeFieldElem {
public:
    PrimeFieldElem(std::int64_t value, std::uint64_t p) : p_(p) {
        check_modulus(p);
        std::int64_t r = value % static_cast<std::int64_t>(p);
        if (r < 0) r += static_cast<std::int64_t>(p);
        v_ = static_cast<std::uint64_t>(r);
    }

    static void check_modulus(std::uint64_t p) {
        if (p < 2) throw std::invalid_argument("prime field modulus must be >= 2");
        if (p >= (1ull << 62))
            throw std::invalid_argument("prime field modulus must be below 2^62");
        if (p < (1u << 16) && !detail::is_small_prime(p))
            throw std::invalid_argument("prime field modulus " + std::to_string(p) + " is not prime");
    }

    std::uint64_t value() const { return v_; }
    std::uint64_t modulus() const { return p_; }

    bool is_zero() const { return v_ == 0; }
    bool is_one() const { return v_ == 1; }

    PrimeFieldElem operator-() const { return make(v_ == 0 ? 0 : p_ - v_, p_); }

    PrimeFieldElem operator+(const PrimeFieldElem& o) const {
        require_same(o);
        std::uint64_t s = v_ + o.v_;  // no overflow: p < 2^62
        if (s >= p_) s -= p_;
        return make(s, p_);
    }

    PrimeFieldElem operator-(const PrimeFieldElem& o) const {
        require_same(o);
        return make(v_ >= o.v_ ? v_ - o.v_ : v_ + (p_ - o.v_), p_);
    }

    PrimeFieldElem operator*(const PrimeFieldElem& o) const {
        require_same(o);
        return make(detail::mul_mod(v_, o.v_, p_), p_);
    }

    PrimeFieldElem inv() const {
        if (v_ == 0) throw DivisionByZero("inverse of zero in GF(" + std::to_string(p_) + ")");
        return make(detail::pow_mod(v_, p_ - 2, p_), p_);  // Fermat, p prime
    }

    PrimeFieldElem operator/(const PrimeFieldElem& o) const {
        require_same(o);
        return *this * o.inv();
    }

    bool operator==(const PrimeFieldElem& o) const {
        require_same(o);
        return v_ == o.v_;
    }
    bool operator!=(const PrimeFieldElem& o) const { return !(*this == o); }

    std::string str() const { return std::to_string(v_); }

private:
    static PrimeFieldElem make(std::uint64_t v, std::uint64_t p) {
        PrimeFieldElem e;
        e.v_ = v;
        e.p_ = p;
        return e;
    }
    PrimeFieldElem() : v_(0), p_(2) {}

    void require_same(const PrimeFieldElem& o) const {
        if (p_ != o.p_)
            throw FieldMismatch("GF(" + std::to_string(p_) + ") vs GF(" + std::to_string(o.p_) + ")");
    }

    std::uint64_t v_;
    std::uint64_t p_;
};

}  // namespace strassen

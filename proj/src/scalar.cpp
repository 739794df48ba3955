#include "strassen/scalar.hpp"

#include <cctype>
#include <cstddef>

namespace strassen {

namespace {

bool all_digits(const std::string& s, std::size_t from, std::size_t to) {
    if (from >= to) return false;
    for (std::size_t i = from; i < to; ++i)
        if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    return true;
}

}  // namespace

Scalar parse_scalar(const std::string& text, const FieldDesc& field) {
    if (text.empty()) throw ParseError("empty scalar");

    std::size_t start = text[0] == '-' ? 1 : 0;
    std::size_t slash = text.find('/');

    std::string num_digits, den_digits;
    if (slash == std::string::npos) {
        if (!all_digits(text, start, text.size())) throw ParseError("bad scalar '" + text + "'");
        num_digits = text.substr(start);
    } else {
        if (!all_digits(text, start, slash)) throw ParseError("bad scalar '" + text + "'");
        if (!all_digits(text, slash + 1, text.size()))
            throw ParseError("bad scalar '" + text + "' (sign allowed on numerator only)");
        num_digits = text.substr(start, slash - start);
        den_digits = text.substr(slash + 1);
    }

    mpz_class num(num_digits, 10);
    if (start == 1) num = -num;
    mpz_class den = den_digits.empty() ? mpz_class(1) : mpz_class(den_digits, 10);
    if (den == 0) throw DivisionByZero("scalar '" + text + "' has zero denominator");

    if (field.is_rational()) {
        mpq_class q(num, den);
        q.canonicalize();
        return Scalar(Rational(std::move(q)));
    }

    // GF(p): reduce numerator and denominator separately, then divide.
    mpz_class p(static_cast<unsigned long>(field.p));
    mpz_class nr = num % p;
    mpz_class dr = den % p;
    PrimeFieldElem n(nr.get_si(), field.p);
    if (den == 1) return Scalar(n);
    PrimeFieldElem d(dr.get_si(), field.p);
    if (d.is_zero()) throw DivisionByZero("scalar '" + text + "' has denominator 0 in GF(" + std::to_string(field.p) + ")");
    return Scalar(n / d);
}

std::string format_scalar(const Scalar& s) { return s.str(); }

}  // namespace strassen

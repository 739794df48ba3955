#pragma once

#include <cstddef>
#include <vector>

#include "strassen/linalg.hpp"

namespace strassen {

/// One multiplication event: the product tr(x a) * tr(y b) contributes with
/// constant matrix z.
struct BilinearTerm {
    Mat2 x;
    Mat2 y;
    Mat2 z;
};

/// A 2x2 multiplication scheme: ab = sum_r tr(x_r a) tr(y_r b) z_r.
/// The term count is the scheme's rank.
class BilinearAlgorithm {
public:
    BilinearAlgorithm(FieldDesc field, std::vector<BilinearTerm> terms)
        : field_(field), terms_(std::move(terms)) {
        for (const auto& t : terms_)
            if (t.x.field() != field_ || t.y.field() != field_ || t.z.field() != field_)
                throw FieldMismatch("algorithm term in a different field");
    }

    const FieldDesc& field() const { return field_; }
    std::size_t rank() const { return terms_.size(); }
    const std::vector<BilinearTerm>& terms() const { return terms_; }
    const BilinearTerm& term(std::size_t r) const { return terms_.at(r); }

private:
    FieldDesc field_;
    std::vector<BilinearTerm> terms_;
};

}  // namespace strassen

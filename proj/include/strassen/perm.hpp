#pragma once

#include <array>
#include <stdexcept>
#include <string>

namespace strassen {

/// Permutation of {1,2,3}, stored as the image array [s(1), s(2), s(3)]
/// (0-indexed internally). Cycle (123) maps 1->2, 2->3, 3->1.
class Perm3 {
public:
    explicit Perm3(std::array<int, 3> images_zero_based) : img_(images_zero_based) {
        bool seen[3] = {false, false, false};
        for (int x : img_) {
            if (x < 0 || x > 2 || seen[x]) throw std::invalid_argument("not a permutation of {1,2,3}");
            seen[x] = true;
        }
    }

    static Perm3 identity() { return Perm3({0, 1, 2}); }
    static Perm3 cycle123() { return Perm3({1, 2, 0}); }  // 1->2->3->1
    static Perm3 cycle321() { return Perm3({2, 0, 1}); }  // inverse of (123)
    static Perm3 swap12() { return Perm3({1, 0, 2}); }
    static Perm3 swap13() { return Perm3({2, 1, 0}); }
    static Perm3 swap23() { return Perm3({0, 2, 1}); }

    /// All six elements; the three even ones first.
    static const std::array<Perm3, 6>& all() {
        static const std::array<Perm3, 6> elems = {
            identity(), cycle123(), cycle321(), swap12(), swap23(), swap13()};
        return elems;
    }

    /// Image of i under the permutation, 0-indexed.
    int operator()(int i) const { return img_[i]; }

    int signature() const {
        int inversions = 0;
        for (int i = 0; i < 3; ++i)
            for (int j = i + 1; j < 3; ++j)
                if (img_[i] > img_[j]) ++inversions;
        return inversions % 2 == 0 ? 1 : -1;
    }

    Perm3 inverse() const {
        std::array<int, 3> inv{};
        for (int i = 0; i < 3; ++i) inv[img_[i]] = i;
        return Perm3(inv);
    }

    /// (this o other)(i) = this(other(i))
    Perm3 after(const Perm3& other) const {
        return Perm3({img_[other.img_[0]], img_[other.img_[1]], img_[other.img_[2]]});
    }

    bool operator==(const Perm3& o) const { return img_ == o.img_; }
    bool operator!=(const Perm3& o) const { return img_ != o.img_; }

    /// One-based image list, e.g. "[2,3,1]".
    std::string str() const {
        return "[" + std::to_string(img_[0] + 1) + "," + std::to_string(img_[1] + 1) + "," +
               std::to_string(img_[2] + 1) + "]";
    }

private:
    std::array<int, 3> img_;
};

}  // namespace strassen

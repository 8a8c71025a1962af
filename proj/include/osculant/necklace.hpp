#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "osculant/multidegree.hpp"

namespace osculant {

/// Index of the lexicographically least rotation of w (Booth's algorithm).
size_t least_rotation(const std::vector<uint8_t>& w);

/// A fixed-content circular word stored as its lexicographically minimal
/// rotation. Colors are 1..n and print as '1'..'9', then 'a'..'z'.
class Necklace {
public:
    /// Canonicalizes: any rotation of the same word yields the same Necklace.
    static Necklace from_word(std::vector<uint8_t> word);
    static Necklace from_string(const std::string& s);

    const std::vector<uint8_t>& word() const { return word_; }
    int length() const { return static_cast<int>(word_.size()); }
    int colors() const { return colors_; }

    /// Bead content as a multidegree (color i occurs d_i times).
    Multidegree content() const;

    std::string str() const;

    /// 0-based positions of color c (1-based) in the canonical word, ascending.
    std::vector<int> positions_of(int color) const;

    bool operator==(const Necklace& o) const { return word_ == o.word_; }
    bool operator!=(const Necklace& o) const { return !(*this == o); }
    bool operator<(const Necklace& o) const { return word_ < o.word_; }

private:
    Necklace() = default;
    std::vector<uint8_t> word_;
    int colors_ = 0;
};

/// All distinct necklaces of the given content, canonical form, lexicographic
/// order. With primitive_only, only those whose rotation orbit has full size.
std::vector<Necklace> enumerate_necklaces(const Multidegree& d, bool primitive_only);

/// Streaming variant: visits each necklace in lexicographic order without
/// materializing the whole list.
void for_each_necklace(const Multidegree& d, bool primitive_only,
                       const std::function<void(const Necklace&)>& visit);

struct FoldClass {
    int k;          // maximal repetition count; divides gcd of the content
    Necklace core;  // primitive word whose k-fold repetition gives the input
};

/// Decompose a necklace as core^k with core primitive.
FoldClass fold_class(const Necklace& nk);

bool is_primitive(const Necklace& nk);

/// Swapping the two colors yields a rotation of the same word.
/// Only defined for necklaces on exactly 2 colors.
bool is_self_complementary(const Necklace& nk);

/// Reversing the word yields a rotation of the same word.
bool is_achiral(const Necklace& nk);

/// True iff for every color the |d|-th roots of -1 sitting at that color's
/// positions sum to zero (within tol). These sums are the linear coefficients
/// of the start parametrization, so a balanced necklace marks a singular
/// osculant of the start hypersurface. Requires a primitive necklace.
bool is_balanced_embedding(const Necklace& nk, double tol = 1e-10);

}  // namespace osculant

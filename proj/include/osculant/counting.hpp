#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

#include "osculant/multidegree.hpp"

namespace osculant {

/// Nonnegative 128-bit counter with checked arithmetic. Necklace counts grow
/// factorially; any overflow throws std::overflow_error instead of wrapping.
class Count {
public:
    Count() : v_(0) {}
    Count(uint64_t v) : v_(v) {}

    Count operator+(const Count& o) const {
        u128 r = v_ + o.v_;
        if (r < v_) throw std::overflow_error("count overflow in addition");
        return from_raw(r);
    }
    Count operator-(const Count& o) const {
        if (o.v_ > v_) throw std::overflow_error("count underflow in subtraction");
        return from_raw(v_ - o.v_);
    }
    Count operator*(const Count& o) const {
        if (v_ != 0 && o.v_ != 0) {
            u128 r = v_ * o.v_;
            if (r / v_ != o.v_) throw std::overflow_error("count overflow in multiplication");
            return from_raw(r);
        }
        return Count();
    }
    Count operator/(const Count& o) const { return from_raw(v_ / o.v_); }
    Count operator%(const Count& o) const { return from_raw(v_ % o.v_); }

    Count& operator+=(const Count& o) { return *this = *this + o; }
    Count& operator-=(const Count& o) { return *this = *this - o; }
    Count& operator*=(const Count& o) { return *this = *this * o; }

    bool operator==(const Count& o) const { return v_ == o.v_; }
    bool operator!=(const Count& o) const { return v_ != o.v_; }
    bool operator<(const Count& o) const { return v_ < o.v_; }
    bool operator<=(const Count& o) const { return v_ <= o.v_; }
    bool operator>(const Count& o) const { return v_ > o.v_; }
    bool operator>=(const Count& o) const { return v_ >= o.v_; }

    bool is_even() const { return (v_ & 1) == 0; }

    /// Value as uint64_t; throws if it does not fit.
    uint64_t to_u64() const {
        if (v_ > u128(UINT64_MAX)) throw std::overflow_error("count does not fit in 64 bits");
        return static_cast<uint64_t>(v_);
    }

    std::string str() const;

private:
    using u128 = unsigned __int128;
    static Count from_raw(u128 v) {
        Count c;
        c.v_ = v;
        return c;
    }
    u128 v_;
};

/// Multinomial coefficient |d|! / (d_1! ... d_n!).
Count multinomial(const Multidegree& d);

/// Number of primitive d-necklaces, via the recursion
///   N(d) = ( C(|d|,d) - sum_{k | gcd d, k != 1} (|d|/k) N(d/k) ) / |d|.
Count count_primitive(const Multidegree& d);

/// Total number of d-necklaces: sum over k | gcd(d) of count_primitive(d/k).
Count count_all(const Multidegree& d);

/// Number of self-complementary achiral necklaces on 2N beads,
///   A_{2N} = sum_{i=-1}^{r-1} 2^(ceil(2^i m) - 1)   with N = 2^r m, m odd.
Count count_selfcomp_achiral(int N);

bool is_squarefree(int x);

enum class Parity { even, odd };

/// Predicted parity of the primitive (d,d)-necklace count: odd iff d is
/// squarefree. Used as a cross-check against count_primitive.
Parity squarefree_parity(int d);

}  // namespace osculant

#include "osculant/counting.hpp"

#include <algorithm>

namespace osculant {

std::string Count::str() const {
    if (v_ == 0) return "0";
    std::string s;
    u128 v = v_;
    while (v > 0) {
        s += static_cast<char>('0' + static_cast<int>(v % 10));
        v /= 10;
    }
    std::reverse(s.begin(), s.end());
    return s;
}

static Count binomial(int n, int k) {
    if (k < 0 || k > n) return Count(0);
    k = std::min(k, n - k);
    Count r(1);
    for (int i = 1; i <= k; ++i) {
        // r * (n-k+i) is divisible by i at every step
        r = r * Count(static_cast<uint64_t>(n - k + i)) / Count(static_cast<uint64_t>(i));
    }
    return r;
}

Count multinomial(const Multidegree& d) {
    Count r(1);
    int acc = 0;
    for (int i = 0; i < d.size(); ++i) {
        acc += d[i];
        r = r * binomial(acc, d[i]);
    }
    return r;
}

static std::vector<int> divisors(int g) {
    std::vector<int> ds;
    for (int k = 1; k <= g; ++k)
        if (g % k == 0) ds.push_back(k);
    return ds;
}

Count count_primitive(const Multidegree& d) {
    const int total = d.total();
    Count c = multinomial(d);
    Count sub(0);
    for (int k : divisors(d.gcd())) {
        if (k == 1) continue;
        sub += Count(static_cast<uint64_t>(total / k)) * count_primitive(d.divided_by(k));
    }
    Count diff = c - sub;
    if (diff % Count(static_cast<uint64_t>(total)) != Count(0))
        throw std::logic_error("necklace recursion produced a non-integer count");
    return diff / Count(static_cast<uint64_t>(total));
}

Count count_all(const Multidegree& d) {
    Count m(0);
    for (int k : divisors(d.gcd())) m += count_primitive(d.divided_by(k));
    return m;
}

Count count_selfcomp_achiral(int N) {
    if (N < 1) throw std::invalid_argument("bead half-count must be >= 1");
    int r = 0, m = N;
    while (m % 2 == 0) {
        m /= 2;
        ++r;
    }
    auto pow2 = [](int e) {
        if (e >= 127) throw std::overflow_error("count overflow in power of two");
        Count r2(1);
        for (int i = 0; i < e; ++i) r2 *= Count(2);
        return r2;
    };
    // i = -1 term: ceil(m/2) - 1; i >= 0 terms: 2^i * m - 1 exactly
    Count a = pow2((m + 1) / 2 - 1);
    for (int i = 0; i < r; ++i) a += pow2((1 << i) * m - 1);
    return a;
}

bool is_squarefree(int x) {
    if (x < 1) throw std::invalid_argument("squarefree test requires a positive integer");
    for (int p = 2; p * p <= x; ++p) {
        int e = 0;
        while (x % p == 0) {
            x /= p;
            if (++e > 1) return false;
        }
    }
    return true;
}

Parity squarefree_parity(int d) { return is_squarefree(d) ? Parity::odd : Parity::even; }

}  // namespace osculant

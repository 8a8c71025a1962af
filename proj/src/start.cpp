#include "osculant/start.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <stdexcept>
#include <string>

namespace osculant {

std::vector<Complex> roots_of_minus_one(int N) {
    if (N < 1) throw std::invalid_argument("root count must be >= 1");
    const double pi = std::acos(-1.0);
    std::vector<Complex> z;
    z.reserve(static_cast<size_t>(N));
    for (int b = 0; b < N; ++b) z.push_back(std::polar(1.0, pi * (2.0 * b + 1.0) / N));
    return z;
}

static AlphaPoint alpha_from_word(const std::vector<uint8_t>& word, const Multidegree& d) {
    const int N = static_cast<int>(word.size());
    auto zeta = roots_of_minus_one(N);
    std::vector<std::vector<Complex>> alpha(static_cast<size_t>(d.size()));
    for (int i = 0; i < d.size(); ++i) alpha[static_cast<size_t>(i)].reserve(static_cast<size_t>(d[i]));
    for (int b = 0; b < N; ++b) {
        int color = word[static_cast<size_t>(b)];
        alpha[static_cast<size_t>(color - 1)].push_back(-1.0 / zeta[static_cast<size_t>(b)]);
    }
    return AlphaPoint(d, std::move(alpha));
}

AlphaPoint start_point(const Necklace& nk) {
    if (!is_primitive(nk))
        throw std::invalid_argument("start point requires a primitive necklace: " + nk.str());
    return alpha_from_word(nk.word(), nk.content());
}

StartSet build_start_set(const Multidegree& d, double tol) {
    StartSet ss{d, {}};
    const SparseHypersurface tilde = tilde_hypersurface(d.size());
    for (Necklace& nk : enumerate_necklaces(d, /*primitive_only=*/true)) {
        AlphaPoint p = start_point(nk);
        Residual r = evaluate(tilde, p);
        if (r.max_norm() > tol)
            throw std::runtime_error("start point residual " + std::to_string(r.max_norm()) +
                                     " exceeds tolerance for necklace " + nk.str());
        ComplexLU lu(jacobian(tilde, p));
        if (lu.singular())
            throw std::runtime_error("start Jacobian is singular for necklace " + nk.str());
        ss.points.emplace_back(std::move(nk), std::move(p));
    }
    Count expected = count_primitive(d);
    if (Count(static_cast<uint64_t>(ss.points.size())) != expected)
        throw std::runtime_error("start set size " + std::to_string(ss.points.size()) +
                                 " does not match primitive necklace count " + expected.str());
    return ss;
}

OrbitCensus orbit_representatives_check(const Multidegree& d, double tol) {
    const int N = d.total();
    if (N > 12) throw std::invalid_argument("orbit census is limited to |d| <= 12");

    // All words with the given content = all color-respecting assignments of
    // the N roots of -1 to the alpha slots.
    std::vector<uint8_t> word;
    for (int i = 0; i < d.size(); ++i)
        word.insert(word.end(), static_cast<size_t>(d[i]), static_cast<uint8_t>(i + 1));
    std::sort(word.begin(), word.end());

    const SparseHypersurface tilde = tilde_hypersurface(d.size());
    OrbitCensus census;
    census.residuals_ok = true;
    std::set<std::vector<uint8_t>> seen;
    std::map<int, long long> orbit_sizes;  // orbit size -> count of orbits
    do {
        census.total_words++;
        if (evaluate(tilde, alpha_from_word(word, d)).max_norm() > tol)
            census.residuals_ok = false;
        if (seen.count(word)) continue;
        // walk the rotation orbit
        std::vector<uint8_t> rot = word;
        int orbit = 0;
        do {
            if (seen.insert(rot).second) orbit++;
            std::rotate(rot.begin(), rot.begin() + 1, rot.end());
        } while (rot != word);
        orbit_sizes[orbit]++;
    } while (std::next_permutation(word.begin(), word.end()));

    census.counts_match = true;
    for (auto [size, cnt] : orbit_sizes) {
        int k = N / size;
        census.orbits_by_k[k] = cnt;
        if (N % size != 0 || d.gcd() % k != 0 ||
            Count(static_cast<uint64_t>(cnt)) != count_primitive(d.divided_by(k)))
            census.counts_match = false;
    }
    return census;
}

}  // namespace osculant

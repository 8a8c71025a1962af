#include "osculant/necklace.hpp"

#include <algorithm>
#include <cmath>
#include <complex>

namespace osculant {

size_t least_rotation(const std::vector<uint8_t>& w) {
    // Booth's algorithm on the doubled word.
    const size_t n = w.size();
    if (n <= 1) return 0;
    std::vector<int> f(2 * n, -1);
    size_t k = 0;
    for (size_t j = 1; j < 2 * n; ++j) {
        uint8_t sj = w[j % n];
        int i = f[j - k - 1];
        while (i != -1 && sj != w[(k + i + 1) % n]) {
            if (sj < w[(k + i + 1) % n]) k = j - i - 1;
            i = f[static_cast<size_t>(i)];
        }
        if (sj != w[(k + i + 1) % n]) {
            if (sj < w[k % n]) k = j;
            f[j - k] = -1;
        } else {
            f[j - k] = i + 1;
        }
    }
    return k % n;
}

static char color_symbol(int c) {
    if (c >= 1 && c <= 9) return static_cast<char>('0' + c);
    if (c >= 10 && c <= 35) return static_cast<char>('a' + c - 10);
    throw std::invalid_argument("color out of printable range 1..35");
}

static int symbol_color(char s) {
    if (s >= '1' && s <= '9') return s - '0';
    if (s >= 'a' && s <= 'z') return s - 'a' + 10;
    throw std::invalid_argument(std::string("invalid necklace symbol '") + s + "'");
}

Necklace Necklace::from_word(std::vector<uint8_t> word) {
    if (word.empty()) throw std::invalid_argument("necklace word must be nonempty");
    int max_color = 0;
    for (uint8_t c : word) {
        if (c < 1) throw std::invalid_argument("necklace colors are 1-based");
        max_color = std::max(max_color, static_cast<int>(c));
    }
    size_t r = least_rotation(word);
    std::rotate(word.begin(), word.begin() + static_cast<long>(r), word.end());
    Necklace nk;
    nk.word_ = std::move(word);
    nk.colors_ = max_color;
    return nk;
}

Necklace Necklace::from_string(const std::string& s) {
    std::vector<uint8_t> w;
    w.reserve(s.size());
    for (char ch : s) w.push_back(static_cast<uint8_t>(symbol_color(ch)));
    return from_word(std::move(w));
}

Multidegree Necklace::content() const {
    std::vector<int> d(static_cast<size_t>(colors_), 0);
    for (uint8_t c : word_) d[static_cast<size_t>(c - 1)]++;
    return Multidegree(std::move(d));
}

std::string Necklace::str() const {
    std::string s;
    s.reserve(word_.size());
    for (uint8_t c : word_) s += color_symbol(c);
    return s;
}

std::vector<int> Necklace::positions_of(int color) const {
    std::vector<int> p;
    for (size_t i = 0; i < word_.size(); ++i)
        if (word_[i] == color) p.push_back(static_cast<int>(i));
    return p;
}

namespace {

// Fixed-content necklace generation: the classic recursive pre-necklace
// scheme restricted by remaining color counts. Words come out in
// lexicographic order as minimal-rotation representatives; at a leaf the
// tracked value p is the period, so the word is primitive iff p == |d|.
struct FixedContentGen {
    int total;
    int ncolors;
    bool primitive_only;
    std::vector<int> a;    // 1-indexed word over 0..ncolors-1, a[0] = 0
    std::vector<int> rem;  // remaining beads per color
    const std::function<void(const Necklace&)>* visit;

    void run() {
        a.assign(static_cast<size_t>(total) + 1, 0);
        rec(1, 1);
    }

    void rec(int t, int p) {
        if (t > total) {
            if (total % p == 0 && (!primitive_only || p == total)) emit();
            return;
        }
        for (int c = a[static_cast<size_t>(t - p)]; c < ncolors; ++c) {
            if (rem[static_cast<size_t>(c)] == 0) continue;
            if (t == 1 && c > 0) break;  // canonical words start with the least color
            rem[static_cast<size_t>(c)]--;
            a[static_cast<size_t>(t)] = c;
            rec(t + 1, c == a[static_cast<size_t>(t - p)] ? p : t);
            rem[static_cast<size_t>(c)]++;
        }
    }

    void emit() {
        std::vector<uint8_t> w(static_cast<size_t>(total));
        for (int i = 1; i <= total; ++i)
            w[static_cast<size_t>(i - 1)] = static_cast<uint8_t>(a[static_cast<size_t>(i)] + 1);
        (*visit)(Necklace::from_word(std::move(w)));
    }
};

}  // namespace

void for_each_necklace(const Multidegree& d, bool primitive_only,
                       const std::function<void(const Necklace&)>& visit) {
    FixedContentGen gen;
    gen.total = d.total();
    gen.ncolors = d.size();
    gen.primitive_only = primitive_only;
    gen.rem = d.parts();
    gen.visit = &visit;
    gen.run();
}

std::vector<Necklace> enumerate_necklaces(const Multidegree& d, bool primitive_only) {
    std::vector<Necklace> out;
    for_each_necklace(d, primitive_only, [&](const Necklace& nk) { out.push_back(nk); });
    return out;
}

FoldClass fold_class(const Necklace& nk) {
    const auto& w = nk.word();
    const int n = nk.length();
    for (int p = 1; p <= n; ++p) {
        if (n % p != 0) continue;
        bool periodic = true;
        for (int i = p; i < n && periodic; ++i)
            periodic = (w[static_cast<size_t>(i)] == w[static_cast<size_t>(i - p)]);
        if (periodic) {
            std::vector<uint8_t> core(w.begin(), w.begin() + p);
            return FoldClass{n / p, Necklace::from_word(std::move(core))};
        }
    }
    return FoldClass{1, nk};  // unreachable: p = n always matches
}

bool is_primitive(const Necklace& nk) { return fold_class(nk).k == 1; }

bool is_self_complementary(const Necklace& nk) {
    Multidegree d = nk.content();
    if (d.size() != 2)
        throw std::invalid_argument("self-complementarity is defined for 2-color necklaces only");
    std::vector<uint8_t> swapped(nk.word());
    for (auto& c : swapped) c = (c == 1) ? 2 : 1;
    return Necklace::from_word(std::move(swapped)) == nk;
}

bool is_achiral(const Necklace& nk) {
    std::vector<uint8_t> rev(nk.word().rbegin(), nk.word().rend());
    return Necklace::from_word(std::move(rev)) == nk;
}

bool is_balanced_embedding(const Necklace& nk, double tol) {
    if (!is_primitive(nk))
        throw std::invalid_argument("balanced-embedding test requires a primitive necklace");
    const int N = nk.length();
    const double pi = std::acos(-1.0);
    std::vector<std::complex<double>> sum(static_cast<size_t>(nk.colors()), 0.0);
    for (int b = 0; b < N; ++b) {
        int color = nk.word()[static_cast<size_t>(b)];
        sum[static_cast<size_t>(color - 1)] += std::polar(1.0, pi * (2.0 * b + 1.0) / N);
    }
    for (const auto& s : sum)
        if (std::abs(s) > tol) return false;
    return true;
}

}  // namespace osculant

#include "doctest.h"

#include <algorithm>
#include <cmath>

#include "osculant/counting.hpp"
#include "osculant/start.hpp"

using namespace osculant;

TEST_CASE("roots of minus one") {
    auto r2 = roots_of_minus_one(2);
    CHECK(std::abs(r2[0] - Complex(0.0, 1.0)) < 1e-15);
    CHECK(std::abs(r2[1] - Complex(0.0, -1.0)) < 1e-15);

    auto r1 = roots_of_minus_one(1);
    CHECK(std::abs(r1[0] - Complex(-1.0)) < 1e-15);

    auto r4 = roots_of_minus_one(4);
    const double pi = std::acos(-1.0);
    for (int b = 0; b < 4; ++b)
        CHECK(std::abs(r4[static_cast<size_t>(b)] - std::polar(1.0, pi * (2 * b + 1) / 4.0)) <
              1e-15);
    for (const auto& z : r4) CHECK(std::abs(std::pow(z, 4) + Complex(1.0)) < 1e-14);
}

TEST_CASE("start point for the (1,1) necklace") {
    AlphaPoint p = start_point(Necklace::from_string("12"));
    CHECK(std::abs(p.alpha[0][0] - Complex(0.0, 1.0)) < 1e-15);
    CHECK(std::abs(p.alpha[1][0] - Complex(0.0, -1.0)) < 1e-15);
    CHECK(std::abs(p.alpha_product() - Complex(1.0)) < 1e-15);
}

// The defining identity: prod (alpha t + 1) = 1 + t^|d| exactly.
static double product_identity_defect(const AlphaPoint& p) {
    const int N = p.d.total();
    TruncatedSeries prod = TruncatedSeries::constant(Complex(1.0), N + 1);
    for (const auto& row : p.alpha)
        for (const Complex& a : row) {
            TruncatedSeries lin(N + 1);
            lin.c[0] = Complex(1.0);
            lin.c[1] = a;
            prod = series_mul(prod, lin);
        }
    double defect = std::abs(prod.coeff(0) - Complex(1.0));
    for (int k = 1; k < N; ++k) defect = std::max(defect, std::abs(prod.coeff(k)));
    defect = std::max(defect, std::abs(prod.coeff(N) - Complex(1.0)));
    return defect;
}

TEST_CASE("start points satisfy the product identity") {
    CHECK(product_identity_defect(start_point(Necklace::from_string("122"))) <= 1e-12);
    for (const Multidegree& d : {Multidegree{3, 3}, Multidegree{1, 2},
                                 Multidegree{2, 3}, Multidegree{1, 1, 2}}) {
        for (const auto& nk : enumerate_necklaces(d, true))
            CHECK(product_identity_defect(start_point(nk)) <= 1e-12);
    }
}

TEST_CASE("non-primitive necklaces are rejected") {
    CHECK_THROWS_AS(start_point(Necklace::from_string("1212")), std::invalid_argument);
}

TEST_CASE("build_start_set sizes and verification") {
    CHECK(build_start_set(Multidegree{3, 3}).points.size() == 3);
    CHECK(build_start_set(Multidegree{4, 4}).points.size() == 8);
    CHECK(build_start_set(Multidegree{1, 1}).points.size() == 1);
}

TEST_CASE("rotating the necklace reparametrizes the start point") {
    const Multidegree d{2, 3};
    const int N = d.total();
    const double pi = std::acos(-1.0);
    const Complex omega = std::polar(1.0, -2.0 * pi / N);
    for (const auto& nk : enumerate_necklaces(d, true)) {
        // rotate the canonical word right by one position
        std::vector<uint8_t> w = nk.word();
        std::rotate(w.rbegin(), w.rbegin() + 1, w.rend());
        CHECK(Necklace::from_word(w) == nk);  // same necklace class
        AlphaPoint base = start_point(nk);
        // assigning roots along the rotated word gives the omega-scaled alphas
        auto zeta = roots_of_minus_one(N);
        for (int i = 0; i < d.size(); ++i) {
            std::vector<Complex> scaled;
            for (const Complex& a : base.alpha[static_cast<size_t>(i)]) scaled.push_back(omega * a);
            std::vector<Complex> direct;
            for (int b = 0; b < N; ++b)
                if (w[static_cast<size_t>(b)] == i + 1) direct.push_back(-1.0 / zeta[static_cast<size_t>(b)]);
            auto key = [](const Complex& z) { return std::make_pair(z.real(), z.imag()); };
            std::sort(scaled.begin(), scaled.end(),
                      [&](auto x, auto y) { return key(x) < key(y); });
            std::sort(direct.begin(), direct.end(),
                      [&](auto x, auto y) { return key(x) < key(y); });
            REQUIRE(scaled.size() == direct.size());
            for (size_t q = 0; q < scaled.size(); ++q)
                CHECK(std::abs(scaled[q] - direct[q]) < 1e-12);
        }
    }
}

TEST_CASE("start points of distinct necklaces are distinct osculants") {
    // no root-of-unity rescaling + within-color permutation maps one onto another
    const Multidegree d{2, 2};
    auto necklaces = enumerate_necklaces(d, true);
    auto points = std::vector<AlphaPoint>();
    for (const auto& nk : necklaces) points.push_back(start_point(nk));
    const int N = d.total();
    const double pi = std::acos(-1.0);
    for (size_t a = 0; a < points.size(); ++a) {
        for (size_t b = a + 1; b < points.size(); ++b) {
            bool related = false;
            for (int r = 0; r < N; ++r) {
                Complex w = std::polar(1.0, 2.0 * pi * r / N);
                bool all_match = true;
                for (int i = 0; i < d.size() && all_match; ++i) {
                    std::vector<Complex> lhs = points[a].alpha[static_cast<size_t>(i)];
                    std::vector<Complex> rhs = points[b].alpha[static_cast<size_t>(i)];
                    for (auto& v : lhs) v *= w;
                    auto key = [](const Complex& z) { return std::make_pair(z.real(), z.imag()); };
                    std::sort(lhs.begin(), lhs.end(), [&](auto x, auto y) { return key(x) < key(y); });
                    std::sort(rhs.begin(), rhs.end(), [&](auto x, auto y) { return key(x) < key(y); });
                    for (size_t q = 0; q < lhs.size(); ++q)
                        if (std::abs(lhs[q] - rhs[q]) > 1e-9) all_match = false;
                }
                if (all_match) related = true;
            }
            CHECK_FALSE(related);
        }
    }
}

TEST_CASE("balanced embedding matches vanishing linear coefficients") {
    for (const auto& nk : enumerate_necklaces(Multidegree{9, 9}, true)) {
        auto x = expand_parametrization(start_point(nk), 2);
        bool zero_linear = true;
        for (const auto& xi : x)
            if (std::abs(xi.coeff(1)) > 1e-10) zero_linear = false;
        CHECK(is_balanced_embedding(nk) == zero_linear);
    }
}

TEST_CASE("orbit census") {
    auto c33 = orbit_representatives_check(Multidegree{3, 3});
    CHECK(c33.total_words == 20);
    CHECK(c33.residuals_ok);
    CHECK(c33.counts_match);
    CHECK(c33.orbits_by_k.at(1) == 3);  // three orbits of size 6
    CHECK(c33.orbits_by_k.at(3) == 1);  // one orbit of size 2

    auto c22 = orbit_representatives_check(Multidegree{2, 2});
    CHECK(c22.total_words == 6);
    CHECK(c22.orbits_by_k.at(1) == 1);
    CHECK(c22.orbits_by_k.at(2) == 1);
    CHECK(c22.counts_match);

    auto c11 = orbit_representatives_check(Multidegree{1, 1});
    CHECK(c11.total_words == 2);
    CHECK(c11.orbits_by_k.at(1) == 1);
    CHECK(c11.counts_match);
}

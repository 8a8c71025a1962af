#include "doctest.h"

#include <cmath>

#include "oracles.hpp"
#include "osculant/start.hpp"
#include "osculant/system.hpp"

using namespace osculant;

namespace {

struct Rng {
    uint64_t state;
    double real() {
        state = state * 6364136223846793005ULL + 1442695040888963407ULL;
        return static_cast<double>(state >> 11) * 0x1.0p-53 * 2.0 - 1.0;
    }
    Complex cplx() {
        double re = real();
        return Complex(re, real());
    }
    AlphaPoint point(const Multidegree& d) {
        std::vector<std::vector<Complex>> a(static_cast<size_t>(d.size()));
        for (int i = 0; i < d.size(); ++i)
            for (int j = 0; j < d[i]; ++j) a[static_cast<size_t>(i)].push_back(cplx());
        return AlphaPoint(d, std::move(a));
    }
    SparseHypersurface target(const Multidegree& d) {
        // dense real support of total degree < |d| over 2 variables
        std::vector<HypersurfaceTerm> terms;
        for (int e1 = 0; e1 < d.total(); ++e1)
            for (int e2 = 0; e1 + e2 < d.total(); ++e2)
                if (e1 + e2 >= 1) terms.push_back({{e1, e2}, Complex(real())});
        return SparseHypersurface(2, terms);
    }
};

double matrix_max_diff(const ComplexMatrix& a, const ComplexMatrix& b) {
    double m = 0.0;
    for (int r = 0; r < a.rows; ++r)
        for (int c = 0; c < a.cols; ++c) m = std::max(m, std::abs(a.at(r, c) - b.at(r, c)));
    return m;
}

double matrix_max_abs(const ComplexMatrix& a) {
    double m = 0.0;
    for (const auto& v : a.a) m = std::max(m, std::abs(v));
    return m;
}

}  // namespace

TEST_CASE("tilde hypersurface expansion") {
    auto t2 = tilde_hypersurface(2);
    CHECK(t2.terms().size() == 3);
    CHECK(t2.coefficient({1, 0}) == Complex(1.0));
    CHECK(t2.coefficient({0, 1}) == Complex(1.0));
    CHECK(t2.coefficient({1, 1}) == Complex(1.0));

    auto t3 = tilde_hypersurface(3);
    CHECK(t3.terms().size() == 7);
    for (const auto& term : t3.terms()) CHECK(term.c == Complex(1.0));

    auto t1 = tilde_hypersurface(1);
    CHECK(t1.terms().size() == 1);
    CHECK(t1.coefficient({1}) == Complex(1.0));
}

TEST_CASE("expand_parametrization") {
    const Complex i(0.0, 1.0);
    AlphaPoint p(Multidegree{1, 1}, {{i}, {-i}});
    auto x = expand_parametrization(p, 3);
    CHECK(std::abs(x[0].coeff(1) - i) < 1e-15);
    CHECK(std::abs(x[1].coeff(1) + i) < 1e-15);
    CHECK(std::abs(x[0].coeff(0)) == 0.0);
    CHECK(std::abs(x[0].coeff(2)) == 0.0);

    Complex a(0.5, 0.25), b(-2.0, 1.0);
    AlphaPoint q(Multidegree{2}, {{a, b}});
    auto y = expand_parametrization(q, 3);
    CHECK(std::abs(y[0].coeff(1) - (a + b)) < 1e-15);
    CHECK(std::abs(y[0].coeff(2) - a * b) < 1e-15);

    Complex al(1.0, 0.0), b1(0.0, 1.5), b2(0.25, 0.0);
    AlphaPoint r(Multidegree{1, 2}, {{al}, {b1, b2}});
    auto z = expand_parametrization(r, 4);
    CHECK(std::abs(z[0].coeff(1) - al) < 1e-15);
    CHECK(std::abs(z[0].coeff(2)) == 0.0);
    CHECK(std::abs(z[1].coeff(1) - (b1 + b2)) < 1e-15);
    CHECK(std::abs(z[1].coeff(2) - b1 * b2) < 1e-15);
    CHECK(std::abs(z[1].coeff(3)) == 0.0);
}

TEST_CASE("evaluate on closed-form cases") {
    Complex a(0.8, -0.1), b(1.2, 0.4);
    SparseHypersurface lin(2, {{{0, 1}, Complex(1.0)}, {{1, 0}, Complex(-1.0)}});
    Residual r = evaluate(lin, AlphaPoint(Multidegree{1, 1}, {{a}, {b}}));
    REQUIRE(r.h.size() == 1);
    CHECK(std::abs(r.h[0] - (b - a)) < 1e-14);
    CHECK(std::abs(r.norm_defect - (a * b - Complex(1.0))) < 1e-14);

    // f = x2 - x1^2 at d = (1,2): h = (b1+b2, b1 b2 - a^2)
    SparseHypersurface parab(2, {{{0, 1}, Complex(1.0)}, {{2, 0}, Complex(-1.0)}});
    Complex al(0.3, 0.7), b1(-0.4, 0.2), b2(1.1, -0.6);
    Residual rp = evaluate(parab, AlphaPoint(Multidegree{1, 2}, {{al}, {b1, b2}}));
    REQUIRE(rp.h.size() == 2);
    CHECK(std::abs(rp.h[0] - (b1 + b2)) < 1e-14);
    CHECK(std::abs(rp.h[1] - (b1 * b2 - al * al)) < 1e-14);
    CHECK(std::abs(rp.norm_defect - (al * b1 * b2 - Complex(1.0))) < 1e-14);

    // alpha = 1, beta = (i, -i) solves the system: h = (0, 0), product = 1
    const Complex i(0.0, 1.0);
    Residual rz = evaluate(parab, AlphaPoint(Multidegree{1, 2}, {{Complex(1.0)}, {i, -i}}));
    CHECK(rz.max_norm() < 1e-15);
}

TEST_CASE("evaluate start hypersurface at start points") {
    SparseHypersurface tilde = tilde_hypersurface(2);
    for (const auto& nk : enumerate_necklaces(Multidegree{3, 3}, true)) {
        Residual r = evaluate(tilde, start_point(nk));
        CHECK(r.max_norm() <= 1e-12);
    }
}

TEST_CASE("hand Jacobian for the 2x2 case") {
    Complex a(0.8, -0.1), b(1.2, 0.4);
    SparseHypersurface lin(2, {{{0, 1}, Complex(1.0)}, {{1, 0}, Complex(-1.0)}});
    ComplexMatrix j = jacobian(lin, AlphaPoint(Multidegree{1, 1}, {{a}, {b}}));
    CHECK(std::abs(j.at(0, 0) - Complex(-1.0)) < 1e-14);
    CHECK(std::abs(j.at(0, 1) - Complex(1.0)) < 1e-14);
    CHECK(std::abs(j.at(1, 0) - b) < 1e-14);
    CHECK(std::abs(j.at(1, 1) - a) < 1e-14);
}

TEST_CASE("Jacobian matches central finite differences") {
    for (const Multidegree& d :
         {Multidegree{2, 2}, Multidegree{1, 2}, Multidegree{3, 3}}) {
        Rng rng{d.total() * 1000003ULL};
        for (int trial = 0; trial < 100; ++trial) {
            SparseHypersurface f = rng.target(d);
            AlphaPoint p = rng.point(d);
            ComplexMatrix jd = jacobian(f, p);
            ComplexMatrix jf = oracle::fd_jacobian(f, p);
            double scale = std::max(1.0, matrix_max_abs(jd));
            CHECK(matrix_max_diff(jd, jf) / scale < 1e-5);
        }
    }
}

TEST_CASE("Jacobian at (3,3) start points is nonsingular") {
    SparseHypersurface tilde = tilde_hypersurface(2);
    for (const auto& nk : enumerate_necklaces(Multidegree{3, 3}, true)) {
        ComplexLU lu(jacobian(tilde, start_point(nk)));
        CHECK_FALSE(lu.singular());
        CHECK(std::isfinite(lu.pivot_ratio()));
    }
}

TEST_CASE("homotopy coefficient interpolation") {
    SparseHypersurface start(1, {{{1}, Complex(1.0)}});
    SparseHypersurface target(1, {{{1}, Complex(3.0)}});
    HomotopyProblem hp(target, start, Complex(1.0), Multidegree{1});
    CHECK(homotopy_coeffs(hp, 1.0) == target);
    CHECK(homotopy_coeffs(hp, 0.0) == start);  // gamma = 1
    CHECK(homotopy_coeffs(hp, 0.5).coefficient({1}) == Complex(2.0));

    Complex g(0.6, 0.8);
    HomotopyProblem hpg(target, start, g, Multidegree{1});
    CHECK(homotopy_coeffs(hpg, 0.0).coefficient({1}) == g);
    CHECK(homotopy_coeffs(hpg, 1.0) == target);  // bit-identical: gamma fully gone
}

TEST_CASE("residual homogeneity and invariances") {
    Rng rng{2024};
    Multidegree d{2, 3};
    SparseHypersurface f = rng.target(d);

    for (int trial = 0; trial < 25; ++trial) {
        AlphaPoint p = rng.point(d);
        Residual r = evaluate(f, p);

        // scaling f scales h exactly
        Complex lam = rng.cplx();
        Residual rs = evaluate(scale_hypersurface(f, lam), p);
        for (size_t k = 0; k < r.h.size(); ++k)
            CHECK(std::abs(rs.h[k] - lam * r.h[k]) <= 1e-12 * std::abs(lam * r.h[k]) + 1e-14);

        // scaling alpha by beta scales h_k by beta^k
        Complex beta = rng.cplx();
        std::vector<std::vector<Complex>> scaled = p.alpha;
        for (auto& row : scaled)
            for (auto& v : row) v *= beta;
        Residual rb = evaluate(f, AlphaPoint(d, scaled));
        Complex bk(1.0);
        for (size_t k = 0; k < r.h.size(); ++k) {
            bk *= beta;
            CHECK(std::abs(rb.h[k] - bk * r.h[k]) <= 1e-10 * (1.0 + std::abs(bk * r.h[k])));
        }

        // permuting within a color group changes nothing
        std::vector<std::vector<Complex>> perm = p.alpha;
        std::swap(perm[1][0], perm[1][2]);
        Residual rperm = evaluate(f, AlphaPoint(d, perm));
        for (size_t k = 0; k < r.h.size(); ++k) CHECK(std::abs(rperm.h[k] - r.h[k]) < 1e-12);

        // monomials of total degree >= |d| never affect the residual
        SparseHypersurface fhigh = combine_linear(
            Complex(1.0), f, Complex(1.0),
            SparseHypersurface(2, {{{d.total(), 0}, rng.cplx()}, {{3, d.total()}, rng.cplx()}}));
        Residual rh = evaluate(fhigh, p);
        for (size_t k = 0; k < r.h.size(); ++k) CHECK(std::abs(rh.h[k] - r.h[k]) < 1e-12);
    }
}

#include "osculant/hypersurface.hpp"

#include <algorithm>
#include <map>

namespace osculant {

SparseHypersurface::SparseHypersurface(int n, std::vector<HypersurfaceTerm> terms) : n_(n) {
    if (n < 1) throw std::invalid_argument("hypersurface dimension must be >= 1");
    std::map<std::vector<int>, Complex> merged;
    for (auto& t : terms) {
        if (static_cast<int>(t.exp.size()) != n)
            throw std::invalid_argument("exponent vector length does not match dimension");
        bool all_zero = true;
        for (int e : t.exp) {
            if (e < 0) throw std::invalid_argument("exponents must be nonnegative");
            if (e != 0) all_zero = false;
        }
        if (all_zero)
            throw std::invalid_argument("constant term not allowed: hypersurface must pass through 0");
        merged[t.exp] += t.c;
    }
    terms_.reserve(merged.size());
    for (auto& [exp, c] : merged) {
        if (c == Complex(0.0)) continue;
        terms_.push_back(HypersurfaceTerm{exp, c});
    }
}

Complex SparseHypersurface::coefficient(const std::vector<int>& exp) const {
    auto it = std::lower_bound(terms_.begin(), terms_.end(), exp,
                               [](const HypersurfaceTerm& t, const std::vector<int>& e) {
                                   return t.exp < e;
                               });
    if (it != terms_.end() && it->exp == exp) return it->c;
    return Complex(0.0);
}

SparseHypersurface combine_linear(Complex ca, const SparseHypersurface& a, Complex cb,
                                  const SparseHypersurface& b) {
    if (a.dimension() != b.dimension())
        throw std::invalid_argument("hypersurface dimension mismatch");
    std::vector<HypersurfaceTerm> terms;
    terms.reserve(a.terms().size() + b.terms().size());
    for (const auto& t : a.terms()) terms.push_back({t.exp, ca * t.c});
    for (const auto& t : b.terms()) terms.push_back({t.exp, cb * t.c});
    return SparseHypersurface(a.dimension(), std::move(terms));
}

SparseHypersurface scale_hypersurface(const SparseHypersurface& f, Complex s) {
    std::vector<HypersurfaceTerm> terms = f.terms();
    for (auto& t : terms) t.c *= s;
    return SparseHypersurface(f.dimension(), std::move(terms));
}

}  // namespace osculant

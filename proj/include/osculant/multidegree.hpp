#pragma once

#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace osculant {

/// Multidegree d = (d_1,...,d_n): the bead content of a necklace and the
/// coordinate degrees of a parametrization. Every entry is >= 1.
class Multidegree {
public:
    explicit Multidegree(std::vector<int> parts) : parts_(std::move(parts)) {
        if (parts_.empty())
            throw std::invalid_argument("multidegree must have at least one entry");
        total_ = 0;
        for (int p : parts_) {
            if (p < 1) throw std::invalid_argument("multidegree entries must be positive");
            total_ += p;
        }
    }

    Multidegree(std::initializer_list<int> parts) : Multidegree(std::vector<int>(parts)) {}

    int size() const { return static_cast<int>(parts_.size()); }
    int total() const { return total_; }
    int operator[](int i) const { return parts_[static_cast<size_t>(i)]; }
    const std::vector<int>& parts() const { return parts_; }

    int gcd() const {
        int g = 0;
        for (int p : parts_) g = std::gcd(g, p);
        return g;
    }

    /// d/k, defined when k divides every entry.
    Multidegree divided_by(int k) const {
        std::vector<int> q(parts_.size());
        for (size_t i = 0; i < parts_.size(); ++i) {
            if (parts_[i] % k != 0)
                throw std::invalid_argument("divisor does not divide every multidegree entry");
            q[i] = parts_[i] / k;
        }
        return Multidegree(std::move(q));
    }

    bool operator==(const Multidegree& o) const { return parts_ == o.parts_; }
    bool operator!=(const Multidegree& o) const { return !(*this == o); }

    std::string str() const {
        std::string s = "(";
        for (size_t i = 0; i < parts_.size(); ++i) {
            if (i) s += ",";
            s += std::to_string(parts_[i]);
        }
        return s + ")";
    }

private:
    std::vector<int> parts_;
    int total_ = 0;
};

}  // namespace osculant

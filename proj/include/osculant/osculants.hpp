#pragma once

#include <map>
#include <stdexcept>
#include <vector>

#include "osculant/necklace.hpp"
#include "osculant/system.hpp"

namespace osculant {

/// A parametrization in coefficient coordinates: x_i(t) = sum_j a[i][j-1] t^j.
/// When normalized, a_{1,1} = 1 exactly (set, not approximated), which picks
/// one representative among the |d| root-of-unity reparametrizations and
/// makes real osculants have real coordinates.
struct CoefficientForm {
    Multidegree d;
    std::vector<std::vector<Complex>> a;
    bool normalized = false;

    CoefficientForm(Multidegree deg, std::vector<std::vector<Complex>> coeffs, bool norm);

    std::vector<Complex> flatten() const;  // (i,j) order

    /// Coordinate series of order m (for residual checks and sampling).
    std::vector<TruncatedSeries> to_series(int m) const;
};

/// Raised when the linear coefficient of x_1 is numerically zero and the
/// a_{1,1} = 1 normalization cannot be applied; carries the raw expansion.
class DegenerateNormalization : public std::runtime_error {
public:
    explicit DegenerateNormalization(CoefficientForm raw_form)
        : std::runtime_error("degenerate normalization: a_{1,1} is numerically zero"),
          raw(std::move(raw_form)) {}
    CoefficientForm raw;
};

/// Expand each x_i(t) from root coordinates and rescale t so a_{1,1} = 1.
/// Throws DegenerateNormalization when |sum_j alpha_{1,j}| <= 1e-8.
CoefficientForm to_coefficient_form(const AlphaPoint& p);

/// Every imaginary part vanishes to tol, measured relative to the entry
/// magnitude above unit scale. Requires a normalized form.
bool is_real_osculant(const CoefficientForm& cf, double tol = 1e-6);

struct OsculantRecord {
    CoefficientForm form;
    bool is_real = false;
    double residual = 0.0;
    Necklace source;
};

struct DedupeResult {
    std::vector<OsculantRecord> records;             // one representative per group
    std::vector<std::vector<size_t>> collision_groups;  // input indices of groups with > 1 member
};

/// Group records whose normalized coefficient vectors agree entrywise within
/// tol (relative above unit scale). Collisions are reported, not erased: at a
/// generic target every group is a singleton and the group count equals the
/// primitive necklace count.
DedupeResult dedupe(const std::vector<OsculantRecord>& records, double tol = 1e-6);

struct PairingReport {
    std::vector<std::pair<size_t, size_t>> pairs;  // conjugate partners among non-real records
    std::vector<size_t> anomalies;                 // non-real records with no conjugate partner
    int real_count = 0;
};

/// For results of a real-coefficient target: each non-real osculant must have
/// an entrywise-conjugate partner. Unpaired non-real records are anomalies.
PairingReport conjugation_pairing(const std::vector<OsculantRecord>& records, double tol = 1e-6);

struct ExperimentTally {
    std::map<int, long long> rows;        // row = (count - (N mod 2)) / 2
    std::vector<int> anomalous_counts;    // counts violating the parity law
};

/// Histogram of per-target real counts keyed by (count - (N mod 2)) / 2 where
/// N is the primitive necklace count; parity violations are recorded, not
/// silently dropped.
ExperimentTally tally_experiment(const std::vector<int>& real_counts, const Multidegree& d);

/// Points (x_1(t),...,x_n(t)) at `count` equally spaced t in [t_lo, t_hi].
std::vector<std::vector<Complex>> sample_curve(const CoefficientForm& cf, double t_lo,
                                               double t_hi, int count);

}  // namespace osculant

#pragma once

#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

#include "mexkit/exactnum.hpp"
#include "mexkit/series.hpp"
#include "mexkit/structures.hpp"

namespace mexkit {

/// A finite set of forbidden positive weights, kept sorted and deduplicated.
class AvoidSet {
public:
    AvoidSet() = default;
    /// Throws UsageError on any element < 1.
    explicit AvoidSet(std::vector<int> weights);
    AvoidSet(std::initializer_list<int> weights) : AvoidSet(std::vector<int>(weights)) {}

    /// Bit i-1 of `mask` selects weight i.
    static AvoidSet from_mask(unsigned long mask);

    const std::vector<int>& elements() const { return weights_; }
    bool empty() const { return weights_.empty(); }
    std::size_t size() const { return weights_.size(); }
    int max() const { return weights_.empty() ? 0 : weights_.back(); }
    bool contains(int w) const;
    /// 1 when w is forbidden, 0 otherwise.
    int indicator(int w) const { return contains(w) ? 1 : 0; }
    std::string to_string() const;

    friend bool operator==(const AvoidSet&, const AvoidSet&) = default;

private:
    std::vector<int> weights_;
};

/// Counting series (through degree `order`) of objects with no piece weight in T.
TruncatedSeries gt_series(StructureKind kind, const AvoidSet& avoid, std::size_t order);

/// The partition generating function prod_{i>=1} 1/(1-x^i), truncated.
TruncatedSeries partition_series(std::size_t order);

// Dyck paths ---------------------------------------------------------------

/// Continued fraction with levels 1..max(T), innermost level 1 + x - x*C(x).
TruncatedSeries dp_avoid_series(const AvoidSet& avoid, std::size_t order);
/// Printed closed forms for mex 1 and mex 2; any other m throws UsageError.
TruncatedSeries dp_gamma_closed(unsigned m, std::size_t order);

// Planar trees ---------------------------------------------------------------

/// Fixed point of G = 1 + x + x * sum_{k>=1, k not in T} (G-1)^k, seeded at 1 + x.
TruncatedSeries pt_avoid_series(const AvoidSet& avoid, std::size_t order);
TruncatedSeries pt_gamma1_series(std::size_t order);
/// Trees avoiding out-degree 2, by the alternating binomial sum; n >= 1.
BigInt pt_g2_coeff(unsigned n);
/// Trees avoiding out-degrees 1 and 2, by the binomial sum; n >= 1.
/// Evaluates to 0 at n = 1 although the single-vertex tree qualifies.
BigInt pt_g12_coeff(unsigned n);
/// pt_g2_coeff(n) - pt_g12_coeff(n), verbatim (so 1 at n = 1, where the true count is 0).
BigInt pt_gamma2_coeff(unsigned n);

// Set partitions -------------------------------------------------------------

/// Exponential generating function exp(e^x - 1 - sum_{n in T} x^n/n!).
TruncatedSeries sp_avoid_egf(const AvoidSet& avoid, std::size_t order);
/// Counting sequence of set partitions with mex m, from the product formula.
TruncatedSeries sp_gamma_series(unsigned m, std::size_t order);

// Integer partitions and compositions -----------------------------------------

/// (x^{C(m,2)} - x^{C(m+1,2)}) * P(x); m >= 1.
TruncatedSeries ip_gamma_series(unsigned m, std::size_t order);
/// (1-x) / (1 - 2x + sum_{i in T} x^i (1-x)).
TruncatedSeries ic_avoid_series(const AvoidSet& avoid, std::size_t order);
/// Compositions of n with mex m by the multinomial sum over part multiplicities; m >= 1.
BigInt ic_gamma_closed(unsigned n, unsigned m);

// Inversion sequences ---------------------------------------------------------

/// Inversion sequences of size n with no entry in T: (n-k)! * prod_j (i_j - j + 1)
/// over the elements i_1 < ... < i_k of T below n.
BigInt is_count_avoiding(unsigned n, const AvoidSet& avoid);
/// Coefficient of x^n in the sum of G_T over |T| = k, m in T, T within [m]:
/// (m-k+1) * S(m, m-k+1) * (n-k)!. Requires 1 <= k <= m <= n.
BigInt is_summed_gt_coeff(unsigned n, unsigned m, unsigned k);
/// Inversion sequences of size n with mex m; n, m >= 1.
BigInt is_gamma(unsigned n, unsigned m);

} // namespace mexkit

#pragma once

#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

#include "mexkit/exactnum.hpp"

namespace mexkit {

/// A formal power series over exact rationals, known through degree order().
///
/// All binary operations require equal truncation orders and produce a series
/// of the same order whose coefficients agree with the untruncated result up
/// to that degree. Mixing orders throws UsageError.
class TruncatedSeries {
public:
    /// The zero series of the given order.
    explicit TruncatedSeries(std::size_t order);
    /// Coefficients 0..size-1; the order is size-1. An empty vector is rejected.
    explicit TruncatedSeries(std::vector<BigRational> coeffs);
    /// Leading coefficients given, remaining ones zero up to `order`.
    TruncatedSeries(std::size_t order, std::initializer_list<long> leading);

    static TruncatedSeries constant(const BigRational& c, std::size_t order);
    /// c * x^k, or zero when k > order.
    static TruncatedSeries monomial(std::size_t k, const BigRational& c, std::size_t order);
    static TruncatedSeries from_integers(std::span<const BigInt> values);

    std::size_t order() const { return coeffs_.size() - 1; }
    const BigRational& operator[](std::size_t n) const { return coeffs_.at(n); }
    BigRational& operator[](std::size_t n) { return coeffs_.at(n); }
    const std::vector<BigRational>& coeffs() const { return coeffs_; }

    bool is_integral() const;
    bool is_nonnegative_integral() const;
    /// Throws UsageError if any coefficient is not an integer.
    std::vector<BigInt> to_integers() const;

    TruncatedSeries& operator+=(const TruncatedSeries& rhs);
    TruncatedSeries& operator-=(const TruncatedSeries& rhs);
    TruncatedSeries& operator*=(const TruncatedSeries& rhs);
    TruncatedSeries& operator*=(const BigRational& c);
    TruncatedSeries operator-() const;

    /// Multiplicative inverse; constant term must be nonzero.
    TruncatedSeries reciprocal() const;
    /// Multiplication by x^k, discarding terms beyond the order.
    TruncatedSeries shift(std::size_t k) const;

    friend bool operator==(const TruncatedSeries&, const TruncatedSeries&) = default;

private:
    std::vector<BigRational> coeffs_;
};

TruncatedSeries operator+(TruncatedSeries lhs, const TruncatedSeries& rhs);
TruncatedSeries operator-(TruncatedSeries lhs, const TruncatedSeries& rhs);
TruncatedSeries operator*(const TruncatedSeries& lhs, const TruncatedSeries& rhs);
TruncatedSeries operator*(TruncatedSeries lhs, const BigRational& c);
TruncatedSeries operator*(const BigRational& c, TruncatedSeries rhs);
/// Throws SeriesDomainError ("non-invertible series") on a zero constant term in the divisor.
TruncatedSeries operator/(const TruncatedSeries& lhs, const TruncatedSeries& rhs);

// Transcendental operations via the usual coefficient recurrences.
TruncatedSeries exp(const TruncatedSeries& s);  // constant term 0
TruncatedSeries log(const TruncatedSeries& s);  // constant term 1
TruncatedSeries sqrt(const TruncatedSeries& s); // constant term 1
TruncatedSeries pow(const TruncatedSeries& s, unsigned k);

/// outer(inner(x)); inner must have constant term 0.
TruncatedSeries compose(const TruncatedSeries& outer, const TruncatedSeries& inner);

/// Catalan numbers through degree `order`, from C = 1 + x*C^2.
TruncatedSeries catalan_series(std::size_t order);

/// Multiply coefficient n by n! (exponential -> ordinary counting sequence).
TruncatedSeries egf_to_counts(const TruncatedSeries& egf);
/// Divide coefficient n by n!.
TruncatedSeries counts_to_egf(const TruncatedSeries& counts);

} // namespace mexkit

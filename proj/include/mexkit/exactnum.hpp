#pragma once

#include <cstdint>
#include <string>

#include <gmpxx.h>

namespace mexkit {

using BigInt = mpz_class;
/// GMP keeps every mpq_class result canonical: lowest terms, positive denominator.
using BigRational = mpq_class;

BigInt factorial(unsigned n);

/// Zero whenever b < 0, a < 0 or b > a.
BigInt binomial(std::int64_t a, std::int64_t b);

/// Stirling numbers of the second kind, memoized in a process-wide table.
BigInt stirling2(unsigned n, unsigned k);

/// Sum over all multisets of size n-k drawn from {1..k} of the product of
/// their elements. Enumerated literally; requires 1 <= k <= n.
BigInt sum_of_products_g(unsigned n, unsigned k);

BigInt bell(unsigned n);
BigInt catalan_number(unsigned n);
BigInt partition_count(unsigned n);

inline std::string to_decimal(const BigInt& v) { return v.get_str(10); }

} // namespace mexkit

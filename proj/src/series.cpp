#include "mexkit/series.hpp"

#include <string>
#include <utility>

#include "mexkit/errors.hpp"

namespace mexkit {

namespace {

void require_same_order(const TruncatedSeries& a, const TruncatedSeries& b)
{
    if (a.order() != b.order()) {
        throw UsageError("truncation orders differ: " + std::to_string(a.order()) + " vs "
                         + std::to_string(b.order()));
    }
}

void require_constant(const TruncatedSeries& s, int expected, const char* op)
{
    if (s[0] != expected) {
        throw SeriesDomainError(std::string(op) + " requires constant term " + std::to_string(expected)
                                + ", got " + s[0].get_str());
    }
}

} // namespace

TruncatedSeries::TruncatedSeries(std::size_t order) : coeffs_(order + 1, BigRational(0)) {}

TruncatedSeries::TruncatedSeries(std::vector<BigRational> coeffs) : coeffs_(std::move(coeffs))
{
    if (coeffs_.empty()) {
        throw UsageError("a truncated series needs at least one coefficient");
    }
}

TruncatedSeries::TruncatedSeries(std::size_t order, std::initializer_list<long> leading)
    : TruncatedSeries(order)
{
    std::size_t i = 0;
    for (long v : leading) {
        if (i > order) {
            break;
        }
        coeffs_[i++] = v;
    }
}

TruncatedSeries TruncatedSeries::constant(const BigRational& c, std::size_t order)
{
    TruncatedSeries s(order);
    s.coeffs_[0] = c;
    return s;
}

TruncatedSeries TruncatedSeries::monomial(std::size_t k, const BigRational& c, std::size_t order)
{
    TruncatedSeries s(order);
    if (k <= order) {
        s.coeffs_[k] = c;
    }
    return s;
}

TruncatedSeries TruncatedSeries::from_integers(std::span<const BigInt> values)
{
    std::vector<BigRational> c;
    c.reserve(values.size());
    for (const auto& v : values) {
        c.emplace_back(v);
    }
    return TruncatedSeries(std::move(c));
}

bool TruncatedSeries::is_integral() const
{
    for (const auto& c : coeffs_) {
        if (c.get_den() != 1) {
            return false;
        }
    }
    return true;
}

bool TruncatedSeries::is_nonnegative_integral() const
{
    for (const auto& c : coeffs_) {
        if (c.get_den() != 1 || sgn(c) < 0) {
            return false;
        }
    }
    return true;
}

std::vector<BigInt> TruncatedSeries::to_integers() const
{
    std::vector<BigInt> out;
    out.reserve(coeffs_.size());
    for (std::size_t n = 0; n < coeffs_.size(); ++n) {
        if (coeffs_[n].get_den() != 1) {
            throw UsageError("coefficient " + std::to_string(n) + " is not an integer: " + coeffs_[n].get_str());
        }
        out.push_back(coeffs_[n].get_num());
    }
    return out;
}

TruncatedSeries& TruncatedSeries::operator+=(const TruncatedSeries& rhs)
{
    require_same_order(*this, rhs);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        coeffs_[i] += rhs.coeffs_[i];
    }
    return *this;
}

TruncatedSeries& TruncatedSeries::operator-=(const TruncatedSeries& rhs)
{
    require_same_order(*this, rhs);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        coeffs_[i] -= rhs.coeffs_[i];
    }
    return *this;
}

TruncatedSeries& TruncatedSeries::operator*=(const TruncatedSeries& rhs)
{
    *this = *this * rhs;
    return *this;
}

TruncatedSeries& TruncatedSeries::operator*=(const BigRational& c)
{
    for (auto& v : coeffs_) {
        v *= c;
    }
    return *this;
}

TruncatedSeries TruncatedSeries::operator-() const
{
    TruncatedSeries r = *this;
    for (auto& v : r.coeffs_) {
        v = -v;
    }
    return r;
}

TruncatedSeries TruncatedSeries::reciprocal() const
{
    if (sgn(coeffs_[0]) == 0) {
        throw SeriesDomainError("non-invertible series: constant term is 0");
    }
    const std::size_t n = order();
    TruncatedSeries r(n);
    const BigRational inv0 = 1 / coeffs_[0];
    r.coeffs_[0] = inv0;
    BigRational acc;
    for (std::size_t k = 1; k <= n; ++k) {
        acc = 0;
        for (std::size_t j = 1; j <= k; ++j) {
            if (sgn(coeffs_[j]) != 0) {
                acc += coeffs_[j] * r.coeffs_[k - j];
            }
        }
        r.coeffs_[k] = -acc * inv0;
    }
    return r;
}

TruncatedSeries TruncatedSeries::shift(std::size_t k) const
{
    TruncatedSeries r(order());
    for (std::size_t i = 0; i + k <= order(); ++i) {
        r.coeffs_[i + k] = coeffs_[i];
    }
    return r;
}

TruncatedSeries operator+(TruncatedSeries lhs, const TruncatedSeries& rhs) { return lhs += rhs; }

TruncatedSeries operator-(TruncatedSeries lhs, const TruncatedSeries& rhs) { return lhs -= rhs; }

TruncatedSeries operator*(const TruncatedSeries& lhs, const TruncatedSeries& rhs)
{
    require_same_order(lhs, rhs);
    const std::size_t n = lhs.order();
    std::vector<BigRational> out(n + 1, BigRational(0));
    for (std::size_t i = 0; i <= n; ++i) {
        if (sgn(lhs[i]) == 0) {
            continue;
        }
        for (std::size_t j = 0; i + j <= n; ++j) {
            if (sgn(rhs[j]) != 0) {
                out[i + j] += lhs[i] * rhs[j];
            }
        }
    }
    return TruncatedSeries(std::move(out));
}

TruncatedSeries operator*(TruncatedSeries lhs, const BigRational& c) { return lhs *= c; }

TruncatedSeries operator*(const BigRational& c, TruncatedSeries rhs) { return rhs *= c; }

TruncatedSeries operator/(const TruncatedSeries& lhs, const TruncatedSeries& rhs)
{
    require_same_order(lhs, rhs);
    return lhs * rhs.reciprocal();
}

TruncatedSeries exp(const TruncatedSeries& s)
{
    require_constant(s, 0, "exp");
    const std::size_t n = s.order();
    std::vector<BigRational> e(n + 1, BigRational(0));
    e[0] = 1;
    for (std::size_t k = 1; k <= n; ++k) {
        BigRational acc = 0;
        for (std::size_t j = 1; j <= k; ++j) {
            if (sgn(s[j]) != 0) {
                acc += BigRational(static_cast<unsigned long>(j)) * s[j] * e[k - j];
            }
        }
        e[k] = acc / BigRational(static_cast<unsigned long>(k));
    }
    return TruncatedSeries(std::move(e));
}

TruncatedSeries log(const TruncatedSeries& s)
{
    require_constant(s, 1, "log");
    const std::size_t n = s.order();
    std::vector<BigRational> l(n + 1, BigRational(0));
    // From s * L' = s': k*L_k = k*s_k - sum_{j=1}^{k-1} j*L_j*s_{k-j}.
    for (std::size_t k = 1; k <= n; ++k) {
        BigRational acc = BigRational(static_cast<unsigned long>(k)) * s[k];
        for (std::size_t j = 1; j < k; ++j) {
            acc -= BigRational(static_cast<unsigned long>(j)) * l[j] * s[k - j];
        }
        l[k] = acc / BigRational(static_cast<unsigned long>(k));
    }
    return TruncatedSeries(std::move(l));
}

TruncatedSeries sqrt(const TruncatedSeries& s)
{
    require_constant(s, 1, "sqrt");
    const std::size_t n = s.order();
    std::vector<BigRational> r(n + 1, BigRational(0));
    r[0] = 1;
    for (std::size_t k = 1; k <= n; ++k) {
        BigRational acc = s[k];
        for (std::size_t j = 1; j < k; ++j) {
            acc -= r[j] * r[k - j];
        }
        r[k] = acc / 2;
    }
    return TruncatedSeries(std::move(r));
}

TruncatedSeries pow(const TruncatedSeries& s, unsigned k)
{
    TruncatedSeries result = TruncatedSeries::constant(1, s.order());
    TruncatedSeries base = s;
    while (k > 0) {
        if (k & 1U) {
            result *= base;
        }
        k >>= 1U;
        if (k > 0) {
            base *= base;
        }
    }
    return result;
}

TruncatedSeries compose(const TruncatedSeries& outer, const TruncatedSeries& inner)
{
    require_same_order(outer, inner);
    if (sgn(inner[0]) != 0) {
        throw SeriesDomainError("compose requires the inner series to have constant term 0, got "
                                + inner[0].get_str());
    }
    const std::size_t n = outer.order();
    TruncatedSeries r = TruncatedSeries::constant(outer[n], n);
    for (std::size_t k = n; k-- > 0;) {
        r = r * inner;
        r[0] += outer[k];
    }
    return r;
}

TruncatedSeries catalan_series(std::size_t order)
{
    std::vector<BigRational> c(order + 1, BigRational(0));
    c[0] = 1;
    for (std::size_t n = 1; n <= order; ++n) {
        BigRational acc = 0;
        for (std::size_t i = 0; i < n; ++i) {
            acc += c[i] * c[n - 1 - i];
        }
        c[n] = acc;
    }
    return TruncatedSeries(std::move(c));
}

TruncatedSeries egf_to_counts(const TruncatedSeries& egf)
{
    TruncatedSeries r = egf;
    for (std::size_t n = 0; n <= r.order(); ++n) {
        r[n] *= BigRational(factorial(static_cast<unsigned>(n)));
    }
    return r;
}

TruncatedSeries counts_to_egf(const TruncatedSeries& counts)
{
    TruncatedSeries r = counts;
    for (std::size_t n = 0; n <= r.order(); ++n) {
        r[n] /= BigRational(factorial(static_cast<unsigned>(n)));
    }
    return r;
}

} // namespace mexkit

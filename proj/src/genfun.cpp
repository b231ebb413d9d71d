#include "mexkit/genfun.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

#include "mexkit/errors.hpp"

namespace mexkit {

AvoidSet::AvoidSet(std::vector<int> weights) : weights_(std::move(weights))
{
    for (int w : weights_) {
        if (w < 1) {
            throw UsageError("avoided weights must be positive integers, got " + std::to_string(w));
        }
    }
    std::sort(weights_.begin(), weights_.end());
    weights_.erase(std::unique(weights_.begin(), weights_.end()), weights_.end());
}

AvoidSet AvoidSet::from_mask(unsigned long mask)
{
    std::vector<int> w;
    for (int i = 1; mask != 0; ++i, mask >>= 1U) {
        if (mask & 1UL) {
            w.push_back(i);
        }
    }
    return AvoidSet(std::move(w));
}

bool AvoidSet::contains(int w) const { return std::binary_search(weights_.begin(), weights_.end(), w); }

std::string AvoidSet::to_string() const
{
    std::string s = "{";
    for (std::size_t i = 0; i < weights_.size(); ++i) {
        if (i > 0) {
            s += ",";
        }
        s += std::to_string(weights_[i]);
    }
    return s + "}";
}

namespace {

TruncatedSeries one_minus_x(std::size_t order) { return TruncatedSeries(order, {1, -1}); }

TruncatedSeries x_series(std::size_t order) { return TruncatedSeries::monomial(1, 1, order); }

TruncatedSeries is_avoid_series(const AvoidSet& avoid, std::size_t order)
{
    TruncatedSeries s(order);
    for (std::size_t n = 0; n <= order; ++n) {
        s[n] = is_count_avoiding(static_cast<unsigned>(n), avoid);
    }
    return s;
}

BigInt exact_div(const BigInt& num, unsigned long den, const char* what)
{
    if (!mpz_divisible_ui_p(num.get_mpz_t(), den)) {
        throw std::logic_error(std::string(what) + ": sum not divisible");
    }
    BigInt q = num;
    q /= den;
    return q;
}

} // namespace

TruncatedSeries partition_series(std::size_t order)
{
    TruncatedSeries p = TruncatedSeries::constant(1, order);
    // Multiplying by 1/(1-x^i) is a running sum with stride i.
    for (std::size_t i = 1; i <= order; ++i) {
        for (std::size_t j = i; j <= order; ++j) {
            p[j] += p[j - i];
        }
    }
    return p;
}

TruncatedSeries gt_series(StructureKind kind, const AvoidSet& avoid, std::size_t order)
{
    switch (kind) {
    case StructureKind::IP: {
        TruncatedSeries g = partition_series(order);
        for (int i : avoid.elements()) {
            g = g - g.shift(static_cast<std::size_t>(i));
        }
        return g;
    }
    case StructureKind::IC:
        return ic_avoid_series(avoid, order);
    case StructureKind::IS:
        return is_avoid_series(avoid, order);
    case StructureKind::DP:
        return dp_avoid_series(avoid, order);
    case StructureKind::SP:
        return egf_to_counts(sp_avoid_egf(avoid, order));
    case StructureKind::PT:
        return pt_avoid_series(avoid, order);
    }
    throw UsageError("unknown structure kind");
}

TruncatedSeries ic_avoid_series(const AvoidSet& avoid, std::size_t order)
{
    TruncatedSeries den(order, {1, -2});
    const TruncatedSeries omx = one_minus_x(order);
    for (int i : avoid.elements()) {
        den += omx.shift(static_cast<std::size_t>(i));
    }
    return omx / den;
}

TruncatedSeries dp_avoid_series(const AvoidSet& avoid, std::size_t order)
{
    const TruncatedSeries c = catalan_series(order);
    if (avoid.empty()) {
        return c;
    }
    const TruncatedSeries x = x_series(order);
    const TruncatedSeries one = TruncatedSeries::constant(1, order);
    TruncatedSeries level = one + x - x * c;
    for (int i = avoid.max() - 1; i >= 1; --i) {
        level = one + x * BigRational(avoid.indicator(i)) - x * level.reciprocal();
    }
    return level.reciprocal();
}

TruncatedSeries dp_gamma_closed(unsigned m, std::size_t order)
{
    const TruncatedSeries c = catalan_series(order);
    const TruncatedSeries x = x_series(order);
    const TruncatedSeries one = TruncatedSeries::constant(1, order);
    if (m == 1) {
        return (one + x - x * c).reciprocal();
    }
    if (m == 2) {
        const TruncatedSeries x2 = x.shift(1);
        const TruncatedSeries num = x * one_minus_x(order) + BigRational(3) * x2 * c;
        const TruncatedSeries den = one + x + x2 * c;
        return num / den;
    }
    throw UsageError("no closed form for Dyck paths with mex " + std::to_string(m) + "; use the engine");
}

TruncatedSeries pt_avoid_series(const AvoidSet& avoid, std::size_t order)
{
    const TruncatedSeries one = TruncatedSeries::constant(1, order);
    const TruncatedSeries x = x_series(order);
    TruncatedSeries g = one + x;
    // Each round fixes at least one more coefficient; the last round confirms.
    for (std::size_t round = 0; round <= order + 1; ++round) {
        const TruncatedSeries h = g - one;
        TruncatedSeries sum = h / (one - h);
        TruncatedSeries power = one;
        int k = 0;
        for (int t : avoid.elements()) {
            for (; k < t; ++k) {
                power *= h;
            }
            sum -= power;
        }
        TruncatedSeries next = one + x + x * sum;
        if (next == g) {
            return g;
        }
        g = std::move(next);
    }
    throw std::logic_error("planar tree fixed-point iteration did not converge for T=" + avoid.to_string());
}

TruncatedSeries pt_gamma1_series(std::size_t order)
{
    const TruncatedSeries one_plus_x(order, {1, 1});
    const TruncatedSeries root = sqrt(TruncatedSeries(order, {1, -2, -3}));
    return (BigRational(3) * one_plus_x - root) / (BigRational(2) * one_plus_x);
}

BigInt pt_g2_coeff(unsigned n)
{
    if (n < 1) {
        throw UsageError("pt_g2_coeff requires n >= 1");
    }
    const std::int64_t nn = n;
    BigInt sum = 0;
    for (std::int64_t k = 0; k <= nn; ++k) {
        BigInt term = binomial(nn, k) * binomial(2 * nn - 3 * k - 2, nn - k - 1);
        if (k % 2 == 0) {
            sum += term;
        } else {
            sum -= term;
        }
    }
    return exact_div(sum, n, "pt_g2_coeff");
}

BigInt pt_g12_coeff(unsigned n)
{
    if (n < 1) {
        throw UsageError("pt_g12_coeff requires n >= 1");
    }
    const std::int64_t nn = n;
    BigInt sum = 0;
    for (std::int64_t k = 0; k <= nn; ++k) {
        sum += binomial(nn, k) * binomial(nn - 2 * k - 2, k - 1);
    }
    return exact_div(sum, n, "pt_g12_coeff");
}

BigInt pt_gamma2_coeff(unsigned n) { return pt_g2_coeff(n) - pt_g12_coeff(n); }

TruncatedSeries sp_avoid_egf(const AvoidSet& avoid, std::size_t order)
{
    TruncatedSeries exponent(order);
    for (std::size_t n = 1; n <= order; ++n) {
        if (!avoid.contains(static_cast<int>(n))) {
            exponent[n] = BigRational(1) / BigRational(factorial(static_cast<unsigned>(n)));
        }
    }
    return exp(exponent);
}

TruncatedSeries sp_gamma_series(unsigned m, std::size_t order)
{
    if (m < 1) {
        throw UsageError("sp_gamma_series requires m >= 1");
    }
    TruncatedSeries egf = sp_avoid_egf(AvoidSet{static_cast<int>(m)}, order);
    const TruncatedSeries one = TruncatedSeries::constant(1, order);
    for (unsigned k = 1; k < m; ++k) {
        const BigRational c = BigRational(-1) / BigRational(factorial(k));
        egf *= one - exp(TruncatedSeries::monomial(k, c, order));
    }
    return egf_to_counts(egf);
}

TruncatedSeries ip_gamma_series(unsigned m, std::size_t order)
{
    if (m < 1) {
        throw UsageError("ip_gamma_series requires m >= 1");
    }
    const std::size_t lo = static_cast<std::size_t>(m) * (m - 1) / 2;
    const std::size_t hi = static_cast<std::size_t>(m) * (m + 1) / 2;
    const TruncatedSeries p = partition_series(order);
    return p.shift(lo) - p.shift(hi);
}

BigInt ic_gamma_closed(unsigned n, unsigned m)
{
    if (m < 1) {
        throw UsageError("ic_gamma_closed requires m >= 1");
    }
    const unsigned base = m * (m - 1) / 2;
    if (n < base) {
        return 0;
    }
    const unsigned k = n - base;
    // alpha[i] = multiplicity of part i among the extra parts summing to k; part m excluded.
    std::vector<unsigned> alpha(std::max(k, m) + 1, 0);
    BigInt total = 0;
    std::function<void(unsigned, unsigned)> walk = [&](unsigned remaining, unsigned max_part) {
        if (remaining == 0) {
            unsigned parts = m - 1;
            BigInt den = 1;
            for (unsigned i = 1; i < alpha.size(); ++i) {
                parts += alpha[i];
                if (i < m) {
                    den *= factorial(alpha[i] + 1);
                } else if (i > m) {
                    den *= factorial(alpha[i]);
                }
            }
            BigInt term = factorial(parts);
            term /= den;
            total += term;
            return;
        }
        for (unsigned p = std::min(remaining, max_part); p >= 1; --p) {
            if (p == m) {
                continue;
            }
            ++alpha[p];
            walk(remaining - p, p);
            --alpha[p];
        }
    };
    walk(k, k);
    return total;
}

BigInt is_count_avoiding(unsigned n, const AvoidSet& avoid)
{
    BigInt product = 1;
    unsigned k = 0;
    for (int i : avoid.elements()) {
        if (i >= static_cast<int>(n)) {
            break;
        }
        ++k;
        product *= static_cast<unsigned long>(i - static_cast<int>(k) + 1);
    }
    return factorial(n - k) * product;
}

BigInt is_summed_gt_coeff(unsigned n, unsigned m, unsigned k)
{
    if (k < 1 || k > m || m > n) {
        throw UsageError("is_summed_gt_coeff requires 1 <= k <= m <= n");
    }
    return BigInt(m - k + 1) * stirling2(m, m - k + 1) * factorial(n - k);
}

BigInt is_gamma(unsigned n, unsigned m)
{
    if (n < 1 || m < 1) {
        throw UsageError("is_gamma requires n >= 1 and m >= 1");
    }
    if (n < m) {
        return 0;
    }
    if (n == m) {
        return 1;
    }
    BigInt sum = 0;
    for (unsigned k = 1; k <= m; ++k) {
        BigInt term = BigInt(m - k + 1) * stirling2(m, m - k + 1) * factorial(n - k);
        if (k % 2 == 1) {
            sum += term;
        } else {
            sum -= term;
        }
    }
    return sum;
}

} // namespace mexkit

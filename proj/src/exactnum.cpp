#include "mexkit/exactnum.hpp"

#include <mutex>
#include <vector>

#include "mexkit/errors.hpp"

namespace mexkit {

BigInt factorial(unsigned n)
{
    BigInt r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

BigInt binomial(std::int64_t a, std::int64_t b)
{
    if (a < 0 || b < 0 || b > a) {
        return 0;
    }
    BigInt r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(a), static_cast<unsigned long>(b));
    return r;
}

namespace {

class StirlingTable {
public:
    BigInt get(unsigned n, unsigned k)
    {
        if (k > n) {
            return 0;
        }
        std::lock_guard<std::mutex> lock(mu_);
        while (rows_.size() <= n) {
            extend();
        }
        return rows_[n][k];
    }

private:
    void extend()
    {
        if (rows_.empty()) {
            rows_.push_back({BigInt(1)});
            return;
        }
        const auto& prev = rows_.back();
        const auto n = static_cast<unsigned>(rows_.size());
        std::vector<BigInt> row(n + 1);
        row[0] = 0;
        for (unsigned k = 1; k <= n; ++k) {
            BigInt a = (k < prev.size()) ? BigInt(k * prev[k]) : BigInt(0);
            row[k] = a + prev[k - 1];
        }
        rows_.push_back(std::move(row));
    }

    std::mutex mu_;
    std::vector<std::vector<BigInt>> rows_;
};

StirlingTable& stirling_table()
{
    static StirlingTable table;
    return table;
}

// Products of nondecreasing sequences of `remaining` values from [lo, k].
void accumulate_products(unsigned remaining, unsigned lo, unsigned k, const BigInt& prefix, BigInt& sum)
{
    if (remaining == 0) {
        sum += prefix;
        return;
    }
    for (unsigned v = lo; v <= k; ++v) {
        accumulate_products(remaining - 1, v, k, prefix * v, sum);
    }
}

} // namespace

BigInt stirling2(unsigned n, unsigned k) { return stirling_table().get(n, k); }

BigInt sum_of_products_g(unsigned n, unsigned k)
{
    if (k < 1 || k > n) {
        throw UsageError("sum_of_products_g requires 1 <= k <= n");
    }
    BigInt sum = 0;
    accumulate_products(n - k, 1, k, BigInt(1), sum);
    return sum;
}

BigInt bell(unsigned n)
{
    BigInt sum = 0;
    for (unsigned k = 0; k <= n; ++k) {
        sum += stirling2(n, k);
    }
    return sum;
}

BigInt catalan_number(unsigned n)
{
    BigInt c = binomial(2 * static_cast<std::int64_t>(n), n);
    c /= (n + 1);
    return c;
}

BigInt partition_count(unsigned n)
{
    // Parts added one size at a time: p[j] counts partitions of j into parts <= i.
    std::vector<BigInt> p(n + 1, BigInt(0));
    p[0] = 1;
    for (unsigned i = 1; i <= n; ++i) {
        for (unsigned j = i; j <= n; ++j) {
            p[j] += p[j - i];
        }
    }
    return p[n];
}

} // namespace mexkit

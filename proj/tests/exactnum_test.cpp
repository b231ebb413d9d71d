#include <doctest.h>

#include <thread>
#include <vector>

#include "mexkit/errors.hpp"
#include "mexkit/exactnum.hpp"
#include "oracles.hpp"

using namespace mexkit;

TEST_CASE("factorial")
{
    CHECK(factorial(0) == 1);
    CHECK(factorial(5) == 120);
    CHECK(factorial(10) == 3628800);
    CHECK(factorial(25).get_str() == "15511210043330985984000000");
}

TEST_CASE("binomial convention")
{
    CHECK(binomial(5, 2) == 10);
    CHECK(binomial(-1, 0) == 0);
    CHECK(binomial(3, 5) == 0);
    CHECK(binomial(4, 0) == 1);
    CHECK(binomial(4, -1) == 0);
    CHECK(binomial(0, 0) == 1);
    for (int a = 0; a <= 20; ++a) {
        for (int b = 0; b <= a; ++b) {
            CHECK(binomial(a, b) == binomial(a, a - b));
        }
    }
}

TEST_CASE("stirling2 against set partition enumeration")
{
    CHECK(stirling2(4, 2) == 7);
    CHECK(stirling2(3, 1) == 1);
    CHECK(stirling2(0, 0) == 1);
    CHECK(stirling2(5, 0) == 0);
    CHECK(stirling2(2, 3) == 0);
    for (unsigned n = 0; n <= 12; ++n) {
        CHECK(stirling2(n, n) == 1);
    }
    for (unsigned n = 1; n <= 7; ++n) {
        std::vector<unsigned long> by_blocks(n + 1, 0);
        oracle::set_partition_block_sizes(n, [&](const std::vector<int>& b) { ++by_blocks[b.size()]; });
        for (unsigned k = 0; k <= n; ++k) {
            CHECK(stirling2(n, k) == by_blocks[k]);
        }
    }
}

TEST_CASE("sum_of_products_g")
{
    CHECK(sum_of_products_g(3, 2) == 3);
    CHECK(sum_of_products_g(4, 2) == 7);
    for (unsigned k = 1; k <= 8; ++k) {
        CHECK(sum_of_products_g(k, k) == 1);
    }
    CHECK_THROWS_AS(sum_of_products_g(2, 3), UsageError);
    CHECK_THROWS_AS(sum_of_products_g(3, 0), UsageError);
}

TEST_CASE("g(n,k) equals S(n,k)")
{
    for (unsigned n = 1; n <= 10; ++n) {
        for (unsigned k = 1; k <= n; ++k) {
            CHECK(sum_of_products_g(n, k) == stirling2(n, k));
        }
    }
}

TEST_CASE("alternating factorial-Stirling sum is 1")
{
    for (unsigned m = 1; m <= 12; ++m) {
        BigInt sum = 0;
        for (unsigned k = 1; k <= m; ++k) {
            BigInt term = factorial(k) * stirling2(m, k);
            if ((m - k) % 2 == 0) {
                sum += term;
            } else {
                sum -= term;
            }
        }
        CHECK(sum == 1);
    }
}

TEST_CASE("classical totals")
{
    CHECK(bell(4) == 15);
    CHECK(catalan_number(5) == 42);
    CHECK(partition_count(0) == 1);
    CHECK(partition_count(25) == 1958);
}

TEST_CASE("stirling table is safe under concurrent first use")
{
    std::vector<std::thread> threads;
    std::vector<BigInt> results(8);
    for (unsigned t = 0; t < results.size(); ++t) {
        threads.emplace_back([&, t] { results[t] = stirling2(40 + t, 7); });
    }
    for (auto& th : threads) {
        th.join();
    }
    for (unsigned t = 0; t < results.size(); ++t) {
        CHECK(results[t] == stirling2(40 + t, 7));
    }
}

#include "mexkit/mexengine.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <sstream>
#include <string>

#include "mexkit/errors.hpp"

namespace mexkit {

TruncatedSeries f_series(StructureKind kind, unsigned m, std::size_t order)
{
    TruncatedSeries f(order);
    const unsigned long subsets = 1UL << m;
    for (unsigned long mask = 0; mask < subsets; ++mask) {
        const AvoidSet t = AvoidSet::from_mask(mask);
        const TruncatedSeries g = gt_series(kind, t, order);
        if (t.size() % 2 == 0) {
            f += g;
        } else {
            f -= g;
        }
    }
    return f;
}

namespace {

// Subsets T of [m] containing m, as T \ {m} ranges over subsets of [m-1].
template <typename Fn>
void for_each_subset_with_max(unsigned m, Fn&& fn)
{
    const unsigned long top = 1UL << (m - 1);
    for (unsigned long rest = 0; rest < top; ++rest) {
        fn(AvoidSet::from_mask(rest | top));
    }
}

TruncatedSeries gamma_from_gt(StructureKind kind, unsigned m, std::size_t order)
{
    TruncatedSeries gamma(order);
    for_each_subset_with_max(m, [&](const AvoidSet& t) {
        const TruncatedSeries g = gt_series(kind, t, order);
        if (t.size() % 2 == 1) {
            gamma += g;
        } else {
            gamma -= g;
        }
    });
    return gamma;
}

TruncatedSeries gamma_inversion(unsigned m, std::size_t order)
{
    TruncatedSeries gamma(order);
    // Below m the summed coefficient formula does not apply; sum the G_T coefficients.
    for (std::size_t n = 0; n < std::min<std::size_t>(m, order + 1); ++n) {
        BigInt acc = 0;
        for_each_subset_with_max(m, [&](const AvoidSet& t) {
            const BigInt c = is_count_avoiding(static_cast<unsigned>(n), t);
            if (t.size() % 2 == 1) {
                acc += c;
            } else {
                acc -= c;
            }
        });
        gamma[n] = acc;
    }
    for (std::size_t n = m; n <= order; ++n) {
        BigInt acc = 0;
        for (unsigned k = 1; k <= m; ++k) {
            const BigInt c = is_summed_gt_coeff(static_cast<unsigned>(n), m, k);
            if (k % 2 == 1) {
                acc += c;
            } else {
                acc -= c;
            }
        }
        gamma[n] = acc;
    }
    return gamma;
}

} // namespace

TruncatedSeries gamma_series(StructureKind kind, unsigned m, std::size_t order)
{
    if (m < 1) {
        throw UsageError("gamma_series requires m >= 1");
    }
    if (kind == StructureKind::IS) {
        return gamma_inversion(m, order);
    }
    return gamma_from_gt(kind, m, order);
}

std::string_view to_string(Method method)
{
    switch (method) {
    case Method::Engine:
        return "engine";
    case Method::ClosedForm:
        return "closed";
    case Method::BruteForce:
        return "brute";
    case Method::CrossCheck:
        return "cross";
    }
    return "?";
}

Method parse_method(std::string_view name)
{
    if (name == "engine") {
        return Method::Engine;
    }
    if (name == "closed" || name == "closed_form") {
        return Method::ClosedForm;
    }
    if (name == "brute" || name == "brute_force") {
        return Method::BruteForce;
    }
    if (name == "cross" || name == "cross_check") {
        return Method::CrossCheck;
    }
    throw UsageError("unknown method '" + std::string(name) + "' (expected engine, closed, brute or cross)");
}

bool has_closed_form(StructureKind kind, unsigned n, unsigned m)
{
    if (m < 1 || n < 1) {
        return false;
    }
    switch (kind) {
    case StructureKind::IP:
    case StructureKind::IC:
    case StructureKind::IS:
    case StructureKind::SP:
        return true;
    case StructureKind::DP:
        return m <= 2;
    case StructureKind::PT:
        // The mex-2 binomial formula is off by one at n = 1.
        return m == 1 || (m == 2 && n >= 2);
    }
    return false;
}

BigInt closed_form_value(StructureKind kind, unsigned n, unsigned m)
{
    if (!has_closed_form(kind, n, m)) {
        throw UsageError("no closed form for " + std::string(to_string(kind)) + " at n=" + std::to_string(n)
                         + ", m=" + std::to_string(m));
    }
    switch (kind) {
    case StructureKind::IP:
        return ip_gamma_series(m, n)[n].get_num();
    case StructureKind::IC:
        return ic_gamma_closed(n, m);
    case StructureKind::IS:
        return is_gamma(n, m);
    case StructureKind::DP:
        return dp_gamma_closed(m, n)[n].get_num();
    case StructureKind::SP:
        return sp_gamma_series(m, n)[n].get_num();
    case StructureKind::PT:
        return m == 1 ? BigInt(pt_gamma1_series(n)[n].get_num()) : pt_gamma2_coeff(n);
    }
    return 0;
}

namespace {

MexTable empty_table(StructureKind kind, unsigned max_n, unsigned max_m)
{
    MexTable t{kind, max_n, max_m, {}, {}, {}};
    t.entries.assign(max_n + 1, std::vector<BigInt>(max_m, BigInt(0)));
    t.method.assign(max_n + 1, std::vector<Method>(max_m, Method::Engine));
    t.residual.assign(max_n + 1, BigInt(0));
    return t;
}

void fill_residual(MexTable& t)
{
    for (unsigned n = 0; n <= t.max_n; ++n) {
        BigInt r = count_objects(t.kind, n);
        for (const auto& v : t.entries[n]) {
            r -= v;
        }
        t.residual[n] = r;
    }
}

MexTable engine_table(StructureKind kind, unsigned max_n, unsigned max_m)
{
    MexTable t = empty_table(kind, max_n, max_m);
    for (unsigned m = 1; m <= max_m; ++m) {
        const TruncatedSeries g = gamma_series(kind, m, max_n);
        for (unsigned n = 0; n <= max_n; ++n) {
            t.entries[n][m - 1] = g[n].get_num();
        }
    }
    return t;
}

MexTable closed_table(StructureKind kind, unsigned max_n, unsigned max_m)
{
    MexTable t = empty_table(kind, max_n, max_m);
    for (unsigned m = 1; m <= max_m; ++m) {
        // Whole-series closed forms are evaluated once per column.
        std::vector<BigInt> column(max_n + 1, BigInt(0));
        bool need_engine = false;
        std::optional<TruncatedSeries> series;
        if (kind == StructureKind::IP) {
            series = ip_gamma_series(m, max_n);
        } else if (kind == StructureKind::SP) {
            series = sp_gamma_series(m, max_n);
        } else if (kind == StructureKind::DP && m <= 2) {
            series = dp_gamma_closed(m, max_n);
        } else if (kind == StructureKind::PT && m == 1) {
            series = pt_gamma1_series(max_n);
        }
        for (unsigned n = 1; n <= max_n; ++n) {
            if (!has_closed_form(kind, n, m)) {
                need_engine = true;
                continue;
            }
            t.entries[n][m - 1] = series ? BigInt((*series)[n].get_num()) : closed_form_value(kind, n, m);
            t.method[n][m - 1] = Method::ClosedForm;
        }
        if (need_engine) {
            const TruncatedSeries g = gamma_series(kind, m, max_n);
            for (unsigned n = 1; n <= max_n; ++n) {
                if (t.method[n][m - 1] == Method::Engine) {
                    t.entries[n][m - 1] = g[n].get_num();
                }
            }
        }
        // Empty object convention.
        t.entries[0][m - 1] = m == 1 ? 1 : 0;
        t.method[0][m - 1] = Method::ClosedForm;
    }
    return t;
}

MexTable brute_table(StructureKind kind, unsigned max_n, unsigned max_m)
{
    if (max_n > brute_force_bound(kind)) {
        throw BoundError("brute-force tables for " + std::string(to_string(kind)) + " are limited to n <= "
                         + std::to_string(brute_force_bound(kind)));
    }
    MexTable t = empty_table(kind, max_n, max_m);
    for (unsigned n = 0; n <= max_n; ++n) {
        const auto dist = mex_distribution_bf(kind, n);
        for (unsigned m = 1; m <= max_m; ++m) {
            auto it = dist.find(m);
            t.entries[n][m - 1] = it == dist.end() ? BigInt(0) : it->second;
            t.method[n][m - 1] = Method::BruteForce;
        }
    }
    return t;
}

void compare_tables(const MexTable& a, const MexTable& b)
{
    const unsigned rows = std::min(a.max_n, b.max_n);
    for (unsigned n = 0; n <= rows; ++n) {
        for (unsigned m = 1; m <= a.max_m; ++m) {
            const Method ma = a.method[n][m - 1];
            const Method mb = b.method[n][m - 1];
            if (ma == mb) {
                continue;
            }
            if (a.at(n, m) != b.at(n, m)) {
                std::ostringstream os;
                os << "cross-check mismatch for " << to_string(a.kind) << " at n=" << n << ", m=" << m << ": "
                   << to_string(ma) << "=" << a.at(n, m).get_str() << ", " << to_string(mb) << "="
                   << b.at(n, m).get_str();
                throw CrossCheckError(os.str());
            }
        }
    }
}

} // namespace

MexTable mex_table(StructureKind kind, unsigned max_n, unsigned max_m, Method method)
{
    if (max_m < 1) {
        throw UsageError("max_m must be at least 1");
    }
    if (method != Method::BruteForce && max_m > kEngineMaxM) {
        throw UsageError("max_m is capped at " + std::to_string(kEngineMaxM) + " for engine-backed tables");
    }
    MexTable t = [&] {
        switch (method) {
        case Method::Engine:
            return engine_table(kind, max_n, max_m);
        case Method::ClosedForm:
            return closed_table(kind, max_n, max_m);
        case Method::BruteForce:
            return brute_table(kind, max_n, max_m);
        case Method::CrossCheck: {
            MexTable engine = engine_table(kind, max_n, max_m);
            compare_tables(engine, closed_table(kind, max_n, max_m));
            const unsigned brute_rows = std::min(max_n, brute_force_bound(kind));
            compare_tables(engine, brute_table(kind, brute_rows, max_m));
            return engine;
        }
        }
        throw UsageError("unknown method");
    }();
    fill_residual(t);
    return t;
}

} // namespace mexkit

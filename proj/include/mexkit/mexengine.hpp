#pragma once

#include <cstddef>
#include <string_view>
#include <vector>

#include "mexkit/exactnum.hpp"
#include "mexkit/genfun.hpp"
#include "mexkit/series.hpp"
#include "mexkit/structures.hpp"

namespace mexkit {

/// Largest mex column the engine tabulates; the subset sums have 2^{m-1} terms.
inline constexpr unsigned kEngineMaxM = 12;

/// Objects containing at least one piece of every weight 1..m:
/// sum over T within [m] of (-1)^{|T|} G_T.
TruncatedSeries f_series(StructureKind kind, unsigned m, std::size_t order);

/// Objects with mex exactly m: sum over T within [m] with m in T of (-1)^{|T|+1} G_T.
/// Inversion sequences use the summed coefficient formula for n >= m.
TruncatedSeries gamma_series(StructureKind kind, unsigned m, std::size_t order);

enum class Method { Engine, ClosedForm, BruteForce, CrossCheck };

std::string_view to_string(Method method);
/// Accepts engine, closed, brute, cross (and the long forms closed_form, brute_force, cross_check).
Method parse_method(std::string_view name);

struct MexTable {
    StructureKind kind;
    unsigned max_n = 0;
    unsigned max_m = 0;
    /// entries[n][m-1] = number of size-n objects with mex m.
    std::vector<std::vector<BigInt>> entries;
    /// residual[n] = number of size-n objects with mex > max_m.
    std::vector<BigInt> residual;
    /// Method that produced each entry (never CrossCheck).
    std::vector<std::vector<Method>> method;

    const BigInt& at(unsigned n, unsigned m) const { return entries.at(n).at(m - 1); }
};

/// Fill a table for 0 <= n <= max_n, 1 <= m <= max_m.
///
/// ClosedForm uses a structure's printed formula where one exists for the
/// cell and falls back to the engine elsewhere (tagged accordingly). The
/// empty row is always gamma_{0,1} = 1. CrossCheck computes the engine,
/// closed-form and (within bounds) brute-force tables and throws
/// CrossCheckError naming the first mismatching cell.
///
/// Throws UsageError when max_m is 0 or exceeds kEngineMaxM for engine-backed
/// methods, and BoundError when brute force is requested beyond its bound.
MexTable mex_table(StructureKind kind, unsigned max_n, unsigned max_m, Method method);

/// True when the structure has a printed closed form covering cell (n, m).
bool has_closed_form(StructureKind kind, unsigned n, unsigned m);
/// The closed-form value of cell (n, m); requires has_closed_form.
BigInt closed_form_value(StructureKind kind, unsigned n, unsigned m);

} // namespace mexkit

#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "mexkit/exactnum.hpp"
#include "mexkit/mexengine.hpp"

namespace mexkit {

enum class OutputFormat { Tsv, Csv, Json, Bfile };

OutputFormat parse_format(std::string_view name);
std::string_view to_string(OutputFormat format);

/// A single integer sequence a(offset), a(offset+1), ...
struct SequenceDoc {
    std::string command;   // "sequence" or "gt"
    StructureKind kind;
    std::string parameter; // e.g. "m=2" or "avoid={1,2}"
    unsigned offset = 0;
    std::vector<BigInt> terms;
};

/// tsv/csv: header "n<sep>value" then one row per term. json: terms as decimal
/// strings. bfile: "n a(n)" lines.
std::string render_sequence(const SequenceDoc& doc, OutputFormat format);

/// tsv/csv: header "n" plus one column per mex value; with empty_at_zero an
/// extra m=0 column holds the empty object instead of m=1. bfile flattens the
/// table row by row, numbering cells from `offset`.
std::string render_table(const MexTable& table, OutputFormat format, bool empty_at_zero, unsigned offset);

} // namespace mexkit

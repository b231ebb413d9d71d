#include "mexkit/render.hpp"

#include <sstream>

#include <json.hpp>

#include "mexkit/errors.hpp"

namespace mexkit {

OutputFormat parse_format(std::string_view name)
{
    if (name == "tsv") {
        return OutputFormat::Tsv;
    }
    if (name == "csv") {
        return OutputFormat::Csv;
    }
    if (name == "json") {
        return OutputFormat::Json;
    }
    if (name == "bfile") {
        return OutputFormat::Bfile;
    }
    throw UsageError("unknown format '" + std::string(name) + "' (expected tsv, csv, json or bfile)");
}

std::string_view to_string(OutputFormat format)
{
    switch (format) {
    case OutputFormat::Tsv:
        return "tsv";
    case OutputFormat::Csv:
        return "csv";
    case OutputFormat::Json:
        return "json";
    case OutputFormat::Bfile:
        return "bfile";
    }
    return "?";
}

std::string render_sequence(const SequenceDoc& doc, OutputFormat format)
{
    std::ostringstream os;
    switch (format) {
    case OutputFormat::Tsv:
    case OutputFormat::Csv: {
        const char sep = format == OutputFormat::Tsv ? '\t' : ',';
        os << "n" << sep << "value\n";
        for (std::size_t i = 0; i < doc.terms.size(); ++i) {
            os << doc.offset + i << sep << doc.terms[i].get_str() << '\n';
        }
        break;
    }
    case OutputFormat::Bfile:
        for (std::size_t i = 0; i < doc.terms.size(); ++i) {
            os << doc.offset + i << ' ' << doc.terms[i].get_str() << '\n';
        }
        break;
    case OutputFormat::Json: {
        nlohmann::ordered_json j;
        j["command"] = doc.command;
        j["structure"] = std::string(to_string(doc.kind));
        j["parameter"] = doc.parameter;
        j["offset"] = std::to_string(doc.offset);
        auto terms = nlohmann::ordered_json::array();
        for (const auto& t : doc.terms) {
            terms.push_back(t.get_str());
        }
        j["terms"] = std::move(terms);
        os << j.dump(2) << '\n';
        break;
    }
    }
    return os.str();
}

namespace {

struct TableView {
    std::vector<std::string> columns;
    std::vector<std::vector<std::string>> rows; // without the n column
};

TableView make_view(const MexTable& t, bool empty_at_zero)
{
    TableView v;
    if (empty_at_zero) {
        v.columns.push_back("0");
    }
    for (unsigned m = 1; m <= t.max_m; ++m) {
        v.columns.push_back(std::to_string(m));
    }
    for (unsigned n = 0; n <= t.max_n; ++n) {
        std::vector<std::string> row;
        if (empty_at_zero) {
            row.push_back(n == 0 ? t.at(0, 1).get_str() : "0");
        }
        for (unsigned m = 1; m <= t.max_m; ++m) {
            row.push_back(empty_at_zero && n == 0 ? "0" : t.at(n, m).get_str());
        }
        v.rows.push_back(std::move(row));
    }
    return v;
}

} // namespace

std::string render_table(const MexTable& table, OutputFormat format, bool empty_at_zero, unsigned offset)
{
    const TableView v = make_view(table, empty_at_zero);
    std::ostringstream os;
    switch (format) {
    case OutputFormat::Tsv:
    case OutputFormat::Csv: {
        const char sep = format == OutputFormat::Tsv ? '\t' : ',';
        os << "n";
        for (const auto& c : v.columns) {
            os << sep << c;
        }
        os << '\n';
        for (std::size_t n = 0; n < v.rows.size(); ++n) {
            os << n;
            for (const auto& cell : v.rows[n]) {
                os << sep << cell;
            }
            os << '\n';
        }
        break;
    }
    case OutputFormat::Bfile: {
        std::size_t index = offset;
        for (const auto& row : v.rows) {
            for (const auto& cell : row) {
                os << index++ << ' ' << cell << '\n';
            }
        }
        break;
    }
    case OutputFormat::Json: {
        nlohmann::ordered_json j;
        j["command"] = "table";
        j["structure"] = std::string(to_string(table.kind));
        j["max_n"] = std::to_string(table.max_n);
        j["max_m"] = std::to_string(table.max_m);
        j["empty_at_zero"] = empty_at_zero;
        j["columns"] = v.columns;
        auto rows = nlohmann::ordered_json::array();
        for (std::size_t n = 0; n < v.rows.size(); ++n) {
            nlohmann::ordered_json r;
            r["n"] = std::to_string(n);
            r["values"] = v.rows[n];
            rows.push_back(std::move(r));
        }
        j["rows"] = std::move(rows);
        os << j.dump(2) << '\n';
        break;
    }
    }
    return os.str();
}

} // namespace mexkit

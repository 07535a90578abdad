#include "csv.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <fstream>
#include <sstream>

#include "ginicor/error.hpp"

namespace ginicor::cli {

namespace {

std::string trim(std::string_view text) {
    const auto first = text.find_first_not_of(" \t");
    if (first == std::string_view::npos) return {};
    const auto last = text.find_last_not_of(" \t");
    return std::string(text.substr(first, last - first + 1));
}

std::string lower(std::string text) {
    std::transform(text.begin(), text.end(), text.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    return text;
}

std::vector<std::string> split_record(const std::string& line, std::size_t line_number) {
    std::vector<std::string> fields;
    std::string field;
    bool quoted = false;
    bool was_quoted = false;
    for (std::size_t i = 0; i < line.size(); ++i) {
        const char c = line[i];
        if (quoted) {
            if (c == '"' && i + 1 < line.size() && line[i + 1] == '"') {
                field += '"';
                ++i;
            } else if (c == '"') {
                quoted = false;
            } else {
                field += c;
            }
        } else if (c == '"') {
            quoted = true;
            was_quoted = true;
        } else if (c == ',') {
            fields.push_back(was_quoted ? field : trim(field));
            field.clear();
            was_quoted = false;
        } else {
            field += c;
        }
    }
    if (quoted) throw_data("unterminated quote on line " + std::to_string(line_number));
    fields.push_back(was_quoted ? field : trim(field));
    return fields;
}

double parse_number(const std::string& cell, std::size_t row, const std::string& column) {
    double value = 0.0;
    const char* begin = cell.data();
    const char* end = begin + cell.size();
    if (begin != end && *begin == '+') ++begin;
    const auto [ptr, ec] = std::from_chars(begin, end, value);
    if (cell.empty() || ec != std::errc() || ptr != end) {
        throw_data("unparsable number '" + cell + "' at row " + std::to_string(row) +
                   ", column " + column);
    }
    return value;
}

}  // namespace

CsvTable parse_csv(const std::string& text) {
    CsvTable table;
    std::istringstream in(text);
    std::string line;
    std::size_t line_number = 0;
    while (std::getline(in, line)) {
        ++line_number;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line_number == 1 && line.rfind("\xEF\xBB\xBF", 0) == 0) line.erase(0, 3);
        if (trim(line).empty()) continue;
        auto fields = split_record(line, line_number);
        if (table.header.empty()) {
            table.header = std::move(fields);
            continue;
        }
        if (fields.size() != table.header.size()) {
            throw_data("row " + std::to_string(line_number) + " has " +
                       std::to_string(fields.size()) + " fields, header has " +
                       std::to_string(table.header.size()));
        }
        table.rows.push_back(std::move(fields));
    }
    if (table.header.empty()) throw_data("missing header row");
    if (table.rows.empty()) throw_data("no data rows after the header");
    return table;
}

CsvTable read_csv_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw_data("cannot read file '" + path + "'");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse_csv(buffer.str());
}

std::size_t resolve_column(const std::vector<std::string>& header, const std::string& selector) {
    for (std::size_t j = 0; j < header.size(); ++j) {
        if (header[j] == selector) return j;
    }
    std::size_t match = header.size();
    std::size_t matches = 0;
    for (std::size_t j = 0; j < header.size(); ++j) {
        if (lower(header[j]) == lower(selector)) {
            match = j;
            ++matches;
        }
    }
    if (matches == 1) return match;
    if (!selector.empty() && std::all_of(selector.begin(), selector.end(),
                                         [](unsigned char c) { return std::isdigit(c); })) {
        const std::size_t number = std::stoul(selector);
        if (number >= 1 && number <= header.size()) return number - 1;
    }
    throw_usage("unknown column '" + selector + "'");
}

LoadedData load_dataset(const CsvTable& table, const std::string& label,
                        const std::vector<std::string>& features) {
    const std::size_t label_column = resolve_column(table.header, label);
    std::vector<std::size_t> columns;
    if (features.empty()) {
        for (std::size_t j = 0; j < table.header.size(); ++j) {
            if (j != label_column) columns.push_back(j);
        }
    } else {
        for (const auto& f : features) columns.push_back(resolve_column(table.header, f));
    }
    if (columns.empty()) throw_usage("no feature columns selected");
    for (std::size_t c : columns) {
        if (c == label_column) throw_usage("the label column cannot also be a feature");
    }

    const std::size_t n = table.rows.size();
    Matrix x(n, columns.size());
    std::vector<std::string> labels(n);
    for (std::size_t i = 0; i < n; ++i) {
        const auto& row = table.rows[i];
        labels[i] = row[label_column];
        for (std::size_t c = 0; c < columns.size(); ++c) {
            // Row numbers count the header as row 1.
            x(i, c) = parse_number(row[columns[c]], i + 2, table.header[columns[c]]);
        }
    }

    LoadedData out{LabeledDataset::build(std::move(x), labels), {}, table.header[label_column]};
    for (std::size_t c : columns) out.feature_names.push_back(table.header[c]);
    return out;
}

}  // namespace ginicor::cli

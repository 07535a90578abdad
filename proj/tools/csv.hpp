#pragma once

#include <string>
#include <vector>

#include "ginicor/dataset.hpp"

namespace ginicor::cli {

struct CsvTable {
    std::vector<std::string> header;
    std::vector<std::vector<std::string>> rows;  // data rows, header excluded
};

/// Comma-delimited text with a header row. Double-quoted fields may contain
/// commas and doubled quotes. Throws a data error on ragged rows.
CsvTable parse_csv(const std::string& text);
CsvTable read_csv_file(const std::string& path);

/// Resolves a column by exact name, then by unique case-insensitive name,
/// then as a 1-based column number. Throws a usage error otherwise.
std::size_t resolve_column(const std::vector<std::string>& header, const std::string& selector);

struct LoadedData {
    LabeledDataset dataset;
    std::vector<std::string> feature_names;
    std::string label_name;
};

/// Label column read as raw strings; features parsed as decimals. With no
/// feature selectors every non-label column is a feature, in file order.
LoadedData load_dataset(const CsvTable& table, const std::string& label,
                        const std::vector<std::string>& features);

}  // namespace ginicor::cli

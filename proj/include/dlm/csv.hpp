#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace dlm {

// Malformed tabular input; `row` is 1-based and counts the header.
class CsvError : public std::runtime_error {
public:
    CsvError(const std::string& msg, std::size_t row);
    std::size_t row;
};

// Shortest decimal string that parses back to exactly x, capped at
// `precision` significant digits (6..17).  '.' decimal separator, "-0"
// normalized to "0".  Byte-identical across runs and platforms.
std::string format_float(double x, int precision);

// Strict float parse of a whole cell; throws CsvError carrying `row`.
double parse_number(std::string_view cell, std::size_t row);

struct CsvTable {
    std::vector<std::string> header;
    std::vector<std::vector<std::string>> rows;

    // Column index by header name, -1 when absent.
    int column(std::string_view name) const;
};

// Comma separation, LF line ends, header first.  No quoting: cells must
// not contain commas or newlines (throws std::invalid_argument).
std::string to_csv(const CsvTable& table);

// Inverse of to_csv; ragged rows or an empty header throw CsvError.
CsvTable parse_csv(std::string_view text);

} // namespace dlm

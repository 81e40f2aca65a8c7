#include "dlm/csv.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>

namespace dlm {

CsvError::CsvError(const std::string& msg, std::size_t row_)
    : std::runtime_error("row " + std::to_string(row_) + ": " + msg),
      row(row_) {}

namespace {

int significant_digits(std::string_view s) {
    int digits = 0;
    bool leading = true;
    for (char ch : s) {
        if (ch == 'e' || ch == 'E') {
            break;
        }
        if (ch < '0' || ch > '9') {
            continue;
        }
        if (ch == '0' && leading) {
            continue;
        }
        leading = false;
        ++digits;
    }
    return digits;
}

} // namespace

std::string format_float(double x, int precision) {
    if (precision < 6 || precision > 17) {
        throw std::invalid_argument("precision must lie in [6,17]");
    }
    if (x == 0.0) {
        return "0"; // covers -0
    }
    if (std::isnan(x)) {
        return "nan";
    }
    if (std::isinf(x)) {
        return x > 0 ? "inf" : "-inf";
    }
    char buf[64];
    auto [end, ec] = std::to_chars(buf, buf + sizeof buf, x);
    std::string s(buf, end);
    if (significant_digits(s) > precision) {
        auto [end2, ec2] = std::to_chars(buf, buf + sizeof buf, x,
                                         std::chars_format::general, precision);
        s.assign(buf, end2);
    }
    return s;
}

double parse_number(std::string_view cell, std::size_t row) {
    // trim ASCII whitespace
    while (!cell.empty() && std::isspace(static_cast<unsigned char>(cell.front()))) {
        cell.remove_prefix(1);
    }
    while (!cell.empty() && std::isspace(static_cast<unsigned char>(cell.back()))) {
        cell.remove_suffix(1);
    }
    double out = 0.0;
    const char* first = cell.data();
    const char* last = cell.data() + cell.size();
    auto [p, ec] = std::from_chars(first, last, out);
    if (ec != std::errc{} || p != last || cell.empty()) {
        throw CsvError("not a number: '" + std::string(cell) + "'", row);
    }
    return out;
}

int CsvTable::column(std::string_view name) const {
    const auto it = std::find(header.begin(), header.end(), name);
    return it == header.end() ? -1
                              : static_cast<int>(it - header.begin());
}

std::string to_csv(const CsvTable& table) {
    const auto check = [](const std::string& cell) {
        if (cell.find_first_of(",\n\r") != std::string::npos) {
            throw std::invalid_argument("cell contains a separator: " + cell);
        }
    };
    std::string out;
    for (std::size_t i = 0; i < table.header.size(); ++i) {
        check(table.header[i]);
        if (i) {
            out += ',';
        }
        out += table.header[i];
    }
    out += '\n';
    for (const auto& row : table.rows) {
        for (std::size_t i = 0; i < row.size(); ++i) {
            check(row[i]);
            if (i) {
                out += ',';
            }
            out += row[i];
        }
        out += '\n';
    }
    return out;
}

CsvTable parse_csv(std::string_view text) {
    CsvTable table;
    std::size_t row_no = 0;
    std::size_t pos = 0;
    while (pos < text.size()) {
        std::size_t eol = text.find('\n', pos);
        if (eol == std::string_view::npos) {
            eol = text.size();
        }
        std::string_view line = text.substr(pos, eol - pos);
        if (!line.empty() && line.back() == '\r') {
            line.remove_suffix(1);
        }
        pos = eol + 1;
        ++row_no;
        if (line.empty()) {
            continue;
        }
        std::vector<std::string> cells;
        std::size_t cell_start = 0;
        while (true) {
            const std::size_t comma = line.find(',', cell_start);
            if (comma == std::string_view::npos) {
                cells.emplace_back(line.substr(cell_start));
                break;
            }
            cells.emplace_back(line.substr(cell_start, comma - cell_start));
            cell_start = comma + 1;
        }
        if (table.header.empty()) {
            table.header = std::move(cells);
        } else {
            if (cells.size() != table.header.size()) {
                throw CsvError("expected " +
                                   std::to_string(table.header.size()) +
                                   " cells, got " + std::to_string(cells.size()),
                               row_no);
            }
            table.rows.push_back(std::move(cells));
        }
    }
    if (table.header.empty()) {
        throw CsvError("empty table", 1);
    }
    return table;
}

} // namespace dlm

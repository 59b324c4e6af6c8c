#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace cogmap::csv {

struct Table {
    std::vector<std::string> header;
    std::vector<std::vector<std::string>> rows;
};

// Reads delimited text with a header row. Supports double-quoted fields with
// "" escapes and tolerates trailing \r. Rows shorter than the header are
// padded with empty fields; longer rows are an error.
Table read(std::istream& in, char delimiter = ',');

// Quotes a field only when it contains the delimiter, a quote, or a newline.
std::string escape(std::string_view field, char delimiter = ',');

void write_row(std::ostream& out, const std::vector<std::string>& fields, char delimiter = ',');

// Locale-independent numeric parse of a whole (trimmed) field.
// Empty or unparseable fields yield nullopt.
std::optional<double> parse_number(std::string_view field);

std::string_view trim(std::string_view s);

// printf %.*g with the C decimal point; digits = significant digits.
// 17 digits round-trips any finite double exactly.
std::string format_sig(double value, int digits);

} // namespace cogmap::csv

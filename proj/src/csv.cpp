#include "chainrad/csv.hpp"

#include <array>
#include <charconv>

namespace chainrad {

std::string format_double(double value) {
    if (value == 0.0) return "0";  // collapses -0
    std::array<char, 32> buffer{};
    const auto result = std::to_chars(buffer.data(), buffer.data() + buffer.size(), value);
    return std::string(buffer.data(), result.ptr);
}

CsvWriter::CsvWriter(std::ostream& out, const CsvMetadata& metadata, std::initializer_list<std::string_view> columns)
    : out_(out) {
    out_ << '#';
    bool first = true;
    for (const auto& [key, value] : metadata) {
        out_ << (first ? " " : ",") << key << '=' << value;
        first = false;
    }
    out_ << '\n';
    first = true;
    for (auto column : columns) {
        if (!first) out_ << ',';
        out_ << column;
        first = false;
    }
    out_ << '\n';
}

CsvWriter& CsvWriter::cell(std::string_view text) {
    if (row_started_) out_ << ',';
    out_ << text;
    row_started_ = true;
    return *this;
}

CsvWriter& CsvWriter::cell(double value) { return cell(std::string_view(format_double(value))); }

CsvWriter& CsvWriter::cell(int value) { return cell(std::string_view(std::to_string(value))); }

void CsvWriter::end_row() {
    out_ << '\n';
    row_started_ = false;
}

}  // namespace chainrad

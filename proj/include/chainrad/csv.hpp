#pragma once

#include <initializer_list>
#include <ostream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace chainrad {

/// Shortest decimal string that parses back to exactly `value`.
std::string format_double(double value);

/// Metadata written as the leading `# key=value,...` line of a CSV file.
using CsvMetadata = std::vector<std::pair<std::string, std::string>>;

class CsvWriter {
public:
    CsvWriter(std::ostream& out, const CsvMetadata& metadata, std::initializer_list<std::string_view> columns);

    CsvWriter& cell(std::string_view text);
    CsvWriter& cell(double value);
    CsvWriter& cell(int value);
    void end_row();

private:
    std::ostream& out_;
    bool row_started_ = false;
};

}  // namespace chainrad

#pragma once

#include <ostream>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace orlapprox {

/// Formats doubles with 17 significant digits.
std::string format_real(double v);

using CsvField = std::variant<std::string, double, long long>;

/// Comma-separated table with a header row. Fields containing a comma,
/// quote or newline are quoted.
class CsvWriter {
public:
    explicit CsvWriter(std::vector<std::string> header);

    void add_row(std::vector<CsvField> row);
    std::size_t rows() const { return rows_.size(); }

    void write(std::ostream& out) const;
    std::string str() const;

private:
    std::vector<std::string> header_;
    std::vector<std::vector<CsvField>> rows_;
};

}  // namespace orlapprox

#include "orlapprox/csv.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

#include "orlapprox/errors.hpp"

namespace orlapprox {

std::string format_real(double v) {
    if (std::isnan(v)) return "nan";
    if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

namespace {

std::string quoted(std::string_view s) {
    if (s.find_first_of(",\"\n") == std::string_view::npos) return std::string(s);
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + '"';
}

std::string field_text(const CsvField& f) {
    if (const auto* s = std::get_if<std::string>(&f)) return quoted(*s);
    if (const auto* d = std::get_if<double>(&f)) return format_real(*d);
    return std::to_string(std::get<long long>(f));
}

}  // namespace

CsvWriter::CsvWriter(std::vector<std::string> header) : header_(std::move(header)) {
    if (header_.empty()) throw ConfigError("csv: empty header");
}

void CsvWriter::add_row(std::vector<CsvField> row) {
    if (row.size() != header_.size()) throw ConfigError("csv: row width does not match header");
    rows_.push_back(std::move(row));
}

void CsvWriter::write(std::ostream& out) const {
    for (std::size_t i = 0; i < header_.size(); ++i) out << (i ? "," : "") << quoted(header_[i]);
    out << '\n';
    for (const auto& row : rows_) {
        for (std::size_t i = 0; i < row.size(); ++i) out << (i ? "," : "") << field_text(row[i]);
        out << '\n';
    }
}

std::string CsvWriter::str() const {
    std::ostringstream os;
    write(os);
    return os.str();
}

}  // namespace orlapprox

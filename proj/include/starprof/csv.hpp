#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace starprof {

enum class OutputFormat { csv, pretty };

/// "csv" or "pretty"; throws DomainError otherwise.
OutputFormat parse_format(std::string_view name);

/// 12 significant digits, printf %.12g; negative zero prints as "0".
std::string format_double(double v);

/// A header plus rows of preformatted cells. CSV output is semicolon-separated
/// with the header row first; pretty output right-aligns columns.
class Table {
public:
    explicit Table(std::vector<std::string> header);

    void add_row(std::vector<std::string> cells);
    const std::vector<std::string>& header() const noexcept { return header_; }
    const std::vector<std::vector<std::string>>& rows() const noexcept { return rows_; }

    void write(std::ostream& out, OutputFormat format) const;

private:
    std::vector<std::string> header_;
    std::vector<std::vector<std::string>> rows_;
};

}  // namespace starprof

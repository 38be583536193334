#include "starprof/csv.hpp"

#include <algorithm>
#include <cstdio>
#include <ostream>

#include "starprof/error.hpp"

namespace starprof {

OutputFormat parse_format(std::string_view name) {
    if (name == "csv") return OutputFormat::csv;
    if (name == "pretty") return OutputFormat::pretty;
    throw DomainError("unknown format '" + std::string(name) + "' (expected csv or pretty)");
}

std::string format_double(double v) {
    if (v == 0.0) v = 0.0;
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

Table::Table(std::vector<std::string> header) : header_(std::move(header)) {}

void Table::add_row(std::vector<std::string> cells) {
    if (cells.size() != header_.size()) throw DomainError("table row has the wrong number of cells");
    rows_.push_back(std::move(cells));
}

void Table::write(std::ostream& out, OutputFormat format) const {
    if (format == OutputFormat::csv) {
        auto line = [&](const std::vector<std::string>& cells) {
            for (std::size_t k = 0; k < cells.size(); ++k) {
                if (k) out << ';';
                out << cells[k];
            }
            out << '\n';
        };
        line(header_);
        for (const auto& r : rows_) line(r);
        return;
    }
    std::vector<std::size_t> width(header_.size());
    for (std::size_t k = 0; k < header_.size(); ++k) width[k] = header_[k].size();
    for (const auto& r : rows_)
        for (std::size_t k = 0; k < r.size(); ++k) width[k] = std::max(width[k], r[k].size());
    auto line = [&](const std::vector<std::string>& cells) {
        for (std::size_t k = 0; k < cells.size(); ++k) {
            if (k) out << "  ";
            out << std::string(width[k] - cells[k].size(), ' ') << cells[k];
        }
        out << '\n';
    };
    line(header_);
    for (const auto& r : rows_) line(r);
}

}  // namespace starprof

#include "pmblow/table.hpp"

#include <cstdio>
#include <fstream>

#include "pmblow/errors.hpp"

namespace pmb {

std::string format_double(double value) {
    char buffer[40];
    std::snprintf(buffer, sizeof(buffer), "%.12g", value);
    return buffer;
}

Table::Table(std::vector<std::string> header) : header_(std::move(header)) {}

void Table::add_row(std::vector<std::string> row) {
    rows_.push_back(std::move(row));
}

std::string Table::to_csv() const {
    std::string out;
    auto append_row = [&out](const std::vector<std::string>& row) {
        for (std::size_t i = 0; i < row.size(); ++i) {
            if (i) out += ',';
            out += row[i];
        }
        out += '\n';
    };
    append_row(header_);
    for (const auto& row : rows_) append_row(row);
    return out;
}

void Table::write_csv(const std::string& path) const {
    std::ofstream file(path);
    if (!file) throw Error("cannot open " + path + " for writing");
    file << to_csv();
}

} // namespace pmb

#pragma once

#include <string>
#include <vector>

namespace pmb {

/// %.12g formatting used everywhere tables are emitted, so identical inputs
/// produce byte-identical files.
std::string format_double(double value);

/// Comma-delimited table with a header row.
class Table {
  public:
    explicit Table(std::vector<std::string> header);

    void add_row(std::vector<std::string> row);
    std::string to_csv() const;
    void write_csv(const std::string& path) const;

    const std::vector<std::vector<std::string>>& rows() const { return rows_; }

  private:
    std::vector<std::string> header_;
    std::vector<std::vector<std::string>> rows_;
};

} // namespace pmb

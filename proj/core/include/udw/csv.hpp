#pragma once

#include <filesystem>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "udw/sweep.hpp"

namespace udw {

class OutputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

using Cell = std::variant<double, std::string>;

struct Table {
  std::vector<std::string> header;
  std::vector<std::vector<Cell>> rows;
};

// Plain decimal notation rounded to 12 significant digits: 0.000123456789012,
// 12345.6789012, -2.00000000000. Non-finite values print as nan, inf, -inf.
std::string format_decimal(double x);

// RFC-4180: CRLF line ends; a field is quoted when it holds a comma, quote,
// CR or LF, with inner quotes doubled.
void write_csv(const Table& t, std::ostream& out);
std::vector<std::vector<std::string>> read_csv(std::istream& in);

// Header of the sweep CSV. The first 14 columns are the SweepResult row fields;
// then the lambda^2-normalized deltas and diagnostics.
const std::vector<std::string>& sweep_header();

Table to_table(const SweepResult& r);
Table to_table(const InertialStudy& s);
Table to_table(const std::vector<Table1Row>& rows);

// Throws OutputError when the file cannot be written.
void emit_csv(const Table& t, const std::filesystem::path& path);
inline void emit_csv(const SweepResult& r, const std::filesystem::path& path) { emit_csv(to_table(r), path); }

}  // namespace udw

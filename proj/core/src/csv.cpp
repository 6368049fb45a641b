#include "udw/csv.hpp"

#include <cmath>
#include <fmt/format.h>
#include <fstream>
#include <istream>
#include <ostream>

namespace udw {

std::string format_decimal(double x) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  if (x == 0.0) return "0";
  const std::string sci = fmt::format("{:.11e}", std::abs(x));  // d.ddddddddddde+XX
  const std::size_t epos = sci.find('e');
  const std::string digits = sci.substr(0, 1) + sci.substr(2, epos - 2);
  const int exp = std::stoi(sci.substr(epos + 1));
  const int n = static_cast<int>(digits.size());
  std::string out = x < 0 ? "-" : "";
  if (exp < 0) {
    out += "0." + std::string(static_cast<std::size_t>(-exp - 1), '0') + digits;
  } else if (exp >= n - 1) {
    out += digits + std::string(static_cast<std::size_t>(exp - n + 1), '0');
  } else {
    out += digits.substr(0, exp + 1) + "." + digits.substr(exp + 1);
  }
  return out;
}

namespace {

std::string quote(const std::string& s) {
  if (s.find_first_of(",\"\r\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string cell_text(const Cell& c) {
  if (const double* d = std::get_if<double>(&c)) return format_decimal(*d);
  return std::get<std::string>(c);
}

void write_line(std::ostream& out, const std::vector<std::string>& fields) {
  for (std::size_t k = 0; k < fields.size(); ++k) {
    if (k) out << ',';
    out << quote(fields[k]);
  }
  out << "\r\n";
}

}  // namespace

void write_csv(const Table& t, std::ostream& out) {
  write_line(out, t.header);
  std::vector<std::string> fields;
  for (const auto& row : t.rows) {
    fields.clear();
    for (const Cell& c : row) fields.push_back(cell_text(c));
    write_line(out, fields);
  }
}

std::vector<std::vector<std::string>> read_csv(std::istream& in) {
  std::vector<std::vector<std::string>> rows;
  std::vector<std::string> row;
  std::string field;
  bool quoted = false, any = false;
  char c;
  while (in.get(c)) {
    any = true;
    if (quoted) {
      if (c == '"') {
        if (in.peek() == '"') {
          in.get(c);
          field += '"';
        } else {
          quoted = false;
        }
      } else {
        field += c;
      }
      continue;
    }
    if (c == '"') {
      quoted = true;
    } else if (c == ',') {
      row.push_back(std::move(field));
      field.clear();
    } else if (c == '\r' || c == '\n') {
      if (c == '\r' && in.peek() == '\n') in.get(c);
      row.push_back(std::move(field));
      field.clear();
      rows.push_back(std::move(row));
      row.clear();
      any = false;
    } else {
      field += c;
    }
  }
  if (any) {
    row.push_back(std::move(field));
    rows.push_back(std::move(row));
  }
  return rows;
}

const std::vector<std::string>& sweep_header() {
  static const std::vector<std::string> h = {
      "a", "PA", "PB", "abs_M", "concurrence", "dC", "M2_tilde", "dM2_tilde", "M2_NL", "dM2_NL",
      "bell_b0", "dB0", "purity", "quadrature_error_estimate",
      "dC_norm", "dM2_tilde_norm", "dM2_NL_norm", "dB0_norm",
      "M2_NL_raw", "pauli_bell_max", "min_eigenvalue", "clipped_weight", "status"};
  return h;
}

Table to_table(const SweepResult& r) {
  Table t;
  t.header = sweep_header();
  const double l2 = r.config.detector.lambda * r.config.detector.lambda;
  for (const SweepRow& w : r.rows) {
    t.rows.push_back({w.a, w.PA, w.PB, w.absM, w.concurrence, w.dC, w.M2_tilde, w.dM2_tilde, w.M2_NL,
                      w.dM2_NL, w.bell_b0, w.dB0, w.purity, w.quadrature_error_estimate, w.dC / l2,
                      w.dM2_tilde / l2, w.dM2_NL / l2, w.dB0 / l2, w.M2_NL_raw, w.pauli_bell_max,
                      w.min_eigenvalue, w.clipped_weight, w.status});
  }
  return t;
}

Table to_table(const InertialStudy& s) {
  Table t;
  t.header = {"omega_sigma", "L", "PA", "PA_closed", "abs_M", "abs_M_closed", "concurrence",
              "concurrence_closed", "M2_tilde", "M2_tilde_pert", "M2_tilde_closed", "M2_tilde_norm",
              "M2_tilde_pert_norm", "concurrence_norm",
              "quadrature_error_estimate", "status"};
  const double l2 = s.config.detector.lambda * s.config.detector.lambda;
  for (const InertialRow& w : s.rows) {
    t.rows.push_back({w.omega_sigma, w.L, w.PA, w.PA_closed, w.absM, w.absM_closed, w.concurrence,
                      w.concurrence_closed, w.M2_tilde, w.M2_tilde_pert, w.M2_tilde_closed, w.M2_tilde / l2,
                      w.M2_tilde_pert / l2, w.concurrence / l2, w.quadrature_error_estimate, w.status});
  }
  return t;
}

Table to_table(const std::vector<Table1Row>& rows) {
  Table t;
  t.header = {"state", "M2_tilde", "concurrence", "bell_b0", "M2_NL",
              "ref_M2_tilde", "ref_concurrence", "ref_bell_b0", "ref_M2_NL"};
  for (const Table1Row& r : rows) {
    t.rows.push_back({std::string(to_string(r.state)), r.computed.M2_tilde, r.computed.concurrence,
                      r.computed.bell_b0, r.computed.M2_NL, r.reference.M2_tilde, r.reference.concurrence,
                      r.reference.bell_b0, r.reference.M2_NL});
  }
  return t;
}

void emit_csv(const Table& t, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw OutputError("cannot open " + path.string() + " for writing");
  write_csv(t, out);
  out.flush();
  if (!out) throw OutputError("write failed for " + path.string());
}

}  // namespace udw

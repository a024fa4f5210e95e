#include "dcsc/csv.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

#include "dcsc/errors.hpp"

namespace dcsc {

std::string format_double(double value) {
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof(buf), value);
  return std::string(buf, res.ptr);
}

void write_matrix_csv(std::ostream& out, const Eigen::MatrixXd& mat) {
  for (Eigen::Index i = 0; i < mat.rows(); ++i) {
    for (Eigen::Index j = 0; j < mat.cols(); ++j) {
      if (j) out << ',';
      out << format_double(mat(i, j));
    }
    out << '\n';
  }
}

void write_matrix_csv(const std::string& path, const Eigen::MatrixXd& mat) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw error(errc::io_failure, "cannot open for writing: " + path);
  write_matrix_csv(out, mat);
  if (!out) throw error(errc::io_failure, "write failed: " + path);
}

std::vector<std::string> split_fields(const std::string& line, char sep) {
  std::vector<std::string> fields;
  std::string current;
  for (char c : line) {
    if (c == sep) {
      fields.push_back(current);
      current.clear();
    } else {
      current.push_back(c);
    }
  }
  fields.push_back(current);
  return fields;
}

namespace {

std::string trim(const std::string& s) {
  std::size_t b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return "";
  std::size_t e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

}  // namespace

double parse_double(const std::string& field) {
  const std::string t = trim(field);
  double value{};
  auto res = std::from_chars(t.data(), t.data() + t.size(), value);
  if (res.ec != std::errc() || res.ptr != t.data() + t.size())
    throw error(errc::io_failure, "bad numeric field: '" + field + "'");
  return value;
}

long long parse_int(const std::string& field) {
  const std::string t = trim(field);
  long long value{};
  auto res = std::from_chars(t.data(), t.data() + t.size(), value);
  if (res.ec != std::errc() || res.ptr != t.data() + t.size())
    throw error(errc::io_failure, "bad integer field: '" + field + "'");
  return value;
}

Eigen::MatrixXd read_matrix_csv(std::istream& in) {
  std::vector<std::vector<double>> rows;
  std::string line;
  while (std::getline(in, line)) {
    if (trim(line).empty() || line[0] == '#') continue;
    std::vector<double> row;
    for (const auto& f : split_fields(line)) row.push_back(parse_double(f));
    if (!rows.empty() && row.size() != rows.front().size())
      throw error(errc::io_failure, "ragged csv row");
    rows.push_back(std::move(row));
  }
  if (rows.empty()) return Eigen::MatrixXd(0, 0);
  Eigen::MatrixXd mat(static_cast<Eigen::Index>(rows.size()),
                      static_cast<Eigen::Index>(rows.front().size()));
  for (Eigen::Index i = 0; i < mat.rows(); ++i)
    for (Eigen::Index j = 0; j < mat.cols(); ++j)
      mat(i, j) = rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
  return mat;
}

Eigen::MatrixXd read_matrix_csv(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw error(errc::io_failure, "cannot open for reading: " + path);
  return read_matrix_csv(in);
}

}  // namespace dcsc

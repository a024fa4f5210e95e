#ifndef DCSC_CSV_HPP
#define DCSC_CSV_HPP

#include <Eigen/Core>
#include <ostream>
#include <string>
#include <vector>

namespace dcsc {

// Shortest decimal string that round-trips the exact double value.
std::string format_double(double value);

// Plain comma-separated matrix, one row per line, no header.
void write_matrix_csv(std::ostream& out, const Eigen::MatrixXd& mat);
void write_matrix_csv(const std::string& path, const Eigen::MatrixXd& mat);
Eigen::MatrixXd read_matrix_csv(std::istream& in);
Eigen::MatrixXd read_matrix_csv(const std::string& path);

std::vector<std::string> split_fields(const std::string& line, char sep = ',');
double parse_double(const std::string& field);
long long parse_int(const std::string& field);

}  // namespace dcsc

#endif

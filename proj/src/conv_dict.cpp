#include "dcsc/conv_dict.hpp"

#include <cmath>
#include <fstream>
#include <limits>
#include <sstream>

#include "dcsc/csv.hpp"
#include "dcsc/errors.hpp"
#include "dcsc/rng.hpp"

namespace dcsc {

void LocalDictionary::validate(double tol) const {
  if (atoms.rows() < 1 || atoms.cols() < 1)
    throw error(errc::dimension_mismatch, "local dictionary must be at least 1x1");
  if (layer_index < 1) throw error(errc::dimension_mismatch, "layer index must be >= 1");
  for (Eigen::Index j = 0; j < atoms.cols(); ++j) {
    const double norm = atoms.col(j).norm();
    if (std::abs(norm - 1.0) > tol)
      throw error(errc::non_unit_columns,
                  "local column " + std::to_string(j) + " has norm " + format_double(norm));
  }
}

LocalDictionary load_local_dictionary(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw error(errc::io_failure, "cannot open local dictionary: " + path);
  std::string header;
  if (!std::getline(in, header)) throw error(errc::io_failure, "empty dictionary file: " + path);
  const auto fields = split_fields(header);
  if (fields.size() != 3)
    throw error(errc::io_failure, "dictionary header must be 'm,n,layer': " + path);
  const int m = static_cast<int>(parse_int(fields[0]));
  const int n = static_cast<int>(parse_int(fields[1]));
  const int layer = static_cast<int>(parse_int(fields[2]));
  LocalDictionary local;
  local.atoms = read_matrix_csv(in);
  local.layer_index = layer;
  if (local.atom_len() != m || local.atoms_per_shift() != n)
    throw error(errc::io_failure, "dictionary body does not match header shape: " + path);
  return local;
}

void save_local_dictionary(const std::string& path, const LocalDictionary& local) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw error(errc::io_failure, "cannot write local dictionary: " + path);
  out << local.atom_len() << ',' << local.atoms_per_shift() << ',' << local.layer_index << '\n';
  write_matrix_csv(out, local.atoms);
}

LocalDictionary random_local_dictionary(int atom_len, int atoms_per_shift, std::uint64_t seed,
                                        int layer_index) {
  if (atom_len < 1 || atoms_per_shift < 1)
    throw error(errc::dimension_mismatch, "local dictionary must be at least 1x1");
  Rng rng(seed);
  LocalDictionary local;
  local.layer_index = layer_index;
  local.atoms.resize(atom_len, atoms_per_shift);
  for (Eigen::Index j = 0; j < atoms_per_shift; ++j) {
    double norm2 = 0.0;
    do {
      for (Eigen::Index i = 0; i < atom_len; ++i) local.atoms(i, j) = rng.normal();
      norm2 = local.atoms.col(j).squaredNorm();
    } while (norm2 == 0.0);
    local.atoms.col(j) /= std::sqrt(norm2);
  }
  return local;
}

ConvDictionary::ConvDictionary(LocalDictionary local, int positions, int stride,
                               Eigen::MatrixXd dense)
    : local_(std::move(local)),
      positions_(positions),
      stride_(stride),
      dense_(std::move(dense)),
      coherence_cache_(std::numeric_limits<double>::quiet_NaN()) {}

ConvDictionary::ConvDictionary(const ConvDictionary& other)
    : local_(other.local_),
      positions_(other.positions_),
      stride_(other.stride_),
      dense_(other.dense_),
      coherence_cache_(other.coherence_cache_.load()) {}

ConvDictionary& ConvDictionary::operator=(const ConvDictionary& other) {
  local_ = other.local_;
  positions_ = other.positions_;
  stride_ = other.stride_;
  dense_ = other.dense_;
  coherence_cache_.store(other.coherence_cache_.load());
  return *this;
}

ConvDictionary build_conv_dictionary(LocalDictionary local, int positions, int stride) {
  if (positions < 1 || stride < 1)
    throw error(errc::incompatible_stride, "positions and stride must be >= 1");
  local.validate(1e-9);
  const int rows = positions * stride;
  const int n = local.atoms_per_shift();
  if (local.atom_len() > rows)
    throw error(errc::incompatible_stride,
                "atom length " + std::to_string(local.atom_len()) +
                    " exceeds row count " + std::to_string(rows) +
                    "; shifted copies would overlap themselves under wraparound");
  Eigen::MatrixXd dense = Eigen::MatrixXd::Zero(rows, positions * n);
  for (int shift = 0; shift < positions; ++shift) {
    const int offset = shift * stride;
    for (int atom = 0; atom < n; ++atom) {
      const int col = shift * n + atom;
      for (int i = 0; i < local.atom_len(); ++i)
        dense((offset + i) % rows, col) = local.atoms(i, atom);
    }
  }
  return ConvDictionary(std::move(local), positions, stride, std::move(dense));
}

namespace detail {

double coherence_dense(const Eigen::MatrixXd& dense) {
  const Eigen::MatrixXd gram = dense.transpose() * dense;
  double best = 0.0;
  for (Eigen::Index i = 0; i < gram.rows(); ++i)
    for (Eigen::Index j = i + 1; j < gram.cols(); ++j)
      best = std::max(best, std::abs(gram(i, j)));
  return best;
}

double coherence_structured(const ConvDictionary& dict) {
  // By construction column (shift, atom) is column (0, atom) rotated by
  // shift * stride rows, so <a_(s1,i), a_(s2,j)> depends only on s2 - s1.
  const auto& local = dict.local();
  const int n = local.atoms_per_shift();
  const int m = local.atom_len();
  const int rows = dict.rows();
  const int positions = dict.num_shifts();
  Eigen::VectorXd lhs = Eigen::VectorXd::Zero(rows);
  Eigen::VectorXd rhs = Eigen::VectorXd::Zero(rows);
  double best = 0.0;
  for (int i = 0; i < n; ++i) {
    lhs.setZero();
    for (int r = 0; r < m; ++r) lhs[r] = local.atoms(r, i);
    for (int j = 0; j < n; ++j) {
      for (int delta = 0; delta < positions; ++delta) {
        if (delta == 0 && i == j) continue;  // same column
        if (delta == 0 && j < i) continue;   // pair already visited
        const int offset = delta * dict.stride();
        // Skip pairs whose supports cannot overlap (mod wraparound).
        const int gap = offset % rows;
        const bool overlap = gap < m || rows - gap < m;
        if (!overlap) continue;
        rhs.setZero();
        for (int r = 0; r < m; ++r) rhs[(offset + r) % rows] = local.atoms(r, j);
        best = std::max(best, std::abs(lhs.dot(rhs)));
      }
    }
  }
  return best;
}

}  // namespace detail

double ConvDictionary::coherence() const {
  if (cols() < 2) throw error(errc::single_column, "coherence needs at least two columns");
  double cached = coherence_cache_.load(std::memory_order_acquire);
  if (!std::isnan(cached)) return cached;
  const double value =
      cols() <= 4096 ? detail::coherence_dense(dense_) : detail::coherence_structured(*this);
  coherence_cache_.store(value, std::memory_order_release);
  return value;
}

double mutual_coherence(const ConvDictionary& dict) { return dict.coherence(); }

void SignMask::validate() const {
  if (diagonal.size() < 1) throw error(errc::dimension_mismatch, "mask must be nonempty");
  for (Eigen::Index i = 0; i < diagonal.size(); ++i)
    if (diagonal[i] != 1.0 && diagonal[i] != -1.0)
      throw error(errc::dimension_mismatch, "mask entries must be exactly +1 or -1");
}

SignMask sample_sign_mask(int atoms_per_shift, int positions, std::uint64_t seed,
                          int layer_index) {
  const long long len = static_cast<long long>(atoms_per_shift) * positions;
  if (len < 1) throw error(errc::dimension_mismatch, "mask length must be >= 1");
  Rng rng(seed);
  SignMask mask;
  mask.layer_index = layer_index;
  mask.diagonal.resize(len);
  for (Eigen::Index i = 0; i < mask.diagonal.size(); ++i) mask.diagonal[i] = rng.rademacher();
  return mask;
}

MaskedDictionary::MaskedDictionary(const ConvDictionary& dict, const SignMask& mask)
    : dict_(&dict), mask_(&mask) {
  if (mask.size() != dict.cols())
    throw error(errc::dimension_mismatch,
                "mask length " + std::to_string(mask.size()) + " does not match dictionary cols " +
                    std::to_string(dict.cols()));
}

Eigen::VectorXd MaskedDictionary::matvec(const Eigen::VectorXd& code) const {
  if (code.size() != dict_->cols())
    throw error(errc::dimension_mismatch, "code length does not match dictionary cols");
  return dict_->dense() * mask_->diagonal.cwiseProduct(code);
}

Eigen::MatrixXd MaskedDictionary::matmat(const Eigen::MatrixXd& codes) const {
  if (codes.rows() != dict_->cols())
    throw error(errc::dimension_mismatch, "code rows do not match dictionary cols");
  return dict_->dense() * mask_->diagonal.asDiagonal() * codes;
}

Eigen::VectorXd MaskedDictionary::rmatvec(const Eigen::VectorXd& signal) const {
  if (signal.size() != dict_->rows())
    throw error(errc::dimension_mismatch, "signal length does not match dictionary rows");
  return mask_->diagonal.cwiseProduct(dict_->dense().transpose() * signal);
}

MaskedDictionary apply_mask(const ConvDictionary& dict, const SignMask& mask) {
  return MaskedDictionary(dict, mask);
}

}  // namespace dcsc

#ifndef DCSC_CONV_DICT_HPP
#define DCSC_CONV_DICT_HPP

#include <Eigen/Core>
#include <atomic>
#include <cstdint>
#include <string>

namespace dcsc {

// Seed block whose cyclic shifts build a layer's convolutional dictionary.
struct LocalDictionary {
  Eigen::MatrixXd atoms;  // atom_len x atoms_per_shift, unit-norm columns
  int layer_index = 1;

  int atom_len() const { return static_cast<int>(atoms.rows()); }
  int atoms_per_shift() const { return static_cast<int>(atoms.cols()); }

  // Throws non_unit_columns if any column norm deviates from 1 by more than tol.
  void validate(double tol = 1e-9) const;
};

// CSV format: one header line "m,n,layer" (three integers), then m rows of
// n comma-separated entries.
LocalDictionary load_local_dictionary(const std::string& path);
void save_local_dictionary(const std::string& path, const LocalDictionary& local);

// Gaussian atoms, column-normalized.
LocalDictionary random_local_dictionary(int atom_len, int atoms_per_shift, std::uint64_t seed,
                                        int layer_index = 1);

// Banded circulant matrix obtained by placing every local atom at every
// spatial position. Column (shift * n + atom) carries local column `atom`
// at row offset shift * stride, wrapping cyclically. rows = positions * stride,
// cols = positions * n.
class ConvDictionary {
 public:
  ConvDictionary() = default;
  ConvDictionary(LocalDictionary local, int positions, int stride, Eigen::MatrixXd dense);

  ConvDictionary(const ConvDictionary& other);
  ConvDictionary& operator=(const ConvDictionary& other);

  const Eigen::MatrixXd& dense() const { return dense_; }
  const LocalDictionary& local() const { return local_; }
  int rows() const { return static_cast<int>(dense_.rows()); }
  int cols() const { return static_cast<int>(dense_.cols()); }
  int num_shifts() const { return positions_; }
  int stride() const { return stride_; }

  // Max |<a_i, a_j>| over distinct columns; computed on first use and cached.
  // Throws single_column when cols < 2.
  double coherence() const;

 private:
  LocalDictionary local_;
  int positions_ = 0;
  int stride_ = 1;
  Eigen::MatrixXd dense_;
  mutable std::atomic<double> coherence_cache_;
};

ConvDictionary build_conv_dictionary(LocalDictionary local, int positions, int stride);

double mutual_coherence(const ConvDictionary& dict);

namespace detail {
// Exhaustive Gram maximum over the dense columns.
double coherence_dense(const Eigen::MatrixXd& dense);
// Same value via the shift structure: inner products depend only on the
// shift difference, so only overlapping shifted atom pairs are visited.
double coherence_structured(const ConvDictionary& dict);
}  // namespace detail

// Diagonal of independent signs applied to dictionary columns.
struct SignMask {
  Eigen::VectorXd diagonal;  // entries exactly -1 or +1
  int layer_index = 1;

  int size() const { return static_cast<int>(diagonal.size()); }
  void validate() const;
};

// Length atoms_per_shift * positions, i.i.d. signs, deterministic per seed.
SignMask sample_sign_mask(int atoms_per_shift, int positions, std::uint64_t seed,
                          int layer_index = 1);

// View of dict * diag(mask) exposing its action without materializing the
// product. Holds references; both operands must outlive the handle.
class MaskedDictionary {
 public:
  MaskedDictionary(const ConvDictionary& dict, const SignMask& mask);

  // A * (mask .* code)
  Eigen::VectorXd matvec(const Eigen::VectorXd& code) const;
  Eigen::MatrixXd matmat(const Eigen::MatrixXd& codes) const;
  // mask .* (A^T * signal)
  Eigen::VectorXd rmatvec(const Eigen::VectorXd& signal) const;

  // Column norms and coherence are invariant under sign flips.
  double coherence() const { return dict_->coherence(); }
  int rows() const { return dict_->rows(); }
  int cols() const { return dict_->cols(); }
  const ConvDictionary& dictionary() const { return *dict_; }
  const SignMask& mask() const { return *mask_; }

 private:
  const ConvDictionary* dict_;
  const SignMask* mask_;
};

MaskedDictionary apply_mask(const ConvDictionary& dict, const SignMask& mask);

}  // namespace dcsc

#endif

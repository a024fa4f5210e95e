#include "dcsc/sparsity.hpp"

#include <cmath>
#include <string>

#include "dcsc/errors.hpp"

namespace dcsc {

namespace {

void check_window(int window_len, int vector_len, const char* what) {
  if (window_len < 1 || vector_len < window_len)
    throw error(errc::dimension_mismatch,
                std::string(what) + ": need 1 <= window <= vector length, got window=" +
                    std::to_string(window_len) + " vector=" + std::to_string(vector_len));
}

void check_alpha(int alpha) {
  if (alpha != 0 && alpha != 2)
    throw error(errc::invalid_alpha, "alpha must be 0 or 2, got " + std::to_string(alpha));
}

// Count of nonzeros in the worst cyclic window, maintained incrementally.
double window_max_count(const Eigen::VectorXd& x, int window) {
  const int len = static_cast<int>(x.size());
  int count = 0;
  for (int i = 0; i < window; ++i) count += x[i] != 0.0;
  int best = count;
  for (int start = 1; start < len; ++start) {
    count -= x[start - 1] != 0.0;
    count += x[(start + window - 1) % len] != 0.0;
    if (count > best) best = count;
  }
  return static_cast<double>(best);
}

// Worst cyclic-window 2-norm. Each window is summed independently with
// Kahan compensation so the result does not depend on evaluation order.
double window_max_norm2(const Eigen::VectorXd& x, int window) {
  const int len = static_cast<int>(x.size());
  double best = 0.0;
  for (int start = 0; start < len; ++start) {
    double sum = 0.0, comp = 0.0;
    for (int k = 0; k < window; ++k) {
      const double v = x[(start + k) % len];
      const double term = v * v - comp;
      const double next = sum + term;
      comp = (next - sum) - term;
      sum = next;
    }
    if (sum > best) best = sum;
  }
  return std::sqrt(best);
}

double window_max(const Eigen::VectorXd& x, int window, int alpha) {
  return alpha == 0 ? window_max_count(x, window) : window_max_norm2(x, window);
}

}  // namespace

void PatchSpec::validate() const { check_window(patch_len, vector_len, "patch spec"); }
void StripeSpec::validate() const { check_window(stripe_len, vector_len, "stripe spec"); }

int stripe_length(int atom_len, int stride, int atoms_per_shift) {
  if (stride < 1 || atom_len < stride || atoms_per_shift < 1)
    throw error(errc::infeasible_config,
                "stripe length needs 1 <= stride <= atom length; got atom_len=" +
                    std::to_string(atom_len) + " stride=" + std::to_string(stride));
  // floor((2*(m/s) - 1) * n) == floor((2m - s) * n / s) for positive terms.
  const long long num = (2LL * atom_len - stride) * atoms_per_shift;
  return static_cast<int>(num / stride);
}

double patch_max_norm(const Eigen::VectorXd& x, const PatchSpec& spec, int alpha) {
  spec.validate();
  check_alpha(alpha);
  if (static_cast<int>(x.size()) != spec.vector_len)
    throw error(errc::dimension_mismatch, "vector length does not match patch spec");
  return window_max(x, spec.patch_len, alpha);
}

double stripe_max_norm(const Eigen::VectorXd& x, const StripeSpec& spec, int alpha) {
  spec.validate();
  check_alpha(alpha);
  if (static_cast<int>(x.size()) != spec.vector_len)
    throw error(errc::dimension_mismatch, "vector length does not match stripe spec");
  return window_max(x, spec.stripe_len, alpha);
}

double matrix_stripe_max(const Eigen::MatrixXd& X, const StripeSpec& spec, int alpha) {
  if (X.cols() == 0 || X.rows() == 0) throw error(errc::empty_matrix, "matrix has no entries");
  double best = 0.0;
  for (Eigen::Index j = 0; j < X.cols(); ++j)
    best = std::max(best, stripe_max_norm(X.col(j), spec, alpha));
  return best;
}

}  // namespace dcsc

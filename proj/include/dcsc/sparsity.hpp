#ifndef DCSC_SPARSITY_HPP
#define DCSC_SPARSITY_HPP

#include <Eigen/Core>

namespace dcsc {

// Sliding-window sparsity and energy measures over cyclic windows. A window
// starts at every coordinate index and wraps around the end of the vector.

struct PatchSpec {
  int patch_len = 1;   // window length
  int vector_len = 1;  // length of the vectors this spec applies to

  void validate() const;
};

struct StripeSpec {
  int stripe_len = 1;
  int vector_len = 1;

  void validate() const;
};

// floor((2*(atom_len/stride) - 1) * atoms_per_shift), evaluated exactly in
// integer arithmetic. Requires 1 <= stride <= atom_len so the result is >= 1.
int stripe_length(int atom_len, int stride, int atoms_per_shift);

// Max over all cyclic windows of the window's alpha-measure: nonzero count
// for alpha = 0, Euclidean norm for alpha = 2 (compensated summation).
double patch_max_norm(const Eigen::VectorXd& x, const PatchSpec& spec, int alpha);
double stripe_max_norm(const Eigen::VectorXd& x, const StripeSpec& spec, int alpha);

// Max of stripe_max_norm over the columns of X.
double matrix_stripe_max(const Eigen::MatrixXd& X, const StripeSpec& spec, int alpha);

}  // namespace dcsc

#endif

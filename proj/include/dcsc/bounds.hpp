#ifndef DCSC_BOUNDS_HPP
#define DCSC_BOUNDS_HPP

#include <Eigen/Core>
#include <span>
#include <vector>

namespace dcsc {

// Per-layer quantities entering the recovery guarantees. zeta_prev is the
// energy budget of the error feeding this layer (the previous layer's
// estimation error, or the input noise budget for the first layer).
struct LayerBoundInputs {
  double x_min_mag = 1.0;  // smallest nonzero magnitude at this layer
  double x_max_mag = 1.0;  // largest nonzero magnitude at this layer
  double mu = 0.0;         // dictionary coherence at this layer
  int sparsity = 1;        // stripe sparsity budget S
  double zeta_prev = 0.0;  // incoming error budget
  int atoms_per_shift = 1; // n
  int signal_len = 1;      // M
  int num_columns = 1;     // d
};

// Worst-case sparsity ceiling: mu^{-1} / x_max * (x_min / 2 - zeta_prev) + 1/2.
// The layer is uniformly guaranteed when S < returned value. mu == 0 yields
// +inf when the noise margin is positive (orthonormal columns impose no
// finite limit), 0.5 when the margin is exactly zero, -inf otherwise.
double uniform_sparsity_bound(const LayerBoundInputs& in);

// 2 * n * M * exp(-x_min^2 / (8 * (x_max^2 mu^2 S + zeta_prev^2))), unclamped.
// A vanishing denominator resolves to the limit: 0 for x_min > 0, else the
// prefactor.
double layer_failure_summand(const LayerBoundInputs& in);

// min(1, layer_failure_summand): probability that thresholding misses the
// support of one vector across one layer.
double layer_failure_bound(const LayerBoundInputs& in);

// Failure probability of recovering every column's support at every layer:
// min(1, d * sum_l layer_failure_summand(l)). Layers must be chained: each
// zeta_prev must equal the error recursion of the previous layer evaluated at
// zeta_support_sizes[l-1] (checked to 1e-9, throws chain_mismatch). For a
// single layer the support sizes are not consulted.
double pathway_failure_bound_raw(std::span<const LayerBoundInputs> layers,
                                 std::span<const int> zeta_support_sizes);
double pathway_failure_bound(std::span<const LayerBoundInputs> layers,
                             std::span<const int> zeta_support_sizes);

// zeta_l = sqrt(support_size) * (mu * (S - 1) * x_max + zeta_prev), the error
// budget valid conditionally on support recovery. support_size is the worst
// patch nonzero count of the estimate.
double error_recursion(int support_size, double mu, int sparsity, double x_max_mag,
                       double zeta_prev);

// Fills the zeta_prev fields of a copied layer list: layer 1 keeps its own
// zeta_prev (the input noise), layer l receives the recursion output of layer
// l-1 evaluated at zeta_support_sizes[l-2].
std::vector<LayerBoundInputs> chain_layer_inputs(std::span<const LayerBoundInputs> layers,
                                                 std::span<const int> zeta_support_sizes);

// Largest admissible S for a per-layer failure probability delta:
// (x_min^2 / (8 x_max^2 ln(2 M n / delta)) - zeta^2 / x_max^2) * mu^{-2}.
// May be negative (no admissible sparsity). Throws zero_coherence for mu = 0.
double admissible_sparsity(double x_min_mag, double x_max_mag, double zeta_prev, double mu,
                           int atoms_per_shift, int signal_len, double delta);

// Noise ceiling below which the probabilistic guarantee is meaningful:
// x_min / sqrt(8 ln(2 M n / delta)).
double noise_admissibility(double x_min_mag, int atoms_per_shift, int signal_len, double delta);

// Concentration of a signed sum: P(|sum_i eps_i alpha_i| > t) bounded by
// min(1, 2 exp(-t^2 / (2 ||alpha||^2))); 0 for a zero alpha.
double rademacher_tail(const Eigen::VectorXd& alpha, double t);

// Coherence floor mu > m^{-1/2} sqrt(1 - gamma^{-1}) for a generic rows x cols
// matrix with cols = gamma * rows. Informational diagnostic; 0 when cols <= rows.
double welch_coherence_floor(int rows, int cols);

}  // namespace dcsc

#endif

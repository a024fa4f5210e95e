#ifndef DCSC_ERRORS_HPP
#define DCSC_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace dcsc {

enum class errc {
  non_unit_columns,
  incompatible_stride,
  single_column,
  dimension_mismatch,
  invalid_alpha,
  empty_matrix,
  constraint_unsatisfiable,
  k_out_of_range,
  chain_mismatch,
  zero_coherence,
  infeasible_config,
  io_failure,
};

class error : public std::runtime_error {
 public:
  error(errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
  errc code() const noexcept { return code_; }

 private:
  errc code_;
};

}  // namespace dcsc

#endif

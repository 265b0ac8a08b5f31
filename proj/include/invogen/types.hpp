// Copyright (c) the invogen contributors.
// Licensed under the Apache License, Version 2.0.
#pragma once

#include <complex>
#include <stdexcept>
#include <string>

#include <Eigen/Dense>

namespace invogen {

using cxd = std::complex<double>;
using matrix = Eigen::MatrixXcd;
using cvec = Eigen::VectorXcd;

enum class errc {
  not_symmetric,
  not_skew,
  odd_dimension,
  singular_matrix,
  not_inner,
  ambiguous_solution,
  shape_mismatch,
  size_mismatch,
  not_a_permutation,
  neither_symmetric_nor_skew,
  not_proportional,
  zero_entry,
  lambda_exhausted,
  not_coprime,
  symplectic_rank2_obstruction,
  retry_exhausted,
  axiom_failure,
  numeric_failure,
  invalid_argument,
  parse_error,
};

inline const char* errc_name(errc c) {
  switch (c) {
    case errc::not_symmetric: return "not_symmetric";
    case errc::not_skew: return "not_skew";
    case errc::odd_dimension: return "odd_dimension";
    case errc::singular_matrix: return "singular_matrix";
    case errc::not_inner: return "not_inner";
    case errc::ambiguous_solution: return "ambiguous_solution";
    case errc::shape_mismatch: return "shape_mismatch";
    case errc::size_mismatch: return "size_mismatch";
    case errc::not_a_permutation: return "not_a_permutation";
    case errc::neither_symmetric_nor_skew: return "neither_symmetric_nor_skew";
    case errc::not_proportional: return "not_proportional";
    case errc::zero_entry: return "zero_entry";
    case errc::lambda_exhausted: return "lambda_exhausted";
    case errc::not_coprime: return "not_coprime";
    case errc::symplectic_rank2_obstruction:
      return "symplectic_rank2_obstruction";
    case errc::retry_exhausted: return "retry_exhausted";
    case errc::axiom_failure: return "axiom_failure";
    case errc::numeric_failure: return "numeric_failure";
    case errc::invalid_argument: return "invalid_argument";
    case errc::parse_error: return "parse_error";
  }
  return "unknown";
}

class error : public std::runtime_error {
 public:
  error(errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what),
        code_(code) {}

  errc code() const noexcept { return code_; }

 private:
  errc code_;
};

[[noreturn]] inline void raise(errc code, const std::string& what) {
  throw error(code, what);
}

// Acceptance thresholds shared by every numerical decision in the library.
// rank_rel is the relative singular-value cutoff for rank decisions,
// residual_rel the relative residual bound for verification checks.
struct tolerance {
  double rank_rel = 1e-9;
  double residual_rel = 1e-8;

  void validate() const {
    if (!(rank_rel > 0.0) || !(rank_rel < 1.0))
      raise(errc::invalid_argument, "tolerance.rank_rel must be in (0, 1)");
    if (!(residual_rel > 0.0) || !(residual_rel < 1.0))
      raise(errc::invalid_argument, "tolerance.residual_rel must be in (0, 1)");
  }
};

}  // namespace invogen

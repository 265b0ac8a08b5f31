// Copyright (c) the invogen contributors.
// Licensed under the Apache License, Version 2.0.
#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "invogen/algebra.hpp"
#include "invogen/closure.hpp"
#include "invogen/types.hpp"

namespace invogen {

inline constexpr const char* tool_version = "invogen 0.1.0";

// Input document: the algebra shape, the involution, and optional
// metadata.  Complex numbers are serialized as [re, im] pairs, matrices
// as row-major arrays of rows.
struct algebra_document {
  algebra_shape shape;
  involution_spec involution;
  std::string name;
  std::optional<std::uint64_t> seed;
};

algebra_document parse_algebra_document(const std::string& text);
std::string serialize_algebra_document(const algebra_document& doc);

// Output document: the synthesized element with enough of the closure
// evidence to replay the certification.
struct certificate_document {
  std::string version = tool_version;
  std::string input_digest;
  std::uint64_t seed = 0;
  algebra_shape shape;
  std::vector<matrix> element;
  std::vector<int> closure_dims;
  int rounds = 0;
  double invertibility_margin = 0.0;
  double involution_residual = 0.0;
  bool pass = false;
};

certificate_document parse_certificate_document(const std::string& text);
std::string serialize_certificate_document(const certificate_document& doc);

algebra_element element_from_certificate(const certificate_document& doc);

// 64 bit FNV-1a digest of the canonical (sorted, compact) serialization,
// rendered as "fnv1a64:" plus 16 hex digits.
std::string document_digest(const algebra_document& doc);

}  // namespace invogen

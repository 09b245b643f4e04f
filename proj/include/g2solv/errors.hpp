#pragma once

#include <stdexcept>
#include <string>

namespace g2solv {

/// Input that violates an operation's precondition (bad grammar, degree
/// mismatch, mixed exact/numeric data, zero spinor, ...).
class InvalidInput : public std::invalid_argument {
 public:
  explicit InvalidInput(const std::string& what) : std::invalid_argument(what) {}
};

/// A structural identity that must hold exactly did not (Jacobi, a
/// parallel-spinor verification, convention calibration, ...).
class VerificationFailure : public std::runtime_error {
 public:
  explicit VerificationFailure(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace g2solv

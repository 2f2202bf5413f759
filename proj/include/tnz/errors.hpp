#pragma once

#include <stdexcept>
#include <string>

namespace tnz {

/// Malformed input text (matrix files, sign strings, permutations, stores).
class ParseError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// A caller broke a documented precondition (size mismatch, index out of range).
class ContractViolation : public std::logic_error {
public:
  using std::logic_error::logic_error;
};

/// A matrix has a vanishing maximal minor where a totally nonzero one is required.
class NotGeneric : public std::domain_error {
public:
  using std::domain_error::domain_error;
};

}  // namespace tnz

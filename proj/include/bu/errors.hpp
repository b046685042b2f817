#pragma once

#include <stdexcept>
#include <string>

namespace bu {

/// Malformed or out-of-range input (bad letter, strand mismatch, unparsable file).
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A mathematical precondition failed (e.g. epsilon of a non-pure braid).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// A braid whose permutation is outside the cyclic subgroup <(1,n,...,2)>.
class MembershipError : public DomainError {
 public:
  using DomainError::DomainError;
};

class TracingError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class SearchError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class UnsupportedError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace bu

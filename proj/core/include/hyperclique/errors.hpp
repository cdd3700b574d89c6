#pragma once

#include <stdexcept>
#include <string>

namespace hyperclique {

/// A caller violated an operation's precondition (bad arity, m < k, ...).
class ArgumentError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A hypergraph or box-family document could not be loaded. The message
/// names the offending position, e.g. `edges[3][1]`.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// The requested instance exceeds a configured enumeration limit.
class SizeRefusal : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A state that a proven theorem rules out was reached. `evidence` carries a
/// JSON document (usually a certificate) so the finding can be reproduced.
class ConsistencyError : public std::logic_error {
 public:
  ConsistencyError(const std::string& what, std::string evidence = {})
      : std::logic_error(what), evidence_(std::move(evidence)) {}

  const std::string& evidence() const noexcept { return evidence_; }

 private:
  std::string evidence_;
};

}  // namespace hyperclique

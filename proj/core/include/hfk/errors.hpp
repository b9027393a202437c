#pragma once

#include <stdexcept>
#include <string>

namespace hfk {

/// Malformed or out-of-domain input (bad lens space, even Jacobi modulus, ...).
class InvalidArgument : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Root of all computational failures that are not caller mistakes.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class NonResidue : public Error {
 public:
  using Error::Error;
};

class ModulusTooLarge : public Error {
 public:
  using Error::Error;
};

/// The residue class m mod n admits no prime witness at all (n = 5, m = 2).
class NoSolutionClass : public Error {
 public:
  using Error::Error;
};

/// A bounded search ran out of candidates. Retrying with larger bounds may
/// succeed.
class SearchExhausted : public Error {
 public:
  using Error::Error;
};

class CongruenceViolated : public Error {
 public:
  using Error::Error;
};

/// An Alexander polynomial came out with a non-integral coefficient, which
/// means the supplied |H_1| does not match the Seifert matrix.
class NonIntegralResult : public Error {
 public:
  using Error::Error;
};

class HypothesisViolated : public Error {
 public:
  using Error::Error;
};

}  // namespace hfk

#pragma once

#include <stdexcept>
#include <string>

namespace kdmv {

/// Base of every error the library raises on bad input.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed graph6, edge-list or spec text.
class ParseError : public Error {
 public:
  using Error::Error;
};

/// Family descriptor with out-of-range parameters (e.g. a 2-cycle).
class SpecError : public Error {
 public:
  using Error::Error;
};

/// Vertex count above the supported maximum.
class SizeError : public Error {
 public:
  using Error::Error;
};

class ConnectivityError : public Error {
 public:
  using Error::Error;
};

/// Geodesic query between vertices in different components.
class DistanceError : public Error {
 public:
  using Error::Error;
};

/// Input violates the hypothesis of the requested operation.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Block graph whose deg*(C) exceeds ceil((d+1)/2).
class ConditionError : public Error {
 public:
  using Error::Error;
};

class IOError : public Error {
 public:
  using Error::Error;
};

/// Search that cannot report a partial answer ran out of nodes.
class BudgetError : public Error {
 public:
  using Error::Error;
};

}  // namespace kdmv

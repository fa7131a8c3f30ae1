#pragma once

#include <stdexcept>
#include <string>

namespace magspec {

class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

class NonRegularCurve : public Error {
 public:
  using Error::Error;
};

class RayEscapes : public Error {
 public:
  using Error::Error;
};

class DegenerateRay : public Error {
 public:
  using Error::Error;
};

class NotStarlike : public Error {
 public:
  using Error::Error;
};

class NotStrictlyStarlike : public Error {
 public:
  using Error::Error;
};

class NotClosedLoop : public Error {
 public:
  using Error::Error;
};

class NotClosed : public Error {
 public:
  using Error::Error;
};

class BadMetricProfile : public Error {
 public:
  using Error::Error;
};

class BadMask : public Error {
 public:
  using Error::Error;
};

class NotSimplyConnected : public Error {
 public:
  using Error::Error;
};

class ZeroVector : public Error {
 public:
  using Error::Error;
};

class BadOperator : public Error {
 public:
  using Error::Error;
};

class SolverStalled : public Error {
 public:
  using Error::Error;
};

class ThinDomainUnderresolved : public Error {
 public:
  using Error::Error;
};

class BadConfig : public Error {
 public:
  using Error::Error;
};

}  // namespace magspec

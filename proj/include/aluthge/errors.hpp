#pragma once

#include <stdexcept>
#include <string>

namespace aluthge {

/// Base class for all library errors.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

class NotHermitian : public Error {
public:
  using Error::Error;
};

class ConvergenceFailure : public Error {
public:
  using Error::Error;
};

class SingularInput : public Error {
public:
  using Error::Error;
};

class InvalidWeight : public Error {
public:
  using Error::Error;
};

class InvalidExponent : public Error {
public:
  using Error::Error;
};

class InvalidMeasure : public Error {
public:
  using Error::Error;
};

class MeasureMissing : public Error {
public:
  using Error::Error;
};

class ZeroDenominator : public Error {
public:
  using Error::Error;
};

class TooShort : public Error {
public:
  using Error::Error;
};

class KernelConditionViolated : public Error {
public:
  using Error::Error;
};

class SearchBudgetExceeded : public Error {
public:
  using Error::Error;
};

class GridMismatch : public Error {
public:
  using Error::Error;
};

class ConfigError : public Error {
public:
  using Error::Error;
};

class IoError : public Error {
public:
  using Error::Error;
};

} // namespace aluthge

#pragma once

#include <stdexcept>
#include <string>

namespace frontlab {

// Base class for all frontlab errors.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Invalid configuration: bad parameters, missing fields, unstable time step.
struct ConfigError : Error {
  using Error::Error;
};

// Argument outside its mathematical domain (u outside [0,1], t <= 0, ...).
struct DomainError : Error {
  using Error::Error;
};

// The interface reached a guard band or left the moving window.
struct WindowOverflowError : Error {
  enum class Side { left, right };
  WindowOverflowError(Side s, const std::string& what) : Error(what), side(s) {}
  Side side;
};

// NaN/Inf appeared in the field during integration.
struct NumericalBlowupError : Error {
  NumericalBlowupError(double when, long cell, const std::string& what)
      : Error(what), t(when), cell_index(cell) {}
  double t = 0.0;
  long cell_index = -1;
};

// Not enough data (samples, replicas, burn-in longer than the run, ...).
struct EstimationError : Error {
  using Error::Error;
};

// Importance weights too degenerate to trust (ESS gate).
struct DegenerateWeightsError : Error {
  using Error::Error;
};

// API misuse: an operation was called on data it was not prepared for.
struct UsageError : Error {
  using Error::Error;
};

}  // namespace frontlab

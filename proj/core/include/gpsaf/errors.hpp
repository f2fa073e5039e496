#pragma once

#include <stdexcept>
#include <string>

namespace gpsaf {

/// Base class for every error raised by this library.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// A caller broke an operation's precondition (dimension mismatch,
/// misaligned batches, slot-size drift between infill calls, ...).
struct ContractError : Error {
  using Error::Error;
};

/// A comparison or prediction asked for a value set the solution does not carry.
struct MissingValuesError : Error {
  using Error::Error;
};

/// Invalid configuration values, unknown problem or algorithm names.
struct ConfigError : Error {
  using Error::Error;
};

/// Evaluation budget violations (DOE larger than the budget, ...).
struct BudgetError : Error {
  using Error::Error;
};

/// An object was used in a state it does not support (unfitted ensemble,
/// algorithm that stopped producing infill solutions, ...).
struct StateError : Error {
  using Error::Error;
};

/// Non-finite input, undefined metric, empty input set.
struct NumericError : Error {
  using Error::Error;
};

/// Requested capability is not available (analytic front, HV dimension).
struct UnsupportedError : Error {
  using Error::Error;
};

/// Every candidate model failed to fit for some function.
struct FitError : Error {
  using Error::Error;
};

}  // namespace gpsaf

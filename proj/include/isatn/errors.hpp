#pragma once

#include <stdexcept>
#include <string>

namespace isatn {

/// Base class for all simulator errors.
class Error : public std::runtime_error {
  public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

/// Malformed input file (JSON scenario, CSV trace, policy file).
class ParseError : public Error {
  public:
    explicit ParseError(const std::string& msg) : Error("parse error: " + msg) {}
};

/// A scenario or model invariant is violated; message names the field.
class ValidationError : public Error {
  public:
    explicit ValidationError(const std::string& msg) : Error("validation error: " + msg) {}
};

/// Nonpositive count, out-of-range angle, etc.
class InvalidParameter : public Error {
  public:
    explicit InvalidParameter(const std::string& msg) : Error("invalid parameter: " + msg) {}
};

/// Carbon trace is missing an (hour, region) sample.
class GapError : public Error {
  public:
    explicit GapError(const std::string& msg) : Error("trace gap: " + msg) {}
};

/// A trace value is outside its documented range.
class RangeError : public Error {
  public:
    explicit RangeError(const std::string& msg) : Error("range error: " + msg) {}
};

/// Query time beyond the trace horizon.
class OutOfRange : public Error {
  public:
    explicit OutOfRange(const std::string& msg) : Error("out of range: " + msg) {}
};

/// Forecaster was given less history than it needs.
class InsufficientHistory : public Error {
  public:
    explicit InsufficientHistory(const std::string& msg) : Error("insufficient history: " + msg) {}
};

/// Plan horizon does not fit the forecast horizon.
class HorizonMismatch : public Error {
  public:
    explicit HorizonMismatch(const std::string& msg) : Error("horizon mismatch: " + msg) {}
};

/// Power mode not defined for the element kind.
class InvalidMode : public Error {
  public:
    explicit InvalidMode(const std::string& msg) : Error("invalid mode: " + msg) {}
};

/// gCO2/GB is undefined when nothing was delivered.
class ZeroTraffic : public Error {
  public:
    explicit ZeroTraffic(const std::string& msg) : Error("zero traffic: " + msg) {}
};

/// Renewable utilization over an empty or zero-energy run.
class EmptyRun : public Error {
  public:
    explicit EmptyRun(const std::string& msg) : Error("empty run: " + msg) {}
};

/// RL feature vector length does not match the agent.
class DimensionMismatch : public Error {
  public:
    explicit DimensionMismatch(const std::string& msg) : Error("dimension mismatch: " + msg) {}
};

/// Requested rain event is not part of the run.
class EventNotFound : public Error {
  public:
    explicit EventNotFound(const std::string& msg) : Error("event not found: " + msg) {}
};

/// Scenario/policy combination cannot be executed.
class ConfigError : public Error {
  public:
    explicit ConfigError(const std::string& msg) : Error("config error: " + msg) {}
};

/// mpc_rl run requested without a trained policy file.
class MissingPolicyFile : public Error {
  public:
    explicit MissingPolicyFile(const std::string& msg) : Error("missing policy file: " + msg) {}
};

/// Output directory or file cannot be written.
class IoError : public Error {
  public:
    explicit IoError(const std::string& msg) : Error("io error: " + msg) {}
};

}  // namespace isatn

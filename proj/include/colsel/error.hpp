#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace colsel {

/// Broad failure class. The CLI maps these onto its exit codes.
enum class ErrorKind {
  usage,      // caller asked for something ill-formed (bad rank, bad budget)
  data,       // malformed or inconsistent input data
  numerical,  // numerically degenerate input for the requested operation
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

class InvalidArgument : public Error {
 public:
  explicit InvalidArgument(const std::string& what) : Error(ErrorKind::usage, what) {}
};

class InvalidRankError : public Error {
 public:
  explicit InvalidRankError(const std::string& what) : Error(ErrorKind::usage, what) {}
};

class DimensionError : public Error {
 public:
  explicit DimensionError(const std::string& what) : Error(ErrorKind::data, what) {}
};

class NonFiniteError : public Error {
 public:
  explicit NonFiniteError(const std::string& what) : Error(ErrorKind::data, what) {}
};

class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : Error(ErrorKind::data, "line " + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

/// Unreadable files and other data-level failures without a finer class.
class DataError : public Error {
 public:
  explicit DataError(const std::string& what) : Error(ErrorKind::data, what) {}
};

class BoundsError : public Error {
 public:
  explicit BoundsError(const std::string& what) : Error(ErrorKind::data, what) {}
};

/// Partitions overlap, leave gaps, or otherwise fail to tile the column range.
class TilingError : public Error {
 public:
  explicit TilingError(const std::string& what) : Error(ErrorKind::data, what) {}
};

class PartitionError : public Error {
 public:
  explicit PartitionError(const std::string& what) : Error(ErrorKind::data, what) {}
};

/// A requested column basis is rank deficient. Carries the offending columns.
class DegenerateBasisError : public Error {
 public:
  DegenerateBasisError(std::vector<std::size_t> indices, const std::string& what)
      : Error(ErrorKind::numerical, what), indices_(std::move(indices)) {}
  const std::vector<std::size_t>& indices() const noexcept { return indices_; }

 private:
  std::vector<std::size_t> indices_;
};

class DependentColumnError : public Error {
 public:
  explicit DependentColumnError(const std::string& what) : Error(ErrorKind::numerical, what) {}
};

class ExhaustedError : public Error {
 public:
  explicit ExhaustedError(const std::string& what) : Error(ErrorKind::numerical, what) {}
};

class UndefinedMetricError : public Error {
 public:
  explicit UndefinedMetricError(const std::string& what) : Error(ErrorKind::numerical, what) {}
};

class DegenerateDistributionError : public Error {
 public:
  explicit DegenerateDistributionError(const std::string& what)
      : Error(ErrorKind::numerical, what) {}
};

/// Test-scale oracles refuse inputs above their size guard.
class OracleScaleError : public Error {
 public:
  explicit OracleScaleError(const std::string& what) : Error(ErrorKind::usage, what) {}
};

}  // namespace colsel

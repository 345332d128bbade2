#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace centrafactor {

/// Base of every error thrown by the library. `kind()` is a stable,
/// machine-readable tag that ends up in reports.
class Error : public std::runtime_error {
 public:
  Error(std::string kind, const std::string& what)
      : std::runtime_error(what), kind_(std::move(kind)) {}

  const std::string& kind() const noexcept { return kind_; }

 private:
  std::string kind_;
};

class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : Error("ParseError", line == 0 ? what : "line " + std::to_string(line) + ": " + what),
        line_(line) {}

  /// 1-based; 0 when the error is not tied to a line (e.g. empty input).
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

class ConfigError : public Error {
 public:
  explicit ConfigError(const std::string& what) : Error("ConfigError", what) {}
};

class IoError : public Error {
 public:
  explicit IoError(const std::string& what) : Error("IoError", what) {}
};

class ContractViolation : public Error {
 public:
  explicit ContractViolation(const std::string& what) : Error("ContractViolation", what) {}
};

class NumericalError : public Error {
 public:
  NumericalError(const std::string& what, double residual)
      : Error("NumericalError", what + " (residual " + std::to_string(residual) + ")"),
        residual_(residual) {}

  double residual() const noexcept { return residual_; }

 private:
  double residual_;
};

class DisconnectedGraph : public Error {
 public:
  DisconnectedGraph()
      : Error("DisconnectedGraph",
              "graph is disconnected; extract the largest connected component first") {}
};

class DegenerateColumn : public Error {
 public:
  DegenerateColumn(std::size_t column, const std::string& name)
      : Error("DegenerateColumn", "column '" + name + "' has zero variance"),
        column_(column),
        name_(name) {}

  std::size_t column() const noexcept { return column_; }
  const std::string& name() const noexcept { return name_; }

 private:
  std::size_t column_;
  std::string name_;
};

class DegenerateSet : public Error {
 public:
  explicit DegenerateSet(const std::string& what) : Error("DegenerateSet", what) {}
};

class ModelNotFound : public Error {
 public:
  ModelNotFound(std::size_t max_factors, std::vector<double> communalities)
      : Error("ModelNotFound", "no factor count <= " + std::to_string(max_factors) +
                                   " reaches the communality threshold"),
        communalities_(std::move(communalities)) {}

  /// Communalities of the largest factor count that was tried.
  const std::vector<double>& communalities() const noexcept { return communalities_; }

 private:
  std::vector<double> communalities_;
};

}  // namespace centrafactor

#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace lambda_lab {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

class InvalidSize : public Error {
  public:
    using Error::Error;
};

class OutOfRange : public Error {
  public:
    using Error::Error;
};

class InvalidArgument : public Error {
  public:
    using Error::Error;
};

/// A closed-form result was requested outside the parameter regime it is proved for.
class UnsupportedRegime : public Error {
  public:
    using Error::Error;
};

class ParseError : public Error {
  public:
    using Error::Error;
};

/// A shipped data file is missing or does not match its expected content.
class DataIntegrityError : public Error {
  public:
    DataIntegrityError(std::string file, const std::string& what)
        : Error(file + ": " + what), file_(std::move(file)) {}
    const std::string& file() const noexcept { return file_; }

  private:
    std::string file_;
};

class MissingLabels : public Error {
  public:
    explicit MissingLabels(std::vector<std::size_t> vertices);
    const std::vector<std::size_t>& vertices() const noexcept { return vertices_; }

  private:
    std::vector<std::size_t> vertices_;
};

/// Search stopped on a node or time limit. Carries whatever bounds were established.
class ResourceLimit : public Error {
  public:
    ResourceLimit(int lower, std::optional<int> upper, std::uint64_t nodes);
    int lower() const noexcept { return lower_; }
    std::optional<int> upper() const noexcept { return upper_; }
    std::uint64_t nodes() const noexcept { return nodes_; }

  private:
    int lower_;
    std::optional<int> upper_;
    std::uint64_t nodes_;
};

/// Exhaustive search proved that no labeling within the requested span exists.
class Infeasible : public Error {
  public:
    Infeasible(int span, std::uint64_t nodes);
    int span() const noexcept { return span_; }
    std::uint64_t nodes() const noexcept { return nodes_; }

  private:
    int span_;
    std::uint64_t nodes_;
};

}  // namespace lambda_lab

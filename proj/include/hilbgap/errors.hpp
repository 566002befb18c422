#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace hilbgap {

// Base of every exception the library throws. The C API maps `kind()` onto
// its status codes.
class Error : public std::runtime_error {
 public:
  enum class Kind {
    InvalidInput,
    NotPositive,
    NotHomogeneous,
    DimensionMismatch,
    CapExceeded,
    Overflow,
    NotStabilized,
    Certificate,
  };

  Error(Kind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
  Kind kind() const noexcept { return kind_; }

 private:
  Kind kind_;
};

class InvalidInput : public Error {
 public:
  explicit InvalidInput(const std::string& what) : Error(Kind::InvalidInput, what) {}
};

class DimensionMismatch : public Error {
 public:
  explicit DimensionMismatch(const std::string& what) : Error(Kind::DimensionMismatch, what) {}
};

class OverflowError : public Error {
 public:
  explicit OverflowError(const std::string& what) : Error(Kind::Overflow, what) {}
};

class NotHomogeneous : public Error {
 public:
  explicit NotHomogeneous(const std::string& what) : Error(Kind::NotHomogeneous, what) {}
};

class NotStabilized : public Error {
 public:
  explicit NotStabilized(const std::string& what) : Error(Kind::NotStabilized, what) {}
};

// Enumeration or memory guard tripped. `completed` is the largest degree (or
// item count, depending on the thrower) that finished before the cap.
class CapExceeded : public Error {
 public:
  CapExceeded(const std::string& what, std::int64_t completed)
      : Error(Kind::CapExceeded, what), completed_(completed) {}
  std::int64_t completed() const noexcept { return completed_; }

 private:
  std::int64_t completed_;
};

}  // namespace hilbgap

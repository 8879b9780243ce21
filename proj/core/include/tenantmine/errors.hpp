#pragma once

#include <stdexcept>
#include <string>

namespace tenantmine {

// Error categories map onto CLI exit codes:
//   ConfigError -> 1, DataError -> 2, TransportError/ApiError -> 3.

struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct DataError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct TransportError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Non-success HTTP response from the completion backend.
struct ApiError : TransportError {
  int status;
  std::string body;

  ApiError(int status_, std::string body_)
      : TransportError("backend returned status " + std::to_string(status_)),
        status(status_),
        body(std::move(body_)) {}
};

}  // namespace tenantmine

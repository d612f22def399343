#pragma once

#include <stdexcept>
#include <string>

namespace neurologic {

// Error taxonomy. The CLI maps these onto exit codes:
//   ConfigError/ParseError -> 2, NumericError -> 3,
//   InsufficientDataError and subclasses -> 4.
struct ContractError : std::runtime_error {
    explicit ContractError(const std::string& msg) : std::runtime_error(msg) {}
};

struct DimensionError : ContractError {
    explicit DimensionError(const std::string& msg) : ContractError(msg) {}
};

struct DictionaryError : std::runtime_error {
    explicit DictionaryError(const std::string& msg) : std::runtime_error(msg) {}
};

struct ParseError : std::runtime_error {
    explicit ParseError(const std::string& msg) : std::runtime_error(msg) {}
};

struct ConfigError : std::runtime_error {
    explicit ConfigError(const std::string& msg) : std::runtime_error(msg) {}
};

struct NumericError : std::runtime_error {
    explicit NumericError(const std::string& msg) : std::runtime_error(msg) {}
};

struct IoError : std::runtime_error {
    explicit IoError(const std::string& msg) : std::runtime_error(msg) {}
};

struct InsufficientDataError : std::runtime_error {
    explicit InsufficientDataError(const std::string& msg) : std::runtime_error(msg) {}
};

struct EmptyClassError : InsufficientDataError {
    explicit EmptyClassError(const std::string& msg) : InsufficientDataError(msg) {}
};

struct InsufficientSampleError : InsufficientDataError {
    explicit InsufficientSampleError(const std::string& msg) : InsufficientDataError(msg) {}
};

inline void require(bool cond, const std::string& msg) {
    if (!cond) throw ContractError(msg);
}

}  // namespace neurologic

#pragma once

#include <stdexcept>
#include <string>

namespace torelli {

// Error carrying a short machine-readable code ("zero-vector", "inadmissible-class", ...).
class Error : public std::runtime_error {
public:
    explicit Error(std::string code, const std::string& detail = "")
        : std::runtime_error(detail.empty() ? code : code + ": " + detail), code_(std::move(code)) {}

    const std::string& code() const noexcept { return code_; }

private:
    std::string code_;
};

// Raised when a bounded search ran out of room; mapped to its own CLI exit code.
class SearchExhausted : public Error {
public:
    using Error::Error;
};

}  // namespace torelli

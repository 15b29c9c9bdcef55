#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace chevalley {

/// Library error with a stable machine-readable code ("DomainMismatch",
/// "DivisionByZero", ...). The CLI maps codes to the JSON error envelope.
class Error : public std::runtime_error {
public:
    Error(std::string code, const std::string& message)
        : std::runtime_error(message), code_(std::move(code)) {}

    const std::string& code() const noexcept { return code_; }

private:
    std::string code_;
};

[[noreturn]] inline void raise(const std::string& code, const std::string& message) {
    throw Error(code, message);
}

inline void require(bool condition, const std::string& code, const std::string& message) {
    if (!condition) raise(code, message);
}

} // namespace chevalley

#pragma once

#include <stdexcept>
#include <string>

namespace knotcount {

// Every library failure throws Error. `code` is a stable machine-readable
// identifier (e.g. "NotAGroup", "StateSpaceTooLarge") that the CLI maps to
// its error report; `what()` carries the human-readable detail.
class Error : public std::runtime_error {
public:
    Error(std::string code, const std::string& msg)
        : std::runtime_error(code + ": " + msg), code_(std::move(code)) {}

    const std::string& code() const noexcept { return code_; }

private:
    std::string code_;
};

[[noreturn]] inline void fail(const char* code, const std::string& msg) {
    throw Error(code, msg);
}

} // namespace knotcount

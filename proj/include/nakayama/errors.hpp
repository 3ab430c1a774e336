#pragma once

#include <stdexcept>
#include <string>

namespace nakayama {

enum class Errc {
    EmptyInput,
    NonPositiveEntry,
    AdmissibilityViolation,
    DisconnectedAlgebra,
    NoNormalizedRotation,
    SelfinjectiveInput,
    NonIntegerWeight,
    EnumerationTooLarge,
};

const char* errcName(Errc code);

class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& what)
        : std::runtime_error(what), code_(code) {}

    Errc code() const { return code_; }

private:
    Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& msg) {
    throw Error(code, std::string(errcName(code)) + ": " + msg);
}

} // namespace nakayama

#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace symvec {

// Error taxonomy mirrors the CLI exit-code contract:
//   Domain -> 1, Config -> 2, Backend -> 3.
enum class ErrorKind { Domain, Config, Backend };

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, std::string message)
        : std::runtime_error(std::move(message)), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

    int exit_code() const noexcept {
        switch (kind_) {
            case ErrorKind::Domain: return 1;
            case ErrorKind::Config: return 2;
            case ErrorKind::Backend: return 3;
        }
        return 1;
    }

private:
    ErrorKind kind_;
};

[[noreturn]] inline void throw_domain(std::string message) {
    throw Error(ErrorKind::Domain, std::move(message));
}

[[noreturn]] inline void throw_config(std::string message) {
    throw Error(ErrorKind::Config, std::move(message));
}

[[noreturn]] inline void throw_backend(std::string message) {
    throw Error(ErrorKind::Backend, std::move(message));
}

}  // namespace symvec

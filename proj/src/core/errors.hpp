#pragma once

#include <stdexcept>
#include <string>

namespace landaulab {

// Error categories; kept in sync with ll_status in the public C header.
enum class Status {
    ok = 0,
    domain_error = 1,
    parse_error = 2,
    validation_error = 3,
    coverage_error = 4,
    incomplete_error = 5,
    geometry_error = 6,
    io_error = 7,
    invalid_argument = 8,
    internal_error = 9,
};

const char* status_name(Status s);

class Error : public std::runtime_error {
public:
    Error(Status status, std::string message)
        : std::runtime_error(std::move(message)), status_(status) {}

    Status status() const noexcept { return status_; }

private:
    Status status_;
};

[[noreturn]] inline void fail(Status status, const std::string& message) {
    throw Error(status, message);
}

}  // namespace landaulab

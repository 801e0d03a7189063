#include "core/errors.hpp"

namespace landaulab {

const char* status_name(Status s) {
    switch (s) {
        case Status::ok: return "ok";
        case Status::domain_error: return "domain_error";
        case Status::parse_error: return "parse_error";
        case Status::validation_error: return "validation_error";
        case Status::coverage_error: return "coverage_error";
        case Status::incomplete_error: return "incomplete_error";
        case Status::geometry_error: return "geometry_error";
        case Status::io_error: return "io_error";
        case Status::invalid_argument: return "invalid_argument";
        case Status::internal_error: return "internal_error";
    }
    return "unknown";
}

}  // namespace landaulab

#ifndef SSTAR_ERRORS_HPP
#define SSTAR_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace sstar {

enum class ErrorCode {
    invalid_domain,
    domain_mismatch,
    budget_exceeded,
    invalid_extension,
    invalid_entry,
    invalid_weights,
    invalid_classifier,
    invalid_region,
    invalid_partition,
    degenerate_domain,
    empty_blocks,
    invalid_schedule,
    parse_error,
};

/// All failures surface as one exception type carrying a machine-checkable code.
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what_arg)
        : std::runtime_error(what_arg), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& msg) {
    throw Error(code, msg);
}

} // namespace sstar

#endif

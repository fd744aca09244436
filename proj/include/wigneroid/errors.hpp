#pragma once

#include <stdexcept>
#include <string>

namespace wigneroid {

/// Base of every error the library raises. `code()` is a stable machine tag
/// used by the CLI's structured error records.
class Error : public std::runtime_error {
public:
    Error(std::string code, const std::string& what)
        : std::runtime_error(what), code_(std::move(code)) {}

    const std::string& code() const noexcept { return code_; }

private:
    std::string code_;
};

#define WIGNEROID_DEFINE_ERROR(Name, tag)                                      \
    class Name : public Error {                                                \
    public:                                                                    \
        explicit Name(const std::string& what) : Error(tag, what) {}           \
    }

// spacetime
WIGNEROID_DEFINE_ERROR(ChartDomainError, "chart_domain");
WIGNEROID_DEFINE_ERROR(ConvergenceError, "convergence");
// groupoid
WIGNEROID_DEFINE_ERROR(NotLorentzError, "not_lorentz");
WIGNEROID_DEFINE_ERROR(NonComposableError, "non_composable");
WIGNEROID_DEFINE_ERROR(CovectorMismatchError, "covector_mismatch");
WIGNEROID_DEFINE_ERROR(InvalidGroupError, "invalid_group");
// cohomology
WIGNEROID_DEFINE_ERROR(JacobiError, "jacobi");
WIGNEROID_DEFINE_ERROR(NotClosedError, "not_closed");
// covering
WIGNEROID_DEFINE_ERROR(NotInSubgroupError, "not_in_subgroup");
// mackey
WIGNEROID_DEFINE_ERROR(NonIntegralHelicityError, "non_integral_helicity");
// repcheck
WIGNEROID_DEFINE_ERROR(BadParams, "bad_params");
WIGNEROID_DEFINE_ERROR(NotUnitaryError, "not_unitary");
WIGNEROID_DEFINE_ERROR(TooLargeError, "too_large");
// io / cli
WIGNEROID_DEFINE_ERROR(ParseError, "parse");

#undef WIGNEROID_DEFINE_ERROR

}  // namespace wigneroid

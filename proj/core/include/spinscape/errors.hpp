#pragma once

#include <stdexcept>
#include <string>

namespace spinscape {

// Base for all library errors. `name()` is the stable identifier printed by the
// CLI on failure (exit code 1), independent of the human-readable message.
class Error : public std::runtime_error {
public:
    Error(std::string name, const std::string &msg)
        : std::runtime_error(name + ": " + msg), name_(std::move(name)) {}
    const std::string &name() const noexcept { return name_; }

private:
    std::string name_;
};

#define SPINSCAPE_DEFINE_ERROR(Name)                                        \
    class Name : public Error {                                             \
    public:                                                                 \
        explicit Name(const std::string &msg) : Error(#Name, msg) {}        \
    }

SPINSCAPE_DEFINE_ERROR(DuplicateDegree);
SPINSCAPE_DEFINE_ERROR(NonPositiveWeight);
SPINSCAPE_DEFINE_ERROR(NotNormalized);
SPINSCAPE_DEFINE_ERROR(NoCriticalWeight);
SPINSCAPE_DEFINE_ERROR(DomainError);
SPINSCAPE_DEFINE_ERROR(PureMixture);
SPINSCAPE_DEFINE_ERROR(BracketFailure);
SPINSCAPE_DEFINE_ERROR(UnsupportedDimension);
SPINSCAPE_DEFINE_ERROR(InconsistentClassification);
SPINSCAPE_DEFINE_ERROR(EdgeRegion);
SPINSCAPE_DEFINE_ERROR(EdgeWindow);
SPINSCAPE_DEFINE_ERROR(MixtureParseError);

#undef SPINSCAPE_DEFINE_ERROR

} // namespace spinscape

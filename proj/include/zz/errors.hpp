#pragma once

#include <stdexcept>
#include <string>

namespace zz {

// Input-contract failures map to CLI exit code 1, invariant traps to exit code 2.
enum class ErrorClass { Input, Invariant };

class Error : public std::runtime_error {
public:
    Error(std::string kind, const std::string& msg, ErrorClass cls)
        : std::runtime_error(msg), kind_(std::move(kind)), cls_(cls) {}
    const std::string& kind() const { return kind_; }
    ErrorClass error_class() const { return cls_; }

private:
    std::string kind_;
    ErrorClass cls_;
};

#define ZZ_INPUT_ERROR(Name)                                        \
    struct Name : Error {                                           \
        explicit Name(const std::string& msg)                       \
            : Error(#Name, msg, ErrorClass::Input) {}               \
    };

#define ZZ_INVARIANT_ERROR(Name)                                    \
    struct Name : Error {                                           \
        explicit Name(const std::string& msg)                       \
            : Error(#Name, msg, ErrorClass::Invariant) {}           \
    };

ZZ_INPUT_ERROR(FormatError)
ZZ_INPUT_ERROR(ParameterOutOfRange)
ZZ_INPUT_ERROR(EdgeDegreeError)
ZZ_INPUT_ERROR(LinkError)
ZZ_INPUT_ERROR(DisconnectedError)
ZZ_INPUT_ERROR(GluingError)
ZZ_INPUT_ERROR(EdgesNotCofacial)
ZZ_INPUT_ERROR(CapExceeded)
ZZ_INPUT_ERROR(HomogeneityUndefined)
ZZ_INPUT_ERROR(MixedFaceTypes)
ZZ_INPUT_ERROR(NotSimpleDigraph)
ZZ_INPUT_ERROR(NotEulerian)
ZZ_INPUT_ERROR(NotClosed2Cell)
ZZ_INPUT_ERROR(FaceNotDirectedCycle)
ZZ_INPUT_ERROR(NotHomogeneous)
ZZ_INPUT_ERROR(PreconditionError)

// Bug traps: these name conditions the theory guarantees cannot occur on valid
// inputs (Proposition 1 trichotomy, PT2 template coverage, Proposition 2
// solvability). Raising one means the library is wrong, not the input.
ZZ_INVARIANT_ERROR(InvariantViolation)
ZZ_INVARIANT_ERROR(NoTemplateMatch)
ZZ_INVARIANT_ERROR(OrientationUnsatisfiable)

#undef ZZ_INPUT_ERROR
#undef ZZ_INVARIANT_ERROR

}  // namespace zz

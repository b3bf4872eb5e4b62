#pragma once

#include <stdexcept>
#include <string>

namespace periodviz {

// Coarse error categories, used by the CLI to pick exit codes:
// Usage -> 2, Hypothesis -> 3 (a theorem's premise fails for the given
// inputs; the computation itself is fine), Io -> 2, Internal -> 2.
enum class ErrorKind { Usage, Hypothesis, Io, Internal };

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& message)
        : std::runtime_error(message), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

struct NotAUnitError : Error {
    explicit NotAUnitError(const std::string& msg) : Error(ErrorKind::Usage, msg) {}
};

struct NotCoprimeError : Error {
    explicit NotCoprimeError(const std::string& msg) : Error(ErrorKind::Usage, msg) {}
};

struct InvalidLayerModulusError : Error {
    explicit InvalidLayerModulusError(const std::string& msg) : Error(ErrorKind::Usage, msg) {}
};

struct CoefficientOverflowError : Error {
    explicit CoefficientOverflowError(const std::string& msg) : Error(ErrorKind::Usage, msg) {}
};

struct OrdersNotCoprimeError : Error {
    explicit OrdersNotCoprimeError(const std::string& msg) : Error(ErrorKind::Hypothesis, msg) {}
};

struct HypothesisViolatedError : Error {
    explicit HypothesisViolatedError(const std::string& msg) : Error(ErrorKind::Hypothesis, msg) {}
};

struct NoSuchRootError : Error {
    explicit NoSuchRootError(const std::string& msg) : Error(ErrorKind::Hypothesis, msg) {}
};

struct DimensionTooHighError : Error {
    explicit DimensionTooHighError(const std::string& msg) : Error(ErrorKind::Usage, msg) {}
};

struct EmptyImageError : Error {
    explicit EmptyImageError(const std::string& msg) : Error(ErrorKind::Usage, msg) {}
};

struct DimensionNot2Error : Error {
    explicit DimensionNot2Error(const std::string& msg) : Error(ErrorKind::Usage, msg) {}
};

struct IoError : Error {
    explicit IoError(const std::string& msg) : Error(ErrorKind::Io, msg) {}
};

struct InternalError : Error {
    explicit InternalError(const std::string& msg) : Error(ErrorKind::Internal, msg) {}
};

}  // namespace periodviz

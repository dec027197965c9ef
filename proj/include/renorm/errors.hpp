#ifndef RENORM_ERRORS_HPP
#define RENORM_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace renorm {

// Base class for all library errors; the CLI maps subclasses to exit codes.
struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

struct ClosureExceedsCap : Error {
    explicit ClosureExceedsCap(const std::string& msg) : Error(msg) {}
};

struct InvalidClassIndex : Error {
    explicit InvalidClassIndex(const std::string& msg) : Error(msg) {}
};

struct MixedManifolds : Error {
    explicit MixedManifolds(const std::string& msg) : Error(msg) {}
};

struct NormBoundTooSmall : Error {
    explicit NormBoundTooSmall(const std::string& msg) : Error(msg) {}
};

struct TrivialClass : Error {
    explicit TrivialClass(const std::string& msg) : Error(msg) {}
};

struct EmptyFamily : Error {
    explicit EmptyFamily(const std::string& msg) : Error(msg) {}
};

struct NonpositiveGeometry : Error {
    explicit NonpositiveGeometry(const std::string& msg) : Error(msg) {}
};

struct ResolutionTooCoarse : Error {
    explicit ResolutionTooCoarse(const std::string& msg) : Error(msg) {}
};

struct NonConvergence : Error {
    explicit NonConvergence(const std::string& msg) : Error(msg) {}
};

struct IncompatibleTopology : Error {
    explicit IncompatibleTopology(const std::string& msg) : Error(msg) {}
};

struct CircleOutOfDomain : Error {
    explicit CircleOutOfDomain(const std::string& msg) : Error(msg) {}
};

struct NonHomotopicLoops : Error {
    explicit NonHomotopicLoops(const std::string& msg) : Error(msg) {}
};

struct ConfigInvalid : Error {
    explicit ConfigInvalid(const std::string& msg) : Error(msg) {}
};

} // namespace renorm

#endif

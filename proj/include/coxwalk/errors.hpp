#pragma once

#include <stdexcept>
#include <string>

namespace coxwalk {

// Every failure mode the library reports deliberately gets its own type so
// callers (and the CLI) can tell bad input (usage errors) from computations
// that cannot proceed.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct UnsupportedType : Error {
    using Error::Error;
};
struct RankTooLarge : Error {
    using Error::Error;
};
struct DimensionMismatch : Error {
    using Error::Error;
};
struct StateSpaceTooLarge : Error {
    using Error::Error;
};
struct NotIrreducible : Error {
    using Error::Error;
};
struct NoSuchEdge : Error {
    using Error::Error;
};
struct ZeroDirection : Error {
    using Error::Error;
};
struct SingularSystem : Error {
    using Error::Error;
};
struct ProfileMismatch : Error {
    using Error::Error;
};
struct NonStabilizing : Error {
    using Error::Error;
};
struct NotGrassmannian : Error {
    using Error::Error;
};
struct NotAntiDominant : Error {
    using Error::Error;
};
struct ZeroDegree : Error {
    using Error::Error;
};
struct ZeroRealPart : Error {
    using Error::Error;
};

}  // namespace coxwalk

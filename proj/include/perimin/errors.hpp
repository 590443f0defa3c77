#pragma once

#include <stdexcept>
#include <string>

namespace perimin {

// Error taxonomy shared by all modules.  Precondition violations derive from
// PreconditionError, solver failures from SolverError, broken invariants from
// InvariantError; the CLI maps these onto exit codes 3, 4 and 2.

struct PreconditionError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct SolverError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct InvariantError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct CoincidentPoints : PreconditionError {
    using PreconditionError::PreconditionError;
};
struct OutOfDomain : PreconditionError {
    using PreconditionError::PreconditionError;
};
struct BadParameter : PreconditionError {
    using PreconditionError::PreconditionError;
};
struct BadOrder : PreconditionError {
    using PreconditionError::PreconditionError;
};
struct VertexOutsideSector : PreconditionError {
    using PreconditionError::PreconditionError;
};
struct TooShort : PreconditionError {
    using PreconditionError::PreconditionError;
};
struct NotRightAngled : PreconditionError {
    using PreconditionError::PreconditionError;
};
struct SubcriticalHeight : PreconditionError {
    using PreconditionError::PreconditionError;
};
struct TruncationRequired : PreconditionError {
    using PreconditionError::PreconditionError;
};
struct NotApplicable : PreconditionError {
    using PreconditionError::PreconditionError;
};
struct NoBracket : PreconditionError {
    using PreconditionError::PreconditionError;
};

struct NonConvergence : SolverError {
    using SolverError::SolverError;
};
struct DegenerateTriangle : SolverError {
    using SolverError::SolverError;
};
struct MeshDegeneration : SolverError {
    using SolverError::SolverError;
};
struct NotMonotone : SolverError {
    using SolverError::SolverError;
};
struct ClipTopology : SolverError {
    using SolverError::SolverError;
};
struct NotClosed : SolverError {
    using SolverError::SolverError;
};
struct UnknownCurveType : PreconditionError {
    using PreconditionError::PreconditionError;
};
struct InconsistentAnchors : InvariantError {
    using InvariantError::InvariantError;
};
struct WeldMismatch : InvariantError {
    using InvariantError::InvariantError;
};
struct SelfIntersection : InvariantError {
    using InvariantError::InvariantError;
};
struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

} // namespace perimin

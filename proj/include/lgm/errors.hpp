#pragma once

#include <stdexcept>
#include <string>

namespace lgm {

// Base class for everything this library throws on its own behalf.
struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Lattice geometry.
struct NotFullDimensional : Error { using Error::Error; };
struct NotReflexive : Error { using Error::Error; };
struct TorsionInPicard : Error { using Error::Error; };
struct UnboundedPolytope : Error { using Error::Error; };

// Laurent polynomials and coefficient paths.
struct ZeroCoordinate : Error { using Error::Error; };
struct BadPartition : Error { using Error::Error; };

// Root finding.
struct Diverged : Error { using Error::Error; };
struct SingularJacobian : Error { using Error::Error; };
struct IncompleteSolve : Error {
    IncompleteSolve(const std::string& msg, int found_count)
        : Error(msg), found(found_count) {}
    int found;
};
struct ExcessSolutions : Error { using Error::Error; };
struct NonReduced : Error { using Error::Error; };
struct NoPositivePoint : Error { using Error::Error; };
struct MultiplePositivePoints : Error { using Error::Error; };

// Path tracking.
struct StepUnderflow : Error { using Error::Error; };
struct DivergedPath : Error { using Error::Error; };
struct AmbiguousMatching : Error { using Error::Error; };
struct UnmatchedLimit : Error { using Error::Error; };

// Quivers.
struct EmptyHom : Error { using Error::Error; };

// Catalog and labeling.
struct UnknownEntry : Error { using Error::Error; };
struct CatalogInvalid : Error { using Error::Error; };
struct FixtureMismatch : Error { using Error::Error; };
struct RecipeViolation : Error { using Error::Error; };

// Text input (divisor expressions, cycle strings).
struct ParseError : Error { using Error::Error; };

}  // namespace lgm

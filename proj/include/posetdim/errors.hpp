#pragma once

#include <stdexcept>
#include <string>

namespace posetdim {

/** Base class for every error this library throws deliberately. */
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/** Cover input contains a directed cycle, so no partial order extends it. */
struct CycleDetected : Error { using Error::Error; };

/** A relation handed to Poset::from_relation is not reflexive, antisymmetric and transitive. */
struct InvalidRelation : Error { using Error::Error; };

/** An order is not a permutation of the ground set (wrong length, duplicate or alien id). */
struct MalformedOrder : Error { using Error::Error; };

/** Formula arity does not match the number of orders. */
struct ArityMismatch : Error { using Error::Error; };

/** Formula arity too large to materialize or serialize as an extensional table. */
struct ArityTooLarge : Error { using Error::Error; };

/** A partial linear extension contradicts the order on its support. */
struct NotAnExtension : Error { using Error::Error; };

/** Input certificate fails verification where a verified one is required. */
struct NotARealizer : Error { using Error::Error; };

/** Input local realizer fails verification where a verified one is required. */
struct NotALocalRealizer : Error { using Error::Error; };

/** Local realizer width exceeds the transform's bound. */
struct WidthTooLarge : Error { using Error::Error; };

/** Orientation is not a transitive orientation of the incomparability graph. */
struct NotTransitiveOrientation : Error { using Error::Error; };

/** Normalized truth table matches no canonical case of the size-reduction argument. */
struct NoCanonicalCase : Error { using Error::Error; };

/** Parameter outside the documented domain (e.g. standard_example(k) with k < 2). */
struct BadParameter : Error { using Error::Error; };

/** Instance would exceed the configured materialization cap. */
struct SizeCapExceeded : Error { using Error::Error; };

/** Input size beyond a solver's hard exhaustive-search limits. */
struct ScaleExceeded : Error { using Error::Error; };

/** Configurable wall-clock budget exceeded; never a silent wrong answer. */
struct Timeout : Error { using Error::Error; };

/** Input family does not satisfy an operation's stated precondition. */
struct PreconditionUnmet : Error { using Error::Error; };

/** Refutation candidate is structurally unusable (not orders over the ground set). */
struct MalformedCandidate : Error { using Error::Error; };

/** Text parse or serialization failure. */
struct FormatError : Error { using Error::Error; };

}  // namespace posetdim

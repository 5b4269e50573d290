#ifndef VBRAID_BRACKET_HPP
#define VBRAID_BRACKET_HPP

#include "core/gauss.hpp"
#include "core/laurent.hpp"

namespace vb {

// Kauffman bracket by full state enumeration over the classical crossings.
// Virtual crossings never contribute (strands pass through). Loops are
// weighted delta = -A^2 - A^-2 with the usual delta^(loops-1) convention.
// Errors: FlatCrossingPresent.
Laurent bracket_state_sum(const GaussCode& g);

// (-A^3)^(-writhe) * bracket; invariant under virtual isotopy.
Laurent normalized_bracket(const GaussCode& g);

// Convenience: normalized bracket of the closure of a braid word.
Laurent normalized_bracket(const BraidWord& w);

Laurent bracket_delta(); // -A^2 - A^-2

} // namespace vb

#endif

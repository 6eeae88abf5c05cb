#pragma once

#include "bk/partition.hpp"
#include "bk/rational.hpp"

namespace bk {

/// Irreducible character value chi^lambda at the class pi (trace, not
/// normalised) by the Murnaghan-Nakayama rule. Memoised and safe to call
/// concurrently. Throws InvalidInput when |lambda| != |pi|.
Integer mn_character_unnormalized(const Partition& lambda, const Partition& pi);

/// dim V^lambda, evaluated as the character at the identity class.
Integer mn_dimension(const Partition& lambda);

/// Normalised character: trace ratio, equal to 1 at the identity class.
Rational mn_character(const Partition& lambda, const Partition& pi);

/// Sigma_pi(lambda) = (n falling k) chi^lambda_{pi u 1^{n-k}} for n >= k, else 0.
/// Integrality is asserted (InvariantViolation otherwise).
Integer normalized_character(const Partition& pi, const Partition& lambda);

}  // namespace bk

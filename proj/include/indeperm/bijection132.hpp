#pragma once

#include "indeperm/permutation.hpp"

namespace indeperm::bij {

/// Partition of the 1-32-avoiding permutations of [n], n >= 2: those ending
/// with 1, those ending with n, and the rest. Every avoider not ending with 1
/// ends with a rise, so the last two classes together are exactly the
/// end-with-rise avoiders, while the first and third are the indecomposable ones.
enum class AvoiderClass { EndsWithOne, EndsWithMax, Other };

/// Throws std::domain_error unless p avoids 1-32 and has n >= 2.
AvoiderClass classify(const Permutation& p);

/// Maps the 1-32-avoiding indecomposable permutations of [n] onto the
/// 1-32-avoiding permutations of [n] ending with a rise: a permutation ending
/// with 1 drops the 1, reduces, and appends n; the rest map to themselves.
/// Throws std::domain_error outside the domain.
Permutation forward(const Permutation& p);

/// Inverse of forward: a permutation ending with n drops the n, shifts every
/// value up by one, and appends 1; the rest map to themselves.
Permutation backward(const Permutation& p);

}  // namespace indeperm::bij

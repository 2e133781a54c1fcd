#pragma once

#include <optional>
#include <random>

#include "errors.hpp"
#include "problems.hpp"

namespace caclab {

/// Random valid poset on the initial segment {0..n-1}: a random DAG built
/// along a random linear extension, transitively closed.
FinitePoset random_poset(std::mt19937_64& rng, std::uint64_t n);

/// Same, with every edge oriented upward in the natural order.
FinitePoset random_omega_poset(std::mt19937_64& rng, std::uint64_t n);

/// Random stable annotated poset of the given type: tags and points are
/// sampled first, the suffix comparabilities they force are laid down, the
/// remaining pairs are filled in randomly, and the closure is re-checked
/// against the annotation (resampling on conflict).
Result<ProblemInstance> random_stable_instance(std::mt19937_64& rng,
                                               std::uint64_t n, StableType type,
                                               bool omega);

/// Deterministic instance of the requested kind; the seed fixes everything.
Result<ProblemInstance> generate_instance(ProblemKind kind, std::uint64_t size,
                                          std::uint64_t seed);

}  // namespace caclab

#pragma once

#include <vector>

#include "k3lat/lattice.hpp"

namespace k3lat {

enum class Execution { serial, parallel };

/// All v with v.v = norm in a definite lattice (negative definite with
/// norm < 0, or positive definite with norm > 0), in lexicographic order of
/// coordinates. Fincke-Pohst search over exact rationals.
///
/// Throws Error("not_definite") for indefinite lattices and
/// Error("bad_norm") when the sign of norm does not match the lattice.
std::vector<IntVector> enumerate_vectors_of_norm(const Lattice& l, const Integer& norm,
                                                 Execution exec = Execution::parallel);

/// Single-threaded reference path; output identical to the parallel one.
std::vector<IntVector> enumerate_vectors_of_norm_serial(const Lattice& l, const Integer& norm);

/// OpenMP path: the two outermost coordinates are split into independent
/// subtrees searched concurrently.
std::vector<IntVector> enumerate_vectors_of_norm_parallel(const Lattice& l, const Integer& norm);

}  // namespace k3lat

#pragma once

#include <random>

#include "cohtele/cmatrix.hpp"
#include "cohtele/states.hpp"

namespace cohtele {

using Rng = std::mt19937_64;

/// Haar-random unitary (QR of a Ginibre matrix with phase fix).
Mat random_unitary(int d, Rng& rng);

/// Full-rank random density matrix AA^dag / Tr(AA^dag).
DensityMatrix random_density(int d, Rng& rng);

/// Random pure qubit parameters, theta uniform on [0, pi], phi on [0, 2pi).
PureQubit random_pure_qubit(Rng& rng);

/// Random valid MEMS parameters (sorted decreasing, sum 1); optionally
/// with p4 forced to zero.
MemsParams random_mems(Rng& rng, bool p4_zero = false);

/// Random complex n with modulus in [lo, hi] and uniform argument.
cx random_n(Rng& rng, double lo = 0.2, double hi = 3.0);

}  // namespace cohtele

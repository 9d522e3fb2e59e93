#pragma once

#include <span>
#include <vector>

#include "parkcomp/arith.hpp"
#include "parkcomp/core.hpp"
#include "parkcomp/lattice.hpp"

namespace parkcomp {

/// A composition s = (s_1, ..., s_a), a >= 1, all parts positive.
using Signature = std::vector<int>;

Signature make_signature(std::vector<int> s);

/// True when some s_j = 1 with j >= 2: the boundary repeats an up-step
/// abscissa and the signature has no parking-instance counterpart.
bool is_degenerate(std::span<const int> s);

/// rows_j = s_1 + ... + s_j - j.
FerrersShape lambda_of_signature(std::span<const int> s);

/// Up-step abscissae of the boundary path: s_1 + ... + s_j - (j - 1).
Seq boundary_upsteps(std::span<const int> s);

/// n = 1 + sum(s) - a, u = boundary_upsteps(s), t = [n] \ u.
TakenSpots signature_to_instance(std::span<const int> s);

/// Inverse of signature_to_instance; requires spot n to be free.
Signature instance_to_signature(const TakenSpots& inst);

/// Lattice paths inside lambda(s). Degenerate signatures are allowed.
Count count_signature_dyck(std::span<const int> s);

/// Labelled s-Dyck paths, via the parking completion count.
Count count_signature_pf(std::span<const int> s);

}  // namespace parkcomp

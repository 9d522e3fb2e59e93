#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "parkcomp/arith.hpp"
#include "parkcomp/core.hpp"

namespace parkcomp {

/// A path of right and up steps, encoded by the x-coordinates of its up
/// steps. It starts at (1, 0) and ends at (width, up_xs.size()).
struct LatticePath {
  Seq up_xs;
  int width = 0;

  friend bool operator==(const LatticePath&, const LatticePath&) = default;
};

/// Row lengths of a Ferrers diagram, listed bottom row first (weakly
/// increasing). A path lies in the shape iff its i-th up step has
/// x <= rows[i] + 1.
struct FerrersShape {
  std::vector<int> rows;

  friend bool operator==(const FerrersShape&, const FerrersShape&) = default;
};

/// Up steps decorated with car indices; equal x-coordinates carry
/// increasing labels from bottom to top.
struct LabeledPath {
  Seq up_xs;
  std::vector<int> labels;

  friend bool operator==(const LabeledPath&, const LabeledPath&) = default;
};

/// `width` defaults to the last up-step abscissa (1 for the empty path).
LatticePath path_from_sequence(Seq p, std::optional<int> width = std::nullopt);

FerrersShape make_shape(std::vector<int> rows);
FerrersShape ferrers_of_unoccupied(std::span<const int> u);

Count count_paths_dp(const FerrersShape& shape);

/// Emits every weakly increasing c with 1 <= c_i <= rows_i + 1 in
/// lexicographic order. Returns the number emitted.
Count enumerate_paths(const FerrersShape& shape, std::uint64_t cap = kDefaultCap,
                      const SeqVisitor& visit = {});

/// |IPC_n(t)| as det[binom(u_{k+1-i}, i-j+1)], k = n - m.
Count count_ipc_determinant(const TakenSpots& inst);

/// The integer matrix behind count_ipc_determinant, exposed for inspection.
IntMatrix ipc_determinant_matrix(const TakenSpots& inst);

LabeledPath decorate(std::span<const int> prefs);
Seq undecorate(const LabeledPath& lp);

/// ASCII picture of the lattice points the path visits: one text row per
/// y-level (top first), columns x = 1..width, '#' on the path, '.' elsewhere.
std::string render(const LatticePath& path);

}  // namespace parkcomp

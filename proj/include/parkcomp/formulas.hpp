#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <utility>
#include <vector>

#include "parkcomp/arith.hpp"
#include "parkcomp/core.hpp"

namespace parkcomp {

/// (l_1, ..., l_{m+1}): block sizes of a split parking completion.
using LengthVector = std::vector<int>;
using LengthVisitor = std::function<void(std::span<const int>)>;

/// One summand of a length-vector sum.
struct Term {
  LengthVector index;
  Count value;
};

/// (l + 1)^(l - 1), the number of parking functions of length l; 1 at l = 0.
Count pf_count_weight(int l);

/// Every element of L_n(t) once, in lexicographic order.
void length_vectors(const TakenSpots& inst, const LengthVisitor& visit);
std::vector<LengthVector> length_vectors(const TakenSpots& inst);

/// Sum over L_n(t) of prod catalan(l_i).
Count count_ipc(const TakenSpots& inst);
std::vector<Term> count_ipc_terms(const TakenSpots& inst);

/// Sum over L_n(t) of binom(n-m; l) prod (l_j + 1)^(l_j - 1).
Count count_pc(const TakenSpots& inst);
std::vector<Term> count_pc_terms(const TakenSpots& inst);

/// Completions of the block t = (i+1, ..., i+m), summed over the size k of
/// the leading parking function. Needs m, n >= 1 and 1 <= i <= n - m.
Count count_pc_block(int n, int i, int m);

/// Completions of t = (k) in [n]. Needs 1 <= k <= n.
Count count_pc_single(int n, int k);

/// Completions of t = (1, ..., l) in [n]: (l + 1)(n + 1)^(n - l - 1).
Count count_pc_initial_block(int n, int l);

/// lhs = sum of count_pc over the n - m + 1 shifts of an m-block,
/// rhs = (n + 1)^(n - m). Needs 1 <= m <= n.
std::pair<Count, Count> shift_sum_identity(int n, int m);

/// lhs = sum over compositions (l_2..l_{m+1}) of n - m - k of
/// binom(n-m-k; l) prod (l_j + 1)^(l_j - 1), rhs = m (n - k)^(n - k - m - 1).
/// Needs m >= 1 and 1 <= k <= n - m.
std::pair<Count, Count> prufer_identity(int n, int m, int k);

/// Weak compositions of `total` into `parts` parts, lexicographic.
void for_each_composition(int total, int parts, const LengthVisitor& visit);

}  // namespace parkcomp

#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "parkcomp/arith.hpp"
#include "parkcomp/core.hpp"
#include "parkcomp/formulas.hpp"

namespace parkcomp {

/// Validates a u-vector: weakly increasing, positive entries.
Seq make_uvector(Seq u);

/// x = (u_1, u_2 - u_1, ..., u_N - u_{N-1}).
std::vector<int> delta(std::span<const int> u);
/// Prefix sums; inverse of delta. Requires x_1 >= 1 and x_i >= 0.
Seq undelta(std::span<const int> x);

/// Weak compositions k of N with k_1 + ... + k_j >= j for j < N.
void balanced_sequences(int N, const LengthVisitor& visit);
std::vector<std::vector<int>> balanced_sequences(int N);

/// Pitman-Stanley sum over balanced k of binom(N; k) prod x_i^{k_i}.
Count count_upf_sum(std::span<const int> u);
std::vector<Term> count_upf_sum_terms(std::span<const int> u);

/// P_N(x) / N!.
Ratio polytope_volume(std::span<const int> x);

/// N! det[u_i^{j-i+1} / (j-i+1)!], entries with j - i + 1 < 0 are zero.
/// Throws InternalInconsistency if the result is not an integer or does
/// not match count_upf_sum.
Count count_upf_goncarov(std::span<const int> u);

/// The unnormalised determinant (without the N! factor).
Ratio goncarov_determinant(std::span<const int> u);

/// Scans [u_N]^N for sequences whose sorted form is bounded by u.
Count enumerate_upf(std::span<const int> u, std::uint64_t cap = kDefaultCap,
                    const SeqVisitor& visit = {});

}  // namespace parkcomp

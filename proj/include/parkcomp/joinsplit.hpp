#pragma once

#include <cstddef>
#include <functional>
#include <set>
#include <span>
#include <string>
#include <vector>

#include "parkcomp/arith.hpp"
#include "parkcomp/core.hpp"
#include "parkcomp/error.hpp"

namespace parkcomp {

/// A finite list of increasing parking functions. Blocks may be empty.
struct PFList {
  std::vector<Seq> blocks;

  std::size_t size() const;  // total number of entries
  std::vector<int> lengths() const;

  friend bool operator==(const PFList&, const PFList&) = default;
  friend auto operator<=>(const PFList&, const PFList&) = default;
};

using PFListVisitor = std::function<void(const PFList&)>;

/// Length of the longest prefix of a weakly increasing p that is a parking
/// function, i.e. the position just before the first p_i > i.
std::size_t longest_ipf_prefix(std::span<const int> p);

/// Shifts block i by L_{i-1} + i - 1 and concatenates.
Seq join(const PFList& list);

/// Greedy decomposition into longest parking-function prefixes. Never pads:
/// the result has exactly as many blocks as the greedy process produces.
PFList split(std::span<const int> p);

/// L_i >= t_i - i for i in [m] and L_{m+1} = n - m. Requires m + 1 blocks.
bool is_compatible(const TakenSpots& inst, const PFList& list);

/// Appends empty blocks until the list has `blocks` entries.
PFList pad_blocks(PFList list, std::size_t blocks);

/// All increasing parking functions of the given length, lexicographically.
void for_each_ipf(int length, const SeqVisitor& visit);

/// All (n,t)-compatible lists with m + 1 blocks, found by filtering every
/// block-length composition of n - m through is_compatible.
void for_each_compatible_pflist(const TakenSpots& inst, const PFListVisitor& visit);

/// Multinomial binom(sum; lengths): the shuffle count when no letter is
/// shared between the lists.
Count count_shuffles_distinct(std::span<const int> lengths);

inline constexpr std::size_t kDefaultShuffleCap = 16;

/// Set of all interleavings preserving the order within each list.
template <typename T>
std::set<std::vector<T>> shuffles(const std::vector<std::vector<T>>& lists,
                                  std::size_t cap = kDefaultShuffleCap) {
  std::size_t total = 0;
  for (const auto& l : lists) total += l.size();
  if (total > cap)
    throw Error(ErrorKind::CapExceeded,
                "shuffle of " + std::to_string(total) + " letters exceeds cap " +
                    std::to_string(cap));

  std::set<std::vector<T>> out;
  std::vector<std::size_t> pos(lists.size(), 0);
  std::vector<T> word;
  word.reserve(total);
  std::function<void()> rec = [&] {
    if (word.size() == total) {
      out.insert(word);
      return;
    }
    for (std::size_t i = 0; i < lists.size(); ++i) {
      if (pos[i] == lists[i].size()) continue;
      word.push_back(lists[i][pos[i]++]);
      rec();
      --pos[i];
      word.pop_back();
    }
  };
  rec();
  return out;
}

/// Text form used by the CLI: blocks joined by ';', entries by ','.
/// The empty string is the empty list.
std::string format_blocks(const PFList& list);
PFList parse_blocks(const std::string& text);

}  // namespace parkcomp

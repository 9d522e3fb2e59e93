#include "parkcomp/joinsplit.hpp"

#include <cassert>
#include <sstream>

#include "parkcomp/formulas.hpp"

namespace parkcomp {

namespace {

void require_ipf_block(std::span<const int> block, std::size_t index) {
  if (!is_weakly_increasing(block) || longest_ipf_prefix(block) != block.size())
    throw Error(ErrorKind::InvalidBlock,
                "block " + std::to_string(index + 1) + " is not an increasing parking function");
}

}  // namespace

std::size_t PFList::size() const {
  std::size_t s = 0;
  for (const auto& b : blocks) s += b.size();
  return s;
}

std::vector<int> PFList::lengths() const {
  std::vector<int> out;
  out.reserve(blocks.size());
  for (const auto& b : blocks) out.push_back(static_cast<int>(b.size()));
  return out;
}

std::size_t longest_ipf_prefix(std::span<const int> p) {
  if (!is_weakly_increasing(p))
    throw Error(ErrorKind::NotWeaklyIncreasing, "sequence must be weakly increasing");
  // For a sorted sequence the prefix of length k is a parking function iff
  // 1 <= p_i <= i for every i <= k.
  std::size_t k = 0;
  while (k < p.size() && p[k] >= 1 && p[k] <= static_cast<int>(k) + 1) ++k;
  return k;
}

Seq join(const PFList& list) {
  Seq out;
  out.reserve(list.size());
  int shift = 0;  // L_{i-1} + i - 1
  for (std::size_t i = 0; i < list.blocks.size(); ++i) {
    const auto& block = list.blocks[i];
    require_ipf_block(block, i);
    for (int a : block) out.push_back(a + shift);
    shift += static_cast<int>(block.size()) + 1;
  }
  assert(is_weakly_increasing(out));
  return out;
}

PFList split(std::span<const int> p) {
  for (int x : p)
    if (x < 1) throw Error(ErrorKind::NonPositiveEntry, "entries must be positive");
  if (!is_weakly_increasing(p))
    throw Error(ErrorKind::NotWeaklyIncreasing, "sequence must be weakly increasing");

  PFList out;
  Seq rest(p.begin(), p.end());
  while (!rest.empty()) {
    const std::size_t k = longest_ipf_prefix(rest);
    out.blocks.emplace_back(rest.begin(), rest.begin() + static_cast<std::ptrdiff_t>(k));
    const int offset = static_cast<int>(k) + 1;
    Seq next;
    next.reserve(rest.size() - k);
    for (std::size_t i = k; i < rest.size(); ++i) next.push_back(rest[i] - offset);
    rest = std::move(next);
  }
  return out;
}

bool is_compatible(const TakenSpots& inst, const PFList& list) {
  const auto m = static_cast<std::size_t>(inst.m());
  if (list.blocks.size() != m + 1)
    throw Error(ErrorKind::BlockCountMismatch, "expected " + std::to_string(m + 1) +
                                                   " blocks, got " +
                                                   std::to_string(list.blocks.size()));
  for (std::size_t i = 0; i < list.blocks.size(); ++i) require_ipf_block(list.blocks[i], i);

  const Seq& t = inst.taken();
  int prefix = 0;
  for (std::size_t i = 0; i < m; ++i) {
    prefix += static_cast<int>(list.blocks[i].size());
    if (prefix < t[i] - static_cast<int>(i + 1)) return false;
  }
  prefix += static_cast<int>(list.blocks[m].size());
  return prefix == inst.cars();
}

PFList pad_blocks(PFList list, std::size_t blocks) {
  if (list.blocks.size() < blocks) list.blocks.resize(blocks);
  return list;
}

void for_each_ipf(int length, const SeqVisitor& visit) {
  if (length < 0) throw Error(ErrorKind::ParameterOutOfRange, "negative length");
  Seq a(static_cast<std::size_t>(length), 0);
  auto rec = [&](auto&& self, int i, int lo) -> void {
    if (i == length) {
      visit(a);
      return;
    }
    for (int x = lo; x <= i + 1; ++x) {
      a[static_cast<std::size_t>(i)] = x;
      self(self, i + 1, x);
    }
  };
  rec(rec, 0, 1);
}

void for_each_compatible_pflist(const TakenSpots& inst, const PFListVisitor& visit) {
  const int blocks = inst.m() + 1;
  for_each_composition(inst.cars(), blocks, [&](std::span<const int> lens) {
    PFList probe;
    probe.blocks.resize(static_cast<std::size_t>(blocks));
    for (int i = 0; i < blocks; ++i)
      for (int j = 0; j < lens[static_cast<std::size_t>(i)]; ++j)
        probe.blocks[static_cast<std::size_t>(i)].push_back(1);
    if (!is_compatible(inst, probe)) return;

    // Cartesian product of all increasing parking functions per block.
    PFList current;
    current.blocks.resize(static_cast<std::size_t>(blocks));
    auto rec = [&](auto&& self, int i) -> void {
      if (i == blocks) {
        visit(current);
        return;
      }
      for_each_ipf(lens[static_cast<std::size_t>(i)], [&](std::span<const int> a) {
        current.blocks[static_cast<std::size_t>(i)].assign(a.begin(), a.end());
        self(self, i + 1);
      });
    };
    rec(rec, 0);
  });
}

Count count_shuffles_distinct(std::span<const int> lengths) {
  std::int64_t total = 0;
  for (int l : lengths) total += l;
  return multinomial(total, lengths);
}

std::string format_blocks(const PFList& list) {
  std::string out;
  for (std::size_t i = 0; i < list.blocks.size(); ++i) {
    if (i > 0) out += ';';
    for (std::size_t j = 0; j < list.blocks[i].size(); ++j) {
      if (j > 0) out += ',';
      out += std::to_string(list.blocks[i][j]);
    }
  }
  return out;
}

PFList parse_blocks(const std::string& text) {
  PFList out;
  if (text.empty()) return out;
  std::stringstream blocks(text);
  std::string segment;
  // getline drops a trailing empty segment, so count separators instead.
  std::size_t expected = 1;
  for (char ch : text)
    if (ch == ';') ++expected;
  while (std::getline(blocks, segment, ';')) {
    Seq block;
    std::stringstream entries(segment);
    std::string item;
    while (std::getline(entries, item, ',')) {
      std::size_t used = 0;
      int v = 0;
      try {
        v = std::stoi(item, &used);
      } catch (const std::exception&) {
        used = 0;
      }
      if (used == 0 || used != item.size())
        throw Error(ErrorKind::InvalidBlock, "bad block entry '" + item + "'");
      block.push_back(v);
    }
    out.blocks.push_back(std::move(block));
  }
  out.blocks.resize(expected);
  return out;
}

}  // namespace parkcomp

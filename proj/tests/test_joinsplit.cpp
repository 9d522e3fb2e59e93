#include <set>

#include <doctest.h>

#include "oracles.hpp"
#include "parkcomp/error.hpp"
#include "parkcomp/joinsplit.hpp"
#include "parkcomp/lattice.hpp"

using namespace parkcomp;

TEST_CASE("join") {
  CHECK(join(PFList{{{1, 2, 2}, {1}, {}, {1, 2}}}) == Seq{1, 2, 2, 5, 8, 9});
  CHECK(join(PFList{}).empty());
  CHECK(join(PFList{{{1, 1}}}) == Seq{1, 1});
  CHECK(join(PFList{{{}, {1}}}) == Seq{2});
  CHECK_THROWS_AS(join(PFList{{{2}}}), Error);
  CHECK_THROWS_AS(join(PFList{{{2, 1}}}), Error);
}

TEST_CASE("split") {
  const Seq p{1, 2, 2, 5, 8, 9};
  CHECK(split(p) == PFList{{{1, 2, 2}, {1}, {}, {1, 2}}});
  CHECK(split(Seq{1, 1, 2}) == PFList{{{1, 1, 2}}});
  CHECK(split(Seq{}) == PFList{});
  CHECK(split(Seq{2}) == PFList{{{}, {1}}});
  CHECK_THROWS_AS(split(Seq{2, 1}), Error);
  CHECK_THROWS_AS(split(Seq{0, 1}), Error);
}

TEST_CASE("longest_ipf_prefix") {
  CHECK(longest_ipf_prefix(Seq{1, 2, 2, 5, 8, 9}) == 3);
  CHECK(longest_ipf_prefix(Seq{2}) == 0);
  CHECK(longest_ipf_prefix(Seq{}) == 0);
  const Seq p{1, 1, 3, 3};
  CHECK(longest_ipf_prefix(p) == 4);
  // Oracle: largest k with a parking-function prefix.
  std::size_t k = 0;
  for (std::size_t len = 0; len <= p.size(); ++len)
    if (is_parking_function(std::span<const int>(p.data(), len))) k = len;
  CHECK(k == 4);
}

TEST_CASE("longest_ipf_prefix agrees with the prefix oracle") {
  for (int len = 0; len <= 6; ++len) {
    Seq p(static_cast<std::size_t>(len), 1);
    auto rec = [&](auto&& self, int i, int lo) -> void {
      if (i == len) {
        std::size_t best = 0;
        while (best < p.size() && is_parking_function(std::span<const int>(p.data(), best + 1))) ++best;
        REQUIRE(longest_ipf_prefix(p) == best);
        return;
      }
      for (int x = lo; x <= 8; ++x) {
        p[static_cast<std::size_t>(i)] = x;
        self(self, i + 1, x);
      }
    };
    rec(rec, 0, 1);
  }
}

TEST_CASE("is_compatible") {
  const PFList a{{{1, 1, 2, 2}, {1}, {1}, {}}};
  CHECK(is_compatible(make_instance(9, {3, 6, 7}), a));
  CHECK_FALSE(is_compatible(make_instance(9, {6, 7, 8}), a));
  // Lists carry implicit trailing empty blocks; pad to m + 1 for m = 4.
  CHECK(is_compatible(make_instance(10, {2, 5, 7, 9}), pad_blocks(a, 5)));
  CHECK(is_compatible(make_instance(1, {1}), PFList{{{}, {}}}));
  CHECK_THROWS_AS(is_compatible(make_instance(9, {3, 6}), a), Error);
}

TEST_CASE("shuffles") {
  const std::vector<std::vector<char>> ab_xy{{'a', 'b'}, {'x', 'y'}};
  const auto s = shuffles(ab_xy);
  const std::set<std::vector<char>> expected{{'a', 'b', 'x', 'y'}, {'a', 'x', 'b', 'y'},
                                             {'a', 'x', 'y', 'b'}, {'x', 'a', 'b', 'y'},
                                             {'x', 'a', 'y', 'b'}, {'x', 'y', 'a', 'b'}};
  CHECK(s == expected);
  CHECK(shuffles(std::vector<std::vector<char>>{{'a', 'b'}, {}}) ==
        std::set<std::vector<char>>{{'a', 'b'}});
  CHECK(shuffles(std::vector<std::vector<int>>{{1}, {1}}).size() == 1);
  CHECK_THROWS_AS(shuffles(std::vector<std::vector<int>>{std::vector<int>(20, 1)}), Error);
}

TEST_CASE("distinct shuffle counts are multinomials") {
  CHECK(count_shuffles_distinct(std::vector<int>{2, 2}) == 6);
  CHECK(count_shuffles_distinct(std::vector<int>{0, 0, 0}) == 1);
  CHECK(count_shuffles_distinct(std::vector<int>{1, 1, 0}) == 2);
  // Distinct letters: the set size reaches the bound.
  for (int a = 0; a <= 3; ++a)
    for (int b = 0; b <= 3; ++b)
      for (int c = 0; c <= 2; ++c) {
        std::vector<std::vector<int>> lists(3);
        int next = 0;
        for (int i = 0; i < a; ++i) lists[0].push_back(next++);
        for (int i = 0; i < b; ++i) lists[1].push_back(next++);
        for (int i = 0; i < c; ++i) lists[2].push_back(next++);
        REQUIRE(Count(shuffles(lists).size()) == count_shuffles_distinct(std::vector<int>{a, b, c}));
      }
}

TEST_CASE("join(split(p)) = p for weakly increasing p, |p| <= 6, entries <= 9") {
  for (int len = 0; len <= 6; ++len) {
    Seq p(static_cast<std::size_t>(len), 1);
    auto rec = [&](auto&& self, int i, int lo) -> void {
      if (i == len) {
        const PFList a = split(p);
        REQUIRE(join(a) == p);
        // Only the final block is guaranteed nonempty.
        if (!a.blocks.empty()) REQUIRE_FALSE(a.blocks.back().empty());
        return;
      }
      for (int x = lo; x <= 9; ++x) {
        p[static_cast<std::size_t>(i)] = x;
        self(self, i + 1, x);
      }
    };
    rec(rec, 0, 1);
  }
}

TEST_CASE("split(join(A)) = A up to trailing empty blocks, |A| <= 5, <= 4 blocks") {
  std::size_t lists = 0;
  for (int r = 0; r <= 4; ++r)
    for (int total = 0; total <= 5; ++total)
      for (const auto& lens : oracle::compositions(total, r)) {
        PFList a;
        a.blocks.resize(static_cast<std::size_t>(r));
        auto rec = [&](auto&& self, int i) -> void {
          if (i == r) {
            ++lists;
            PFList trimmed = a;
            while (!trimmed.blocks.empty() && trimmed.blocks.back().empty()) trimmed.blocks.pop_back();
            REQUIRE(split(join(a)) == trimmed);
            return;
          }
          for_each_ipf(lens[static_cast<std::size_t>(i)], [&](std::span<const int> blk) {
            a.blocks[static_cast<std::size_t>(i)].assign(blk.begin(), blk.end());
            self(self, i + 1);
          });
        };
        rec(rec, 0);
      }
  CHECK(lists > 1000);
}

TEST_CASE("for_each_ipf yields Catalan many parking functions") {
  for (int len = 0; len <= 7; ++len) {
    Count c = 0;
    for_each_ipf(len, [&](std::span<const int> a) {
      REQUIRE(is_parking_function(a));
      REQUIRE(is_weakly_increasing(a));
      ++c;
    });
    REQUIRE(c == catalan(len));
  }
}

TEST_CASE("block text encoding") {
  const PFList a{{{1, 2, 2}, {1}, {}, {1, 2}}};
  CHECK(format_blocks(a) == "1,2,2;1;;1,2");
  CHECK(parse_blocks("1,2,2;1;;1,2") == a);
  CHECK(parse_blocks("") == PFList{});
  CHECK(parse_blocks("1;") == PFList{{{1}, {}}});
  CHECK(parse_blocks(";") == PFList{{{}, {}}});
  CHECK_THROWS_AS(parse_blocks("1,x"), Error);
}

TEST_CASE("split maps increasing completions onto compatible lists, n <= 6") {
  for (int n = 0; n <= 6; ++n)
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
      Seq t;
      for (int x = 1; x <= n; ++x)
        if (mask & (1u << (x - 1))) t.push_back(x);
      const auto inst = make_instance(n, t);
      const auto blocks = static_cast<std::size_t>(inst.m()) + 1;
      std::set<PFList> image;
      brute_force_ipc(inst, kDefaultCap, [&](std::span<const int> c) {
        PFList a = split(c);
        REQUIRE(a.blocks.size() <= blocks);
        image.insert(pad_blocks(std::move(a), blocks));
      });
      std::set<PFList> compatible;
      for_each_compatible_pflist(inst, [&](const PFList& a) {
        REQUIRE(is_compatible(inst, a));
        compatible.insert(a);
      });
      REQUIRE(image == compatible);
      for (const auto& a : compatible) REQUIRE(is_increasing_parking_completion(inst, join(a)));
    }
}

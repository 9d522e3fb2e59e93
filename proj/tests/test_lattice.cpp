#include <set>

#include <doctest.h>

#include "oracles.hpp"
#include "parkcomp/error.hpp"
#include "parkcomp/lattice.hpp"

using namespace parkcomp;

namespace {

template <typename Visit>
void for_each_instance(int max_n, Visit visit) {
  for (int n = 0; n <= max_n; ++n)
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
      Seq t;
      for (int x = 1; x <= n; ++x)
        if (mask & (1u << (x - 1))) t.push_back(x);
      visit(make_instance(n, t));
    }
}

std::vector<Seq> collect(const FerrersShape& shape) {
  std::vector<Seq> out;
  enumerate_paths(shape, kDefaultCap, [&](std::span<const int> c) { out.emplace_back(c.begin(), c.end()); });
  return out;
}

}  // namespace

TEST_CASE("path_from_sequence") {
  const auto fig1 = path_from_sequence({1, 1, 2, 3, 3});
  CHECK(fig1.up_xs == Seq{1, 1, 2, 3, 3});
  CHECK(fig1.width == 3);
  CHECK(path_from_sequence({}).up_xs.empty());
  CHECK(path_from_sequence({1, 2, 2, 5, 8, 9}, 10).width == 10);
  CHECK_THROWS_AS(path_from_sequence({2, 1}), Error);
  CHECK_THROWS_AS(path_from_sequence({0, 1}), Error);
  CHECK_THROWS_AS(path_from_sequence({1, 4}, 3), Error);
}

TEST_CASE("render marks the visited lattice points") {
  CHECK(render(path_from_sequence({2, 4}, 4)) == "...#\n.###\n##..\n");
  CHECK(render(path_from_sequence({}, 3)) == "###\n");
}

TEST_CASE("ferrers_of_unoccupied") {
  CHECK(ferrers_of_unoccupied(Seq{2, 4}).rows == std::vector<int>{1, 3});
  CHECK(ferrers_of_unoccupied(Seq{3, 4, 5, 8}).rows == std::vector<int>{2, 3, 4, 7});
  CHECK(ferrers_of_unoccupied(Seq{1}).rows == std::vector<int>{0});
}

TEST_CASE("count_paths_dp") {
  CHECK(count_paths_dp(make_shape({1, 3})) == 7);
  CHECK(count_paths_dp(make_shape({2, 3, 4, 7})) == 146);
  CHECK(count_paths_dp(make_shape({0, 0, 0})) == 1);
  CHECK(count_paths_dp(make_shape({})) == 1);
  // Degenerate (repeated) rows stay countable.
  CHECK(count_paths_dp(make_shape({1, 1})) == 3);
  CHECK_THROWS_AS(make_shape({3, 1}), Error);
}

TEST_CASE("rectangles give binomial counts") {
  for (int rows = 0; rows <= 7; ++rows)
    for (int k = 0; k <= 7; ++k) {
      FerrersShape rect{std::vector<int>(static_cast<std::size_t>(rows), k)};
      REQUIRE(count_paths_dp(rect) == binomial(rows + k, rows));
    }
}

TEST_CASE("enumerate_paths") {
  CHECK(collect(make_shape({1, 3})) ==
        std::vector<Seq>{{1, 1}, {1, 2}, {1, 3}, {1, 4}, {2, 2}, {2, 3}, {2, 4}});
  CHECK(collect(make_shape({0})) == std::vector<Seq>{{1}});
  CHECK(collect(make_shape({2, 3, 4, 7})).size() == 146);
  CHECK_THROWS_AS(enumerate_paths(make_shape({2, 3, 4, 7}), 100), Error);
}

TEST_CASE("enumerate_paths is exactly the increasing completions, n <= 8") {
  for_each_instance(8, [](const TakenSpots& inst) {
    const auto paths = collect(ferrers_of_unoccupied(unoccupied(inst)));
    std::vector<Seq> brute;
    brute_force_ipc(inst, kDefaultCap, [&](std::span<const int> c) { brute.emplace_back(c.begin(), c.end()); });
    REQUIRE(paths == brute);
  });
}

TEST_CASE("determinant count") {
  CHECK(ipc_determinant_matrix(make_instance(4, {1, 3})) == IntMatrix{{4, 1}, {1, 2}});
  CHECK(ipc_determinant_matrix(make_instance(8, {1, 2, 6, 7})) ==
        IntMatrix{{8, 1, 0, 0}, {10, 5, 1, 0}, {4, 6, 4, 1}, {0, 1, 3, 3}});
  CHECK(count_ipc_determinant(make_instance(4, {1, 3})) == 7);
  CHECK(count_ipc_determinant(make_instance(8, {1, 2, 6, 7})) == 146);
  for (int k = 0; k <= 6; ++k) {
    Seq t;
    for (int i = 1; i <= k; ++i) t.push_back(i);
    CHECK(count_ipc_determinant(make_instance(k, t)) == 1);
  }
}

TEST_CASE("determinant equals DP for n <= 10") {
  for_each_instance(10, [](const TakenSpots& inst) {
    REQUIRE(count_ipc_determinant(inst) == count_paths_dp(ferrers_of_unoccupied(unoccupied(inst))));
  });
}

TEST_CASE("decorate and undecorate") {
  const Seq fig4{4, 6, 1, 2, 4};
  const LabeledPath lp = decorate(fig4);
  CHECK(lp.up_xs == Seq{1, 2, 4, 4, 6});
  CHECK(lp.labels == std::vector<int>{3, 4, 1, 5, 2});
  CHECK(undecorate(lp) == fig4);
  CHECK(decorate(Seq{1}) == LabeledPath{{1}, {1}});
  CHECK(decorate(Seq{2, 2}) == LabeledPath{{2, 2}, {1, 2}});
  CHECK_THROWS_AS(undecorate(LabeledPath{{2, 2}, {2, 1}}), Error);
  CHECK_THROWS_AS(undecorate(LabeledPath{{1, 2}, {1, 1}}), Error);
  CHECK_THROWS_AS(undecorate(LabeledPath{{1, 2}, {1}}), Error);
}

TEST_CASE("decorate and undecorate are inverse, |c| <= 6, entries <= 6") {
  for (int len = 0; len <= 6; ++len)
    oracle::for_each_word(6, len, [](const Seq& c) { REQUIRE(undecorate(decorate(c)) == c); });
}

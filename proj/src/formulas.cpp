#include "parkcomp/formulas.hpp"

#include <algorithm>
#include <string>

#include "parkcomp/error.hpp"

namespace parkcomp {

namespace {

void require(bool ok, const std::string& what) {
  if (!ok) throw Error(ErrorKind::ParameterOutOfRange, what);
}

template <typename Summand>
std::vector<Term> collect_terms(const TakenSpots& inst, Summand summand) {
  std::vector<Term> terms;
  length_vectors(inst, [&](std::span<const int> l) {
    terms.push_back(Term{LengthVector(l.begin(), l.end()), summand(l)});
  });
  return terms;
}

Count total(const std::vector<Term>& terms) {
  Count s = 0;
  for (const auto& t : terms) s += t.value;
  return s;
}

Count pc_summand(int cars, std::span<const int> l) {
  Count v = multinomial(cars, l);
  for (int lj : l) v *= pf_count_weight(lj);
  return v;
}

}  // namespace

Count pf_count_weight(int l) {
  require(l >= 0, "negative parking function length");
  if (l == 0) return 1;
  return power(Count(l + 1), static_cast<std::uint64_t>(l - 1));
}

void for_each_composition(int total, int parts, const LengthVisitor& visit) {
  require(total >= 0 && parts >= 0, "negative composition parameters");
  if (parts == 0) {
    if (total == 0) visit(std::span<const int>{});
    return;
  }
  std::vector<int> c(static_cast<std::size_t>(parts), 0);
  auto rec = [&](auto&& self, int i, int left) -> void {
    if (i == parts - 1) {
      c[static_cast<std::size_t>(i)] = left;
      visit(c);
      return;
    }
    for (int v = 0; v <= left; ++v) {
      c[static_cast<std::size_t>(i)] = v;
      self(self, i + 1, left - v);
    }
  };
  rec(rec, 0, total);
}

void length_vectors(const TakenSpots& inst, const LengthVisitor& visit) {
  const int m = inst.m();
  const int cars = inst.cars();
  const Seq& t = inst.taken();
  std::vector<int> l(static_cast<std::size_t>(m) + 1, 0);

  // Choose prefix sums S_j in [max(S_{j-1}, t_j - j), cars]; the bounds
  // t_j - j never exceed cars, so every branch reaches a leaf.
  auto rec = [&](auto&& self, int j, int prefix) -> void {
    if (j == m) {
      l[static_cast<std::size_t>(m)] = cars - prefix;
      visit(l);
      return;
    }
    const int lower = std::max(prefix, t[static_cast<std::size_t>(j)] - (j + 1));
    for (int s = lower; s <= cars; ++s) {
      l[static_cast<std::size_t>(j)] = s - prefix;
      self(self, j + 1, s);
    }
  };
  rec(rec, 0, 0);
}

std::vector<LengthVector> length_vectors(const TakenSpots& inst) {
  std::vector<LengthVector> out;
  length_vectors(inst, [&](std::span<const int> l) { out.emplace_back(l.begin(), l.end()); });
  return out;
}

std::vector<Term> count_ipc_terms(const TakenSpots& inst) {
  return collect_terms(inst, [](std::span<const int> l) {
    Count v = 1;
    for (int li : l) v *= catalan(li);
    return v;
  });
}

Count count_ipc(const TakenSpots& inst) { return total(count_ipc_terms(inst)); }

std::vector<Term> count_pc_terms(const TakenSpots& inst) {
  const int cars = inst.cars();
  return collect_terms(inst, [cars](std::span<const int> l) { return pc_summand(cars, l); });
}

Count count_pc(const TakenSpots& inst) { return total(count_pc_terms(inst)); }

Count count_pc_block(int n, int i, int m) {
  require(m >= 1 && n >= 1, "block formula needs m, n >= 1");
  require(1 <= i && i <= n - m, "block formula needs 1 <= i <= n - m");
  Count sum = 0;
  for (int k = i; k <= n - m; ++k) {
    // At k = n - m the tail factor is m * m^-1 = 1 (no cars left after the block).
    const Count tail = scaled_power(Count(m), Count(n - k), n - k - m - 1);
    sum += binomial(n - m, k) * pf_count_weight(k) * tail;
  }
  return sum;
}

Count count_pc_single(int n, int k) {
  require(1 <= k && k <= n, "single-spot formula needs 1 <= k <= n");
  Count sum = 0;
  for (int s = 0; s <= n - k; ++s)
    sum += binomial(n - 1, s) * pf_count_weight(s) * scaled_power(Count(1), Count(n - s), n - s - 2);
  return sum;
}

Count count_pc_initial_block(int n, int l) {
  require(0 <= l && l <= n, "initial-block formula needs 0 <= l <= n");
  return scaled_power(Count(l + 1), Count(n + 1), n - l - 1);
}

std::pair<Count, Count> shift_sum_identity(int n, int m) {
  require(1 <= m && m <= n, "shift identity needs 1 <= m <= n");
  Count lhs = 0;
  for (int i = 0; i <= n - m; ++i) {
    Seq t;
    for (int j = 1; j <= m; ++j) t.push_back(i + j);
    lhs += count_pc(make_instance(n, std::move(t)));
  }
  return {lhs, power(Count(n + 1), static_cast<std::uint64_t>(n - m))};
}

std::pair<Count, Count> prufer_identity(int n, int m, int k) {
  require(m >= 1, "identity needs m >= 1");
  require(1 <= k && k <= n - m, "identity needs 1 <= k <= n - m");
  const int rest = n - m - k;
  Count lhs = 0;
  for_each_composition(rest, m, [&](std::span<const int> l) { lhs += pc_summand(rest, l); });
  return {lhs, scaled_power(Count(m), Count(n - k), n - k - m - 1)};
}

}  // namespace parkcomp

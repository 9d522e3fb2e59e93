#include "parkcomp/lattice.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "parkcomp/error.hpp"

namespace parkcomp {

namespace {

void require_positive_increasing(std::span<const int> p) {
  for (int x : p)
    if (x < 1) throw Error(ErrorKind::NonPositiveEntry, "entries must be positive");
  if (!is_weakly_increasing(p))
    throw Error(ErrorKind::NotWeaklyIncreasing, "sequence must be weakly increasing");
}

}  // namespace

LatticePath path_from_sequence(Seq p, std::optional<int> width) {
  require_positive_increasing(p);
  const int last = p.empty() ? 1 : p.back();
  const int w = width.value_or(last);
  if (w < last)
    throw Error(ErrorKind::OutOfRange, "width " + std::to_string(w) +
                                           " is left of the last up step at " +
                                           std::to_string(last));
  return LatticePath{std::move(p), w};
}

FerrersShape make_shape(std::vector<int> rows) {
  for (int r : rows)
    if (r < 0) throw Error(ErrorKind::OutOfRange, "negative Ferrers row");
  if (!is_weakly_increasing(rows))
    throw Error(ErrorKind::NotWeaklyIncreasing, "Ferrers rows must be weakly increasing");
  return FerrersShape{std::move(rows)};
}

FerrersShape ferrers_of_unoccupied(std::span<const int> u) {
  if (!is_strictly_increasing(u))
    throw Error(ErrorKind::NotStrictlyIncreasing, "unoccupied spots must be strictly increasing");
  std::vector<int> rows;
  rows.reserve(u.size());
  for (int x : u) {
    if (x < 1) throw Error(ErrorKind::OutOfRange, "unoccupied spot below 1");
    rows.push_back(x - 1);
  }
  return FerrersShape{std::move(rows)};
}

Count count_paths_dp(const FerrersShape& shape) {
  const auto& rows = shape.rows;
  if (rows.empty()) return 1;
  (void)make_shape(rows);

  // ways[x - 1]: paths whose latest up step sits at abscissa x.
  std::vector<Count> ways(static_cast<std::size_t>(rows.front()) + 1, Count(1));
  for (std::size_t i = 1; i < rows.size(); ++i) {
    ways.resize(static_cast<std::size_t>(rows[i]) + 1, Count(0));
    for (std::size_t x = 1; x < ways.size(); ++x) ways[x] += ways[x - 1];
  }
  return std::accumulate(ways.begin(), ways.end(), Count(0));
}

Count enumerate_paths(const FerrersShape& shape, std::uint64_t cap, const SeqVisitor& visit) {
  const Count total = count_paths_dp(shape);
  if (total > cap)
    throw Error(ErrorKind::CapExceeded,
                total.str() + " paths exceed enumeration cap " + std::to_string(cap));
  if (!visit) return total;

  const auto& rows = shape.rows;
  Seq c(rows.size(), 0);
  Count emitted = 0;
  auto rec = [&](auto&& self, std::size_t i, int lo) -> void {
    if (i == rows.size()) {
      ++emitted;
      visit(c);
      return;
    }
    for (int x = lo; x <= rows[i] + 1; ++x) {
      c[i] = x;
      self(self, i + 1, x);
    }
  };
  rec(rec, 0, 1);
  if (emitted != total)
    throw Error(ErrorKind::InternalInconsistency, "path enumeration disagrees with DP count");
  return emitted;
}

IntMatrix ipc_determinant_matrix(const TakenSpots& inst) {
  const Seq u = unoccupied(inst);
  const auto k = static_cast<std::int64_t>(u.size());
  IntMatrix m(u.size(), std::vector<Count>(u.size()));
  for (std::int64_t i = 1; i <= k; ++i)
    for (std::int64_t j = 1; j <= k; ++j)
      m[i - 1][j - 1] = binomial(u[static_cast<std::size_t>(k - i)], i - j + 1);
  return m;
}

Count count_ipc_determinant(const TakenSpots& inst) {
  return determinant(ipc_determinant_matrix(inst));
}

LabeledPath decorate(std::span<const int> prefs) {
  for (int x : prefs)
    if (x < 1) throw Error(ErrorKind::NonPositiveEntry, "preferences must be positive");
  std::vector<int> order(prefs.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](int a, int b) { return prefs[static_cast<std::size_t>(a)] < prefs[static_cast<std::size_t>(b)]; });
  LabeledPath lp;
  for (int idx : order) {
    lp.up_xs.push_back(prefs[static_cast<std::size_t>(idx)]);
    lp.labels.push_back(idx + 1);
  }
  return lp;
}

Seq undecorate(const LabeledPath& lp) {
  const std::size_t k = lp.up_xs.size();
  if (lp.labels.size() != k)
    throw Error(ErrorKind::InvalidLabeling, "label count differs from up-step count");
  if (!is_weakly_increasing(lp.up_xs))
    throw Error(ErrorKind::NotWeaklyIncreasing, "up steps must be weakly increasing");
  Seq c(k, 0);
  for (std::size_t j = 0; j < k; ++j) {
    const int label = lp.labels[j];
    if (label < 1 || label > static_cast<int>(k) || c[static_cast<std::size_t>(label - 1)] != 0)
      throw Error(ErrorKind::InvalidLabeling, "labels are not a permutation of 1.." + std::to_string(k));
    if (j > 0 && lp.up_xs[j] == lp.up_xs[j - 1] && lp.labels[j] < lp.labels[j - 1])
      throw Error(ErrorKind::InvalidLabeling, "labels must increase up a vertical run");
    if (lp.up_xs[j] < 1) throw Error(ErrorKind::NonPositiveEntry, "up steps must be positive");
    c[static_cast<std::size_t>(label - 1)] = lp.up_xs[j];
  }
  return c;
}

std::string render(const LatticePath& path) {
  const int height = static_cast<int>(path.up_xs.size());
  const int width = path.width;
  std::vector<std::string> grid(static_cast<std::size_t>(height) + 1,
                                std::string(static_cast<std::size_t>(width), '.'));
  int x = 1;
  int y = 0;
  auto mark = [&] { grid[static_cast<std::size_t>(y)][static_cast<std::size_t>(x - 1)] = '#'; };
  mark();
  for (int target : path.up_xs) {
    while (x < target) {
      ++x;
      mark();
    }
    ++y;
    mark();
  }
  while (x < width) {
    ++x;
    mark();
  }
  std::string out;
  for (auto it = grid.rbegin(); it != grid.rend(); ++it) {
    out += *it;
    out += '\n';
  }
  return out;
}

}  // namespace parkcomp

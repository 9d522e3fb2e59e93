#include "parkcomp/pitman_stanley.hpp"

#include <algorithm>
#include <string>

#include "parkcomp/error.hpp"

namespace parkcomp {

namespace {

// P_N(x) for x with x_1 >= 1, x_i >= 0.
std::vector<Term> ps_terms(std::span<const int> x) {
  const int N = static_cast<int>(x.size());
  std::vector<Term> terms;
  balanced_sequences(N, [&](std::span<const int> k) {
    Count v = multinomial(N, k);
    for (std::size_t i = 0; i < k.size(); ++i)
      v *= power(Count(x[i]), static_cast<std::uint64_t>(k[i]));
    terms.push_back(Term{std::vector<int>(k.begin(), k.end()), v});
  });
  return terms;
}

void require_xvector(std::span<const int> x) {
  if (!x.empty() && x.front() < 1)
    throw Error(ErrorKind::OutOfRange, "x_1 must be at least 1");
  for (std::size_t i = 1; i < x.size(); ++i)
    if (x[i] < 0) throw Error(ErrorKind::OutOfRange, "x_i must be nonnegative");
}

}  // namespace

Seq make_uvector(Seq u) {
  for (int v : u)
    if (v < 1) throw Error(ErrorKind::NonPositiveEntry, "u entries must be positive");
  if (!is_weakly_increasing(u))
    throw Error(ErrorKind::NotWeaklyIncreasing, "u must be weakly increasing");
  return u;
}

std::vector<int> delta(std::span<const int> u) {
  (void)make_uvector(Seq(u.begin(), u.end()));
  std::vector<int> x;
  x.reserve(u.size());
  int prev = 0;
  for (int v : u) {
    x.push_back(v - prev);
    prev = v;
  }
  return x;
}

Seq undelta(std::span<const int> x) {
  require_xvector(x);
  Seq u;
  u.reserve(x.size());
  int sum = 0;
  for (int v : x) u.push_back(sum += v);
  return u;
}

void balanced_sequences(int N, const LengthVisitor& visit) {
  if (N < 0) throw Error(ErrorKind::ParameterOutOfRange, "negative length");
  std::vector<int> k(static_cast<std::size_t>(N), 0);
  auto rec = [&](auto&& self, int j, int prefix) -> void {
    if (j == N) {
      if (prefix == N) visit(k);
      return;
    }
    // After position j (1-based j + 1) the prefix must reach j + 1, except
    // at the final position where it must equal N exactly.
    const int lower = (j == N - 1) ? N - prefix : std::max(0, j + 1 - prefix);
    const int upper = N - prefix;
    for (int v = lower; v <= upper; ++v) {
      k[static_cast<std::size_t>(j)] = v;
      self(self, j + 1, prefix + v);
    }
  };
  rec(rec, 0, 0);
}

std::vector<std::vector<int>> balanced_sequences(int N) {
  std::vector<std::vector<int>> out;
  balanced_sequences(N, [&](std::span<const int> k) { out.emplace_back(k.begin(), k.end()); });
  return out;
}

std::vector<Term> count_upf_sum_terms(std::span<const int> u) { return ps_terms(delta(u)); }

Count count_upf_sum(std::span<const int> u) {
  Count s = 0;
  for (const auto& t : count_upf_sum_terms(u)) s += t.value;
  return s;
}

Ratio polytope_volume(std::span<const int> x) {
  require_xvector(x);
  Count s = 0;
  for (const auto& t : ps_terms(x)) s += t.value;
  return Ratio(s, factorial(static_cast<std::int64_t>(x.size())));
}

Ratio goncarov_determinant(std::span<const int> u) {
  (void)make_uvector(Seq(u.begin(), u.end()));
  const std::size_t N = u.size();
  RatioMatrix s(N, std::vector<Ratio>(N, Ratio(0)));
  for (std::size_t i = 0; i < N; ++i) {
    for (std::size_t j = 0; j < N; ++j) {
      const auto e = static_cast<std::int64_t>(j) - static_cast<std::int64_t>(i) + 1;
      if (e < 0) continue;
      s[i][j] = Ratio(power(Count(u[i]), static_cast<std::uint64_t>(e)), factorial(e));
    }
  }
  return determinant(std::move(s));
}

Count count_upf_goncarov(std::span<const int> u) {
  const Ratio scaled = goncarov_determinant(u) * factorial(static_cast<std::int64_t>(u.size()));
  if (denominator(scaled) != 1)
    throw Error(ErrorKind::InternalInconsistency,
                "normalised determinant is not an integer: " + scaled.str());
  Count value = numerator(scaled);
  const Count expected = count_upf_sum(u);
  if (value != expected)
    throw Error(ErrorKind::InternalInconsistency, "determinant gives " + value.str() +
                                                      " but the balanced-sequence sum gives " +
                                                      expected.str());
  return value;
}

Count enumerate_upf(std::span<const int> u, std::uint64_t cap, const SeqVisitor& visit) {
  (void)make_uvector(Seq(u.begin(), u.end()));
  const int N = static_cast<int>(u.size());
  const int top = u.empty() ? 1 : u.back();
  const Count size = power(Count(top), static_cast<std::uint64_t>(N));
  if (size > cap)
    throw Error(ErrorKind::CapExceeded,
                "u-parking scan of " + size.str() + " candidates exceeds cap " + std::to_string(cap));

  Count found = 0;
  Seq c(static_cast<std::size_t>(N), 1);
  Seq sorted;
  while (true) {
    sorted = c;
    std::sort(sorted.begin(), sorted.end());
    bool ok = true;
    for (int i = 0; i < N && ok; ++i) ok = sorted[static_cast<std::size_t>(i)] <= u[static_cast<std::size_t>(i)];
    if (ok) {
      ++found;
      if (visit) visit(c);
    }
    int pos = N - 1;
    while (pos >= 0 && c[static_cast<std::size_t>(pos)] == top) {
      c[static_cast<std::size_t>(pos)] = 1;
      --pos;
    }
    if (pos < 0) break;
    ++c[static_cast<std::size_t>(pos)];
  }
  return found;
}

}  // namespace parkcomp

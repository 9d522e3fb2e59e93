#include "parkcomp/core.hpp"

#include <algorithm>
#include <string>

#include "parkcomp/error.hpp"

namespace parkcomp {

namespace {

void check_prefs(const TakenSpots& inst, std::span<const int> prefs) {
  if (static_cast<int>(prefs.size()) != inst.cars())
    throw Error(ErrorKind::LengthMismatch, "expected " + std::to_string(inst.cars()) +
                                               " preferences, got " +
                                               std::to_string(prefs.size()));
  for (int c : prefs)
    if (c < 1 || c > inst.n())
      throw Error(ErrorKind::OutOfRange, "preference " + std::to_string(c) + " outside [1, " +
                                             std::to_string(inst.n()) + "]");
}

// sorted(c)_i <= u_i for all i, checked through counts: for every x, at
// least as many preferences are <= x as there are free spots <= x.
bool dominated_by_free_spots(const TakenSpots& inst, std::span<const int> prefs) {
  const int n = inst.n();
  std::vector<int> hist(static_cast<std::size_t>(n) + 2, 0);
  for (int c : prefs) ++hist[static_cast<std::size_t>(c)];
  const Seq& t = inst.taken();
  std::size_t ti = 0;
  int free_so_far = 0;
  int prefs_so_far = 0;
  for (int x = 1; x <= n; ++x) {
    if (ti < t.size() && t[ti] == x)
      ++ti;
    else
      ++free_so_far;
    prefs_so_far += hist[static_cast<std::size_t>(x)];
    if (prefs_so_far < free_so_far) return false;
  }
  return true;
}

void checked_scan_size(const Count& size, std::uint64_t cap, const char* what) {
  if (size > cap)
    throw Error(ErrorKind::CapExceeded,
                std::string(what) + " scan of " + size.str() + " candidates exceeds cap " +
                    std::to_string(cap));
}

}  // namespace

bool is_weakly_increasing(std::span<const int> s) {
  return std::is_sorted(s.begin(), s.end());
}

bool is_strictly_increasing(std::span<const int> s) {
  return std::adjacent_find(s.begin(), s.end(), std::greater_equal<>()) == s.end();
}

TakenSpots make_instance(int n, Seq t) {
  if (n < 0) throw Error(ErrorKind::OutOfRange, "street size must be nonnegative");
  for (int x : t)
    if (x < 1 || x > n)
      throw Error(ErrorKind::OutOfRange,
                  "taken spot " + std::to_string(x) + " outside [1, " + std::to_string(n) + "]");
  if (!is_strictly_increasing(t))
    throw Error(ErrorKind::NotStrictlyIncreasing, "taken spots must be strictly increasing");
  return TakenSpots(n, std::move(t));
}

Seq unoccupied(const TakenSpots& inst) {
  Seq u;
  u.reserve(static_cast<std::size_t>(inst.cars()));
  const Seq& t = inst.taken();
  std::size_t ti = 0;
  for (int x = 1; x <= inst.n(); ++x) {
    if (ti < t.size() && t[ti] == x)
      ++ti;
    else
      u.push_back(x);
  }
  return u;
}

ParkingOutcome simulate_parking(const TakenSpots& inst, std::span<const int> prefs) {
  check_prefs(inst, prefs);
  std::vector<bool> occupied(static_cast<std::size_t>(inst.n()) + 1, false);
  for (int x : inst.taken()) occupied[static_cast<std::size_t>(x)] = true;

  ParkingOutcome out;
  Seq assignment;
  assignment.reserve(prefs.size());
  for (std::size_t car = 0; car < prefs.size(); ++car) {
    int spot = prefs[car];
    while (spot <= inst.n() && occupied[static_cast<std::size_t>(spot)]) ++spot;
    if (spot > inst.n()) {
      out.failed_car = static_cast<int>(car) + 1;
      return out;
    }
    occupied[static_cast<std::size_t>(spot)] = true;
    assignment.push_back(spot);
  }
  out.success = true;
  out.assignment = std::move(assignment);
  return out;
}

bool is_parking_function(std::span<const int> prefs) {
  Seq a(prefs.begin(), prefs.end());
  std::sort(a.begin(), a.end());
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] < 1 || a[i] > static_cast<int>(i) + 1) return false;
  return true;
}

bool is_parking_completion(const TakenSpots& inst, std::span<const int> prefs) {
  check_prefs(inst, prefs);
  return dominated_by_free_spots(inst, prefs);
}

bool is_increasing_parking_completion(const TakenSpots& inst, std::span<const int> prefs) {
  check_prefs(inst, prefs);
  if (!is_weakly_increasing(prefs)) return false;
  const Seq u = unoccupied(inst);
  for (std::size_t i = 0; i < prefs.size(); ++i)
    if (prefs[i] > u[i]) return false;
  return true;
}

Count brute_force_pc(const TakenSpots& inst, std::uint64_t cap, const SeqVisitor& visit) {
  const int n = inst.n();
  const int k = inst.cars();
  checked_scan_size(power(Count(n), static_cast<std::uint64_t>(k)), cap, "parking completion");

  Count found = 0;
  Seq c(static_cast<std::size_t>(k), 1);
  while (true) {
    if (dominated_by_free_spots(inst, c)) {
      ++found;
      if (visit) visit(c);
    }
    // Odometer step, last position fastest, so visits are lexicographic.
    int pos = k - 1;
    while (pos >= 0 && c[static_cast<std::size_t>(pos)] == n) {
      c[static_cast<std::size_t>(pos)] = 1;
      --pos;
    }
    if (pos < 0) break;
    ++c[static_cast<std::size_t>(pos)];
  }
  return found;
}

Count brute_force_ipc(const TakenSpots& inst, std::uint64_t cap, const SeqVisitor& visit) {
  const int n = inst.n();
  const int k = inst.cars();
  checked_scan_size(k == 0 ? Count(1) : binomial(n + k - 1, k), cap, "increasing completion");

  Count found = 0;
  if (k == 0) {
    if (visit) visit(Seq{});
    return 1;
  }
  Seq c(static_cast<std::size_t>(k), 1);
  while (true) {
    if (is_increasing_parking_completion(inst, c)) {
      ++found;
      if (visit) visit(c);
    }
    int pos = k - 1;
    while (pos >= 0 && c[static_cast<std::size_t>(pos)] == n) --pos;
    if (pos < 0) break;
    const int v = ++c[static_cast<std::size_t>(pos)];
    for (int j = pos + 1; j < k; ++j) c[static_cast<std::size_t>(j)] = v;
  }
  return found;
}

}  // namespace parkcomp

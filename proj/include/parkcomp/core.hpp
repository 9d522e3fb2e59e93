#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "parkcomp/arith.hpp"

namespace parkcomp {

/// A list of 1-based spot indices: preferences, taken spots, free spots.
using Seq = std::vector<int>;
using SeqVisitor = std::function<void(std::span<const int>)>;

inline constexpr std::uint64_t kDefaultCap = 100'000'000;

/// Street of n spots with the taken spots t (strictly increasing, in [1, n]).
/// Only constructible through make_instance, so every value is valid.
class TakenSpots {
public:
  int n() const noexcept { return n_; }
  const Seq& taken() const noexcept { return t_; }
  int m() const noexcept { return static_cast<int>(t_.size()); }
  /// Number of cars that still have to park.
  int cars() const noexcept { return n_ - m(); }

  friend bool operator==(const TakenSpots&, const TakenSpots&) = default;

private:
  friend TakenSpots make_instance(int n, Seq t);
  TakenSpots(int n, Seq t) : n_(n), t_(std::move(t)) {}

  int n_;
  Seq t_;
};

TakenSpots make_instance(int n, Seq t);

/// Complement of t in [n], increasing.
Seq unoccupied(const TakenSpots& inst);

struct ParkingOutcome {
  bool success = false;
  /// assignment[i] is the spot taken by car i + 1; set iff success.
  std::optional<Seq> assignment;
  /// 1-based index of the first car that found no spot; set iff failure.
  std::optional<int> failed_car;
};

/// Runs the one-way street experiment with the spots in t pre-occupied.
ParkingOutcome simulate_parking(const TakenSpots& inst, std::span<const int> prefs);

bool is_parking_function(std::span<const int> prefs);
bool is_parking_completion(const TakenSpots& inst, std::span<const int> prefs);
bool is_increasing_parking_completion(const TakenSpots& inst, std::span<const int> prefs);

/// Scans [n]^(n-m) and counts parking completions, reporting each one to
/// `visit` (lexicographic order) when given. Throws CapExceeded if the scan
/// would exceed `cap` candidates.
Count brute_force_pc(const TakenSpots& inst, std::uint64_t cap = kDefaultCap,
                     const SeqVisitor& visit = {});

/// Same scan restricted to weakly increasing candidates.
Count brute_force_ipc(const TakenSpots& inst, std::uint64_t cap = kDefaultCap,
                      const SeqVisitor& visit = {});

bool is_weakly_increasing(std::span<const int> s);
bool is_strictly_increasing(std::span<const int> s);

}  // namespace parkcomp

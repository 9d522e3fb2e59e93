#include "parkcomp/signature.hpp"

#include <string>

#include "parkcomp/error.hpp"
#include "parkcomp/formulas.hpp"

namespace parkcomp {

Signature make_signature(std::vector<int> s) {
  if (s.empty()) throw Error(ErrorKind::ParameterOutOfRange, "signature must have at least one part");
  for (int v : s)
    if (v < 1) throw Error(ErrorKind::NonPositiveEntry, "signature parts must be positive");
  return s;
}

bool is_degenerate(std::span<const int> s) {
  for (std::size_t j = 1; j < s.size(); ++j)
    if (s[j] < 2) return true;
  return false;
}

Seq boundary_upsteps(std::span<const int> s) {
  (void)make_signature(Signature(s.begin(), s.end()));
  Seq u;
  u.reserve(s.size());
  int sum = 0;
  for (std::size_t j = 0; j < s.size(); ++j) {
    sum += s[j];
    u.push_back(sum - static_cast<int>(j));
  }
  return u;
}

FerrersShape lambda_of_signature(std::span<const int> s) {
  Seq rows = boundary_upsteps(s);
  for (int& r : rows) --r;
  return make_shape(std::move(rows));
}

TakenSpots signature_to_instance(std::span<const int> s) {
  (void)make_signature(Signature(s.begin(), s.end()));
  if (is_degenerate(s))
    throw Error(ErrorKind::DegenerateSignature,
                "interior or final part equal to 1 repeats an up-step abscissa");
  const Seq u = boundary_upsteps(s);
  const int n = u.back();  // 1 + sum(s) - a
  Seq t;
  std::size_t ui = 0;
  for (int x = 1; x <= n; ++x) {
    if (ui < u.size() && u[ui] == x)
      ++ui;
    else
      t.push_back(x);
  }
  return make_instance(n, std::move(t));
}

Signature instance_to_signature(const TakenSpots& inst) {
  const Seq u = unoccupied(inst);
  if (u.empty() || u.back() != inst.n())
    throw Error(ErrorKind::NotCornered, "spot " + std::to_string(inst.n()) + " must be free");
  Signature s;
  s.reserve(u.size());
  s.push_back(u.front());
  for (std::size_t j = 1; j < u.size(); ++j) s.push_back(u[j] - u[j - 1] + 1);
  return s;
}

Count count_signature_dyck(std::span<const int> s) {
  return count_paths_dp(lambda_of_signature(s));
}

Count count_signature_pf(std::span<const int> s) {
  return count_pc(signature_to_instance(s));
}

}  // namespace parkcomp

#include <algorithm>
#include <set>
#include <sstream>

#include "parkcomp/cli.hpp"
#include "parkcomp/error.hpp"
#include "parkcomp/formulas.hpp"
#include "parkcomp/joinsplit.hpp"
#include "parkcomp/lattice.hpp"
#include "parkcomp/pitman_stanley.hpp"
#include "parkcomp/signature.hpp"

namespace parkcomp::cli {

namespace {

class Tally {
public:
  explicit Tally(std::string name) { result_.name = std::move(name); }

  void expect(bool ok, const std::function<std::string()>& describe) {
    ++result_.cases;
    if (ok) return;
    if (result_.failures++ == 0) result_.first_failure = describe();
  }

  CheckResult done() && { return std::move(result_); }

private:
  CheckResult result_;
};

template <typename Visit>
void for_each_instance(int max_n, Visit visit) {
  for (int n = 0; n <= max_n; ++n) {
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
      Seq t;
      for (int x = 1; x <= n; ++x)
        if (mask & (1u << (x - 1))) t.push_back(x);
      visit(make_instance(n, std::move(t)));
    }
  }
}

std::string describe(const TakenSpots& inst) {
  return "n=" + std::to_string(inst.n()) + " t=[" + format_list(inst.taken()) + "]";
}

Seq block_instance_taken(int i, int m) {
  Seq t;
  for (int j = 1; j <= m; ++j) t.push_back(i + j);
  return t;
}

CheckResult check_shift_sum(int max_n) {
  Tally tally("prop45");
  for (int n = 1; n <= max_n; ++n)
    for (int m = 1; m <= n; ++m) {
      auto [lhs, rhs] = shift_sum_identity(n, m);
      tally.expect(lhs == rhs, [&] {
        return "n=" + std::to_string(n) + " m=" + std::to_string(m) + ": " + lhs.str() +
               " != " + rhs.str();
      });
    }
  return std::move(tally).done();
}

CheckResult check_tree_identity(int max_n) {
  Tally tally("lemma46");
  for (int n = 2; n <= max_n; ++n)
    for (int m = 1; m < n; ++m)
      for (int k = 1; k <= n - m; ++k) {
        auto [lhs, rhs] = prufer_identity(n, m, k);
        tally.expect(lhs == rhs, [&] {
          return "n=" + std::to_string(n) + " m=" + std::to_string(m) + " k=" + std::to_string(k) +
                 ": " + lhs.str() + " != " + rhs.str();
        });
      }
  return std::move(tally).done();
}

CheckResult check_block_formula(int max_n, std::uint64_t cap, const Backends& b) {
  Tally tally("cor12");
  for (int n = 2; n <= max_n; ++n)
    for (int m = 1; m < n; ++m)
      for (int i = 1; i <= n - m; ++i) {
        const auto inst = make_instance(n, block_instance_taken(i, m));
        const Count lhs = count_pc_block(n, i, m);
        const Count rhs = b.pc_formula(inst, cap);
        tally.expect(lhs == rhs,
                     [&] { return describe(inst) + ": " + lhs.str() + " != " + rhs.str(); });
      }
  return std::move(tally).done();
}

CheckResult check_single_formula(int max_n, std::uint64_t cap, const Backends& b) {
  Tally tally("eq41");
  for (int n = 1; n <= max_n; ++n)
    for (int k = 1; k <= n; ++k) {
      const auto inst = make_instance(n, {k});
      const Count lhs = count_pc_single(n, k);
      const Count rhs = b.pc_formula(inst, cap);
      tally.expect(lhs == rhs,
                   [&] { return describe(inst) + ": " + lhs.str() + " != " + rhs.str(); });
    }
  return std::move(tally).done();
}

CheckResult check_initial_block_formula(int max_n, std::uint64_t cap, const Backends& b) {
  Tally tally("eq42");
  for (int n = 0; n <= max_n; ++n)
    for (int l = 0; l <= n; ++l) {
      const auto inst = make_instance(n, block_instance_taken(0, l));
      const Count lhs = count_pc_initial_block(n, l);
      const Count rhs = b.pc_formula(inst, cap);
      tally.expect(lhs == rhs,
                   [&] { return describe(inst) + ": " + lhs.str() + " != " + rhs.str(); });
    }
  return std::move(tally).done();
}

CheckResult check_split_image(int max_n, std::uint64_t cap) {
  Tally tally("thm44");
  for_each_instance(max_n, [&](const TakenSpots& inst) {
    const auto blocks = static_cast<std::size_t>(inst.m()) + 1;
    std::set<PFList> image;
    std::uint64_t ipc = 0;
    bool excess = false;
    enumerate_paths(ferrers_of_unoccupied(unoccupied(inst)), cap, [&](std::span<const int> c) {
      ++ipc;
      PFList a = split(c);
      if (a.blocks.size() > blocks) excess = true;
      image.insert(pad_blocks(std::move(a), blocks));
    });
    std::set<PFList> compatible;
    for_each_compatible_pflist(inst, [&](const PFList& a) { compatible.insert(a); });
    tally.expect(!excess && image == compatible && image.size() == ipc, [&] {
      return describe(inst) + ": |image|=" + std::to_string(image.size()) +
             " |compatible|=" + std::to_string(compatible.size()) + " |IPC|=" + std::to_string(ipc);
    });
  });
  return std::move(tally).done();
}

CheckResult check_roundtrip() {
  Tally tally("roundtrip");
  // join(split(p)) = p for weakly increasing p, |p| <= 6, entries <= 9.
  for (int len = 0; len <= 6; ++len) {
    Seq p(static_cast<std::size_t>(len), 1);
    auto rec = [&](auto&& self, int i, int lo) -> void {
      if (i == len) {
        const Seq back = join(split(p));
        tally.expect(back == p, [&] { return "join(split(" + format_list(p) + "))"; });
        return;
      }
      for (int x = lo; x <= 9; ++x) {
        p[static_cast<std::size_t>(i)] = x;
        self(self, i + 1, x);
      }
    };
    rec(rec, 0, 1);
  }
  // split(join(A)) = A for PF lists of total size <= 5 with <= 4 blocks.
  // join never produces trailing empty blocks from split, so those lists
  // are compared after trimming.
  for (int r = 0; r <= 4; ++r)
    for (int total = 0; total <= 5; ++total)
      for_each_composition(total, r, [&](std::span<const int> lens) {
        PFList a;
        a.blocks.resize(static_cast<std::size_t>(r));
        auto rec = [&](auto&& self, int i) -> void {
          if (i == r) {
            const PFList back = split(join(a));
            PFList expected = a;
            while (!expected.blocks.empty() && expected.blocks.back().empty())
              expected.blocks.pop_back();
            tally.expect(back == expected, [&] { return "split(join(" + format_blocks(a) + "))"; });
            return;
          }
          for_each_ipf(lens[static_cast<std::size_t>(i)], [&](std::span<const int> blk) {
            a.blocks[static_cast<std::size_t>(i)].assign(blk.begin(), blk.end());
            self(self, i + 1);
          });
        };
        rec(rec, 0);
      });
  // Signatures with sum <= 12 and instances with n free, n <= 10.
  for (int sum = 1; sum <= 12; ++sum)
    for (int parts = 1; parts <= sum; ++parts)
      for_each_composition(sum - parts, parts, [&](std::span<const int> extra) {
        Signature s(extra.begin(), extra.end());
        for (int& v : s) ++v;
        if (is_degenerate(s)) return;
        const auto inst = signature_to_instance(s);
        tally.expect(instance_to_signature(inst) == s,
                     [&] { return "signature round trip " + format_list(s); });
      });
  for_each_instance(10, [&](const TakenSpots& inst) {
    const Seq u = unoccupied(inst);
    if (u.empty() || u.back() != inst.n()) return;
    tally.expect(signature_to_instance(instance_to_signature(inst)) == inst,
                 [&] { return "instance round trip " + describe(inst); });
  });
  return std::move(tally).done();
}

CheckResult check_methods(int max_n, std::uint64_t cap, const Backends& b) {
  Tally tally("methods");
  for_each_instance(max_n, [&](const TakenSpots& inst) {
    const Count ipc = b.ipc_formula(inst, cap);
    const Count det = b.ipc_det(inst, cap);
    const Count dp = b.ipc_dp(inst, cap);
    tally.expect(ipc == det && ipc == dp, [&] {
      return describe(inst) + " IPC: formula " + ipc.str() + ", det " + det.str() + ", dp " + dp.str();
    });
    const Count pc = b.pc_formula(inst, cap);
    try {
      const Count ipc_brute = b.ipc_brute(inst, cap);
      tally.expect(ipc == ipc_brute, [&] {
        return describe(inst) + " IPC: formula " + ipc.str() + ", brute " + ipc_brute.str();
      });
      const Count pc_brute = b.pc_brute(inst, cap);
      tally.expect(pc == pc_brute, [&] {
        return describe(inst) + " PC: formula " + pc.str() + ", brute " + pc_brute.str();
      });
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::CapExceeded) throw;
    }
  });
  return std::move(tally).done();
}

CheckResult check_ps(int max_n, std::uint64_t cap, const Backends& b) {
  Tally tally("ps");
  const int max_len = std::min(max_n, 5);
  for (int N = 0; N <= max_len; ++N) {
    Seq u(static_cast<std::size_t>(N), 1);
    auto rec = [&](auto&& self, int i, int lo) -> void {
      if (i == N) {
        const Count sum = b.upf_sum(u, cap);
        const Count gon = b.upf_goncarov(u, cap);
        const Count brute = b.upf_brute(u, cap);
        tally.expect(sum == gon && sum == brute, [&] {
          return "u=" + format_list(u) + ": sum " + sum.str() + ", goncarov " + gon.str() +
                 ", brute " + brute.str();
        });
        return;
      }
      for (int x = lo; x <= 6; ++x) {
        u[static_cast<std::size_t>(i)] = x;
        self(self, i + 1, x);
      }
    };
    rec(rec, 0, 1);
  }
  return std::move(tally).done();
}

}  // namespace

const std::vector<std::string>& identity_checks() {
  static const std::vector<std::string> names = {"prop45", "lemma46", "cor12", "eq41",   "eq42",
                                                 "thm44",  "roundtrip", "methods", "ps"};
  return names;
}

CheckResult run_identity_check(const std::string& name, int max_n, std::uint64_t cap,
                               const Backends& backends) {
  if (max_n < 0 || max_n > 16)
    throw Error(ErrorKind::ParameterOutOfRange, "--max-n must lie in [0, 16]");
  if (name == "prop45") return check_shift_sum(max_n);
  if (name == "lemma46") return check_tree_identity(max_n);
  if (name == "cor12") return check_block_formula(max_n, cap, backends);
  if (name == "eq41") return check_single_formula(max_n, cap, backends);
  if (name == "eq42") return check_initial_block_formula(max_n, cap, backends);
  if (name == "thm44") return check_split_image(max_n, cap);
  if (name == "roundtrip") return check_roundtrip();
  if (name == "methods") return check_methods(max_n, cap, backends);
  if (name == "ps") return check_ps(max_n, cap, backends);
  throw Error(ErrorKind::ParameterOutOfRange, "unknown identity check '" + name + "'");
}

}  // namespace parkcomp::cli

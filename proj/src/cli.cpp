#include "parkcomp/cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "parkcomp/error.hpp"
#include "parkcomp/formulas.hpp"
#include "parkcomp/joinsplit.hpp"
#include "parkcomp/lattice.hpp"
#include "parkcomp/pitman_stanley.hpp"
#include "parkcomp/signature.hpp"

namespace parkcomp::cli {

using json = nlohmann::ordered_json;

namespace {

struct Options {
  std::string format = "plain";
  std::optional<std::uint64_t> cap;

  int n = -1;
  std::string taken;
  bool increasing = false;
  std::string method = "formula";

  std::vector<std::string> prefs;
  std::string prefs_file;

  std::string seq;
  std::string blocks;
  std::optional<int> width;

  std::string sig_action;
  std::string s;
  bool labeled = false;

  std::string ps_action;
  std::string u;
  std::string x;

  std::vector<std::string> checks;
  int max_n = 8;
};

std::uint64_t effective_cap(const Options& o) { return o.cap.value_or(cap_from_environment()); }

bool json_out(const Options& o) { return o.format == "json"; }

TakenSpots instance_from(const Options& o) {
  if (o.n < 0) throw Error(ErrorKind::ParameterOutOfRange, "--n is required");
  return make_instance(o.n, parse_list(o.taken));
}

json query_of(const TakenSpots& inst, bool increasing) {
  return json{{"n", inst.n()}, {"taken", inst.taken()}, {"increasing", increasing}};
}

json terms_json(const std::vector<Term>& terms) {
  json arr = json::array();
  for (const auto& t : terms) arr.push_back(t.value.str());
  return arr;
}

void emit(std::ostream& out, const Options& o, const json& doc, const std::string& plain) {
  if (json_out(o))
    out << doc.dump() << '\n';
  else
    out << plain;
}

// Runs each named backend; brute-force routes over the cap are skipped.
struct MethodRun {
  std::vector<std::pair<std::string, Count>> values;
  std::vector<std::string> skipped;
};

MethodRun run_methods(const std::vector<std::pair<std::string, std::function<Count()>>>& routes,
                      const std::string& selected) {
  MethodRun run;
  bool known = false;
  for (const auto& [name, fn] : routes) {
    if (selected != "all" && selected != name) continue;
    known = true;
    try {
      run.values.emplace_back(name, fn());
    } catch (const Error& e) {
      if (selected == "all" && e.kind() == ErrorKind::CapExceeded)
        run.skipped.push_back(name);
      else
        throw;
    }
  }
  if (!known) {
    std::string names;
    for (const auto& r : routes) names += (names.empty() ? "" : "|") + r.first;
    throw Error(ErrorKind::ParameterOutOfRange,
                "method '" + selected + "' not applicable here; choose " + names + "|all");
  }
  return run;
}

json method_report(const MethodRun& run, bool& agree) {
  json methods = json::object();
  agree = true;
  for (const auto& [name, value] : run.values) {
    methods[name] = value.str();
    if (value != run.values.front().second) agree = false;
  }
  return methods;
}

int cmd_count(const Options& o, const Backends& b, std::ostream& out, std::ostream& err) {
  const auto inst = instance_from(o);
  const auto cap = effective_cap(o);
  std::vector<std::pair<std::string, std::function<Count()>>> routes;
  if (o.increasing) {
    routes = {{"formula", [&] { return b.ipc_formula(inst, cap); }},
              {"det", [&] { return b.ipc_det(inst, cap); }},
              {"dp", [&] { return b.ipc_dp(inst, cap); }},
              {"brute", [&] { return b.ipc_brute(inst, cap); }}};
  } else {
    routes = {{"formula", [&] { return b.pc_formula(inst, cap); }},
              {"brute", [&] { return b.pc_brute(inst, cap); }}};
  }
  const MethodRun run = run_methods(routes, o.method);
  bool agree = true;
  json methods = method_report(run, agree);

  json doc{{"query", query_of(inst, o.increasing)},
           {"method", o.method},
           {"value", run.values.front().second.str()}};
  if (o.method == "formula" || o.method == "all")
    doc["terms"] = terms_json(o.increasing ? count_ipc_terms(inst) : count_pc_terms(inst));
  if (o.method == "all") {
    doc["methods"] = methods;
    if (!run.skipped.empty()) doc["skipped"] = run.skipped;
    for (const auto& name : run.skipped) err << "note: " << name << " skipped (over cap)\n";
  }
  if (!agree) {
    err << "methods disagree: " << methods.dump() << '\n';
    doc["agree"] = false;
    emit(out, o, doc, "");
    return kExitDisagreement;
  }
  emit(out, o, doc, run.values.front().second.str() + "\n");
  return kExitOk;
}

int cmd_enumerate(const Options& o, std::ostream& out) {
  const auto inst = instance_from(o);
  const auto cap = effective_cap(o);
  std::vector<Seq> found;
  auto collect = [&](std::span<const int> c) { found.emplace_back(c.begin(), c.end()); };
  Count total = o.increasing ? enumerate_paths(ferrers_of_unoccupied(unoccupied(inst)), cap, collect)
                             : brute_force_pc(inst, cap, collect);
  std::string plain;
  for (const auto& c : found) plain += format_list(c) + "\n";
  json doc{{"query", query_of(inst, o.increasing)},
           {"method", o.increasing ? "dp" : "brute"},
           {"value", total.str()},
           {"sequences", found}};
  emit(out, o, doc, plain);
  return kExitOk;
}

std::vector<Seq> read_prefs_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::ParameterOutOfRange, "cannot open '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  const std::string text = buf.str();
  std::vector<Seq> out;
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && text[first] == '{') {
    const json doc = json::parse(text, nullptr, false);
    if (doc.is_discarded() || !doc.contains("sequences"))
      throw Error(ErrorKind::ParameterOutOfRange, "'" + path + "' is not enumerate JSON output");
    for (const auto& s : doc["sequences"]) out.push_back(s.get<Seq>());
    return out;
  }
  std::istringstream lines(text);
  std::string line;
  while (std::getline(lines, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    out.push_back(parse_list(line));
  }
  return out;
}

int cmd_verify(const Options& o, std::ostream& out, std::ostream& err) {
  const auto inst = instance_from(o);
  std::vector<Seq> all;
  for (const auto& p : o.prefs) all.push_back(parse_list(p));
  if (!o.prefs_file.empty()) {
    auto more = read_prefs_file(o.prefs_file);
    all.insert(all.end(), more.begin(), more.end());
  }
  if (all.empty()) throw Error(ErrorKind::ParameterOutOfRange, "give --prefs or --prefs-file");

  json results = json::array();
  std::string plain;
  std::uint64_t accepted = 0;
  for (const auto& c : all) {
    const ParkingOutcome sim = simulate_parking(inst, c);
    const bool pc = is_parking_completion(inst, c);
    if (pc != sim.success) {
      err << "predicate and simulation disagree on " << format_list(c) << '\n';
      return kExitDisagreement;
    }
    const bool ok = o.increasing ? is_increasing_parking_completion(inst, c) : pc;
    accepted += ok ? 1 : 0;
    json r{{"prefs", c}, {"accepted", ok}};
    std::string line = format_list(c) + ": " + (ok ? "accept" : "reject");
    if (sim.success) {
      r["assignment"] = *sim.assignment;
    } else {
      r["failed_car"] = *sim.failed_car;
      line += " (car " + std::to_string(*sim.failed_car) + " cannot park)";
    }
    results.push_back(std::move(r));
    plain += line + "\n";
  }
  json doc{{"query", query_of(inst, o.increasing)},
           {"method", "verify"},
           {"value", std::to_string(accepted)},
           {"results", results}};
  emit(out, o, doc, plain);
  return kExitOk;
}

json blocks_json(const PFList& a) { return json(a.blocks); }

int cmd_split(const Options& o, std::ostream& out) {
  const Seq p = parse_list(o.seq);
  const PFList a = split(p);
  const std::string text = format_blocks(a);
  emit(out, o, json{{"query", {{"seq", p}}}, {"method", "split"}, {"value", text}, {"blocks", blocks_json(a)}},
       text + "\n");
  return kExitOk;
}

int cmd_join(const Options& o, std::ostream& out) {
  const PFList a = parse_blocks(o.blocks);
  const Seq p = join(a);
  const std::string text = format_list(p);
  emit(out, o, json{{"query", {{"blocks", blocks_json(a)}}}, {"method", "join"}, {"value", text}, {"seq", p}},
       text + "\n");
  return kExitOk;
}

int cmd_signature(const Options& o, std::ostream& out) {
  if (o.sig_action == "from-instance") {
    const auto inst = instance_from(o);
    const Signature s = instance_to_signature(inst);
    const std::string text = format_list(s);
    emit(out, o, json{{"query", query_of(inst, false)}, {"method", "from-instance"}, {"value", text}, {"signature", s}},
         text + "\n");
    return kExitOk;
  }
  const Signature s = make_signature(parse_list(o.s));
  if (o.sig_action == "to-instance") {
    const auto inst = signature_to_instance(s);
    const std::string text = "n=" + std::to_string(inst.n()) + " taken=" + format_list(inst.taken());
    emit(out, o,
         json{{"query", {{"signature", s}}},
              {"method", "to-instance"},
              {"value", text},
              {"n", inst.n()},
              {"taken", inst.taken()}},
         text + "\n");
    return kExitOk;
  }
  // count
  const Count v = o.labeled ? count_signature_pf(s) : count_signature_dyck(s);
  emit(out, o,
       json{{"query", {{"signature", s}, {"labeled", o.labeled}}},
            {"method", o.labeled ? "pc-formula" : "dp"},
            {"value", v.str()}},
       v.str() + "\n");
  return kExitOk;
}

int cmd_ps(const Options& o, const Backends& b, std::ostream& out, std::ostream& err) {
  const auto cap = effective_cap(o);
  if (o.ps_action == "volume") {
    const std::vector<int> x = o.x.empty() ? delta(make_uvector(parse_list(o.u))) : parse_list(o.x);
    const Ratio vol = polytope_volume(x);
    emit(out, o, json{{"query", {{"x", x}}}, {"method", "volume"}, {"value", vol.str()}}, vol.str() + "\n");
    return kExitOk;
  }
  const Seq u = make_uvector(parse_list(o.u));
  const json query{{"u", u}};
  if (o.ps_action == "enumerate") {
    std::vector<Seq> found;
    const Count total = enumerate_upf(u, cap, [&](std::span<const int> c) { found.emplace_back(c.begin(), c.end()); });
    std::string plain;
    for (const auto& c : found) plain += format_list(c) + "\n";
    emit(out, o, json{{"query", query}, {"method", "brute"}, {"value", total.str()}, {"sequences", found}}, plain);
    return kExitOk;
  }
  if (o.ps_action == "goncarov") {
    const Ratio raw = goncarov_determinant(u);
    const Count v = b.upf_goncarov(u, cap);
    emit(out, o,
         json{{"query", query}, {"method", "goncarov"}, {"value", v.str()}, {"determinant", raw.str()}},
         v.str() + "\n");
    return kExitOk;
  }
  // count
  std::string method = o.method == "formula" ? "sum" : o.method;
  const MethodRun run = run_methods({{"sum", [&] { return b.upf_sum(u, cap); }},
                                     {"goncarov", [&] { return b.upf_goncarov(u, cap); }},
                                     {"brute", [&] { return b.upf_brute(u, cap); }}},
                                    method);
  bool agree = true;
  json methods = method_report(run, agree);
  json doc{{"query", query}, {"method", method}, {"value", run.values.front().second.str()}};
  if (method == "sum" || method == "all") doc["terms"] = terms_json(count_upf_sum_terms(u));
  if (method == "all") doc["methods"] = methods;
  if (!agree) {
    err << "methods disagree: " << methods.dump() << '\n';
    doc["agree"] = false;
    emit(out, o, doc, "");
    return kExitDisagreement;
  }
  emit(out, o, doc, run.values.front().second.str() + "\n");
  return kExitOk;
}

int cmd_identities(const Options& o, const Backends& b, std::ostream& out) {
  const auto cap = effective_cap(o);
  const std::vector<std::string> names = o.checks.empty() ? identity_checks() : o.checks;
  json results = json::array();
  std::string plain;
  bool all_ok = true;
  for (const auto& name : names) {
    const CheckResult r = run_identity_check(name, o.max_n, cap, b);
    all_ok = all_ok && r.passed();
    json jr{{"check", r.name}, {"passed", r.passed()}, {"cases", r.cases}, {"failures", r.failures}};
    std::string line = (r.passed() ? "PASS " : "FAIL ") + r.name + " cases=" + std::to_string(r.cases);
    if (!r.passed()) {
      jr["first_failure"] = r.first_failure;
      line += " failures=" + std::to_string(r.failures) + " first: " + r.first_failure;
    }
    results.push_back(std::move(jr));
    plain += line + "\n";
  }
  emit(out, o,
       json{{"query", {{"checks", names}, {"max_n", o.max_n}}},
            {"method", "identities"},
            {"value", all_ok ? "pass" : "fail"},
            {"results", results}},
       plain);
  return all_ok ? kExitOk : kExitDisagreement;
}

int cmd_render(const Options& o, std::ostream& out) {
  LatticePath path;
  if (!o.seq.empty())
    path = path_from_sequence(parse_list(o.seq), o.width);
  else
    path = path_from_sequence(unoccupied(instance_from(o)), o.width);
  const std::string pic = render(path);
  emit(out, o, json{{"query", {{"up_xs", path.up_xs}, {"width", path.width}}}, {"method", "render"}, {"value", pic}},
       pic);
  return kExitOk;
}

void add_common(CLI::App* sub, Options& o) {
  sub->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"plain", "json"}));
  sub->add_option("--cap", o.cap, "Brute-force scan limit (overrides PARKCOMP_CAP)");
}

void add_instance(CLI::App* sub, Options& o, bool required) {
  auto* n = sub->add_option("--n", o.n, "Street size");
  if (required) n->required();
  sub->add_option("--taken", o.taken, "Taken spots, comma separated");
}

}  // namespace

Backends default_backends() {
  Backends b;
  b.pc_formula = [](const TakenSpots& i, std::uint64_t) { return count_pc(i); };
  b.pc_brute = [](const TakenSpots& i, std::uint64_t cap) { return brute_force_pc(i, cap); };
  b.ipc_formula = [](const TakenSpots& i, std::uint64_t) { return count_ipc(i); };
  b.ipc_det = [](const TakenSpots& i, std::uint64_t) { return count_ipc_determinant(i); };
  b.ipc_dp = [](const TakenSpots& i, std::uint64_t) {
    return count_paths_dp(ferrers_of_unoccupied(unoccupied(i)));
  };
  b.ipc_brute = [](const TakenSpots& i, std::uint64_t cap) { return brute_force_ipc(i, cap); };
  b.upf_sum = [](std::span<const int> u, std::uint64_t) { return count_upf_sum(u); };
  b.upf_goncarov = [](std::span<const int> u, std::uint64_t) { return count_upf_goncarov(u); };
  b.upf_brute = [](std::span<const int> u, std::uint64_t cap) { return enumerate_upf(u, cap); };
  return b;
}

std::uint64_t cap_from_environment() {
  const char* env = std::getenv("PARKCOMP_CAP");
  if (env == nullptr || *env == '\0') return kDefaultCap;
  try {
    std::size_t used = 0;
    const unsigned long long v = std::stoull(env, &used);
    if (used == std::string(env).size()) return v;
  } catch (const std::exception&) {
  }
  return kDefaultCap;
}

std::vector<int> parse_list(const std::string& text) {
  std::vector<int> out;
  if (text.empty()) return out;
  std::stringstream ss(text);
  std::string item;
  std::size_t commas = std::count(text.begin(), text.end(), ',');
  while (std::getline(ss, item, ',')) {
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(item, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != item.size())
      throw Error(ErrorKind::ParameterOutOfRange, "bad list entry '" + item + "' in '" + text + "'");
    out.push_back(v);
  }
  if (out.size() != commas + 1)
    throw Error(ErrorKind::ParameterOutOfRange, "empty list entry in '" + text + "'");
  return out;
}

std::string format_list(std::span<const int> values) {
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i > 0) out += ',';
    out += std::to_string(values[i]);
  }
  return out;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
        const Backends& backends) {
  Options o;
  CLI::App app{"Exact counting of parking completions and related objects", "parkcomp"};
  app.require_subcommand(1);

  auto* count = app.add_subcommand("count", "Count (increasing) parking completions");
  add_instance(count, o, true);
  add_common(count, o);
  count->add_flag("--increasing", o.increasing, "Count weakly increasing completions");
  count->add_option("--method", o.method, "formula|det|dp|brute|all");

  auto* enumerate = app.add_subcommand("enumerate", "List completions in lexicographic order");
  add_instance(enumerate, o, true);
  add_common(enumerate, o);
  enumerate->add_flag("--increasing", o.increasing, "Only weakly increasing completions");

  auto* verify = app.add_subcommand("verify", "Check preference sequences against an instance");
  add_instance(verify, o, true);
  add_common(verify, o);
  verify->add_flag("--increasing", o.increasing, "Require weakly increasing completions");
  verify->add_option("--prefs", o.prefs, "Preference list (repeatable)");
  verify->add_option("--prefs-file", o.prefs_file, "File of sequences (enumerate output)");

  auto* split_cmd = app.add_subcommand("split", "Split a weakly increasing sequence");
  add_common(split_cmd, o);
  split_cmd->add_option("--seq", o.seq, "Sequence, comma separated")->required();

  auto* join_cmd = app.add_subcommand("join", "Join a list of increasing parking functions");
  add_common(join_cmd, o);
  join_cmd->add_option("--blocks", o.blocks, "Blocks separated by ';'")->required();

  auto* sig = app.add_subcommand("signature", "Signature Dyck paths and parking functions");
  add_common(sig, o);
  sig->add_option("action", o.sig_action, "count|to-instance|from-instance")
      ->required()
      ->check(CLI::IsMember({"count", "to-instance", "from-instance"}));
  sig->add_option("--s", o.s, "Signature, comma separated");
  sig->add_flag("--labeled", o.labeled, "Count signature parking functions");
  add_instance(sig, o, false);

  auto* ps = app.add_subcommand("ps", "u-parking functions and Pitman-Stanley volumes");
  add_common(ps, o);
  ps->add_option("action", o.ps_action, "count|volume|goncarov|enumerate")
      ->required()
      ->check(CLI::IsMember({"count", "volume", "goncarov", "enumerate"}));
  ps->add_option("--u", o.u, "Weakly increasing bound vector");
  ps->add_option("--x", o.x, "Increment vector (volume only)");
  ps->add_option("--method", o.method, "sum|goncarov|brute|all (count only)");

  auto* ids = app.add_subcommand("identities", "Batch-check the counting identities");
  add_common(ids, o);
  ids->add_option("--check", o.checks, "Check name (repeatable); default all")
      ->check(CLI::IsMember(identity_checks()));
  ids->add_option("--max-n", o.max_n, "Largest street size to sweep");

  auto* rnd = app.add_subcommand("render", "ASCII picture of a lattice path");
  add_common(rnd, o);
  rnd->add_option("--seq", o.seq, "Up-step abscissae");
  rnd->add_option("--width", o.width, "Grid width");
  add_instance(rnd, o, false);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitInvalidInput;
  }

  try {
    if (count->parsed()) return cmd_count(o, backends, out, err);
    if (enumerate->parsed()) return cmd_enumerate(o, out);
    if (verify->parsed()) return cmd_verify(o, out, err);
    if (split_cmd->parsed()) return cmd_split(o, out);
    if (join_cmd->parsed()) return cmd_join(o, out);
    if (sig->parsed()) return cmd_signature(o, out);
    if (ps->parsed()) return cmd_ps(o, backends, out, err);
    if (ids->parsed()) return cmd_identities(o, backends, out);
    if (rnd->parsed()) return cmd_render(o, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return e.kind() == ErrorKind::InternalInconsistency ? kExitDisagreement : kExitInvalidInput;
  }
  return kExitInvalidInput;
}

}  // namespace parkcomp::cli

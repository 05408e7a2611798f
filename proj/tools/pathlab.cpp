// pathlab command-line interface.
//
// Exit codes: 0 success or all checks pass, 1 a check or computation
// fails, 2 usage or input error.

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "pathlab/pathlab.hpp"

namespace {

using namespace pathlab;
using nlohmann::json;

constexpr int kFailure = 1;
constexpr int kUsage = 2;

// Input errors are reported as usage errors.
struct InputError {
  std::string message;
};

DecoratedLabeledPath read_path(const std::string& text) {
  try {
    return parse_path(text);
  } catch (const Error& e) {
    throw InputError{e.what()};
  }
}

DecoratedPermutation read_permutation(const std::string& text) {
  try {
    return parse_permutation(text);
  } catch (const Error& e) {
    throw InputError{e.what()};
  }
}

bool looks_like_path(const std::string& text) { return text.find(':') != std::string::npos; }

std::string join(const std::vector<int>& v, const char* sep = " ") {
  std::string out;
  for (size_t i = 0; i < v.size(); ++i) {
    if (i) out += sep;
    out += std::to_string(v[i]);
  }
  return out;
}

std::string runs_text(const DecoratedPermutation& w) {
  std::string out;
  for (const auto& r : decreasing_runs(w)) {
    if (!out.empty()) out += ' ';
    out += '[';
    for (int p = r.begin; p < r.end; ++p) {
      if (p > r.begin) out += ' ';
      out += std::to_string(w.at(p + 1));
      if (w.decorated(p + 1)) out += '*';
    }
    out += ']';
  }
  return out;
}

std::string shifts_text(const std::vector<int>& shifts) { return "{" + join(shifts, ",") + "}"; }

int resolve_jobs(int flag) {
  if (flag > 0) return flag;
  if (const char* env = std::getenv("PATHLAB_JOBS")) {
    try {
      const int v = std::stoi(env);
      if (v > 0) return v;
    } catch (const std::exception&) {
    }
    throw InputError{"PATHLAB_JOBS must be a positive integer"};
  }
  return 1;
}

int cmd_table(int n, const std::string& stat, const std::string& method, const std::string& format, int jobs) {
  if (stat == "D" && method == "recursive") throw InputError{"--method recursive is only defined for --stat S"};
  std::vector<TPolynomial> rows;
  if (method == "fast") {
    rows = stat == "S" ? S_fast_table(n, jobs) : D_fast_table(n, jobs);
  } else {
    for (int k = 0; k < n; ++k) {
      if (method == "brute")
        rows.push_back(stat == "S" ? S_brute(n, k, jobs) : D_brute(n, k, jobs));
      else
        rows.push_back(S_recursive(n, k, jobs));
    }
  }
  if (format == "json") {
    json out{{"n", n}, {"stat", stat}, {"rows", json::array()}};
    for (int k = 0; k < n; ++k) out["rows"].push_back({{"k", k}, {"poly", rows[static_cast<size_t>(k)]}});
    std::cout << out.dump() << "\n";
  } else {
    for (int k = 0; k < n; ++k)
      std::cout << stat << "_{" << n << "," << k << "} = " << rows[static_cast<size_t>(k)] << "\n";
  }
  return 0;
}

int cmd_verify(const std::string& id, std::optional<int> max_n, const std::string& format, int jobs) {
  std::vector<std::string> ids;
  if (id == "all") {
    ids = check_ids();
  } else {
    try {
      default_max_n(id);
    } catch (const Error&) {
      throw InputError{"unknown check id '" + id + "'"};
    }
    ids.push_back(id);
  }
  bool ok = true;
  for (const auto& cid : ids) {
    for (const auto& r : run_check(cid, max_n.value_or(default_max_n(cid)), jobs)) {
      ok = ok && r.pass;
      if (format == "json") {
        std::cout << json(r).dump() << "\n";
      } else {
        std::cout << r.check_id << " n=" << r.params["n"].get<int>() << ": " << (r.pass ? "pass" : "FAIL");
        if (r.witness) std::cout << " -- " << *r.witness;
        std::cout << "\n";
      }
      std::cerr << r.check_id << " n=" << r.params["n"].get<int>() << " elapsed " << r.elapsed_seconds << "s\n";
    }
  }
  return ok ? 0 : kFailure;
}

void print_cycle(const DecoratedLabeledPath& p) {
  const auto cycle = cutting_cycle(p);
  auto members = cycle.members;
  std::stable_sort(members.begin(), members.end(), [](const auto& a, const auto& b) { return dinv(a) < dinv(b); });
  for (const auto& m : members) {
    std::cout << to_text(m) << "  dinv=" << dinv(m) << " area=" << area(m);
    if (m == cycle.canonical) std::cout << " canonical";
    if (is_standard(m) && all_ones(sched(m))) std::cout << " sched1";
    std::cout << "\n";
  }
}

void inspect_path(const DecoratedLabeledPath& p) {
  std::cout << "path: " << to_text(p) << "\n";
  std::cout << "area word: " << join(area_word(p)) << "\n";
  std::cout << "shift: " << shift(p) << "\n";
  std::cout << "area: " << area(p) << "\n";
  std::cout << "contractible valleys: " << shifts_text(contractible_valleys(p)) << "\n";
  std::cout << "attack pairs:";
  for (const auto& ap : attack_pairs(p))
    std::cout << " (" << ap.i << "," << ap.j << (ap.kind == AttackKind::Primary ? ",primary)" : ",secondary)");
  std::cout << "\n";
  std::cout << "dinv: " << dinv(p) << "\n";
  if (p.size() == 0) return;
  if (is_standard(p)) {
    const auto sdw = diagonal_word(p);
    std::cout << "diagonal word: " << to_text(sdw.word) << " (shift " << sdw.shift << ")\n";
    std::cout << "schedule word: " << join(schedule_numbers(sdw)) << "\n";
  }
  const auto cycle = cutting_cycle(p);
  std::cout << "cutting cycle: " << cycle.members.size() << " members, canonical " << to_text(cycle.canonical)
            << " (dinv " << dinv(cycle.canonical) << ")\n";
}

void inspect_permutation(const DecoratedPermutation& w) {
  const auto wit = is_adr(w);
  std::cout << "word: " << to_text(w) << "\n";
  std::cout << "runs: " << runs_text(w) << "\n";
  std::cout << "revmaj: " << revmaj(w) << "\n";
  std::cout << "valid shifts: " << shifts_text(wit.valid_shifts) << "\n";
  std::cout << "dyck decoration: " << to_text(dyck_decorate(w)) << "\n";
  std::cout << "parity decoration: " << to_text(parity_decorate(w)) << "\n";
}

int cmd_inspect(const std::string& object) {
  if (looks_like_path(object))
    inspect_path(read_path(object));
  else
    inspect_permutation(read_permutation(object));
  return 0;
}

int cmd_cycle(const std::string& object) {
  print_cycle(read_path(object));
  return 0;
}

int cmd_build(const std::string& word, int s) {
  const auto w = read_permutation(word);
  try {
    std::cout << to_text(path_from_sdw(w, s)) << "\n";
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::ScheduleNotOne) throw;
    throw InputError{e.what()};
  }
  return 0;
}

int cmd_decorate(const std::string& word, const std::string& mode) {
  const auto w = read_permutation(word);
  const auto d = mode == "dyck" ? dyck_decorate(w) : parity_decorate(w);
  std::cout << "decorated: " << to_text(d) << "\n";
  std::cout << "valid shifts: " << shifts_text(is_adr(d).valid_shifts) << "\n";
  std::cout << "revmaj: " << revmaj(d) << "\n";
  return 0;
}

int cmd_sched(const std::string& object) {
  DecoratedPermutation w;
  std::optional<int> own_shift;
  if (looks_like_path(object)) {
    const auto p = read_path(object);
    if (!is_standard(p)) throw InputError{"schedule words need a standard labeling"};
    const auto sdw = diagonal_word(p);
    w = sdw.word;
    own_shift = sdw.shift;
  } else {
    w = read_permutation(object);
  }
  std::cout << "word: " << to_text(w) << "\n";
  std::cout << "runs: " << runs_text(w) << "\n";
  const int runs = static_cast<int>(decreasing_runs(w).size());
  for (int s = 0; s < runs; ++s) {
    std::cout << "shift " << s << ": " << join(schedule_numbers({w, s}));
    if (own_shift && *own_shift == s) std::cout << "  <- path";
    std::cout << "\n";
  }
  if (own_shift && *own_shift >= runs) std::cout << "shift " << *own_shift << ": all zero  <- path\n";
  return 0;
}

int cmd_enumerate(int n, int k, const std::string& kind, const std::string& format) {
  const PathFamily family{n, k, kind == "dyck" ? PathKind::Dyck : PathKind::Square};
  if (format == "json") {
    json out{{"n", n}, {"k", k}, {"kind", kind}, {"paths", json::array()}};
    for_each_path(family, [&](const DecoratedLabeledPath& p) { out["paths"].push_back(to_text(p)); });
    std::cout << out.dump() << "\n";
  } else {
    for_each_path(family, [](const DecoratedLabeledPath& p) { std::cout << to_text(p) << "\n"; });
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Decorated square paths at q = -1: statistics, cutting cycles, ADRs and enumerators"};
  app.require_subcommand(1);
  int jobs_flag = 0;
  app.fallthrough();
  app.add_option("--jobs", jobs_flag, "Worker threads (fallback: PATHLAB_JOBS, then 1)")->check(CLI::PositiveNumber);

  const std::vector<std::string> formats{"text", "json"};

  auto* table = app.add_subcommand("table", "Print S_{n,k} or D_{n,k} for k = 0..n-1");
  int table_n = 0;
  std::string stat = "S", method = "brute", table_format = "text";
  table->add_option("--n", table_n, "Size")->required()->check(CLI::Range(1, 12));
  table->add_option("--stat", stat, "S or D")->check(CLI::IsMember({"S", "D"}));
  table->add_option("--method", method, "brute, fast or recursive")->check(CLI::IsMember({"brute", "fast", "recursive"}));
  table->add_option("--format", table_format, "text or json")->check(CLI::IsMember(formats));

  auto* verify = app.add_subcommand("verify", "Run a verification suite (or 'all')");
  std::string check_id;
  std::optional<int> max_n;
  std::string verify_format = "text";
  verify->add_option("check", check_id, "Check id")->required();
  verify->add_option("--max-n", max_n, "Largest size to check")->check(CLI::Range(1, 12));
  verify->add_option("--format", verify_format, "text or json")->check(CLI::IsMember(formats));

  auto* inspect = app.add_subcommand("inspect", "Describe a path or decorated permutation");
  std::string inspect_obj;
  inspect->add_option("object", inspect_obj, "Path <steps>:<labels>:<decorations> or permutation like '7* 8 4 2'")->required();

  auto* cycle = app.add_subcommand("cycle", "List the cutting cycle of a path");
  std::string cycle_obj;
  cycle->add_option("path", cycle_obj, "Path in canonical text format")->required();

  auto* build = app.add_subcommand("build", "Build the schedule-one path of a shifted diagonal word");
  std::string build_word;
  int build_shift = 0;
  build->add_option("word", build_word, "Decorated permutation")->required();
  build->add_option("--shift", build_shift, "Shift")->required()->check(CLI::NonNegativeNumber);

  auto* decorate = app.add_subcommand("decorate", "Run a decorating algorithm on a permutation");
  std::string decorate_word, mode = "dyck";
  decorate->add_option("word", decorate_word, "Permutation")->required();
  decorate->add_option("--mode", mode, "dyck or parity")->check(CLI::IsMember({"dyck", "parity"}));

  auto* schedc = app.add_subcommand("sched", "Runs and schedule words for every shift");
  std::string sched_obj;
  schedc->add_option("object", sched_obj, "Decorated permutation or standard path")->required();

  auto* enumerate = app.add_subcommand("enumerate", "List every path of a family");
  int en_n = 0, en_k = 0;
  std::string kind = "square", en_format = "text";
  enumerate->add_option("--n", en_n, "Size")->required()->check(CLI::Range(1, 10));
  enumerate->add_option("--k", en_k, "Decorations")->required()->check(CLI::NonNegativeNumber);
  enumerate->add_option("--kind", kind, "dyck or square")->check(CLI::IsMember({"dyck", "square"}));
  enumerate->add_option("--format", en_format, "text or json")->check(CLI::IsMember(formats));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    const int jobs = resolve_jobs(jobs_flag);
    if (*table) return cmd_table(table_n, stat, method, table_format, jobs);
    if (*verify) return cmd_verify(check_id, max_n, verify_format, jobs);
    if (*inspect) return cmd_inspect(inspect_obj);
    if (*cycle) return cmd_cycle(cycle_obj);
    if (*build) return cmd_build(build_word, build_shift);
    if (*decorate) return cmd_decorate(decorate_word, mode);
    if (*schedc) return cmd_sched(sched_obj);
    if (*enumerate) return cmd_enumerate(en_n, en_k, kind, en_format);
  } catch (const InputError& e) {
    std::cerr << "error: " << e.message << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kFailure;
  }
  return kUsage;
}

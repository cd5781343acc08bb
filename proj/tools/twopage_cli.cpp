// Command-line front end for the twopage library: generation, verification,
// canonicalization, rendering, and the exhaustive searches.
//
// Exit codes: 0 success, 1 validation failure, 2 bad usage, 3 I/O failure.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "twopage/analysis.hpp"
#include "twopage/construct.hpp"
#include "twopage/counting.hpp"
#include "twopage/drawing.hpp"
#include "twopage/enumerate.hpp"
#include "twopage/transform.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitValidation = 1;
constexpr int kExitUsage = 2;
constexpr int kExitIo = 3;

struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  if (in.bad()) throw IoError("cannot read " + path);
  return buf.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot open " + path + " for writing");
  out << content;
  if (!out) throw IoError("cannot write " + path);
}

twopage::Drawing load_drawing(const std::string& path) {
  return twopage::parse_drawing(read_file(path));
}

void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty())
    std::cout << text;
  else
    write_file(out_path, text);
}

int cmd_z(int n, bool kv) {
  if (kv)
    std::cout << "z " << twopage::z_number(n) << "\n";
  else
    std::cout << twopage::z_number(n) << "\n";
  return kExitOk;
}

int cmd_crossings(const std::string& file, const std::string& method, bool kv) {
  twopage::Drawing d = load_drawing(file);
  std::uint64_t value = 0;
  if (method == "direct")
    value = twopage::crossings_direct(d);
  else if (method == "kedges")
    value = twopage::crossings_via_kedges(d);
  else
    value = twopage::crossings_via_leqleq(d);
  if (kv)
    std::cout << "crossings " << value << "\n";
  else
    std::cout << value << "\n";
  return kExitOk;
}

int cmd_profile(const std::string& file) {
  twopage::Drawing d = load_drawing(file);
  twopage::KEdgeProfile p = twopage::k_edge_profile(d);
  std::cout << "n " << d.n() << "\n";
  std::cout << "k e e_leq e_leqleq\n";
  for (std::size_t k = 0; k < p.e.size(); ++k)
    std::cout << k << " " << p.e[k] << " " << p.e_leq[k] << " "
              << p.e_leqleq[k] << "\n";
  return kExitOk;
}

int cmd_verify(const std::string& file) {
  twopage::Drawing d = load_drawing(file);
  std::uint64_t direct = twopage::crossings_direct(d);
  std::uint64_t via_k = twopage::crossings_via_kedges(d);
  std::uint64_t via_ll = twopage::crossings_via_leqleq(d);
  twopage::K4Census census = twopage::k4_census(d);

  std::uint64_t n = d.n();
  std::uint64_t quadruples = n * (n - 1) * (n - 2) * (n - 3) / 24;
  twopage::KEdgeProfile p = twopage::k_edge_profile(d);
  std::uint64_t from_profile = 0;
  for (std::size_t k = 0; k < p.e.size(); ++k)
    from_profile += k * (n - 2 - k) * p.e[k];
  std::uint64_t from_types = 3 * census.type_a + 2 * (census.type_b + census.type_c);

  std::cout << "n " << d.n() << "\n";
  std::cout << "crossings_direct " << direct << "\n";
  std::cout << "crossings_via_kedges " << via_k << "\n";
  std::cout << "crossings_via_leqleq " << via_ll << "\n";
  std::cout << "k4_type_a " << census.type_a << "\n";
  std::cout << "k4_crossing " << census.type_b + census.type_c << "\n";
  std::cout << "k4_total " << census.total() << "\n";
  std::cout << "quadruples " << quadruples << "\n";
  std::cout << "separations " << census.separations << "\n";
  std::cout << "separations_from_types " << from_types << "\n";
  std::cout << "separations_from_profile " << from_profile << "\n";

  bool ok = direct == via_k && direct == via_ll &&
            direct == census.type_b + census.type_c &&
            census.total() == quadruples && census.separations == from_types &&
            census.separations == from_profile;
  std::cout << "status " << (ok ? "OK" : "FAIL") << "\n";
  return ok ? kExitOk : kExitValidation;
}

int cmd_gen(const std::string& kind, int n, const std::string& mask_str,
            std::uint64_t seed, const std::string& out_path) {
  std::optional<twopage::Drawing> d;
  if (kind == "even-opt") {
    d = twopage::even_optimal(n);
  } else if (kind == "odd-family") {
    twopage::FamilyMask mask =
        mask_str.empty()
            ? twopage::FamilyMask::from_value(0, (n - 3) / 2)
            : twopage::FamilyMask::from_string(mask_str);
    d = twopage::odd_family(n, mask);
  } else if (kind == "random") {
    d = twopage::random_drawing(n, seed);
  } else {
    throw std::invalid_argument("unknown --kind " + kind);
  }
  emit(twopage::serialize(*d), out_path);
  return kExitOk;
}

int cmd_canon(const std::string& file) {
  std::cout << twopage::canonical_key_hex(load_drawing(file)) << "\n";
  return kExitOk;
}

int cmd_equiv(const std::string& file_a, const std::string& file_b) {
  bool eq = twopage::are_equivalent(load_drawing(file_a), load_drawing(file_b));
  std::cout << (eq ? "equivalent" : "not-equivalent") << "\n";
  return eq ? kExitOk : kExitValidation;
}

int cmd_render(const std::string& file, const std::string& mode) {
  twopage::RenderMode m =
      mode == "strip" ? twopage::RenderMode::Strip : twopage::RenderMode::Matrix;
  std::cout << twopage::render(load_drawing(file), m);
  return kExitOk;
}

void print_class_report(const twopage::ClassReport& report) {
  std::cout << "n " << report.n << "\n";
  std::cout << "z " << report.z << "\n";
  std::cout << "method "
            << (report.method == twopage::EnumMethod::Brute ? "brute" : "template")
            << "\n";
  std::cout << "optimal_colorings " << report.optimal_colorings << "\n";
  std::cout << "classes " << report.classes << "\n";
  std::cerr << "elapsed_ms " << report.elapsed.count() << "\n";
}

int cmd_enumerate(int n, int jobs, bool big, const std::string& reps_dir) {
  if (n == 17 && !big)
    throw std::invalid_argument(
        "n=17 sweeps 2^30 completions; pass --big to confirm");
  twopage::ClassReport report = twopage::enumerate_optimal_classes(n, jobs);
  print_class_report(report);
  if (!reps_dir.empty()) {
    std::filesystem::create_directories(reps_dir);
    int idx = 0;
    for (const twopage::Drawing& rep : report.representatives) {
      char name[32];
      std::snprintf(name, sizeof name, "rep-%03d.2pg", idx++);
      write_file((std::filesystem::path(reps_dir) / name).string(),
                 twopage::serialize(rep));
    }
  }
  return kExitOk;
}

int cmd_mincross(int n, int jobs) {
  twopage::ClassReport report = twopage::brute_force_min(n, jobs);
  std::cout << "n " << report.n << "\n";
  std::cout << "z " << report.z << "\n";
  std::cout << "min_crossings " << report.z << "\n";
  std::cout << "method brute\n";
  std::cout << "optimal_colorings " << report.optimal_colorings << "\n";
  std::cout << "classes " << report.classes << "\n";
  std::cerr << "elapsed_ms " << report.elapsed.count() << "\n";
  return kExitOk;
}

int cmd_search(int n, int k, std::uint64_t budget, std::uint64_t seed) {
  twopage::SearchResult result = twopage::search_low_coverage(n, k, budget, seed);
  std::cout << "n " << n << "\n";
  std::cout << "k " << k << "\n";
  std::uint64_t threshold = 3 * (static_cast<std::uint64_t>(k) + 2) * (k + 1) / 2;
  std::cout << "threshold " << threshold << "\n";
  std::cout << "examined " << result.examined << "\n";
  switch (result.status) {
    case twopage::SearchResult::Status::Found: {
      twopage::KEdgeProfile p = twopage::k_edge_profile(*result.drawing);
      std::cout << "e_leq_k " << p.leq(k) << "\n";
      std::cout << "status found\n";
      std::cout << twopage::serialize(*result.drawing);
      return kExitOk;
    }
    case twopage::SearchResult::Status::NoneExist:
      std::cout << "status none_exist\n";
      return kExitValidation;
    case twopage::SearchResult::Status::BudgetExhausted:
      std::cout << "status budget_exhausted\n";
      return kExitValidation;
  }
  return kExitValidation;
}

int cmd_check(const std::string& file, bool structure, bool support,
              bool halving, bool hamcycles, bool up_to_equivalence) {
  twopage::Drawing d = load_drawing(file);
  if (!structure && !support && !halving && !hamcycles)
    structure = support = halving = hamcycles = true;

  bool all_ok = true;
  if (structure) {
    if (up_to_equivalence) {
      auto t = twopage::conforming_transform(d);
      if (t) {
        std::cout << "structure ok (a=" << t->a << " b=" << t->b
                  << " i=" << t->i << ")\n";
      } else {
        std::cout << "structure fail (no equivalent drawing conforms)\n";
        all_ok = false;
      }
    } else {
      auto violations = twopage::check_structure(d);
      if (violations.empty()) {
        std::cout << "structure ok\n";
      } else {
        std::cout << "structure fail\n";
        for (const auto& v : violations)
          std::cout << "(" << v.i << "," << v.j << ") expected "
                    << twopage::color_char(v.expected) << "\n";
        all_ok = false;
      }
    }
  }
  if (support) {
    bool ok = true;
    for (int k = 0; k <= d.n() / 2 - 2; ++k)
      if (!twopage::support_check(d, k)) {
        std::cout << "support fail k=" << k << "\n";
        ok = false;
      }
    if (ok) std::cout << "support ok\n";
    all_ok = all_ok && ok;
  }
  if (halving) {
    bool ok = twopage::halving_check(d);
    std::cout << "halving " << (ok ? "ok" : "fail") << "\n";
    all_ok = all_ok && ok;
  }
  if (hamcycles) {
    auto cycles = twopage::uncrossed_hamiltonian_cycles(d);
    std::cout << "hamcycles " << cycles.size() << "\n";
    for (const auto& cycle : cycles) {
      for (std::size_t v = 0; v < cycle.size(); ++v)
        std::cout << (v ? " " : "") << cycle[v];
      std::cout << "\n";
    }
    all_ok = all_ok && cycles.size() == 1;
  }
  return all_ok ? kExitOk : kExitValidation;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"2-page book drawings of K_n: crossing counts, k-edge "
               "profiles, symmetry classes, optimal constructions, and "
               "exhaustive enumeration"};
  app.require_subcommand(1);

  // z
  auto* z = app.add_subcommand("z", "Print Z(n)");
  int z_n = 0;
  bool z_kv = false;
  z->add_option("--n", z_n, "number of vertices")->required()->check(CLI::PositiveNumber);
  z->add_flag("--kv", z_kv, "key-value output");

  // crossings
  auto* crossings = app.add_subcommand("crossings", "Count crossings of a drawing");
  std::string cr_file, cr_method = "direct";
  bool cr_kv = false;
  crossings->add_option("file", cr_file, ".2pg drawing")->required();
  crossings->add_option("--method", cr_method, "direct|kedges|leqleq")
      ->check(CLI::IsMember({"direct", "kedges", "leqleq"}));
  crossings->add_flag("--kv", cr_kv, "key-value output");

  // profile
  auto* profile = app.add_subcommand("profile", "Print the k-edge profile");
  std::string pr_file;
  profile->add_option("file", pr_file, ".2pg drawing")->required();

  // verify
  auto* verify = app.add_subcommand(
      "verify", "Check the crossing-count identities on a drawing");
  std::string vf_file;
  verify->add_option("file", vf_file, ".2pg drawing")->required();

  // gen
  auto* gen = app.add_subcommand("gen", "Generate a drawing");
  std::string gen_kind, gen_mask, gen_out;
  int gen_n = 0;
  std::uint64_t gen_seed = 0;
  gen->add_option("--kind", gen_kind, "even-opt|odd-family|random")
      ->required()
      ->check(CLI::IsMember({"even-opt", "odd-family", "random"}));
  gen->add_option("--n", gen_n, "number of vertices")->required();
  gen->add_option("--mask", gen_mask, "bitstring for odd-family (default all 0)");
  gen->add_option("--seed", gen_seed, "seed for random");
  gen->add_option("-o,--out", gen_out, "output file (default stdout)");

  // canon
  auto* canon = app.add_subcommand("canon", "Print the canonical key (hex)");
  std::string cn_file;
  canon->add_option("file", cn_file, ".2pg drawing")->required();

  // equiv
  auto* equiv = app.add_subcommand("equiv", "Test equivalence of two drawings");
  std::string eq_a, eq_b;
  equiv->add_option("a", eq_a, "first drawing")->required();
  equiv->add_option("b", eq_b, "second drawing")->required();

  // render
  auto* render = app.add_subcommand("render", "ASCII diagram of a drawing");
  std::string rd_file, rd_mode = "matrix";
  render->add_option("file", rd_file, ".2pg drawing")->required();
  render->add_option("--mode", rd_mode, "matrix|strip")
      ->check(CLI::IsMember({"matrix", "strip"}));

  // enumerate
  auto* enumerate = app.add_subcommand(
      "enumerate", "Enumerate crossing-optimal classes (odd n, 7..17)");
  int en_n = 0, en_jobs = 1;
  bool en_big = false;
  std::string en_reps;
  enumerate->add_option("--n", en_n, "number of vertices")->required();
  enumerate->add_option("--jobs", en_jobs, "worker threads")->check(CLI::PositiveNumber);
  enumerate->add_flag("--big", en_big, "allow the 2^30 sweep at n=17");
  enumerate->add_option("--emit-reps", en_reps, "write representatives to DIR");

  // mincross
  auto* mincross = app.add_subcommand(
      "mincross", "Brute-force minimum crossings over all colorings (n <= 10)");
  int mc_n = 0, mc_jobs = 1;
  mincross->add_option("--n", mc_n, "number of vertices")->required();
  mincross->add_option("--jobs", mc_jobs, "worker threads")->check(CLI::PositiveNumber);

  // search-counterexample
  auto* search = app.add_subcommand(
      "search-counterexample",
      "Find a drawing with fewer than 3*C(k+2,2) <=k-edges");
  int sc_n = 0, sc_k = 0;
  std::uint64_t sc_budget = 10'000'000, sc_seed = 0;
  search->add_option("--n", sc_n, "number of vertices")->required();
  search->add_option("--k", sc_k, "k-edge level")->required();
  search->add_option("--budget", sc_budget, "max colorings to examine");
  search->add_option("--seed", sc_seed, "seed for the randomized phase");

  // check
  auto* check = app.add_subcommand("check", "Structural checks on a drawing");
  std::string ck_file;
  bool ck_structure = false, ck_support = false, ck_halving = false,
       ck_ham = false, ck_equiv = false;
  check->add_option("file", ck_file, ".2pg drawing")->required();
  check->add_flag("--structure", ck_structure, "optimal-structure conformance");
  check->add_flag("--support", ck_support, "<=k-edges in first rows/last columns");
  check->add_flag("--halving", ck_halving, "central halving entries");
  check->add_flag("--hamcycles", ck_ham, "uncrossed Hamiltonian cycles");
  check->add_flag("--up-to-equivalence", ck_equiv,
                  "search the orbit for a conforming drawing");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*z) return cmd_z(z_n, z_kv);
    if (*crossings) return cmd_crossings(cr_file, cr_method, cr_kv);
    if (*profile) return cmd_profile(pr_file);
    if (*verify) return cmd_verify(vf_file);
    if (*gen) return cmd_gen(gen_kind, gen_n, gen_mask, gen_seed, gen_out);
    if (*canon) return cmd_canon(cn_file);
    if (*equiv) return cmd_equiv(eq_a, eq_b);
    if (*render) return cmd_render(rd_file, rd_mode);
    if (*enumerate) return cmd_enumerate(en_n, en_jobs, en_big, en_reps);
    if (*mincross) return cmd_mincross(mc_n, mc_jobs);
    if (*search) return cmd_search(sc_n, sc_k, sc_budget, sc_seed);
    if (*check)
      return cmd_check(ck_file, ck_structure, ck_support, ck_halving, ck_ham,
                       ck_equiv);
  } catch (const IoError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitIo;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitValidation;
  }
  return kExitUsage;
}

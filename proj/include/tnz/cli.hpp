#pragma once

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "tnz/acceptance.hpp"
#include "tnz/tnz.hpp"

// Command-line front end. run() never touches std::cout or std::cerr directly so
// the tests can drive it with string streams.

namespace tnz::cli {

constexpr int kExitOk = 0;
constexpr int kExitMismatch = 1;
constexpr int kExitUsage = 2;

namespace detail {

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

inline void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw ParseError("cannot write " + path);
  out << text;
}

inline std::string csv_quote(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

inline void print_orientation(std::ostream& out, const OrientationSignMatrix& o) {
  for (int i = 1; i <= o.n(); ++i) {
    for (int j = 1; j <= o.n(); ++j) out << (j > 1 ? " " : "") << std::setw(2) << o(i, j);
    out << "\n";
  }
}

struct Options {
  // enumerate
  int n = 0;
  std::string format = "text";
  bool witness = false;
  bool allow_large = false;
  // count
  std::string what;
  int i = -1;
  std::string method = "closed-form";
  // verify
  std::string suite = "all";
  // sign-vector / rep
  std::string input;
  bool canonical = false;
  bool orientation = false;
  std::string signed_perm;
  // explore / classify
  int m = 0;
  std::uint64_t samples = 0;
  std::uint64_t seed = 0;
  std::int64_t bound = 50;
  std::string out_path;
  std::string resume;
  std::string in_path;
  std::string group = "sn";
};

inline int cmd_enumerate(const Options& o, std::ostream& out) {
  const auto rows = enumerate_strata_2d_with_reps(o.n, o.allow_large);
  if (o.format == "json") {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& [stratum, rep] : rows) {
      if (o.witness)
        arr.push_back({{"signs", stratum.to_string()}, {"rep", rep.to_string()}, {"witness", matrix_to_json(witness_from_rep(rep))}});
      else
        arr.push_back(stratum.to_string());
    }
    out << arr.dump(1) << "\n";
  } else if (o.format == "csv") {
    out << (o.witness ? "signs,rep,witness\n" : "signs\n");
    for (const auto& [stratum, rep] : rows) {
      out << stratum.to_string();
      if (o.witness) out << "," << csv_quote(rep.to_string()) << "," << csv_quote(matrix_to_json(witness_from_rep(rep)).dump());
      out << "\n";
    }
  } else {
    for (const auto& [stratum, rep] : rows) {
      out << stratum.to_string();
      if (o.witness) out << "  " << rep.to_string() << "  " << matrix_to_json(witness_from_rep(rep)).dump();
      out << "\n";
    }
  }
  return kExitOk;
}

/// The brute-force route of each count: enumeration for strata, a Burnside sum of
/// exhaustively scanned zeta fixed points for orbits, orbit BFS for antipodal orbits.
inline int cmd_count(const Options& o, std::ostream& out, std::ostream& err) {
  std::uint64_t closed = 0;
  auto brute = [&]() -> std::uint64_t {
    if (o.what == "strata") return enumerate_strata_2d(o.n, o.allow_large).size();
    if (o.what == "orbits") {
      if (o.n > kMaxBruteForceZetaN && !o.allow_large) throw ContractViolation("brute force scan limited to n <= 20");
      std::uint64_t sum = 0;
      for (int i = 0; i < 2 * o.n; ++i) sum += fixed_point_count_bruteforce(o.n, i, o.allow_large);
      return sum / (2 * static_cast<std::uint64_t>(o.n));
    }
    if (o.what == "antipodal-orbits")
      return orbit_partition(enumerate_strata_2d(o.n, o.allow_large), GroupTag::hyperoctahedral, o.n).orbit_count;
    return fixed_point_count_bruteforce(o.n, o.i, o.allow_large);
  };
  if (o.what == "fixed-points" && o.i < 0) {
    err << "error: --what fixed-points needs --i\n";
    return kExitUsage;
  }
  if (o.what == "strata")
    closed = count_strata_2d(o.n);
  else if (o.what == "orbits")
    closed = count_generic_orbits_closed_form(o.n);
  else if (o.what == "antipodal-orbits")
    closed = 1;  // the hyperoctahedral group acts transitively on the m = 2 strata
  else
    closed = fixed_point_count(o.n, o.i);

  if (o.method == "closed-form") {
    out << closed << "\n";
    return kExitOk;
  }
  const std::uint64_t b = brute();
  if (o.method == "brute-force") {
    out << b << "\n";
    return kExitOk;
  }
  out << closed << "\n" << b << "\n" << (closed == b ? "MATCH" : "MISMATCH") << "\n";
  return closed == b ? kExitOk : kExitMismatch;
}

inline std::vector<int> parse_suite(const std::string& suite) {
  std::vector<int> ids;
  if (suite == "all") {
    for (int k = 1; k <= 10; ++k) ids.push_back(k);
    return ids;
  }
  std::stringstream ss(suite);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t used = 0;
    int id = 0;
    try {
      id = std::stoi(item, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != item.size() || item.empty() || id < 1 || id > 10) throw CLI::ValidationError("--suite", "expected 'all' or a comma list of ids 1..10, got '" + item + "'");
    if (std::find(ids.begin(), ids.end(), id) == ids.end()) ids.push_back(id);
  }
  std::sort(ids.begin(), ids.end());
  return ids;
}

inline int cmd_verify(const Options& o, std::ostream& out) {
  const std::vector<int> ids = parse_suite(o.suite);
  std::vector<acceptance::CheckResult> results;
  for (const auto& c : acceptance::all_criteria())
    if (std::find(ids.begin(), ids.end(), c.id) != ids.end()) results.push_back(c.run());
  const bool all_pass = std::all_of(results.begin(), results.end(), [](const auto& r) { return r.passed; });

  if (o.format == "json") {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& r : results) arr.push_back({{"id", r.id}, {"name", r.name}, {"status", r.passed ? "PASS" : "FAIL"}, {"detail", r.detail}});
    out << nlohmann::json{{"checks", arr}, {"all_pass", all_pass}}.dump(1) << "\n";
  } else if (o.format == "csv") {
    out << "id,status,name,detail\n";
    for (const auto& r : results) out << r.id << "," << (r.passed ? "PASS" : "FAIL") << "," << csv_quote(r.name) << "," << csv_quote(r.detail) << "\n";
  } else {
    for (const auto& r : results)
      out << std::setw(3) << r.id << "  " << (r.passed ? "PASS" : "FAIL") << "  " << r.name << "\n       " << r.detail << "\n";
    out << (all_pass ? "all checks passed" : "some checks FAILED") << "\n";
  }
  return all_pass ? kExitOk : kExitMismatch;
}

inline int cmd_sign_vector(const Options& o, std::ostream& out) {
  const RationalMatrix mat = parse_matrix(read_file(o.input));
  const SignVector s = sign_vector(mat);
  out << (o.canonical ? canonicalize(s).to_string() : s.to_string()) << "\n";
  return kExitOk;
}

inline int cmd_rep(const Options& o, std::ostream& out, std::ostream& err) {
  if (o.input.empty() == o.signed_perm.empty()) {
    err << "error: rep needs exactly one of --input or --signed\n";
    return kExitUsage;
  }
  if (!o.input.empty()) {
    const RationalMatrix mat = parse_matrix(read_file(o.input));
    out << combinatorial_rep(mat).to_string() << "\n";
    if (o.orientation) print_orientation(out, orientation_matrix(mat));
    return kExitOk;
  }
  const SignedPerm rep = SignedPerm::parse(o.signed_perm);
  out << "witness " << matrix_to_json(witness_from_rep(rep)).dump() << "\n";
  out << "signs " << orientation_from_rep(rep).upper_triangle().to_string() << "\n";
  if (o.orientation) print_orientation(out, orientation_from_rep(rep));
  return kExitOk;
}

inline int cmd_explore(const Options& o, std::ostream& out) {
  const SampleConfig cfg{o.m, o.n, o.bound, o.samples, o.seed};
  cfg.validate();
  StrataStore store(o.m, o.n);
  if (!o.resume.empty()) {
    store = store_from_json(read_file(o.resume));
    if (store.m != o.m || store.n != o.n) throw ContractViolation("resumed store has different dimensions");
  }
  const std::size_t before = store.found.size();
  const ExploreStats stats = explore(cfg, store);
  write_file(o.out_path, store_to_json(store));
  out << "samples " << cfg.samples << "\naccepted " << stats.accepted << "\nrejected " << stats.rejected << "\nnew strata " << stats.new_strata
      << "\nstrata in store " << store.found.size() << " (was " << before << ")\n";
  return kExitOk;
}

inline int cmd_classify(const Options& o, std::ostream& out, std::ostream& err) {
  const StrataStore store = store_from_json(read_file(o.in_path));
  const auto problems = validate_store(store);
  for (const auto& p : problems) err << "invalid entry " << p << "\n";
  if (!problems.empty()) return kExitMismatch;
  const GroupTag group = parse_group(o.group);
  const OrbitReport report = classify_found(store, group);
  out << "group " << to_string(group) << "\nm " << store.m << "\nn " << store.n << "\nstrata in store " << store.found.size() << "\norbits "
      << report.orbit_count << "\n";
  for (std::size_t k = 0; k < report.orbit_sizes.size(); ++k)
    out << "orbit " << k + 1 << ": size " << report.orbit_sizes[k] << ", stored " << report.input_hits[k] << ", representative "
        << report.representatives[k].to_string() << "\n";
  if (store.m >= 3 || report.strata_processed > store.found.size())
    out << "note: the store is a sample, so the orbit count is a lower bound\n";
  return kExitOk;
}

}  // namespace detail

/// Runs the tool on args (without the program name). Returns the process exit code.
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Strata of the totally nonzero Grassmannian", "tnzgr"};
  app.require_subcommand(1);
  detail::Options o;

  auto* enumerate = app.add_subcommand("enumerate", "list the strata of Gr^tnz(2, n)");
  enumerate->add_option("--n", o.n, "number of columns")->required()->check(CLI::Range(2, kMaxPlaneN));
  enumerate->add_option("--format", o.format)->check(CLI::IsMember({"text", "json", "csv"}));
  enumerate->add_flag("--witness", o.witness, "attach a representation and an integer witness");
  enumerate->add_flag("--allow-large", o.allow_large, "permit n = 9, 10");

  auto* count = app.add_subcommand("count", "closed-form and brute-force counts");
  count->add_option("--what", o.what)->required()->check(CLI::IsMember({"strata", "orbits", "antipodal-orbits", "fixed-points"}));
  count->add_option("--n", o.n)->required()->check(CLI::Range(1, 62));
  count->add_option("--i", o.i, "zeta power for fixed-points")->check(CLI::NonNegativeNumber);
  count->add_option("--method", o.method)->check(CLI::IsMember({"closed-form", "brute-force", "both"}));
  count->add_flag("--allow-large", o.allow_large);

  auto* verify = app.add_subcommand("verify", "run reproduction checks");
  verify->add_option("--suite", o.suite, "'all' or ids such as 1,4,8");
  verify->add_option("--format", o.format)->check(CLI::IsMember({"text", "json", "csv"}));

  auto* sv = app.add_subcommand("sign-vector", "Pluecker sign vector of a matrix file");
  sv->add_option("--input", o.input)->required();
  sv->add_flag("--canonical", o.canonical, "print the stratum representative (leading +)");

  auto* rep = app.add_subcommand("rep", "combinatorial representation (m = 2)");
  rep->add_option("--input", o.input, "matrix file");
  rep->add_option("--signed", o.signed_perm, "representation such as 1,-3,2; prints a witness");
  rep->add_flag("--orientation", o.orientation, "also print the orientation sign matrix");

  auto* exp = app.add_subcommand("explore", "random witness search");
  exp->add_option("--m", o.m)->required()->check(CLI::PositiveNumber);
  exp->add_option("--n", o.n)->required()->check(CLI::PositiveNumber);
  exp->add_option("--samples", o.samples)->required()->check(CLI::PositiveNumber);
  exp->add_option("--seed", o.seed);
  exp->add_option("--bound", o.bound)->check(CLI::PositiveNumber);
  exp->add_option("--out", o.out_path)->required();
  exp->add_option("--resume", o.resume, "store to extend");

  auto* cls = app.add_subcommand("classify", "orbit partition of a store");
  cls->add_option("--in", o.in_path)->required();
  cls->add_option("--group", o.group)->check(CLI::IsMember({"sn", "hyper"}));

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitUsage;
  }

  try {
    if (*enumerate) return detail::cmd_enumerate(o, out);
    if (*count) return detail::cmd_count(o, out, err);
    if (*verify) return detail::cmd_verify(o, out);
    if (*sv) return detail::cmd_sign_vector(o, out);
    if (*rep) return detail::cmd_rep(o, out, err);
    if (*exp) return detail::cmd_explore(o, out);
    return detail::cmd_classify(o, out, err);
  } catch (const CLI::ValidationError& e) {
    err << "error: " << e.what() << "\n";
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
  } catch (const ContractViolation& e) {
    err << "error: " << e.what() << "\n";
  } catch (const NotGeneric& e) {
    err << "error: matrix is not totally nonzero: " << e.what() << "\n";
  }
  return kExitUsage;
}

}  // namespace tnz::cli

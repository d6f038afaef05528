#include "cli.hpp"

#include <fstream>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "brt/abelian.hpp"
#include "brt/braid.hpp"
#include "brt/brown.hpp"
#include "brt/builders.hpp"
#include "brt/isoprobe.hpp"
#include "brt/treepair.hpp"

namespace brt::cli {

namespace {

// Raised after parsing for argument combinations CLI11 cannot express.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  long n = 0, m = 0;
  long k = -1;
  std::string group;
  std::string format = "text";
  std::string suite;
  std::vector<std::string> pairs;
  std::string table;
  long bound = 0;
  std::string fixture;
  std::string file;
};

Params require_params(const Options& o) {
  if (o.n < 2 || o.m < 2) throw UsageError("--n and --m are required and must be >= 2");
  return Params(o.n, o.m);
}

std::string render(const FinitePresentation& p, const std::string& format) {
  if (format == "json") return p.to_json() + "\n";
  if (format == "algebra") return p.to_algebra();
  return p.to_text();
}

int emit_report(const VerificationReport& r, const std::string& format, std::ostream& out) {
  out << (format == "json" ? r.to_json() + "\n" : r.to_text());
  return r.passed() ? ok : failed;
}

int cmd_present(const Options& o, std::ostream& out) {
  const Params p = require_params(o);
  if (o.group != "stab" && o.k >= 0) throw UsageError("--k only applies to --group stab");
  FinitePresentation pres;
  if (o.group == "brt") {
    pres = build_brT(p);
  } else if (o.group == "t") {
    pres = build_T(p);
  } else {
    if (o.k < 0 || o.k >= stabilizer_height(p))
      throw UsageError("--group stab needs 0 <= --k < " + std::to_string(stabilizer_height(p)));
    pres = build_stab(static_cast<int>(o.k), p);
  }
  out << render(pres, o.format);
  return ok;
}

int cmd_abelianise(const Options& o, std::ostream& out) {
  const Params p = require_params(o);
  const GroupKind kind = o.group == "brt" ? GroupKind::braided : GroupKind::plain;
  const AbelianGroup computed = abelianisation(o.group == "brt" ? build_brT(p) : build_T(p));
  const AbelianGroup expected = expected_abelianisation(kind, p);
  const bool match = computed == expected;
  if (o.format == "json") {
    nlohmann::ordered_json j;
    j["computed"] = computed.to_string();
    j["expected"] = expected.to_string();
    j["formula"] = expected_formula(kind, p);
    j["match"] = match;
    out << j.dump(2) << "\n";
  } else {
    out << "computed: " << computed.to_string() << "; expected: " << expected_formula(kind, p)
        << " = " << expected.to_string() << "; " << (match ? "MATCH" : "MISMATCH") << "\n";
  }
  return match ? ok : failed;
}

int cmd_verify(const Options& o, std::ostream& out) {
  if (o.suite == "brown-d4") return emit_report(verify_d4(), o.format, out);
  const Params p = require_params(o);
  if (o.suite == "thompson") return emit_report(verify_T_presentation(p), o.format, out);
  if (o.suite == "braid") return emit_report(verify_braid_relators(p), o.format, out);
  if (o.suite == "brown") return emit_report(verify_brown_brT(p), o.format, out);

  // sergiescu: one height, or every height when --k is absent
  const int heights = hbar(p) + 1;
  if (o.k >= heights) throw UsageError("--k must be below " + std::to_string(heights));
  int code = ok;
  for (int k = o.k >= 0 ? static_cast<int>(o.k) : 0; k < (o.k >= 0 ? o.k + 1 : heights); ++k)
    if (emit_report(verify_sergiescu(sigma_tree_embedding(p, k)), o.format, out) != ok) code = failed;
  return code;
}

std::pair<long, long> parse_pair(const std::string& text) {
  const auto comma = text.find(',');
  if (comma == std::string::npos) throw UsageError("expected N,M but got '" + text + "'");
  try {
    std::size_t used_a = 0, used_b = 0;
    const std::string a = text.substr(0, comma), b = text.substr(comma + 1);
    const long x = std::stol(a, &used_a), y = std::stol(b, &used_b);
    if (used_a != a.size() || used_b != b.size()) throw std::invalid_argument(text);
    return {x, y};
  } catch (const std::logic_error&) {
    throw UsageError("expected N,M but got '" + text + "'");
  }
}

Params pair_params(const std::string& text) {
  const auto [n, m] = parse_pair(text);
  if (n < 2 || m < 2) throw UsageError("pair entries must be >= 2: '" + text + "'");
  return Params(n, m);
}

int cmd_obstruct(const Options& o, std::ostream& out) {
  if (!o.table.empty()) {
    if (!o.pairs.empty()) throw UsageError("--table and --pair are exclusive");
    const auto [lo, hi] = parse_pair(o.table);
    if (lo < 2 || hi < lo) throw UsageError("--table needs 2 <= LO <= HI");
    out << verdict_table(lo, hi);
    return ok;
  }
  if (o.pairs.size() != 2) throw UsageError("obstruct needs exactly two --pair options");
  const Params a = pair_params(o.pairs[0]), b = pair_params(o.pairs[1]);
  const Verdict v = verdict(a, b);
  if (o.format == "json") {
    nlohmann::ordered_json j;
    j["first"] = {a.n, a.m};
    j["second"] = {b.n, b.m};
    j["verdict"] = nlohmann::ordered_json::parse(v.to_json());
    out << j.dump(2) << "\n";
  } else {
    out << verdict_line(a, b, v) << "\n";
  }
  return ok;
}

void print_solutions(const std::string& title, const std::vector<WeightedSolution>& s,
                     std::ostream& out) {
  out << title << " (" << s.size() << "):\n";
  for (const auto& w : s) {
    out << "  (" << w.x << "," << w.y << ") " << to_string(w.family);
    if (w.params) out << " d=" << (*w.params)[0] << " u=" << (*w.params)[1] << " v=" << (*w.params)[2];
    out << "\n";
  }
}

int cmd_solve(const Options& o, std::ostream& out) {
  const long bound = o.bound > 0 ? o.bound : 2 * o.k;
  if (bound < o.k) throw UsageError("--bound must be >= --k");
  const auto brute = brute_solutions(o.k, bound);
  const auto param = parametric_solutions(o.k);
  const bool equal = same_pairs(brute, param);
  if (o.format == "json") {
    nlohmann::ordered_json j;
    j["k"] = o.k;
    j["bound"] = bound;
    j["brute"] = nlohmann::ordered_json::parse(solutions_json(brute));
    j["parametric"] = nlohmann::ordered_json::parse(solutions_json(param));
    j["equal"] = equal;
    out << j.dump(2) << "\n";
  } else {
    print_solutions("brute", brute, out);
    print_solutions("parametric", param, out);
    out << "sets equal: " << (equal ? "yes" : "no") << "\n";
  }
  return equal ? ok : failed;
}

int cmd_brown(const Options& o, std::ostream& out) {
  const BrownInput input = o.fixture == "d4" ? d4_fixture() : brT_brown_input(require_params(o));
  out << input.to_json() << "\n";
  return ok;
}

int cmd_assemble(const Options& o, std::ostream& out) {
  std::ifstream in(o.file);
  if (!in) throw UsageError("cannot read " + o.file);
  std::ostringstream text;
  text << in.rdbuf();
  const BrownInput input = BrownInput::parse_json(text.str());
  input.validate();
  out << render(assemble(input), o.format);
  return ok;
}

void add_params(CLI::App* cmd, Options& o) {
  cmd->add_option("--n", o.n, "Valence parameter n (>= 2)")->check(CLI::Range(2L, 1000000L));
  cmd->add_option("--m", o.m, "Valence parameter m (>= 2)")->check(CLI::Range(2L, 1000000L));
}

void add_format(CLI::App* cmd, Options& o, std::vector<std::string> choices) {
  cmd->add_option("--format", o.format, "Output format")
      ->check(CLI::IsMember(std::move(choices)))
      ->capture_default_str();
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Presentations, invariants and verification suites for braided Higman-Thompson groups",
               "brt"};
  app.require_subcommand(1);
  Options o;

  auto* present = app.add_subcommand("present", "Print a presentation");
  add_params(present, o);
  present->add_option("--group", o.group, "brt, t or stab")
      ->required()
      ->check(CLI::IsMember({"brt", "t", "stab"}));
  present->add_option("--k", o.k, "Stabilizer height")->check(CLI::NonNegativeNumber);
  add_format(present, o, {"text", "json", "algebra"});

  auto* abel = app.add_subcommand("abelianise", "Compare computed and expected abelianisation");
  add_params(abel, o);
  abel->add_option("--group", o.group, "brt or t")->required()->check(CLI::IsMember({"brt", "t"}));
  add_format(abel, o, {"text", "json"});

  auto* verify = app.add_subcommand("verify", "Run a verification suite");
  verify->add_option("suite", o.suite, "thompson, braid, brown-d4, brown or sergiescu")
      ->required()
      ->check(CLI::IsMember({"thompson", "braid", "brown-d4", "brown", "sergiescu"}));
  add_params(verify, o);
  verify->add_option("--k", o.k, "Height for sergiescu (default: all)")->check(CLI::NonNegativeNumber);
  add_format(verify, o, {"text", "json"});

  auto* obstruct = app.add_subcommand("obstruct", "Isomorphism verdict for two parameter pairs");
  obstruct->add_option("--pair", o.pairs, "N,M (give twice)");
  obstruct->add_option("--table", o.table, "LO,HI: every pair in the window");
  add_format(obstruct, o, {"text", "json"});

  auto* solve = app.add_subcommand("solve", "Solutions of x|x-k| = y|y-k|");
  solve->add_option("--k", o.k, "k >= 1")->required()->check(CLI::Range(1L, 100000L));
  solve->add_option("--bound", o.bound, "Scan bound (default 2k)")->check(CLI::PositiveNumber);
  add_format(solve, o, {"text", "json"});

  auto* brown = app.add_subcommand("brown", "Print Brown input data as JSON");
  brown->add_option("--fixture", o.fixture, "d4 or brt")->required()->check(CLI::IsMember({"d4", "brt"}));
  add_params(brown, o);

  auto* assemble_cmd = app.add_subcommand("assemble", "Assemble a presentation from Brown input JSON");
  assemble_cmd->add_option("file", o.file, "Input file")->required();
  add_format(assemble_cmd, o, {"text", "json", "algebra"});

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return ok;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return ok;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    const auto* sub = app.get_subcommands().empty() ? &app : app.get_subcommands().front();
    err << sub->help();
    return usage;
  }

  CLI::App* cmd = app.get_subcommands().front();
  try {
    const std::string name = cmd->get_name();
    if (name == "present") return cmd_present(o, out);
    if (name == "abelianise") return cmd_abelianise(o, out);
    if (name == "verify") return cmd_verify(o, out);
    if (name == "obstruct") return cmd_obstruct(o, out);
    if (name == "solve") return cmd_solve(o, out);
    if (name == "brown") return cmd_brown(o, out);
    return cmd_assemble(o, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n" << cmd->help();
    return usage;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return usage;
  } catch (const PresentationError& e) {
    err << "error: " << e.what() << "\n";
    return usage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return usage;
  }
}

}  // namespace brt::cli

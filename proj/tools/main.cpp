// polypos: command line front end for the exact positivity workbench.
//
// Verbs:
//   triangle   generate a builtin or spec-file triangle and dump it
//   check      run one property check on explicit input, print a JSON report
//   transform  apply a triangle transform to a seed sequence
//   verify     preservation / stability / runs / hypotheses / campaign drivers
//   repro      re-run the pre-wired computations against their expected outcomes
//
// Exit codes: 0 expected outcome, 1 property violated unexpectedly,
// 2 usage or validation error. All output is exact rational text; no
// floating point is ever printed.

#include <unistd.h>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "polypos/campaign.hpp"
#include "polypos/catalog.hpp"
#include "polypos/chains.hpp"
#include "polypos/interlacing.hpp"
#include "polypos/poly.hpp"
#include "polypos/properties.hpp"
#include "polypos/rat.hpp"
#include "polypos/report.hpp"
#include "polypos/roots.hpp"
#include "polypos/seeds.hpp"
#include "polypos/stability.hpp"
#include "polypos/transform.hpp"
#include "polypos/triangle.hpp"

namespace {

using namespace polypos;

struct Opts {
  std::string builtin;
  std::string spec_file;
  std::string z;
  std::string m;
  std::string fixed_q;
  std::string seed;
  std::string mode = "strong-q";
  std::string format;
  std::string out;
  std::string property;
  std::string what;
  std::string target;
  std::vector<std::string> polys;
  int rows = -1;
  int nmax = -1;
  int order = 2;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::invalid_argument("cannot read file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::optional<Rat> opt_rat(const std::string& text) {
  if (text.empty()) return std::nullopt;
  return rat_from_string(text);
}

// Output goes to stdout unless --out was given; color only ever applies to
// the terminal, so --out files and pipes always get plain bytes.
class Sink {
 public:
  explicit Sink(const std::string& path) {
    if (!path.empty()) {
      file_.open(path, std::ios::binary);
      if (!file_) throw std::invalid_argument("cannot open --out file: " + path);
      to_file_ = true;
    }
  }
  std::ostream& stream() { return to_file_ ? file_ : std::cout; }
  bool to_terminal() const { return !to_file_ && isatty(STDOUT_FILENO) != 0; }

 private:
  std::ofstream file_;
  bool to_file_ = false;
};

bool color_enabled(const Sink& sink) {
  const char* no_color = std::getenv("NO_COLOR");
  if (no_color != nullptr && *no_color != '\0') return false;
  return sink.to_terminal();
}

std::string paint(const std::string& word, bool color) {
  if (!color) return word;
  const char* code = "\x1b[31m";  // FAIL / NO
  if (word == "PASS" || word == "YES") code = "\x1b[32m";
  if (word == "INPUT-FAIL") code = "\x1b[33m";
  return std::string(code) + word + "\x1b[0m";
}

int exit_code(Verdict v) {
  switch (v) {
    case Verdict::Pass: return 0;
    case Verdict::Fail: return 1;
    case Verdict::InputFail: return 2;
  }
  return 2;
}

std::string join_witness(const std::map<std::string, std::string>& witness) {
  std::string out;
  for (const auto& [k, v] : witness) {
    if (!out.empty()) out += "; ";
    out += k + "=" + v;
  }
  return out;
}

TriangleSpec resolve_triangle_spec(const Opts& o) {
  const bool have_builtin = !o.builtin.empty();
  const bool have_spec = !o.spec_file.empty();
  if (have_builtin == have_spec)
    throw std::invalid_argument("give exactly one of --builtin NAME or --spec FILE");
  if (have_builtin) return builtin_spec(o.builtin, opt_rat(o.z), opt_rat(o.m));
  if (!o.z.empty() || !o.m.empty())
    throw std::invalid_argument("--z and --m only apply to --builtin triangles");
  return triangle_spec_from_json(read_file(o.spec_file));
}

// --seed takes a catalog name or a file of canonical polynomial lines
// (blank lines and # comments skipped).
SeedSequence resolve_seed(const std::string& ref, int n_max) {
  for (const auto& info : seed_catalog())
    if (info.id == ref) return make_seed(ref, n_max);
  std::ifstream in(ref, std::ios::binary);
  if (!in)
    throw std::invalid_argument("--seed is neither a catalog name nor a readable file: " + ref);
  std::vector<Poly> polys;
  std::string line;
  while (std::getline(in, line)) {
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos) continue;
    const auto last = line.find_last_not_of(" \t\r");
    std::string body = line.substr(first, last - first + 1);
    if (body[0] == '#') continue;
    polys.push_back(poly_from_string(body));
  }
  if (polys.empty()) throw std::invalid_argument("seed file has no polynomials: " + ref);
  return seed_from_polys(std::move(polys));
}

std::vector<Poly> parse_polys(const std::vector<std::string>& texts) {
  std::vector<Poly> polys;
  polys.reserve(texts.size());
  for (const auto& t : texts) polys.push_back(poly_from_string(t));
  return polys;
}

Poly single_poly(const Opts& o) {
  if (o.polys.size() != 1)
    throw std::invalid_argument("this property takes exactly one --poly argument");
  return poly_from_string(o.polys[0]);
}

bool is_chain_id(const std::string& id) {
  for (const auto& c : chain_catalog())
    if (c.id == id) return true;
  return false;
}

// Polynomial-sequence input for the sequence properties, in priority order:
// explicit --poly list, --seed (catalog name or file), --builtin (a chain id,
// else a triangle whose row generating functions form the sequence), --spec.
std::vector<Poly> resolve_poly_sequence(const Opts& o) {
  if (!o.polys.empty()) return parse_polys(o.polys);
  if (!o.seed.empty()) {
    if (o.nmax < 0) throw std::invalid_argument("--seed input needs --nmax");
    return resolve_seed(o.seed, o.nmax).values;
  }
  if (!o.builtin.empty() && is_chain_id(o.builtin)) {
    if (o.nmax < 0) throw std::invalid_argument("--builtin chain input needs --nmax");
    return build_chain(o.builtin, o.nmax, opt_rat(o.fixed_q)).polys;
  }
  if (!o.builtin.empty() || !o.spec_file.empty()) {
    const int depth = o.nmax >= 0 ? o.nmax : o.rows;
    if (depth < 0) throw std::invalid_argument("triangle input needs --nmax (or --rows)");
    Triangle t = Triangle::generate(resolve_triangle_spec(o), depth);
    std::vector<Poly> polys;
    for (int n = t.first_row(); n <= t.depth(); ++n) polys.push_back(t.row_gf(n));
    return polys;
  }
  throw std::invalid_argument("no input: give --poly (repeatable), --seed, --builtin, or --spec");
}

int cmd_triangle(const Opts& o) {
  if (o.rows < 0) throw std::invalid_argument("--rows must be >= 0");
  Triangle t = Triangle::generate(resolve_triangle_spec(o), o.rows);
  const std::string fmt = o.format.empty() ? "csv" : o.format;
  Sink sink(o.out);
  std::ostream& os = sink.stream();
  if (fmt == "csv") {
    // row by row so large dumps stream instead of buffering one big string
    for (int n = t.first_row(); n <= t.depth(); ++n) {
      const auto& row = t.row(n);
      for (size_t k = 0; k < row.size(); ++k) {
        if (k) os << ",";
        os << rat_to_string(row[k]);
      }
      os << "\n";
    }
  } else {
    os << t.to_json() << "\n";
  }
  return 0;
}

int cmd_check(const Opts& o) {
  PropertyReport report;
  const std::string& p = o.property;
  if (p == "logconvex") {
    std::vector<Rat> seq;
    for (const Poly& f : resolve_poly_sequence(o)) {
      if (f.degree() > 0)
        throw std::invalid_argument("logconvex needs a constant (rational) sequence");
      seq.push_back(f.coeff(0));
    }
    report = is_log_convex(seq);
  } else if (p == "qlogconvex") {
    report = is_q_log_convex(resolve_poly_sequence(o));
  } else if (p == "strong-qlogconvex") {
    report = is_strongly_q_log_convex(resolve_poly_sequence(o));
  } else if (p == "tp") {
    if (o.rows < 0) throw std::invalid_argument("tp needs --rows");
    Triangle t = Triangle::generate(resolve_triangle_spec(o), o.rows);
    report = is_tp_r(t, o.order, o.rows);
  } else if (p == "realrooted") {
    report = is_real_rooted(single_poly(o));
  } else if (p == "interlace") {
    auto polys = parse_polys(o.polys);
    if (polys.size() != 2)
      throw std::invalid_argument("interlace needs exactly two --poly arguments, g then f");
    report = interlaces(polys[0], polys[1]);
  } else if (p == "sturmseq") {
    report = is_generalized_sturm_sequence(resolve_poly_sequence(o));
  } else if (p == "stable") {
    report = hurwitz_stable(single_poly(o));
  } else if (p == "genstable") {
    report = generalized_stable(single_poly(o));
  } else {
    throw std::invalid_argument(
        "unknown property: " + p +
        " (logconvex, qlogconvex, strong-qlogconvex, tp, realrooted, interlace,"
        " sturmseq, stable, genstable)");
  }
  Sink sink(o.out);
  sink.stream() << report.to_json() << "\n";
  return exit_code(report.verdict);
}

int cmd_transform(const Opts& o) {
  Triangle t = Triangle::generate(resolve_triangle_spec(o), o.nmax);
  SeedSequence seed = resolve_seed(o.seed, t.depth());
  PolyChain y = apply_transform(t, seed);
  const std::string fmt = o.format.empty() ? "csv" : o.format;
  Sink sink(o.out);
  std::ostream& os = sink.stream();
  if (fmt == "csv") {
    os << "n,poly\n";
    for (int n = y.start; n <= y.last(); ++n)
      os << n << "," << poly_to_string(y.at(n)) << "\n";
  } else {
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (int n = y.start; n <= y.last(); ++n)
      arr.push_back({{"n", n}, {"poly", poly_to_string(y.at(n))}});
    os << arr.dump(2) << "\n";
  }
  return 0;
}

int cmd_verify(const Opts& o) {
  if (o.what == "campaign") {
    if (o.spec_file.empty())
      throw std::invalid_argument("verify campaign needs --spec MANIFEST.json");
    auto entries = parse_campaign_manifest(read_file(o.spec_file));
    auto results = run_campaign(entries);
    const std::string fmt = o.format.empty() ? "json" : o.format;
    Sink sink(o.out);
    if (fmt == "csv") {
      sink.stream() << campaign_summary_csv(results);
    } else {
      sink.stream() << campaign_reports_json(results);
    }
    bool any_fail = false, any_input_fail = false;
    for (const auto& res : results) {
      any_fail = any_fail || res.report.verdict == Verdict::Fail;
      any_input_fail = any_input_fail || res.report.verdict == Verdict::InputFail;
    }
    return any_fail ? 1 : (any_input_fail ? 2 : 0);
  }

  if (o.nmax < 0) throw std::invalid_argument("verify " + o.what + " needs --nmax");
  PropertyReport report;
  if (o.what == "preservation") {
    if (o.seed.empty())
      throw std::invalid_argument("verify preservation needs --seed NAME|FILE");
    Triangle t = Triangle::generate(resolve_triangle_spec(o), o.nmax);
    SeedSequence seed = resolve_seed(o.seed, t.depth());
    report = verify_preservation(t, seed, preservation_mode_from_string(o.mode));
  } else if (o.what == "stability") {
    if (o.builtin.empty())
      throw std::invalid_argument(
          "verify stability needs --builtin FAMILY (eulerianA, eulerianB,"
          " q-eulerianA, q-eulerianB, lah-associated)");
    report = verify_stability_family(o.builtin, o.nmax, opt_rat(o.fixed_q), opt_rat(o.m));
  } else if (o.what == "runs") {
    report = verify_qlogconvex_runs(o.nmax);
  } else if (o.what == "hypotheses") {
    report = check_preservation_hypotheses(resolve_triangle_spec(o), o.nmax, o.nmax);
  } else {
    throw std::invalid_argument(
        "unknown verify target: " + o.what +
        " (preservation, stability, runs, hypotheses, campaign)");
  }
  Sink sink(o.out);
  sink.stream() << report.to_json() << "\n";
  return exit_code(report.verdict);
}

// Each repro target carries its expected outcome, so a target whose property
// is supposed to break (a counterexample) exits 0 exactly when the check
// FAILs as documented.
const char* kReproManifest = R"json({
  "example51": {
    "expected": "FAIL",
    "default_nmax": 3,
    "claim": "the Motzkin transform of the geometric seed x0=1, x_k=2^(k-1) q^k is not strongly q-log-convex: y_3 y_1 - y_2^2 has a negative coefficient"
  },
  "conjecture-jacobi": {
    "expected": "PASS",
    "default_nmax": 10,
    "claim": "Jacobi-Stirling transforms of both kinds at z in {0,1} map log-convex sequences to log-convex sequences"
  },
  "eulerian-stability": {
    "expected": "PASS",
    "default_nmax": 10,
    "claim": "consecutive-product differences of the Eulerian families A and B are stable outside the origin"
  },
  "runs-qlc": {
    "expected": "PASS",
    "default_nmax": 12,
    "claim": "the four run-statistics polynomial chains are q-log-convex"
  }
})json";

int cmd_repro(const Opts& o) {
  const auto manifest = nlohmann::json::parse(kReproManifest);
  if (!manifest.contains(o.target))
    throw std::invalid_argument("unknown repro target: " + o.target +
                                " (example51, conjecture-jacobi, eulerian-stability, runs-qlc)");
  const auto& entry = manifest[o.target];
  const std::string expected = entry["expected"].get<std::string>();
  const int nmax = o.nmax >= 0 ? o.nmax : entry["default_nmax"].get<int>();

  Sink sink(o.out);
  const bool color = color_enabled(sink);
  std::ostream& os = sink.stream();
  os << "target: " << o.target << "\n";
  os << "claim: " << entry["claim"].get<std::string>() << "\n";

  bool all_match = true;
  auto step = [&](const std::string& label, const PropertyReport& r) {
    const std::string verdict = verdict_to_string(r.verdict);
    all_match = all_match && verdict == expected;
    os << label << ": " << paint(verdict, color) << " (expected " << expected << ")\n";
    if (!r.witness.empty()) os << "  witness: " << join_witness(r.witness) << "\n";
  };

  if (o.target == "example51") {
    if (nmax < 3) throw std::invalid_argument("example51 needs --nmax >= 3");
    Triangle tri = Triangle::generate(builtin_spec("motzkin"), nmax);
    SeedSequence seed = make_seed("geometric-monomials", tri.depth());
    PolyChain y = apply_transform(tri, seed);
    for (int n = y.start; n <= y.last(); ++n)
      os << "y_" << n << " = " << poly_to_string(y.at(n)) << "\n";
    os << "y_3*y_1 - y_2^2 = " << poly_to_string(y.at(3) * y.at(1) - y.at(2) * y.at(2))
       << "\n";
    PropertyReport r = verify_preservation(tri, seed, PreservationMode::StrongQ);
    os << "property: " << r.property << "\n";
    step("verdict", r);
  } else if (o.target == "conjecture-jacobi") {
    for (const char* kind : {"jacobi-stirling-2", "jacobi-stirling-1"}) {
      for (long z = 0; z <= 1; ++z) {
        Triangle tri = Triangle::generate(builtin_spec(kind, Rat(z)), nmax);
        for (const char* seed_name :
             {"motzkin-numbers", "catalan-numbers", "constant-one"}) {
          SeedSequence seed = make_seed(seed_name, tri.depth());
          PropertyReport r =
              verify_preservation(tri, seed, PreservationMode::NumericLogConvex);
          std::ostringstream label;
          label << kind << " z=" << z << " seed=" << seed_name << " n<=" << nmax;
          step(label.str(), r);
        }
      }
    }
  } else if (o.target == "eulerian-stability") {
    step("eulerianA n<=" + std::to_string(nmax), verify_stability_family("eulerianA", nmax));
    step("eulerianB n<=" + std::to_string(nmax), verify_stability_family("eulerianB", nmax));
  } else {  // runs-qlc
    step("runs chains n<=" + std::to_string(nmax), verify_qlogconvex_runs(nmax));
  }

  os << "expected: " << expected << "\n";
  os << "match-paper: " << paint(all_match ? "YES" : "NO", color) << "\n";
  return all_match ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact positivity workbench for combinatorial triangles and polynomial sequences"};
  app.require_subcommand(1);
  Opts o;

  auto add_spec_opts = [&](CLI::App* cmd) {
    cmd->add_option("--builtin", o.builtin, "builtin triangle id");
    cmd->add_option("--spec", o.spec_file, "triangle spec JSON file");
    cmd->add_option("--z", o.z, "z parameter for builtins that take one (rational)");
    cmd->add_option("--m", o.m, "m parameter for builtins that take one (rational)");
  };

  auto* tri = app.add_subcommand("triangle", "generate a triangle and dump it");
  add_spec_opts(tri);
  tri->add_option("--rows", o.rows, "deepest row to generate")->required();
  tri->add_option("--format", o.format, "csv (default) or json")
      ->check(CLI::IsMember({"csv", "json"}));
  tri->add_option("--out", o.out, "write to a file instead of stdout");

  auto* chk = app.add_subcommand("check", "run one property check, print a JSON report");
  chk->add_option("property", o.property,
                  "logconvex | qlogconvex | strong-qlogconvex | tp | realrooted |"
                  " interlace | sturmseq | stable | genstable")
      ->required();
  add_spec_opts(chk);
  chk->add_option("--poly", o.polys, "polynomial in canonical text form (repeatable)");
  chk->add_option("--fixed-q", o.fixed_q, "fixed q value for chains that need one (rational)");
  chk->add_option("--order", o.order, "minor order for tp (default 2)");
  chk->add_option("--rows", o.rows, "triangle depth for tp");
  chk->add_option("--nmax", o.nmax, "last index of the sequence input");
  chk->add_option("--seed", o.seed, "seed catalog name or polynomial file as sequence input");
  chk->add_option("--out", o.out, "write the report to a file instead of stdout");

  auto* trf = app.add_subcommand("transform", "apply a triangle transform to a seed");
  add_spec_opts(trf);
  trf->add_option("--seed", o.seed, "seed catalog name or polynomial file")->required();
  trf->add_option("--nmax", o.nmax, "last transformed index")->required();
  trf->add_option("--format", o.format, "csv (default) or json")
      ->check(CLI::IsMember({"csv", "json"}));
  trf->add_option("--out", o.out, "write to a file instead of stdout");

  auto* ver = app.add_subcommand("verify", "run a verification driver, print a JSON report");
  ver->add_option("what", o.what, "preservation | stability | runs | hypotheses | campaign")
      ->required();
  add_spec_opts(ver);
  ver->add_option("--fixed-q", o.fixed_q, "fixed q value for the q-analog stability families");
  ver->add_option("--seed", o.seed, "seed catalog name or polynomial file");
  ver->add_option("--mode", o.mode, "strong-q (default) | q | numeric-log-convex");
  ver->add_option("--nmax", o.nmax, "verification depth");
  ver->add_option("--format", o.format, "campaign output: json (default) or csv")
      ->check(CLI::IsMember({"csv", "json"}));
  ver->add_option("--out", o.out, "write to a file instead of stdout");

  auto* rep = app.add_subcommand("repro", "re-run a pre-wired computation");
  rep->add_option("target", o.target,
                  "example51 | conjecture-jacobi | eulerian-stability | runs-qlc")
      ->required();
  rep->add_option("--nmax", o.nmax, "override the target's default depth");
  rep->add_option("--out", o.out, "write to a file instead of stdout");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (tri->parsed()) return cmd_triangle(o);
    if (chk->parsed()) return cmd_check(o);
    if (trf->parsed()) return cmd_transform(o);
    if (ver->parsed()) return cmd_verify(o);
    if (rep->parsed()) return cmd_repro(o);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}

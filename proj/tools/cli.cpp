#include "cli.hpp"

#include <openssl/evp.h>

#include <algorithm>
#include <array>
#include <chrono>
#include <filesystem>
#include <iomanip>
#include <iostream>
#include <optional>
#include <set>
#include <sstream>

#include "CLI11.hpp"
#include "bqinv/io.hpp"
#include "bqinv/version.hpp"

namespace bqinv::cli {

using io::json;

std::string sha256_hex(const std::string& bytes) {
  std::array<unsigned char, EVP_MAX_MD_SIZE> digest{};
  unsigned int len = 0;
  EVP_Digest(bytes.data(), bytes.size(), digest.data(), &len, EVP_sha256(), nullptr);
  std::ostringstream hex;
  for (unsigned int i = 0; i < len; ++i) hex << std::hex << std::setw(2) << std::setfill('0') << int{digest[i]};
  return hex.str();
}

namespace {

struct Globals {
  bool json = false;
  unsigned workers = 0;
  std::string manifest_path;
};

// One invocation: records every input file it reads, accumulates the
// structured result and the human-readable report.
class Session {
 public:
  Session(std::string command, const Globals& g) : command_(std::move(command)), globals_(g) {}

  unsigned workers() const { return globals_.workers; }
  std::ostringstream& text() { return text_; }
  json& result() { return result_; }

  json load_json(const std::string& role, const std::string& path) {
    const std::string bytes = io::read_file(path);
    inputs_.push_back({{"role", role}, {"path", path}, {"sha256", sha256_hex(bytes)}});
    return io::parse_json(bytes, path);
  }

  FiniteBiquandle biquandle(const std::string& path) {
    return io::biquandle_from_json(load_json("biquandle", path), globals_.workers);
  }

  Cocycle3 cocycle(const std::string& path, std::ostream& err) {
    auto file = io::cocycle_from_json(load_json("cocycle", path));
    for (const auto& t : file.duplicates) {
      err << "warning: triple (" << t[0] << "," << t[1] << "," << t[2] << ") listed more than once in " << path
          << "; exponents summed\n";
      result_["warnings"].push_back("duplicate triple");
    }
    return std::move(file.cocycle);
  }

  DiagramData diagram(const std::string& path) { return io::diagram_from_json(load_json("diagram", path)); }

  json manifest(int exit_code) const {
    return {{"command", command_},
            {"inputs", inputs_},
            {"exit_code", exit_code},
            {"result", result_},
            {"version", std::string(kVersion)}};
  }

 private:
  std::string command_;
  Globals globals_;
  json inputs_ = json::array();
  json result_ = json::object();
  std::ostringstream text_;
};

std::string tuple_string(const std::vector<Element>& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + std::to_string(v[i]);
  return s + ")";
}

json witnesses_json(const std::vector<ConditionWitness>& ws) {
  json out = json::array();
  for (const auto& w : ws) out.push_back({{"args", w.args}, {"residues", w.residues}});
  return out;
}

json condition_json(const ConditionResult& r) {
  return {{"status", std::string(to_string(r.status))},
          {"checked", r.checked},
          {"violations", r.violations},
          {"witnesses", witnesses_json(r.witnesses)}};
}

void condition_text(std::ostream& os, const std::string& label, const ConditionResult& r) {
  os << label << ": " << to_string(r.status);
  if (r.status != ConditionStatus::NotChecked) os << " (" << r.violations << " of " << r.checked << " tuples violate)";
  os << "\n";
  for (const auto& w : r.witnesses) os << "  witness " << tuple_string(w.args) << "\n";
}

json coloring_rows(const std::vector<Coloring>& cs) {
  json rows = json::array();
  for (const auto& c : cs) {
    json row = json::array();
    for (Element v : c.values) row.push_back(std::to_string(v));
    rows.push_back(std::move(row));
  }
  return rows;
}

std::string assignment_string(const std::vector<std::string>& gens, const Coloring& c) {
  std::string s;
  for (std::size_t i = 0; i < gens.size(); ++i) s += (i ? " " : "") + gens[i] + "=" + std::to_string(c.values[i]);
  return s;
}

// ---------------------------------------------------------------- commands

int cmd_verify_biquandle(Session& s, const std::string& path) {
  const auto tables = io::biquandle_tables_from_json(s.load_json("biquandle", path));
  VerifyOptions opts;
  opts.workers = s.workers();
  const AxiomReport report = verify_biquandle(tables.under, tables.over, opts);

  json violations = json::array();
  for (const auto& v : report.violations)
    violations.push_back({{"axiom", std::string(to_string(v.axiom))}, {"witness", v.witness}});
  s.result() = {{"n", tables.under.size()}, {"passed", report.passed}, {"violations", violations}};

  auto& os = s.text();
  os << "biquandle " << path << " (n = " << tables.under.size() << "): " << (report.passed ? "pass" : "FAIL") << "\n";
  for (const auto& v : report.violations) os << "  " << to_string(v.axiom) << " at " << tuple_string(v.witness) << "\n";
  return report.passed ? kOk : kDomainFailure;
}

int cmd_verify_cocycle(Session& s, std::ostream& err, const std::string& bq_path, const std::string& cocycle_path,
                       bool singular, const std::string& variant) {
  const FiniteBiquandle bq = s.biquandle(bq_path);
  const Cocycle3 theta = s.cocycle(cocycle_path, err);
  std::vector<ConditionIIVariant> variants;
  if (variant == "both")
    variants = {ConditionIIVariant::Printed, ConditionIIVariant::Symmetric};
  else
    variants = {*parse_variant(variant)};

  CheckOptions opts;
  opts.workers = s.workers();
  auto& os = s.text();
  os << "cocycle " << cocycle_path << " (modulus " << theta.modulus() << ") on " << bq_path << "\n";

  bool ok = true;
  const auto cond_i = check_condition_i(theta, bq, opts);
  ok &= cond_i.status == ConditionStatus::Pass;
  condition_text(os, "condition (i)", cond_i);
  s.result()["condition_i"] = condition_json(cond_i);

  json by_variant = json::object();
  for (auto v : variants) {
    const auto r = check_condition_ii(theta, bq, v, opts);
    ok &= r.status == ConditionStatus::Pass;
    condition_text(os, "condition (ii) [" + std::string(to_string(v)) + "]", r);
    by_variant[std::string(to_string(v))] = condition_json(r);
  }
  s.result()["condition_ii"] = by_variant;

  ConditionResult cond_iii;
  if (singular) {
    cond_iii = check_condition_iii(theta, bq, opts);
    ok &= cond_iii.status == ConditionStatus::Pass;
    condition_text(os, "condition (iii)", cond_iii);
  }
  s.result()["condition_iii"] = condition_json(cond_iii);
  s.result()["all_requested_pass"] = ok;
  return ok ? kOk : kDomainFailure;
}

int cmd_colorings(Session& s, const std::string& bq_path, const std::string& diagram_path, bool count_only,
                  bool list) {
  const FiniteBiquandle bq = s.biquandle(bq_path);
  const DiagramData d = s.diagram(diagram_path);
  auto& os = s.text();
  if (count_only) {
    const auto count = coloring_count(d, bq, {s.workers()});
    s.result() = {{"colorings", count}};
    os << count << "\n";
    return kOk;
  }
  const auto cs = solve_colorings(d, bq, {s.workers()});
  s.result() = {{"colorings", cs.size()}, {"generators", d.generators}};
  if (list) s.result()["assignments"] = coloring_rows(cs);
  os << "colorings: " << cs.size() << "\n";
  if (list)
    for (const auto& c : cs) os << "  " << assignment_string(d.generators, c) << "\n";
  return kOk;
}

int cmd_statesum(Session& s, std::ostream& err, const std::string& bq_path, const std::string& cocycle_path,
                 const std::string& diagram_path) {
  const FiniteBiquandle bq = s.biquandle(bq_path);
  const Cocycle3 theta = s.cocycle(cocycle_path, err);
  const DiagramData d = s.diagram(diagram_path);

  StateSumOptions opts;
  opts.workers = s.workers();
  opts.audit = true;
  const StateSumResult r = state_sum(d, bq, theta, opts);
  std::vector<Coloring> nontrivial;
  for (const auto& cm : r.per_coloring)
    if (cm.exponent != 0) nontrivial.push_back(cm.coloring);

  const json warnings = s.result().value("warnings", json::array());
  s.result() = io::statesum_document(r, nontrivial);
  if (!warnings.empty()) s.result()["warnings"] = warnings;

  auto& os = s.text();
  os << to_string(r.value) << "\n";
  os << "colorings: " << r.coloring_count << "\n";
  os << "nontrivial colorings: " << nontrivial.size() << "\n";
  for (const auto& c : nontrivial) os << "  " << assignment_string(d.generators, c) << "\n";
  return kOk;
}

int cmd_fstar(Session& s, const std::string& diagram_path, const std::vector<std::string>& moves) {
  const DiagramData d = s.diagram(diagram_path);
  PointCensus census = d.census;
  auto& os = s.text();
  std::int64_t value = f_star(census);
  json steps = json::array();
  s.result() = {{"census", io::census_to_json(census)}, {"f_star", value}};
  os << "f* = " << value << "\n";

  for (const auto& m : moves) {
    int dir = 0;
    if (m == "+1" || m == "1")
      dir = 1;
    else if (m == "-1")
      dir = -1;
    else
      throw Error(ErrorKind::InvalidInput, "--apply-h expects +1 or -1, got '" + m + "'");
    try {
      census = apply_h_move_census(census, dir);
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::EmptyBucket) throw;
      steps.push_back({{"direction", dir}, {"legal", false}});
      s.result()["moves"] = steps;
      os << "h(" << (dir > 0 ? "+1" : "-1") << "): illegal, " << e.what() << "\n";
      return kDomainFailure;
    }
    const std::int64_t next = f_star(census);
    steps.push_back({{"direction", dir}, {"legal", true}, {"f_star", next}, {"delta", next - value}});
    os << "h(" << (dir > 0 ? "+1" : "-1") << "): f* = " << next << " (delta " << (next - value) << ")\n";
    value = next;
  }
  s.result()["moves"] = steps;
  s.result()["final_census"] = io::census_to_json(census);
  return kOk;
}

int cmd_singular_pairs(Session& s, const std::string& bq_path) {
  const FiniteBiquandle bq = s.biquandle(bq_path);
  const auto pairs = singular_pairs(bq);
  json rows = json::array();
  for (const auto& [b, c] : pairs) rows.push_back({b, c});
  s.result() = {{"count", pairs.size()}, {"pairs", rows}};
  auto& os = s.text();
  os << "singular pairs: " << pairs.size() << "\n";
  for (const auto& [b, c] : pairs) os << "  (" << b << ", " << c << ")\n";
  return kOk;
}

int cmd_homomorphisms(Session& s, const std::string& src_path, const std::string& dst_path, std::size_t cap,
                      bool iso, const std::vector<Element>& generators, bool list) {
  const FiniteBiquandle src = s.biquandle(src_path);
  const FiniteBiquandle dst = s.biquandle(dst_path);
  HomomorphismOptions opts;
  opts.cap = cap;
  opts.isomorphisms_only = iso;
  if (!generators.empty()) opts.generators = generators;
  const auto homs = enumerate_homomorphisms(src, dst, opts);
  s.result() = {{"count", homs.maps.size()}, {"truncated", homs.truncated}};
  if (list) s.result()["maps"] = homs.maps;
  auto& os = s.text();
  os << (iso ? "isomorphisms: " : "homomorphisms: ") << homs.maps.size() << (homs.truncated ? " (truncated)" : "")
     << "\n";
  if (list)
    for (const auto& f : homs.maps) os << "  " << tuple_string(f) << "\n";
  return homs.truncated ? kDomainFailure : kOk;
}

// Runs the full Z9 / θ_S / FR pipeline from the shipped fixtures and diffs
// every value against expected_reproduce.json.
int cmd_reproduce(Session& s, std::ostream& err, const std::string& dir) {
  namespace fs = std::filesystem;
  const fs::path root(dir);
  const json expected = s.load_json("expected", (root / "expected_reproduce.json").string());
  const auto tables = io::biquandle_tables_from_json(s.load_json("biquandle", (root / "z9_quandle.json").string()));
  const Cocycle3 theta = s.cocycle((root / "theta_s.json").string(), err);
  const DiagramData fr = s.diagram((root / "fr_statesum.json").string());
  const DiagramData presented = s.diagram((root / "fr_presented.json").string());

  json got;
  got["orientation_check"] = {{"x", 0}, {"y", 1}, {"under", tables.under(0, 1)}};
  VerifyOptions vopts;
  vopts.workers = s.workers();
  got["biquandle_verified"] = verify_biquandle(tables.under, tables.over, vopts).passed;
  const FiniteBiquandle bq = FiniteBiquandle::from_tables(tables.under, tables.over, s.workers());

  CheckOptions copts;
  copts.workers = s.workers();
  auto brief = [](const ConditionResult& r) {
    return json{{"status", std::string(to_string(r.status))}, {"violations", r.violations}};
  };
  got["condition_i"] = brief(check_condition_i(theta, bq, copts));
  got["condition_ii_printed"] = brief(check_condition_ii(theta, bq, ConditionIIVariant::Printed, copts));
  got["condition_ii_symmetric"] = brief(check_condition_ii(theta, bq, ConditionIIVariant::Symmetric, copts));
  got["condition_iii"] = brief(check_condition_iii(theta, bq, copts));
  got["singular_pairs"] = singular_pairs(bq).size();

  StateSumOptions sopts;
  sopts.workers = s.workers();
  sopts.audit = true;
  const auto fr_sum = state_sum(fr, bq, theta, sopts);
  std::vector<Coloring> nontrivial;
  for (const auto& cm : fr_sum.per_coloring)
    if (cm.exponent != 0) nontrivial.push_back(cm.coloring);
  const json doc = io::statesum_document(fr_sum, nontrivial);
  got["statesum"] = {{"polynomial", doc["polynomial"]},
                     {"coeffs", doc["coeffs"]},
                     {"colorings", doc["colorings"]},
                     {"nontrivial", doc["nontrivial"]}};

  got["presented_colorings"] = coloring_count(presented, bq, {s.workers()});
  // Relation-constrained reading: the FR triple points over the printed presentation.
  DiagramData constrained = fr;
  constrained.relations = presented.relations;
  const auto constrained_sum = state_sum(constrained, bq, theta, {s.workers(), false});
  got["presented_statesum"] = {{"polynomial", to_string(constrained_sum.value)},
                               {"coeffs", constrained_sum.value.coeffs()},
                               {"colorings", constrained_sum.coloring_count}};

  auto& os = s.text();
  bool all_match = true;
  json checks = json::object();
  for (const auto& [key, want] : expected.items()) {
    const bool match = got.contains(key) && got[key] == want;
    all_match &= match;
    checks[key] = match;
    os << (match ? "ok   " : "DIFF ") << key << ": " << (got.contains(key) ? got[key].dump() : "<missing>");
    if (!match) os << " (expected " << want.dump() << ")";
    os << "\n";
  }
  os << (all_match ? "reproduction matches expected values\n" : "reproduction differs from expected values\n");
  s.result() = {{"values", got}, {"matches", checks}, {"all_match", all_match}};
  return all_match ? kOk : kDomainFailure;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Biquandle cocycle invariants of immersed surface-links", "bqinv"};
  app.require_subcommand(1);
  app.fallthrough();
  app.set_version_flag("--version", std::string(kVersion));

  Globals g;
  app.add_flag("--json", g.json, "Print the JSON run manifest instead of text");
  app.add_option("--workers", g.workers, "Worker threads (0 = available parallelism)");
  app.add_option("--manifest", g.manifest_path, "Also write the JSON run manifest to this file");

  std::string p1, p2, p3;
  auto* verify_bq = app.add_subcommand("verify-biquandle", "Check the biquandle axioms of a table file");
  verify_bq->add_option("biquandle", p1)->required();

  bool singular = false;
  std::string variant = "printed";
  auto* verify_cc = app.add_subcommand("verify-cocycle", "Check 3-cocycle conditions (i), (ii) and optionally (iii)");
  verify_cc->add_option("biquandle", p1)->required();
  verify_cc->add_option("cocycle", p2)->required();
  verify_cc->add_flag("--singular", singular, "Also check the singular condition (iii)");
  verify_cc->add_option("--variant", variant, "Form of condition (ii)")
      ->check(CLI::IsMember({"printed", "symmetric", "both"}));

  bool count_only = false, list = false;
  auto* colorings = app.add_subcommand("colorings", "Enumerate colorings of a diagram presentation");
  colorings->add_option("biquandle", p1)->required();
  colorings->add_option("diagram", p2)->required();
  colorings->add_flag("--count-only", count_only, "Count without materializing the colorings");
  colorings->add_flag("--list", list, "List every coloring");

  auto* statesum = app.add_subcommand("statesum", "Compute the state-sum invariant");
  statesum->add_option("biquandle", p1)->required();
  statesum->add_option("cocycle", p2)->required();
  statesum->add_option("diagram", p3)->required();

  std::vector<std::string> moves;
  auto* fstar = app.add_subcommand("fstar", "Evaluate f* on a diagram census, optionally after h-moves");
  fstar->add_option("diagram", p1)->required();
  fstar->add_option("--apply-h", moves, "Flip one triple point: -1 (positive to negative) or +1")
      ->allow_extra_args(false)
      ->multi_option_policy(CLI::MultiOptionPolicy::TakeAll);

  auto* sing = app.add_subcommand("singular-pairs", "List pairs (b, c) satisfying the singular relations");
  sing->add_option("biquandle", p1)->required();

  std::size_t cap = 1'000'000;
  bool iso = false;
  std::vector<Element> gens;
  auto* homs = app.add_subcommand("homomorphisms", "Enumerate biquandle homomorphisms");
  homs->add_option("source", p1)->required();
  homs->add_option("target", p2)->required();
  homs->add_option("--cap", cap, "Maximum number of maps to return");
  homs->add_flag("--iso", iso, "Keep only isomorphisms");
  homs->add_option("--generators", gens, "Generating set of the source")->delimiter(',');
  homs->add_flag("--list", list, "List every map");

  std::string fixtures = BQINV_FIXTURE_DIR;
  auto* repro = app.add_subcommand("reproduce-paper", "Run the Z9 / FR pipeline and diff against expected values");
  repro->add_option("--fixtures", fixtures, "Fixture directory");

  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForVersion&) {
    out << kVersion << "\n";
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n" << "run with --help for usage\n";
    return kInputError;
  }

  CLI::App* sub = app.get_subcommands().front();
  Session session(sub->get_name(), g);
  int code = kOk;
  try {
    if (sub == verify_bq)
      code = cmd_verify_biquandle(session, p1);
    else if (sub == verify_cc)
      code = cmd_verify_cocycle(session, err, p1, p2, singular, variant);
    else if (sub == colorings)
      code = cmd_colorings(session, p1, p2, count_only, list);
    else if (sub == statesum)
      code = cmd_statesum(session, err, p1, p2, p3);
    else if (sub == fstar)
      code = cmd_fstar(session, p1, moves);
    else if (sub == sing)
      code = cmd_singular_pairs(session, p1);
    else if (sub == homs)
      code = cmd_homomorphisms(session, p1, p2, cap, iso, gens, list);
    else if (sub == repro)
      code = cmd_reproduce(session, err, fixtures);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    session.result() = {{"error", e.what()}, {"kind", std::string(to_string(e.kind()))}};
    code = kInputError;
  }

  const json manifest = session.manifest(code);
  if (g.json)
    out << manifest.dump(2) << "\n";
  else
    out << session.text().str();
  if (!g.manifest_path.empty()) {
    std::ofstream mf(g.manifest_path);
    if (!mf) {
      err << "error: cannot write manifest " << g.manifest_path << "\n";
      return kInputError;
    }
    mf << manifest.dump(2) << "\n";
  }
  return code;
}

}  // namespace bqinv::cli

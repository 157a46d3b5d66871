// Acceptance suite: one PASS/FAIL line per criterion.

#include <chrono>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>

#include "bqinv/io.hpp"
#include "cli.hpp"
#include "support.hpp"

using namespace bqinv;
using namespace bqinv::testing;
using bqinv::io::json;

namespace {

namespace fs = std::filesystem;

const fs::path kFixtures = BQINV_FIXTURE_DIR;

std::string fixture(const char* name) { return (kFixtures / name).string(); }

struct Invocation {
  int code = -1;
  std::string out, err;
  double seconds = 0;
};

Invocation invoke(std::vector<std::string> args) {
  args.insert(args.begin(), "bqinv");
  std::ostringstream out, err;
  const auto start = std::chrono::steady_clock::now();
  Invocation r;
  r.code = cli::run(args, out, err);
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  r.out = out.str();
  r.err = err.str();
  return r;
}

// Accumulates failure notes for one criterion.
class Check {
 public:
  void expect(bool ok, const std::string& note) {
    if (!ok) notes_.push_back(note);
  }
  bool ok() const { return notes_.empty(); }
  std::string summary() const {
    std::string s;
    for (std::size_t i = 0; i < notes_.size() && i < 3; ++i) s += (i ? "; " : "") + notes_[i];
    if (notes_.size() > 3) s += "; +" + std::to_string(notes_.size() - 3) + " more";
    return s;
  }

 private:
  std::vector<std::string> notes_;
};

std::string fmt_seconds(double s) {
  std::ostringstream os;
  os.precision(3);
  os << std::fixed << s << " s";
  return os.str();
}

// ------------------------------------------------------------------ criteria

Check criterion_1(std::string& detail) {
  Check c;
  const auto run = invoke({"verify-biquandle", fixture("z9_quandle.json")});
  c.expect(run.code == cli::kOk, "verify-biquandle exit " + std::to_string(run.code));
  c.expect(run.seconds < 0.1, "runtime " + fmt_seconds(run.seconds));

  // every single-entry mutation of either table, every replacement value
  const auto rows = z9_rows();
  const Table under = Table::from_rows(rows), over = Table::projection(9);
  std::size_t mutations = 0, detected = 0;
  for (int which = 0; which < 2; ++which)
    for (Element x = 0; x < 9; ++x)
      for (Element y = 0; y < 9; ++y)
        for (Element v = 0; v < 9; ++v) {
          Table u = under, o = over;
          Table& t = which == 0 ? u : o;
          if (t(x, y) == v) continue;
          t(x, y) = v;
          ++mutations;
          detected += !verify_biquandle(u, o).passed;
        }
  c.expect(detected == mutations, std::to_string(mutations - detected) + " undetected mutations");

  // and once through the command line, which must report a witness
  const fs::path tmp = fs::temp_directory_path() / "bqinv_acceptance_corrupt.json";
  auto corrupted = rows;
  corrupted[0][1] = 3;
  std::ofstream(tmp) << json{{"n", 9}, {"quandle", corrupted}}.dump();
  const auto bad = invoke({"--json", "verify-biquandle", tmp.string()});
  fs::remove(tmp);
  c.expect(bad.code == cli::kDomainFailure, "corrupted table exit " + std::to_string(bad.code));
  c.expect(bad.code == cli::kDomainFailure && !json::parse(bad.out)["result"]["violations"].empty(),
           "no witness reported");
  detail = std::to_string(detected) + "/" + std::to_string(mutations) + " mutations detected, " +
           fmt_seconds(run.seconds);
  return c;
}

json statesum_manifest(Invocation& run) {
  run = invoke({"--json", "statesum", fixture("z9_quandle.json"), fixture("theta_s.json"), fixture("fr_statesum.json")});
  return run.code == cli::kOk ? json::parse(run.out) : json{};
}

Check criterion_2(std::string& detail) {
  Check c;
  Invocation run;
  const json m = statesum_manifest(run);
  c.expect(run.code == cli::kOk, "statesum exit " + std::to_string(run.code));
  if (run.code == cli::kOk) {
    c.expect(m["result"]["coeffs"] == json::array({72, 9, 0}), "coeffs " + m["result"]["coeffs"].dump());
    c.expect(m["result"]["polynomial"] == "72 + 9t", "polynomial " + m["result"]["polynomial"].dump());
    detail = m["result"]["polynomial"].get<std::string>() + ", " + fmt_seconds(run.seconds);
  }
  c.expect(run.seconds < 0.1, "runtime " + fmt_seconds(run.seconds));
  return c;
}

Check criterion_3(std::string& detail) {
  Check c;
  Invocation run;
  const json m = statesum_manifest(run);
  std::set<std::pair<std::string, std::string>> got, want;
  for (int a : {0, 3, 6})
    for (int b : {1, 4, 7}) want.insert({std::to_string(a), std::to_string(b)});
  std::size_t listed = 0;
  if (run.code == cli::kOk)
    for (const auto& row : m["result"]["nontrivial"]) {
      got.insert({row[0].get<std::string>(), row[1].get<std::string>()});
      ++listed;
    }
  c.expect(got == want && listed == want.size(), "nontrivial set differs");
  detail = std::to_string(listed) + " colorings = {0,3,6}x{1,4,7}";
  return c;
}

Check criterion_4(std::string& detail) {
  Check c;
  const auto run = invoke({"--json", "verify-cocycle", "--variant", "both", "--singular", fixture("z9_quandle.json"),
                           fixture("theta_s.json")});
  c.expect(run.code == cli::kOk || run.code == cli::kDomainFailure, "verify-cocycle exit " + std::to_string(run.code));
  c.expect(run.seconds < 1.0, "runtime " + fmt_seconds(run.seconds));
  if (run.code > cli::kDomainFailure) return c;
  const json r = json::parse(run.out)["result"];
  c.expect(r["condition_i"]["status"] == "pass", "condition (i) " + r["condition_i"]["status"].dump());
  c.expect(r["condition_i"]["checked"] == 81, "condition (i) checked " + r["condition_i"]["checked"].dump());
  std::string verdicts;
  bool some_variant_passes = false;
  for (const char* v : {"printed", "symmetric"}) {
    const json& cv = r["condition_ii"][v];
    c.expect(cv["checked"] == 6561, std::string(v) + " checked " + cv["checked"].dump());
    c.expect(cv["status"] == "pass" || cv["status"] == "fail", std::string(v) + " verdict missing");
    some_variant_passes |= cv["status"] == "pass";
    verdicts += std::string(v) + "=" + cv["status"].get<std::string>() + "(" + cv["violations"].dump() + ") ";
  }
  // The discrepancy is reported through the exit code and the manifest.
  c.expect((run.code == cli::kOk) == r["all_requested_pass"].get<bool>(), "exit code disagrees with verdicts");
  Invocation ss;
  const json m = statesum_manifest(ss);
  c.expect(ss.code == cli::kOk && m["result"]["coeffs"] == json::array({72, 9, 0}), "state-sum changed");
  detail = "(i) pass, (ii) " + verdicts + "(iii)=" + r["condition_iii"]["status"].get<std::string>() + "(" +
           r["condition_iii"]["violations"].dump() + "), " + (some_variant_passes ? "a (ii) variant passes" : "no (ii) variant passes") +
           ", " + fmt_seconds(run.seconds);
  return c;
}

// Direct scan over all a and every (b, c) satisfying b⊗c = b⊔c, c⊗b = c⊔b.
bool brute_force_condition_iii(const Cocycle3& th, const std::vector<std::vector<Element>>& U,
                               const std::vector<std::vector<Element>>& O, std::uint64_t& failures) {
  const std::size_t n = U.size();
  const std::uint32_t m = th.modulus();
  failures = 0;
  for (Element b = 0; b < n; ++b)
    for (Element c = 0; c < n; ++c) {
      if (O[b][c] != U[b][c] || O[c][b] != U[c][b]) continue;
      for (Element a = 0; a < n; ++a) {
        const std::uint32_t first = (th.exponent(a, b, c) + th.exponent(a, c, b)) % m;
        const std::uint32_t second = (th.exponent(b, c, a) + th.exponent(c, b, a)) % m;
        if (first != 0 || second != 0) ++failures;
      }
    }
  return failures == 0;
}

Check criterion_5(std::string& detail) {
  Check c;
  const auto bq = z9();
  const auto p = plain(bq);
  std::uint64_t brute_failures = 0;
  const bool brute_pass = brute_force_condition_iii(theta_s(), p.U, p.O, brute_failures);
  const auto r = check_condition_iii(theta_s(), bq);
  c.expect((r.status == ConditionStatus::Pass) == brute_pass, "verdicts differ");
  c.expect(r.violations == brute_failures, "violation counts differ");

  Rng rng(5005);
  for (int k = 0; k < 50; ++k) {
    const auto rb = random_biquandle(rng, 6);
    const auto rp = plain(rb);
    const auto th = random_cocycle(rng, rb.size(), 3, 6);
    std::uint64_t f = 0;
    const bool pass = brute_force_condition_iii(th, rp.U, rp.O, f);
    const auto rr = check_condition_iii(th, rb);
    c.expect((rr.status == ConditionStatus::Pass) == pass && rr.violations == f, "random case " + std::to_string(k));
  }
  detail = std::string("theta_S ") + (brute_pass ? "passes" : "fails") + " in both (" +
           std::to_string(brute_failures) + " failing (a,b,c)), plus 50 random cases";
  return c;
}

Check criterion_6(std::string& detail) {
  Check c;
  Rng rng(6006);
  std::uniform_int_distribution<std::int64_t> count(0, 20);
  std::uniform_int_distribution<int> moves(1, 8), coin(0, 1);
  std::size_t applied = 0;
  for (int k = 0; k < 100; ++k) {
    PointCensus census{count(rng), count(rng), count(rng), count(rng), count(rng), count(rng)};
    const PointCensus balanced{census.t_plus, census.t_plus, census.w_plus, census.w_plus, census.b_minus,
                               census.b_minus};
    c.expect(f_star(balanced) == 0, "balanced census " + std::to_string(k));
    for (int step = moves(rng); step > 0; --step) {
      const int dir = coin(rng) ? 1 : -1;
      const bool legal = dir == -1 ? census.t_plus > 0 : census.t_minus > 0;
      if (!legal) {
        bool raised = false;
        try {
          apply_h_move_census(census, dir);
        } catch (const Error& e) {
          raised = e.kind() == ErrorKind::EmptyBucket;
        }
        c.expect(raised, "illegal move accepted");
        continue;
      }
      const auto next = apply_h_move_census(census, dir);
      c.expect(std::abs(f_star(next) - f_star(census)) == 4, "|delta| != 4");
      census = next;
      ++applied;
    }
  }
  const auto cli_run = invoke({"fstar", fixture("fr_statesum.json"), "--apply-h", "-1"});
  c.expect(cli_run.code == cli::kOk, "fstar exit " + std::to_string(cli_run.code));
  detail = "100 censuses, " + std::to_string(applied) + " legal h-applications";
  return c;
}

Check criterion_7(std::string& detail) {
  Check c;
  std::vector<FiniteBiquandle> biquandles;
  for (const char* name : {"z9_quandle.json", "trivial2.json", "one_element.json"})
    biquandles.push_back(io::biquandle_from_json(io::parse_json(io::read_file(fixture(name)))));
  std::vector<DiagramData> diagrams;
  for (const char* name : {"fr_statesum.json", "fr_presented.json"})
    diagrams.push_back(io::diagram_from_json(io::parse_json(io::read_file(fixture(name)))));

  auto law = [&](const DiagramData& d, const FiniteBiquandle& bq, const Cocycle3& th, const std::string& label) {
    const auto count = static_cast<std::int64_t>(oracle_colorings(d, bq).size());
    const auto zero = state_sum(d, bq, Cocycle3(th.modulus()));
    c.expect(zero.value == GroupRingElement::monomial(th.modulus(), 0, count), label + ": zero cocycle");
    c.expect(state_sum(d, bq, th).value.augmentation() == count, label + ": coefficient sum");
  };
  std::size_t cases = 0;
  for (const auto& bq : biquandles)
    for (const auto& d : diagrams) {
      Cocycle3 th = bq.size() == 9 ? theta_s() : Cocycle3(3);
      law(d, bq, th, "fixture " + d.name);
      ++cases;
    }
  Rng rng(7007);
  std::uniform_int_distribution<std::size_t> pick_g(1, 3), pick_r(0, 2), pick_t(1, 6);
  std::uniform_int_distribution<std::uint32_t> pick_m(1, 5);
  for (int k = 0; k < 40; ++k) {
    const auto bq = random_biquandle(rng, 4);
    const auto d = random_diagram(rng, pick_g(rng), pick_r(rng), pick_t(rng));
    law(d, bq, random_cocycle(rng, bq.size(), pick_m(rng), 10), "random " + std::to_string(k));
    ++cases;
  }
  detail = std::to_string(cases) + " (diagram, biquandle) cases";
  return c;
}

Check criterion_8(std::string& detail) {
  Check c;
  auto values = [](const std::vector<Coloring>& cs) {
    std::vector<std::vector<Element>> out;
    for (const auto& x : cs) out.push_back(x.values);
    return out;
  };
  const auto bq = z9();
  for (const auto& d : {fr_statesum(), fr_presented()})
    c.expect(values(solve_colorings(d, bq)) == oracle_colorings(d, bq), "fixture " + d.name);

  Rng rng(8008);
  std::uniform_int_distribution<std::size_t> pick_g(1, 6), pick_r(0, 4);
  std::size_t done = 0, largest = 0;
  while (done < 50) {
    const auto rb = random_biquandle(rng, 8);
    const std::size_t g = pick_g(rng);
    std::size_t space = 1;
    for (std::size_t i = 0; i < g; ++i) space *= rb.size();
    if (space > 100'000) continue;
    const auto d = random_diagram(rng, g, pick_r(rng), 0);
    const auto oracle = oracle_colorings(d, rb);
    c.expect(values(solve_colorings(d, rb)) == oracle, "random presentation " + std::to_string(done));
    c.expect(values(solve_colorings(d, rb, {4})) == oracle, "random presentation (4 workers) " + std::to_string(done));
    largest = std::max(largest, space);
    ++done;
  }
  detail = "2 fixtures + 50 random presentations (largest n^g = " + std::to_string(largest) + ")";
  return c;
}

Check criterion_9(std::string& detail) {
  Check c;
  Rng rng(9009);
  std::vector<FiniteBiquandle> pool;
  for (const char* name : {"z9_quandle.json", "trivial2.json", "one_element.json"})
    pool.push_back(io::biquandle_from_json(io::parse_json(io::read_file(fixture(name)))));
  for (int k = 0; k < 100; ++k) pool.push_back(random_biquandle(rng, 7));

  std::size_t corruptions = 0;
  for (std::size_t i = 0; i < pool.size(); ++i) {
    const auto& bq = pool[i];
    const auto p = plain(bq);
    const std::string label = "table " + std::to_string(i);
    c.expect(oracle_is_biquandle(p.U, p.O), label + ": oracle rejects");
    const Element n = static_cast<Element>(bq.size());
    for (Element x = 0; x < n; ++x) {
      c.expect(bq.under()(x, x) == bq.over()(x, x), label + ": diagonal");
      for (Element y = 0; y < n; ++y) {
        c.expect(bq.apply(Op::UBI, bq.apply(Op::UB, x, y), y) == x, label + ": ubi(ub)");
        c.expect(bq.apply(Op::UB, bq.apply(Op::UBI, x, y), y) == x, label + ": ub(ubi)");
        c.expect(bq.apply(Op::OBI, bq.apply(Op::OB, x, y), y) == x, label + ": obi(ob)");
        c.expect(bq.apply(Op::OB, bq.apply(Op::OBI, x, y), y) == x, label + ": ob(obi)");
        for (Element z = 0; z < n; ++z) {
          const auto U = [&](Element a, Element b) { return p.U[a][b]; };
          const auto O = [&](Element a, Element b) { return p.O[a][b]; };
          c.expect(U(U(x, y), U(z, y)) == U(U(x, z), O(y, z)), label + ": exchange 1");
          c.expect(U(O(x, y), O(z, y)) == O(U(x, z), U(y, z)), label + ": exchange 2");
          c.expect(O(O(x, y), O(z, y)) == O(O(x, z), U(y, z)), label + ": exchange 3");
        }
      }
    }
    c.expect(verify_biquandle(bq.under(), bq.over()).passed, label + ": verifier rejects");

    if (n < 2) continue;
    std::uniform_int_distribution<Element> e(0, n - 1);
    std::uniform_int_distribution<int> which(0, 1);
    for (int k = 0; k < 5; ++k) {
      Table u = bq.under(), o = bq.over();
      Table& t = which(rng) ? u : o;
      const Element x = e(rng), y = e(rng);
      Element v = e(rng);
      while (v == t(x, y)) v = e(rng);
      t(x, y) = v;
      ++corruptions;
      const bool verdict = verify_biquandle(u, o).passed;
      c.expect(!verdict, label + ": corruption undetected");
      c.expect(verdict == oracle_is_biquandle(plain_rows(u), plain_rows(o)), label + ": oracle disagrees on corruption");
    }
  }
  detail = std::to_string(pool.size()) + " tables, " + std::to_string(corruptions) + " corruptions detected";
  return c;
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<Check(std::string&)>>> criteria = {
      {"Z9 fixture verification", criterion_1},
      {"state-sum reproduction", criterion_2},
      {"nontrivial-coloring set", criterion_3},
      {"cocycle conditions", criterion_4},
      {"condition (iii) oracle equivalence", criterion_5},
      {"f* arithmetic", criterion_6},
      {"zero-cocycle law", criterion_7},
      {"solver oracle equivalence", criterion_8},
      {"axiom property suite", criterion_9},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    std::string detail;
    Check c;
    try {
      c = criteria[i].second(detail);
    } catch (const std::exception& e) {
      c.expect(false, std::string("exception: ") + e.what());
    }
    std::cout << (c.ok() ? "PASS" : "FAIL") << " criterion " << i + 1 << ": " << criteria[i].first;
    if (!detail.empty()) std::cout << " [" << detail << "]";
    if (!c.ok()) std::cout << " -- " << c.summary();
    std::cout << "\n";
    failed += !c.ok();
  }
  std::cout << (criteria.size() - failed) << "/" << criteria.size() << " criteria passed\n";
  return failed == 0 ? 0 : 1;
}

// One PASS/FAIL line per acceptance criterion; exit status 0 iff all pass.
// Usage: acceptance [--skip-closure]

#include <chrono>
#include <cstring>
#include <functional>
#include <iomanip>
#include <iostream>
#include <random>

#include "support.hpp"

using namespace recomb;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

struct Timed {
  ReportTable table;
  double seconds;
};

Timed timed(const std::function<ReportTable()>& f) {
  const auto t0 = Clock::now();
  auto t = f();
  return {std::move(t), seconds_since(t0)};
}

ReportTable pick(const ReportTable& from, const std::string& title, const std::function<bool(const std::string&)>& keep) {
  ReportTable out(title);
  for (const auto& r : from.rows())
    if (keep(r.name)) out.add(r.name, r.expected, r.actual, r.pass, r.required);
  return out;
}

bool has(const std::string& s, std::initializer_list<const char*> needles) {
  for (const auto* n : needles)
    if (s.find(n) != std::string::npos) return true;
  return false;
}

int failures = 0;

void report(int id, const ReportTable& t, double seconds, double budget) {
  const bool in_time = seconds <= budget;
  const bool ok = t.passed() && in_time;
  failures += ok ? 0 : 1;
  std::cout << "criterion " << std::setw(2) << id << ": " << (ok ? "PASS" : "FAIL") << "  " << t.title() << "  ("
            << std::fixed << std::setprecision(2) << seconds << " s, budget " << budget << " s)\n";
  for (const auto& r : t.rows()) {
    if (r.pass && r.expected.size() > 80) {
      std::cout << "    [PASS] " << r.name << "\n";
      continue;
    }
    const char* tag = r.pass ? "PASS" : (r.required ? "FAIL" : "MISS");
    std::cout << "    [" << tag << "] " << r.name << ": expected " << r.expected << ", got " << r.actual
              << (r.required ? "" : " (stretch)") << "\n";
  }
  if (!in_time) std::cout << "    [FAIL] over the time budget\n";
}

// Expansion columns against the literal definition.
void oracle_columns(ReportTable& t, int n, int d) {
  const MonomialBasis b(n, d);
  bool same = true;
  for (const auto& m : b.monomials())
    same = same && oracle::from_library(expand_monomial(m)) == oracle::evaluate(m.to_tree(), n);
  t.check("every column agrees with the definition oracle", true, same);
}

ReportTable properties() {
  ReportTable t("property suites");
  std::mt19937_64 rng(2024);

  const MonomialBasis b7(3, 7);
  bool equivariant = true;
  for (int i = 0; i < 200; ++i) {
    const auto& m = b7[rng() % b7.size()];
    const auto sigma = Permutation::random(7, rng);
    equivariant = equivariant && expand_monomial(m.relabeled(sigma.images())) == gen::permuted(expand_monomial(m), sigma);
  }
  t.check("expansion equivariance, 200 random sigma.m", true, equivariant);

  bool mass = true, oracle_ok = true;
  for (int i = 0; i < 300; ++i) {
    const int n = 2 + i % 3;
    const int k = 1 + static_cast<int>(rng() % 3);
    const auto tree = gen::random_tree(n, k, rng);
    const auto x = expand_monomial(straighten(tree, n));
    std::int64_t expected = 1;
    for (int j = 0; j < k; ++j) expected *= gen::factorial(n);
    mass = mass && x.mass() == expected;
    oracle_ok = oracle_ok && oracle::from_library(x) == oracle::evaluate(tree, n);
  }
  t.check("mass conservation (n!)^k, 300 random monomials", true, mass);
  t.check("expansion equals definition oracle, 300 random trees", true, oracle_ok);

  bool idem = true;
  for (int i = 0; i < 1000; ++i) {
    const int n = 2 + i % 3;
    const auto tree = gen::random_tree(n, 1 + static_cast<int>(rng() % 4), rng);
    const auto m = straighten(tree, n);
    idem = idem && straighten(m.to_tree(), n) == m && straighten(gen::shuffled(tree, rng), n) == m;
  }
  t.check("straighten idempotent and child-order invariant, 1000 random trees", true, idem);

  std::size_t vectors = 0;
  bool kills = true, stable = true;
  for (auto [n, d] : {std::pair{2, 4}, {2, 5}, {2, 6}, {3, 5}, {3, 7}, {4, 7}}) {
    const auto e = build_expansion_matrix(n, d);
    const auto m = to_integer_matrix(e.entries);
    for (const auto& vs : {canonical_basis(e), reduced_basis(e)})
      for (const auto& v : vs) {
        ++vectors;
        for (std::size_t i = 0; i < m.rows(); ++i) kills = kills && dot(m.row(i), v) == 0;
      }
    const auto exact = rcf(e.entries).rank;
    stable = stable && modular_rank(e.entries, 101) == exact && modular_rank(e.entries, 103) == exact;
  }
  t.check("E v = 0 for every emitted basis vector (" + std::to_string(vectors) + " vectors)", true, kills);
  t.check("matrix rank mod 101 = mod 103 = exact, degree <= 7", true, stable);

  const GoldenData g(GoldenData::default_dir());
  auto b = std::make_shared<const MonomialBasis>(3, 7);
  bool module_stable = true;
  for (const auto* name : {"I", "J", "K", "P", "Q", "R"})
    module_stable = module_stable && module_rank({g.identity(name)}, b, 101) == module_rank({g.identity(name)}, b, 103);
  auto b4 = std::make_shared<const MonomialBasis>(2, 4);
  module_stable = module_stable && module_rank({g.identity("identity3")}, b4, 101) ==
                                       module_rank({g.identity("identity3")}, b4, 103);
  t.check("module rank mod 101 = mod 103, degree <= 7", true, module_stable);

  const auto lifts = lift_identity(g.identity("R"));
  bool lifted = true;
  for (const auto& lc : lifts) lifted = lifted && !lc.collapsed && evaluate_identity(lc.result).is_zero();
  t.check("all lifts of R are identities", std::string("8/8"),
          std::to_string(lifted ? lifts.size() : 0) + "/" + std::to_string(lifts.size()));
  return t;
}

}  // namespace

int main(int argc, char** argv) {
  const bool skip_closure = argc > 1 && std::strcmp(argv[1], "--skip-closure") == 0;
  const GoldenData g(GoldenData::default_dir());
  const unsigned threads = default_thread_count();

  auto binary = timed([&] {
    auto t = reproduce_binary(g, threads);
    oracle_columns(t, 2, 4);
    return t;
  });
  report(1, pick(binary.table, "binary degree 4: E, RCF, canonical basis",
                 [](const std::string& s) {
                   return has(s, {"monomials", "expansion", "rank", "row canonical", "canonical", "oracle"}) &&
                          !has(s, {"module", "single"});
                 }),
         binary.seconds, 1.0);
  report(2, pick(binary.table, "binary degree 4: HNF of E^t",
                 [](const std::string& s) { return has(s, {"HNF", "U E^t", "det U"}); }),
         binary.seconds, 1.0);
  report(3, pick(binary.table, "binary degree 4: LLL nullspace lattice",
                 [](const std::string& s) { return has(s, {"lattice", "reduced"}); }),
         binary.seconds, 1.0);

  auto deg5 = timed([&] {
    auto t = reproduce_deg5(g, threads);
    oracle_columns(t, 3, 5);
    return t;
  });
  report(4, pick(deg5.table, "ternary degree 5: full rank", [](const std::string&) { return true; }), deg5.seconds,
         1.0);

  auto deg7 = timed([&] { return reproduce_deg7(g, threads); });
  const auto is6 = [](const std::string& s) {
    return has(s, {"expands to zero", "module rank", "generator", "sieve", "corollary"});
  };
  const auto is7 = [&](const std::string& s) { return !is6(s) && has(s, {"reduced", "lattice"}); };
  auto c5 = pick(deg7.table, "ternary degree 7: E, rank, canonical norms",
                 [&](const std::string& s) { return !is6(s) && !is7(s); });
  auto c6 = pick(deg7.table, "ternary degree 7: identities, module ranks, generators", is6);
  auto b7 = std::make_shared<const MonomialBasis>(3, 7);
  c6.add("module rank I (reported)", "-", std::to_string(module_rank({g.identity("I")}, b7)), true);
  report(5, c5, deg7.seconds, 30.0);
  report(6, c6, deg7.seconds, 120.0);
  report(7, pick(deg7.table, "ternary degree 7: reduced lattice basis", is7), deg7.seconds, 300.0);

  auto deg9 = timed([&] { return reproduce_deg9_rank(g, threads); });
  report(8, deg9.table, deg9.seconds, 120.0);

  if (skip_closure) {
    std::cout << "criterion  9: SKIPPED (--skip-closure)\n";
  } else {
    ClosureOptions exact;
    exact.threads = threads;
    auto ex = timed([&] { return reproduce_deg9_closure(g, exact); });
    ClosureOptions certify = exact;
    certify.mode = ClosureMode::certify;
    auto ce = timed([&] { return reproduce_deg9_closure(g, certify); });
    ReportTable c9("ternary degree 9: closure of R, exact and certify");
    for (const auto& r : ex.table.rows()) c9.add("exact: " + r.name, r.expected, r.actual, r.pass, r.required);
    for (const auto& r : ce.table.rows()) c9.add("certify: " + r.name, r.expected, r.actual, r.pass, r.required);
    c9.add("certify within 15 min", "<= 900 s", std::to_string(static_cast<int>(ce.seconds)) + " s",
           ce.seconds <= 900.0);
    std::cout << "    exact closure took " << std::fixed << std::setprecision(1) << ex.seconds << " s\n";
    report(9, c9, ex.seconds + ce.seconds, 4 * 3600.0);
  }

  auto props = timed(properties);
  report(10, props.table, props.seconds, 600.0);

  std::cout << (failures == 0 ? "all criteria passed" : std::to_string(failures) + " criteria failed") << "\n";
  return failures == 0 ? 0 : 1;
}

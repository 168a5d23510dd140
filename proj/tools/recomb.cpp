// Command line front end: expansion matrices, nullspace bases, identity
// verification, generator search and the reproduction checks.

#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <memory>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "recomb/recomb.hpp"

namespace fs = std::filesystem;
using namespace recomb;

namespace {

constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

std::vector<IntVector> nullspace_basis(const ExpansionMatrix& e, const std::string& method) {
  return method == "rcf" ? canonical_basis(e) : reduced_basis(e);
}

int cmd_matrix(int n, int d, const std::string& out, unsigned threads) {
  check_degree(n, d);
  const auto e = build_expansion_matrix(n, d, threads);
  if (out.empty() || out == "-") {
    write_matrix(std::cout, e.entries);
  } else {
    write_matrix_file(out, e.entries);
    std::cout << "wrote " << e.rows() << "x" << e.cols() << " matrix to " << out << "\n";
  }
  return 0;
}

int cmd_nullspace(int n, int d, const std::string& method, const std::string& dir, unsigned threads) {
  check_degree(n, d);
  auto basis = std::make_shared<const MonomialBasis>(n, d);
  const auto e = build_expansion_matrix(basis, threads);
  const auto vs = nullspace_basis(e, method);
  std::cout << vs.size() << " basis vectors (" << method << ")\n";
  std::cout << "squared norms:";
  for (const auto& v : vs) std::cout << " " << squared_norm(v);
  std::cout << "\n";
  if (!dir.empty()) {
    fs::create_directories(dir);
    const auto ids = to_identities(*basis, vs);
    for (std::size_t i = 0; i < ids.size(); ++i) {
      std::ostringstream name;
      name << "identity_" << std::setw(4) << std::setfill('0') << i + 1 << ".id";
      write_identity_file(fs::path(dir) / name.str(), ids[i]);
    }
    std::cout << "wrote " << ids.size() << " identity files to " << dir << "\n";
  }
  return 0;
}

int cmd_verify(const std::string& file) {
  const auto id = read_identity_file(file);
  const auto residual = evaluate_identity(id);
  if (residual.is_zero()) {
    std::cout << "identity holds (" << id.size() << " terms, arity " << id.arity() << ", degree " << id.degree()
              << ")\n";
    return 0;
  }
  std::cout << "identity fails: " << residual.size() << " residual slot tuples\n";
  std::cout << residual.to_string() << "\n";
  return kExitFail;
}

int cmd_generators(int n, int d, const std::string& method, std::uint32_t p, unsigned threads) {
  check_degree(n, d);
  auto basis = std::make_shared<const MonomialBasis>(n, d);
  const auto e = build_expansion_matrix(basis, threads);
  const auto vs = nullspace_basis(e, method);
  const auto ids = to_identities(*basis, vs);
  const auto sieve = generator_sieve(ids, basis, vs.size(), p, threads);
  std::cout << "nullspace dimension " << vs.size() << ", " << sieve.generators.size() << " generators over F_" << p
            << "\n";
  for (const auto& g : sieve.generators) {
    std::cout << "position " << g.position << "  squared norm " << g.identity.squared_norm() << "  rank " << g.rank
              << "\n  " << g.identity.to_string() << "\n";
  }
  if (!vs.empty()) {
    const auto single = single_generators(ids, basis, vs.size(), p, threads);
    std::cout << "single generators of the whole nullspace:";
    if (single.empty()) std::cout << " none";
    for (auto pos : single) std::cout << " " << pos << " (norm " << ids[pos - 1].squared_norm() << ")";
    std::cout << "\n";
  }
  return sieve.final_rank == vs.size() ? 0 : kExitFail;
}

int cmd_reproduce(const std::string& scope, bool certify, std::uint64_t seed, unsigned threads,
                  const std::string& data) {
  const GoldenData golden(data.empty() ? GoldenData::default_dir() : fs::path(data));
  std::vector<ReportTable> tables;
  if (scope == "binary") tables.push_back(reproduce_binary(golden, threads));
  else if (scope == "deg5") tables.push_back(reproduce_deg5(golden, threads));
  else if (scope == "deg7") tables.push_back(reproduce_deg7(golden, threads));
  else if (scope == "deg9-rank") tables.push_back(reproduce_deg9_rank(golden, threads));
  else if (scope == "deg9-closure") {
    ClosureOptions opt;
    opt.mode = certify ? ClosureMode::certify : ClosureMode::exact;
    opt.seed = seed;
    opt.threads = threads;
    tables.push_back(reproduce_deg9_closure(golden, opt));
  } else if (scope == "all") {
    tables.push_back(reproduce_binary(golden, threads));
    tables.push_back(reproduce_deg5(golden, threads));
    tables.push_back(reproduce_deg7(golden, threads));
    tables.push_back(reproduce_deg9_rank(golden, threads));
  }
  bool ok = true;
  for (const auto& t : tables) {
    t.print(std::cout);
    ok = ok && t.passed();
  }
  std::cout << (ok ? "all checks passed" : "some checks failed") << "\n";
  return ok ? 0 : kExitFail;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Polynomial identities of n-ary intermolecular recombination"};
  app.require_subcommand(1);
  unsigned threads = default_thread_count();
  app.add_option("--threads", threads, "worker threads (default $RECOMB_THREADS or 1)")->check(CLI::PositiveNumber);

  int n = 3, d = 5;
  std::string out, method = "rcf", file, scope, data;
  std::uint32_t prime = kDefaultPrime;
  std::uint64_t seed = 1;
  bool exact = false, certify = false;

  auto* matrix = app.add_subcommand("matrix", "write the expansion matrix");
  matrix->add_option("-n,--arity", n, "operation arity")->required();
  matrix->add_option("-d,--degree", d, "degree")->required();
  matrix->add_option("-o,--output", out, "output file (default stdout)");

  auto* nullspace = app.add_subcommand("nullspace", "nullspace basis as identities");
  nullspace->add_option("-n,--arity", n, "operation arity")->required();
  nullspace->add_option("-d,--degree", d, "degree")->required();
  nullspace->add_option("--method", method, "rcf or hnf-lll")->check(CLI::IsMember({"rcf", "hnf-lll"}));
  nullspace->add_option("-o,--output", out, "directory for identity files");

  auto* verify = app.add_subcommand("verify", "check that an identity file expands to zero");
  verify->add_option("file", file, "identity file")->required();

  auto* generators = app.add_subcommand("generators", "minimal module generators of the nullspace");
  generators->add_option("-n,--arity", n, "operation arity")->required();
  generators->add_option("-d,--degree", d, "degree")->required();
  generators->add_option("--basis", method, "rcf or hnf-lll")->check(CLI::IsMember({"rcf", "hnf-lll"}));
  generators->add_option("-p,--prime", prime, "prime modulus")->check([](const std::string& s) {
    return is_prime(static_cast<std::uint32_t>(std::stoul(s))) ? std::string() : std::string("not a prime");
  });

  auto* reproduce = app.add_subcommand("reproduce", "recompute the published results");
  reproduce->add_option("scope", scope, "binary|deg5|deg7|deg9-rank|deg9-closure|all")
      ->required()
      ->check(CLI::IsMember({"binary", "deg5", "deg7", "deg9-rank", "deg9-closure", "all"}));
  auto* ex = reproduce->add_flag("--exact", exact, "full orbits (default)");
  reproduce->add_flag("--certify", certify, "random permutations until the nullspace is filled")->excludes(ex);
  reproduce->add_option("--seed", seed, "seed for --certify");
  reproduce->add_option("--data", data, "golden data directory");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    if (*matrix) return cmd_matrix(n, d, out, threads);
    if (*nullspace) return cmd_nullspace(n, d, method, out, threads);
    if (*verify) return cmd_verify(file);
    if (*generators) return cmd_generators(n, d, method, prime, threads);
    if (*reproduce) return cmd_reproduce(scope, certify, seed, threads, data);
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const IoError& e) {
    std::cerr << "i/o error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}

#ifndef RECOMB_IO_GOLDEN_HPP
#define RECOMB_IO_GOLDEN_HPP

#include <cstdint>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "recomb/expansion/expansion.hpp"
#include "recomb/io/identity_file.hpp"
#include "recomb/io/matrix_file.hpp"

namespace recomb {

/// Parses lines "<coefficient> x,y,z" into a slot combination.
inline SlotCombination parse_slot_combination(std::istream& in, int arity, int degree,
                                              const std::string& source = "<input>") {
  SlotCombination out(arity, degree);
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::istringstream ls(line);
    std::int64_t c = 0;
    std::string tuple;
    if (!(ls >> c)) continue;
    if (!(ls >> tuple)) throw ParseError(source, lineno, "missing slot tuple");
    std::vector<Variable> vs;
    for (std::size_t i = 0; i < tuple.size(); i += 2) {
      try {
        vs.push_back(Variable::from_letter(tuple[i]));
      } catch (const std::invalid_argument& e) {
        throw ParseError(source, lineno, e.what());
      }
      if (i + 1 < tuple.size() && tuple[i + 1] != ',') throw ParseError(source, lineno, "bad slot tuple " + tuple);
    }
    if (static_cast<int>(vs.size()) != arity) throw ParseError(source, lineno, "slot tuple has wrong arity");
    out.add(SlotTuple(vs), c);
  }
  return out;
}

/// Values transcribed from the published tables, read from one directory.
class GoldenData {
 public:
  explicit GoldenData(std::filesystem::path dir) : dir_(std::move(dir)) {
    std::ifstream in(dir_ / "paper_values.json");
    if (!in) throw IoError("cannot open " + (dir_ / "paper_values.json").string());
    values_ = nlohmann::json::parse(in);
  }

  /// $RECOMB_DATA, else the directory fixed at build time.
  static std::filesystem::path default_dir() {
    if (const char* env = std::getenv("RECOMB_DATA")) return env;
#ifdef RECOMB_DATA_DIR
    return RECOMB_DATA_DIR;
#else
    return "data/paper";
#endif
  }

  const std::filesystem::path& dir() const { return dir_; }
  const nlohmann::json& values() const { return values_; }
  const nlohmann::json& operator[](const std::string& key) const { return values_.at(key); }

  IntegerMatrix matrix(const std::string& name) const { return read_matrix_file(dir_ / name); }

  IdentityCombination identity(const std::string& name) const {
    return read_identity_file(dir_ / "identities" / (name + ".id"));
  }

  std::vector<std::int64_t> integers(const std::string& name) const {
    std::ifstream in(dir_ / name);
    if (!in) throw IoError("cannot open " + (dir_ / name).string());
    std::vector<std::int64_t> out;
    std::int64_t x;
    while (in >> x) out.push_back(x);
    return out;
  }

  SlotCombination slot_combination(const std::string& name, int arity, int degree) const {
    std::ifstream in(dir_ / name);
    if (!in) throw IoError("cannot open " + (dir_ / name).string());
    return parse_slot_combination(in, arity, degree, (dir_ / name).string());
  }

 private:
  std::filesystem::path dir_;
  nlohmann::json values_;
};

}  // namespace recomb

#endif  // RECOMB_IO_GOLDEN_HPP

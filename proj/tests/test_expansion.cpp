#include <gtest/gtest.h>

#include <random>

#include "support.hpp"

using namespace recomb;

namespace {

const GoldenData& golden() {
  static const GoldenData g(GoldenData::default_dir());
  return g;
}

SlotCombination parse_slots(const std::string& text, int n, int d) {
  std::istringstream in(text);
  return parse_slot_combination(in, n, d);
}

}  // namespace

TEST(Expansion, SingleOperation) {
  const auto x = expand_monomial(parse_monomial("[a,b,c]"));
  EXPECT_EQ(x, parse_slots("1 a,b,c\n1 a,c,b\n1 b,a,c\n1 b,c,a\n1 c,a,b\n1 c,b,a\n", 3, 3));
}

TEST(Expansion, BinaryLeftNormed) {
  const auto x = expand_monomial(parse_monomial("[[[a,b],c],d]"));
  EXPECT_EQ(x, parse_slots("1 a,d\n1 b,d\n2 c,d\n1 d,a\n1 d,b\n2 d,c\n", 2, 4));
}

TEST(Expansion, BinarySecondType) {
  const auto x = expand_monomial(parse_monomial("[[a,b],[c,d]]"));
  EXPECT_EQ(x.size(), 8u);
  for (const auto& [t, c] : x.terms()) EXPECT_EQ(c, 1);
}

TEST(Expansion, TernaryDegreeFive) {
  const auto x = expand_monomial(parse_monomial("[[a,b,c],d,e]"));
  EXPECT_EQ(x.size(), 18u);
  for (const auto& [t, c] : x.terms()) EXPECT_EQ(c, 2);
}

TEST(Expansion, DegreeSevenRepresentativesMatchTables) {
  const auto& g = golden();
  EXPECT_EQ(expand_monomial(parse_monomial("[[[a,b,c],d,e],f,g]")),
            g.slot_combination("deg7_expansion_type1.txt", 3, 7));
  EXPECT_EQ(expand_monomial(parse_monomial("[[a,b,c],[d,e,f],g]")),
            g.slot_combination("deg7_expansion_type2.txt", 3, 7));
}

TEST(Expansion, OperandsMustBeDisjoint) {
  const auto ab = parse_slots("1 a,b\n1 b,a\n", 2, 3);
  std::vector<Operand> ok{ab, Variable(2)};
  EXPECT_EQ(expand_operation(ok, 3).mass(), 4);
  std::vector<Operand> args{ab, Variable(1)};
  EXPECT_THROW(expand_operation(args, 3), MultilinearityError);
}

TEST(Expansion, AgreesWithDefinitionOracle) {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = 2 + trial % 3;
    const int k = 1 + static_cast<int>(rng() % (n == 2 ? 5 : 3));
    const auto t = gen::random_tree(n, k, rng);
    const auto m = straighten(t, n);
    EXPECT_EQ(oracle::from_library(expand_monomial(m)), oracle::evaluate(t, n)) << m.to_string();
  }
}

TEST(Expansion, MassIsFactorialPower) {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = 2 + trial % 4;
    const int k = 1 + static_cast<int>(rng() % (n <= 3 ? 4 : 2));
    const auto m = straighten(gen::random_tree(n, k, rng), n);
    std::int64_t expected = 1;
    for (int i = 0; i < k; ++i) expected *= gen::factorial(n);
    EXPECT_EQ(expand_monomial(m).mass(), expected) << m.to_string();
  }
}

TEST(Expansion, EquivariantUnderRelabelling) {
  std::mt19937_64 rng(9);
  const MonomialBasis basis(3, 7);
  for (int trial = 0; trial < 200; ++trial) {
    const auto& m = basis[rng() % basis.size()];
    const auto sigma = Permutation::random(7, rng);
    EXPECT_EQ(expand_monomial(m.relabeled(sigma.images())), gen::permuted(expand_monomial(m), sigma));
  }
}

TEST(Matrix, BinaryDegreeFourEqualsTable) {
  const auto e = build_expansion_matrix(2, 4, 1);
  EXPECT_EQ(to_integer_matrix(e.entries), golden().matrix("e_binary_deg4.txt"));
}

TEST(Matrix, ShapesAndColumnMass) {
  const auto& g = golden();
  const auto e5 = build_expansion_matrix(3, 5, 1);
  EXPECT_EQ(e5.rows(), g["ternary_deg5"]["rows"].get<std::size_t>());
  EXPECT_EQ(e5.cols(), g["ternary_deg5"]["monomials"].get<std::size_t>());
  const auto e7 = build_expansion_matrix(3, 7, 1);
  EXPECT_EQ(e7.rows(), g["ternary_deg7"]["rows"].get<std::size_t>());
  EXPECT_EQ(e7.cols(), g["ternary_deg7"]["monomials"].get<std::size_t>());
  for (std::size_t j = 0; j < e7.cols(); ++j) {
    std::int64_t s = 0;
    for (std::size_t i = 0; i < e7.rows(); ++i) s += e7.entries(i, j);
    EXPECT_EQ(s, g["ternary_deg7"]["expansion_mass"].get<std::int64_t>());
  }
  const auto e3 = build_expansion_matrix(3, 3, 1);
  EXPECT_EQ(e3.rows(), 6u);
  EXPECT_EQ(e3.cols(), 1u);
}

TEST(Matrix, IndependentOfThreadCount) {
  const auto a = build_expansion_matrix(3, 7, 1);
  const auto b = build_expansion_matrix(3, 7, 4);
  EXPECT_EQ(a.entries, b.entries);
}

TEST(Evaluate, KnownIdentitiesVanish) {
  for (const auto* name : {"identity3", "identity6", "binary_rewrite", "I", "J", "K", "P", "Q", "R", "corollary"}) {
    const auto id = golden().identity(name);
    EXPECT_TRUE(evaluate_identity(id).is_zero()) << name;
    EXPECT_TRUE(oracle::evaluate(id).empty()) << name;
  }
}

TEST(Evaluate, SingleOperationIsNotAnIdentity) {
  IdentityCombination id(3, 3);
  id.add(parse_monomial("[a,b,c]"), 1);
  EXPECT_EQ(evaluate_identity(id).size(), 6u);
}

#include <gtest/gtest.h>

#include <random>
#include <set>

#include "support.hpp"

using namespace recomb;

namespace {

const GoldenData& golden() {
  static const GoldenData g(GoldenData::default_dir());
  return g;
}

std::vector<std::size_t> counts(const MonomialBasis& b) {
  std::vector<std::size_t> out;
  for (const auto& t : b.types()) out.push_back(t.monomial_count());
  return out;
}

}  // namespace

TEST(Variable, Letters) {
  EXPECT_EQ(Variable::from_letter('c').index(), 2);
  EXPECT_EQ(Variable(25).letter(), 'z');
  EXPECT_THROW(Variable::from_letter('A'), std::invalid_argument);
  EXPECT_THROW(Variable(26), std::out_of_range);
}

TEST(Straighten, SortsChildren) {
  EXPECT_EQ(parse_monomial("[[[b,a,c],e,d],g,f]").to_string(), "[[[a,b,c],d,e],f,g]");
  EXPECT_EQ(parse_monomial("[g,[d,e,f],[a,b,c]]").to_string(), "[[a,b,c],[d,e,f],g]");
  EXPECT_EQ(parse_monomial("[d,[c,[b,a]]]").to_string(), "[[[a,b],c],d]");
}

TEST(Straighten, RejectsRepeatedVariables) {
  EXPECT_THROW(parse_monomial("[[a,c,e],b,e]"), MultilinearityError);
  EXPECT_THROW(parse_monomial("[a,b"), std::invalid_argument);
  EXPECT_THROW(parse_monomial("[a,b,[c,d]]"), std::invalid_argument);
}

TEST(Straighten, IdempotentOnRandomTrees) {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 1000; ++trial) {
    const int n = 2 + trial % 3;
    const int k = 1 + static_cast<int>(rng() % (n == 2 ? 6 : 4));
    const auto t = gen::random_tree(n, k, rng);
    const auto m = straighten(t, n);
    EXPECT_EQ(straighten(m.to_tree(), n), m);
    EXPECT_EQ(straighten(gen::shuffled(t, rng), n), m);
    EXPECT_EQ(parse_monomial(m.to_string()), m);
  }
}

TEST(Types, Counts) {
  EXPECT_EQ(enumerate_canonical_types(3, 3).size(), 1u);
  EXPECT_EQ(enumerate_canonical_types(3, 5).size(), 1u);
  EXPECT_EQ(enumerate_canonical_types(3, 7).size(), 2u);
  EXPECT_EQ(enumerate_canonical_types(3, 9).size(), 4u);
  EXPECT_EQ(enumerate_canonical_types(2, 4).size(), 2u);
  EXPECT_THROW(enumerate_canonical_types(3, 6), InvalidDegreeError);
  EXPECT_THROW(enumerate_canonical_types(1, 3), std::invalid_argument);
}

TEST(Types, FirstTypeNestsLeft) {
  const auto ts = enumerate_canonical_types(3, 9);
  EXPECT_EQ(MonomialBasis(3, 9)[0].to_string(), "[[[[a,b,c],d,e],f,g],h,i]");
  for (std::size_t i = 1; i < ts.size(); ++i) EXPECT_LT(ts[i - 1], ts[i]);
}

TEST(Monomials, CountsMatchTables) {
  const auto& g = golden();
  EXPECT_EQ(counts(MonomialBasis(2, 4)), g["binary_deg4"]["types"].get<std::vector<std::size_t>>());
  EXPECT_EQ(MonomialBasis(3, 5).size(), g["ternary_deg5"]["monomials"].get<std::size_t>());
  EXPECT_EQ(counts(MonomialBasis(3, 7)), g["ternary_deg7"]["types"].get<std::vector<std::size_t>>());
  EXPECT_EQ(counts(MonomialBasis(3, 9)), g["ternary_deg9"]["types"].get<std::vector<std::size_t>>());
  EXPECT_EQ(MonomialBasis(3, 9).size(), g["ternary_deg9"]["monomials"].get<std::size_t>());
}

// Brute force: straighten every labelling of every type and count distinct results.
TEST(Monomials, EnumerationMatchesBruteForce) {
  for (auto [n, d] : {std::pair{2, 4}, {2, 5}, {3, 5}, {3, 7}, {4, 7}}) {
    const MonomialBasis basis(n, d);
    std::set<Monomial> seen;
    for (const auto& m : basis.monomials()) {
      auto sigma = Permutation::identity(d);
      do seen.insert(m.relabeled(sigma.images()));
      while (sigma.next());
    }
    EXPECT_EQ(seen.size(), basis.size()) << n << "," << d;
    for (std::size_t i = 1; i < basis.size(); ++i) EXPECT_LT(basis[i - 1], basis[i]);
    for (std::size_t i = 0; i < basis.size(); ++i) EXPECT_EQ(basis.index_of(basis[i]), i);
  }
}

TEST(Monomials, BinaryDegreeFourListing) {
  const MonomialBasis b(2, 4);
  EXPECT_EQ(b[0].to_string(), "[[[a,b],c],d]");
  EXPECT_EQ(b[11].to_string(), "[[[c,d],b],a]");
  EXPECT_EQ(b[12].to_string(), "[[a,b],[c,d]]");
  EXPECT_EQ(b[14].to_string(), "[[a,d],[b,c]]");
}

TEST(Permutation, Basics) {
  const auto s = Permutation::transposition(4, 0, 1);
  EXPECT_EQ(compose(s, s), Permutation::identity(4));
  EXPECT_THROW(Permutation({0, 0, 1}), std::invalid_argument);
  EXPECT_THROW(compose(s, Permutation::identity(3)), std::invalid_argument);
}

TEST(Permutation, UnrankingFollowsLexicographicOrder) {
  auto p = Permutation::identity(6);
  for (std::uint64_t k = 0; k < 720; ++k) {
    EXPECT_EQ(Permutation::nth(6, k), p);
    p.next();
  }
  EXPECT_THROW(Permutation::nth(6, 720), std::out_of_range);
}

TEST(SlotTuples, OrderAndCount) {
  const auto pairs = order_slot_tuples(2, 4);
  ASSERT_EQ(pairs.size(), 12u);
  EXPECT_EQ(pairs.front().to_string(), "(a1,b2)");
  EXPECT_EQ(pairs.back().to_string(), "(d1,c2)");
  EXPECT_EQ(order_slot_tuples(3, 7).size(), slot_tuple_count(3, 7));
  EXPECT_EQ(slot_tuple_count(3, 7), golden()["ternary_deg7"]["rows"].get<std::size_t>());
  EXPECT_EQ(slot_tuple_count(3, 9), golden()["ternary_deg9"]["rows"].get<std::size_t>());
  const auto triples = order_slot_tuples(3, 6);
  for (std::size_t i = 0; i < triples.size(); ++i) {
    EXPECT_EQ(slot_tuple_index(triples[i], 6), i);
    if (i) {
      EXPECT_LT(triples[i - 1], triples[i]);
    }
  }
  EXPECT_THROW(SlotTuple({Variable(0), Variable(0)}), MultilinearityError);
}

TEST(Identity, StoresNoZerosAndNormalizes) {
  IdentityCombination id(3, 5);
  id.add(parse_monomial("[[a,b,c],d,e]"), -2);
  id.add(parse_monomial("[[a,b,d],c,e]"), 3);
  id.add(parse_monomial("[[c,b,d],a,e]"), 1);
  id.add(parse_monomial("[[a,b,d],c,e]"), -3);
  EXPECT_EQ(id.size(), 2u);
  EXPECT_EQ(id.squared_norm(), 5);
  const auto n = id.normalized();
  EXPECT_EQ(n.coefficient(parse_monomial("[[a,b,c],d,e]")), 2);
  EXPECT_EQ((id - id).size(), 0u);
  EXPECT_THROW(id.add(parse_monomial("[a,b,c]"), 1), std::invalid_argument);
}

TEST(Identity, VectorRoundTrip) {
  const MonomialBasis b(2, 4);
  const auto id = golden().identity("identity3");
  const auto v = id.to_vector(b);
  EXPECT_EQ(IdentityCombination::from_vector(b, v), id);
}

TEST(Action, FixesSymmetricSlots) {
  IdentityCombination id(3, 5);
  id.add(parse_monomial("[[a,b,c],d,e]"), 1);
  EXPECT_EQ(apply_permutation(id, Permutation::transposition(5, 0, 1)), id);
  EXPECT_EQ(apply_permutation(id, Permutation::identity(5)), id);
  EXPECT_THROW(apply_permutation(id, Permutation::identity(4)), std::invalid_argument);
}

TEST(Action, IsAGroupAction) {
  std::mt19937_64 rng(11);
  const auto id = golden().identity("R");
  for (int trial = 0; trial < 50; ++trial) {
    const auto s = Permutation::random(7, rng), t = Permutation::random(7, rng);
    EXPECT_EQ(apply_permutation(apply_permutation(id, s), t), apply_permutation(id, compose(t, s)));
    EXPECT_EQ(apply_permutation(id, s).size(), id.size());
  }
}

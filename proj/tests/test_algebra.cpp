#include <gtest/gtest.h>

#include "fixtures.hpp"
#include "nilzeta/algebra.hpp"
#include "nilzeta/error.hpp"

using namespace nilzeta;

TEST(SpecValidation, SmallestCaseIsValid) {
  const AlgebraSpec s = validate_spec({1, {1}, {{1}}});
  EXPECT_EQ(s.p(), 1u);
}

TEST(SpecValidation, BlocksAreReordered) {
  const AlgebraSpec s = validate_spec({2, {1, 2}, {{2}, {1}}});
  EXPECT_EQ(s.partition, (std::vector<std::vector<unsigned>>{{1}, {2}}));
}

TEST(SpecValidation, Rejections) {
  EXPECT_THROW(validate_spec({2, {1, 1}, {{1}}}), SpecError);         // does not cover
  EXPECT_THROW(validate_spec({0, {}, {}}), SpecError);                // n = 0
  EXPECT_THROW(validate_spec({1, {0}, {{1}}}), SpecError);            // zero exponent
  EXPECT_THROW(validate_spec({2, {1}, {{1}, {2}}}), SpecError);       // alpha too short
  EXPECT_THROW(validate_spec({2, {1, 1}, {{1, 2}, {2}}}), SpecError); // overlap
  EXPECT_THROW(validate_spec({1, {1}, {{1}, {}}}), SpecError);        // empty block
}

TEST(SpecValidation, JsonRoundTrip) {
  const AlgebraSpec s = spec_from_json(R"({"n":2,"alpha":[1,2],"partition":[[2],[1]]})");
  EXPECT_EQ(spec_from_json(spec_to_json(s)), s);
  EXPECT_THROW(spec_from_json("{"), SpecError);
  EXPECT_THROW(spec_from_json(R"({"n":1})"), SpecError);
}

TEST(IndexSet, Enumerations) {
  EXPECT_EQ(index_set({1, {1}, {{1}}}).all, (std::vector<MultiIndex>{{0}, {1}}));
  const IndexSets split = index_set({2, {1, 1}, {{1}, {2}}});
  EXPECT_EQ(split.all.size(), 3u);
  EXPECT_EQ(split.blocks[0], (std::vector<MultiIndex>{{0, 0}, {1, 0}}));
  EXPECT_EQ(split.blocks[1], (std::vector<MultiIndex>{{0, 0}, {0, 1}}));
  EXPECT_EQ(index_set({2, {1, 1}, {{1, 2}}}).all, (std::vector<MultiIndex>{{0, 0}, {0, 1}, {1, 0}, {1, 1}}));
}

TEST(IndexSet, DownwardClosedAndContainsZero) {
  for (const auto& [name, alg] : fixture::all_specs()) {
    SCOPED_TRACE(name);
    for (const auto& blk : alg->block_sets()) EXPECT_EQ(blk.front(), MultiIndex(alg->n()));
    for (const auto& b : alg->index_set())
      for (const auto& g : b.lower_set()) EXPECT_TRUE(alg->y_position(g).has_value());
  }
}

TEST(Bracket, Examples) {
  const AlgebraPtr alg = fixture::make(2, {1, 1}, {{1, 2}});
  const LieElement xy = bracket(BasisSymbol::x(1), BasisSymbol::y({1, 0}), alg);
  EXPECT_EQ(xy, LieElement::basis(alg, alg->y_variable({0, 0})));
  EXPECT_TRUE(bracket(BasisSymbol::x(1), BasisSymbol::y({0, 1}), alg).is_zero());
  EXPECT_TRUE(bracket(BasisSymbol::y({1, 0}), BasisSymbol::y({0, 1}), alg).is_zero());
  EXPECT_EQ(bracket(BasisSymbol::y({1, 0}), BasisSymbol::x(1), alg),
            LieElement::basis(alg, alg->y_variable({0, 0}), GaussianRational(-1)));
  EXPECT_THROW(bracket(BasisSymbol::x(3), BasisSymbol::y({0, 0}), alg), DomainError);
  EXPECT_THROW(bracket(BasisSymbol::x(1), BasisSymbol::y({2, 0}), alg), DomainError);
}

TEST(Bracket, Antisymmetric) {
  for (const auto& [name, alg] : fixture::all_specs()) {
    const StructureConstants sc(alg);
    for (std::size_t a = 0; a < sc.dim(); ++a)
      for (std::size_t b = 0; b < sc.dim(); ++b)
        EXPECT_EQ(sc.bracket(a, b), GaussianRational(-1) * sc.bracket(b, a)) << name;
  }
}

TEST(NilpotencyClass, Examples) {
  EXPECT_EQ(nilpotency_class(fixture::heisenberg()), 2u);
  EXPECT_EQ(nilpotency_class(fixture::quartic()), 3u);
  EXPECT_EQ(nilpotency_class(fixture::cubic()), 4u);
  // X_1 X_2 lowers Y^(1,1) twice before reaching the center
  EXPECT_EQ(nilpotency_class(fixture::make(2, {1, 1}, {{1, 2}})), 3u);
}

TEST(Jacobi, PassesOnEverySpec) {
  for (const auto& [name, alg] : fixture::all_specs()) EXPECT_TRUE(jacobi_check(alg).ok) << name;
}

TEST(Jacobi, CorruptedStructureConstantIsCaught) {
  const AlgebraPtr alg = fixture::quartic();
  StructureConstants sc(alg);
  // [Y^(1), Y^(2)] = Y^(1) leaves Y^(0) over on (X_1, Y^(1), Y^(2))
  sc.set_bracket(alg->y_variable({1}), alg->y_variable({2}), LieElement::basis(alg, alg->y_variable({1})));
  const JacobiResult r = jacobi_check(sc);
  ASSERT_FALSE(r.ok);
  ASSERT_TRUE(r.triple.has_value());
  EXPECT_FALSE(r.description.empty());
  const auto& t = *r.triple;
  std::vector<std::size_t> got(t.begin(), t.end());
  std::sort(got.begin(), got.end());
  EXPECT_NE(std::find(got.begin(), got.end(), alg->x_variable(1)), got.end());
}

TEST(IsotropicSubalgebra, Examples) {
  auto names = [](const AlgebraPtr& alg) {
    std::vector<std::string> out;
    for (auto v : isotropic_subalgebra(alg)) out.push_back(alg->variable_name(v));
    return out;
  };
  EXPECT_EQ(names(fixture::heisenberg()), (std::vector<std::string>{"Y[0]"}));
  EXPECT_EQ(names(fixture::quartic()), (std::vector<std::string>{"Y[0]", "Y[2]"}));
  EXPECT_EQ(names(fixture::make(2, {1, 1}, {{1, 2}})), (std::vector<std::string>{"Y[0,0]", "Y[1,1]"}));
}

TEST(Algebra, VariableNumbering) {
  const AlgebraPtr alg = fixture::make(2, {1, 2}, {{1}, {2}});
  EXPECT_EQ(alg->num_variables(), 2u + 4u);  // (0,0),(0,1),(0,2),(1,0)
  EXPECT_EQ(alg->x_variable(2), 1u);
  EXPECT_EQ(alg->y_variable({0, 0}), 2u);
  EXPECT_EQ(alg->y_variable({1, 0}), 5u);
  EXPECT_THROW(alg->x_variable(0), DomainError);
  EXPECT_THROW(alg->y_variable({1, 1}), DomainError);
}

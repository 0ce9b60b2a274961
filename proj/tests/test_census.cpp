#include <gtest/gtest.h>

#include <random>

#include "monomial/census.hpp"
#include "monomial/errors.hpp"
#include "support.hpp"

using namespace monomial;
using monomial::testing::brute_conjugate;
using monomial::testing::brute_is_gorenstein;
using monomial::testing::for_each_positive_order;

namespace {

const LevelMatrix kBaseChange{{0, 0, 0, 0}, {1, 0, 1, 0}, {1, 1, 0, 0}, {2, 1, 1, 0}};

// One representative per conjugacy class, grouped by pairwise brute force.
std::vector<LevelMatrix> brute_classes(std::size_t n, Entry bound) {
  std::vector<LevelMatrix> reps;
  for_each_positive_order(n, bound, [&](const LevelMatrix& m) {
    for (const auto& r : reps) {
      if (brute_conjugate(r, m)) return;
    }
    reps.push_back(m);
  });
  return reps;
}

const char* const kTwoFamilies =
    "# comment\n"
    "family pair\n"
    "0 0\n"
    "a 0\n"
    "\n"
    "family mixed\n"
    "0 0 0\n"
    "a 0 0\n"
    "a+b b 0   # trailing\n";

}  // namespace

TEST(CensusFilter, NamesRoundTrip) {
  for (auto f : {CensusFilter::gorenstein, CensusFilter::eichler, CensusFilter::hereditary,
                 CensusFilter::bass, CensusFilter::upper_triangular}) {
    EXPECT_EQ(parse_census_filter(to_string(f)), f);
  }
  EXPECT_THROW(parse_census_filter("cohen-macaulay"), std::invalid_argument);
}

TEST(Census, OneByOne) {
  const auto r = census({1, 3, {}});
  ASSERT_EQ(r.classes.size(), 1u);
  EXPECT_EQ(r.classes[0].canonical, LevelMatrix(1));
  EXPECT_EQ(r.raw_candidates, 1u);
}

TEST(Census, TwoByTwoGorenstein) {
  const auto r = census({2, 2, {CensusFilter::gorenstein}});
  std::vector<LevelMatrix> expected{LevelMatrix{{0, 0}, {0, 0}}, LevelMatrix{{0, 0}, {1, 0}},
                                    LevelMatrix{{0, 0}, {2, 0}}};
  std::vector<LevelMatrix> got;
  for (const auto& c : r.classes) got.push_back(c.canonical);
  EXPECT_EQ(got, expected);
  EXPECT_EQ(r.totals.classes, 3u);
  EXPECT_EQ(r.totals.gorenstein, 3u);
}

TEST(Census, ClassCountsMatchBruteGrouping) {
  for (std::size_t n = 1; n <= 3; ++n) {
    for (Entry bound = 0; bound <= 2; ++bound) {
      const auto reps = brute_classes(n, bound);
      const auto r = census({n, bound, {}});
      EXPECT_EQ(r.classes.size(), reps.size()) << "n=" << n << " B=" << bound;
      std::size_t gorenstein = 0;
      for (const auto& m : reps) gorenstein += brute_is_gorenstein(m);
      EXPECT_EQ(r.totals.gorenstein, gorenstein);
      std::size_t raw = 0;
      for (const auto& c : r.classes) raw += c.raw_count;
      EXPECT_EQ(raw, r.raw_orders);
    }
  }
}

TEST(Census, ClassesAreDistinctAndCanonical) {
  const auto r = census({3, 2, {}});
  for (std::size_t i = 0; i < r.classes.size(); ++i) {
    EXPECT_EQ(canonical_form(r.classes[i].canonical).level, r.classes[i].canonical);
    for (std::size_t j = i + 1; j < r.classes.size(); ++j) {
      EXPECT_FALSE(brute_conjugate(r.classes[i].canonical, r.classes[j].canonical));
    }
  }
}

TEST(Census, GorensteinClassesAreUpperTriangularForSmallOrders) {
  const auto r = census({3, 1, {CensusFilter::gorenstein}});
  EXPECT_FALSE(r.classes.empty());
  for (const auto& c : r.classes) EXPECT_TRUE(c.upper_triangular);
}

TEST(Census, FiltersNarrowTheResult) {
  const auto all = census({3, 2, {}});
  for (auto f : {CensusFilter::gorenstein, CensusFilter::eichler, CensusFilter::hereditary,
                 CensusFilter::bass, CensusFilter::upper_triangular}) {
    const auto some = census({3, 2, {f}});
    std::size_t expected = 0;
    for (const auto& c : all.classes) expected += passes(c, f);
    EXPECT_EQ(some.classes.size(), expected) << to_string(f);
    for (const auto& c : some.classes) EXPECT_TRUE(passes(c, f));
  }
  const auto both = census({3, 2, {CensusFilter::bass, CensusFilter::hereditary}});
  EXPECT_EQ(both.classes.size(), census({3, 2, {CensusFilter::hereditary}}).classes.size());
}

TEST(Census, ThreadCountDoesNotChangeOutput) {
  const auto one = census({4, 1, {}}, {1e7, kDefaultSearchCap, 1});
  const auto three = census({4, 1, {}}, {1e7, kDefaultSearchCap, 3});
  EXPECT_EQ(one.totals, three.totals);
  ASSERT_EQ(one.classes.size(), three.classes.size());
  for (std::size_t i = 0; i < one.classes.size(); ++i) {
    EXPECT_EQ(one.classes[i].canonical, three.classes[i].canonical);
    EXPECT_EQ(one.classes[i].raw_count, three.classes[i].raw_count);
  }
}

TEST(Census, Errors) {
  EXPECT_THROW(census({0, 1, {}}), std::invalid_argument);
  EXPECT_THROW(census({2, -1, {}}), std::invalid_argument);
  EXPECT_THROW(census({4, 2, {}}, {10.0}), BudgetExceededError);
  EXPECT_DOUBLE_EQ(census_raw_size(4, 2), 19683.0);
}

TEST(Families, Parse) {
  const auto fams = parse_families(kTwoFamilies);
  ASSERT_EQ(fams.size(), 2u);
  EXPECT_EQ(fams[0].name, "pair");
  EXPECT_TRUE(fams[0].uses_a());
  EXPECT_FALSE(fams[0].uses_b());
  EXPECT_EQ(fams[1].n, 3u);
  EXPECT_EQ(fams[1].entries[6], (AffineEntry{1, 1, 0}));
  EXPECT_EQ(fams[1].instantiate(2, 3), (LevelMatrix{{0, 0, 0}, {2, 0, 0}, {5, 3, 0}}));
}

TEST(Families, ParseErrors) {
  EXPECT_THROW(parse_families("0 0\n0 0\n"), ParseError);
  EXPECT_THROW(parse_families("family x\n0 0\n0\n"), ParseError);
  EXPECT_THROW(parse_families("family x\n0 0\n0 c\n"), ParseError);
  EXPECT_THROW(parse_families("family x\n0 0\n0 0\n0 0\n"), ParseError);
  EXPECT_THROW(parse_families("family x\n0 0\n"), ParseError);
  // a and b only ever appear together
  EXPECT_THROW(parse_families("family x\n0 0\na+b 0\n"), ParseError);
  try {
    parse_families("family x\n0 0 0\n0 0\n0 0 0\n", "fam.txt");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 3u);
  }
}

TEST(Families, BundledFixtureLoads) {
  const auto fams = read_families_file(MONOMIAL_DATA_DIR "/gorenstein_n4_families.txt");
  ASSERT_EQ(fams.size(), 7u);
  for (const auto& f : fams) {
    EXPECT_EQ(f.n, 4u);
    EXPECT_TRUE(is_order(f.instantiate(1, 1))) << f.name;
    EXPECT_TRUE(is_order(f.instantiate(2, 1))) << f.name;
  }
}

TEST(MatchFamily, BaseChangeLevel) {
  const auto fams = read_families_file(MONOMIAL_DATA_DIR "/gorenstein_n4_families.txt");
  const auto six = std::find_if(fams.begin(), fams.end(),
                                [](const LevelFamily& f) { return f.name == "non_eichler_6"; });
  ASSERT_NE(six, fams.end());
  const auto m = canonical_form(kBaseChange).level;
  const auto match = match_family(m, *six);
  ASSERT_TRUE(match);
  EXPECT_EQ(match->a, std::optional<Entry>{1});
  EXPECT_EQ(match->b, std::optional<Entry>{1});
  EXPECT_EQ(conjugate(m, match->witness), six->instantiate(1, 1));
}

TEST(MatchFamily, ParameterFreeAndMismatch) {
  const auto fams = parse_families("family zero\n0 0\n0 0\n");
  const auto match = match_family(LevelMatrix(2), fams[0]);
  ASSERT_TRUE(match);
  EXPECT_FALSE(match->a);
  EXPECT_FALSE(match->b);
  EXPECT_FALSE(match_family(LevelMatrix(3), fams[0]));
  EXPECT_FALSE(match_family(LevelMatrix{{0, 0}, {1, 0}}, fams[0]));
}

TEST(MatchFamily, RecoversParametersAfterConjugation) {
  const auto fams = parse_families(kTwoFamilies);
  std::mt19937_64 rng(8);
  for (Entry a = 1; a <= 3; ++a) {
    for (Entry b = 1; b <= 3; ++b) {
      const auto inst = fams[1].instantiate(a, b);
      const auto m = conjugate(inst, monomial::testing::random_weyl(rng, 3));
      const auto match = match_family(m, fams[1]);
      ASSERT_TRUE(match);
      EXPECT_EQ(conjugate(m, match->witness), fams[1].instantiate(*match->a, *match->b));
    }
  }
}

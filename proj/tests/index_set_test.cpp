#include <gtest/gtest.h>

#include <algorithm>

#include "modhodge/index_set.hpp"

namespace modhodge {
namespace {

TEST(IndexSetProperty, OrderIsSizeThenLexicographic) {
  const auto subsets = allSubsets(7);
  for (IndexSet a : subsets)
    for (IndexSet b : subsets) {
      const auto ea = a.elements(), eb = b.elements();
      const auto expected = ea.size() != eb.size() ? ea.size() <=> eb.size() : ea <=> eb;
      EXPECT_EQ(a <=> b, expected) << a.toString() << " " << b.toString();
    }
}

TEST(IndexSetProperty, WedgeSignCountsInversions) {
  for (IndexSet a : allSubsets(6))
    for (IndexSet b : allSubsets(6)) {
      if (!a.disjoint(b)) {
        EXPECT_EQ(wedgeSign(a, b), 0);
        continue;
      }
      std::vector<int> word = a.elements();
      const auto tail = b.elements();
      word.insert(word.end(), tail.begin(), tail.end());
      int inversions = 0;
      for (std::size_t i = 0; i < word.size(); ++i)
        for (std::size_t j = i + 1; j < word.size(); ++j) inversions += word[i] > word[j];
      EXPECT_EQ(wedgeSign(a, b), inversions % 2 == 0 ? 1 : -1);
    }
}

TEST(IndexSet, Basics) {
  const IndexSet s = IndexSet::of({0, 3, 5});
  EXPECT_EQ(s.rank(5), 2);
  EXPECT_EQ(s.toString(), "{0,3,5}");
  EXPECT_EQ(subsetsOfSize(4, 2).size(), 6u);
  const auto triples = subsetsOfSize(5, 3);
  EXPECT_TRUE(std::is_sorted(triples.begin(), triples.end()));
  EXPECT_EQ(binomial(6, 3), 20);
  EXPECT_EQ(binomial(3, 5), 0);
}

}  // namespace
}  // namespace modhodge

#include "flagtop/isotropy.hpp"
#include "oracles.hpp"

#include <gtest/gtest.h>

#include <map>

using namespace flagtop;

namespace {

RootSystem sys(const char* name) { return RootSystem::build(RootSystemKind::parse(name)); }

std::vector<std::vector<Root>> member_lists(const IsotropyDecomposition& d) {
  std::vector<std::vector<Root>> out;
  for (const auto& c : d.classes) out.push_back(c.members);
  return out;
}

}  // namespace

TEST(ResidueClasses, EmptyThetaGivesSingletons) {
  for (const auto& kind : oracle::kinds_up_to(4)) {
    const RootSystem s = RootSystem::build(kind);
    const auto d = residue_classes(s, ThetaSubset{});
    EXPECT_EQ(d.nonzero_count(), s.positive_roots().size());
    EXPECT_EQ(metric_parameter_count(d), s.positive_roots().size());
    EXPECT_TRUE(d.zero_class().members.empty());
    for (std::size_t c = 1; c < d.classes.size(); ++c) EXPECT_EQ(d.classes[c].members.size(), 1u);
  }
}

TEST(ResidueClasses, G2ShortTheta) {
  const RootSystem g2 = sys("G2");
  const auto d = residue_classes(g2, ThetaSubset::parse("1", 2));
  ASSERT_EQ(d.nonzero_count(), 2u);
  EXPECT_EQ(metric_parameter_count(d), 2u);
  EXPECT_EQ(d.zero_class().members, (std::vector<Root>{Root{{1, 0}}}));
  EXPECT_EQ(d.zero_class().representative, (Root{{0, 0}}));
  EXPECT_EQ(d.classes[1].members, (std::vector<Root>{Root{{0, 1}}, Root{{1, 1}}, Root{{2, 1}}, Root{{3, 1}}}));
  EXPECT_EQ(d.classes[1].lengths_present, (std::set<LengthClass>{LengthClass::Short, LengthClass::Long}));
  EXPECT_EQ(d.classes[2].members, (std::vector<Root>{Root{{3, 2}}}));
  EXPECT_TRUE(d.classes[2].single_length());
  ASSERT_TRUE(d.component_dims);
  EXPECT_EQ(*d.component_dims, (std::vector<std::size_t>{8, 2}));
  EXPECT_EQ(&d.class_of(Root{{2, 1}}), &d.classes[1]);
  EXPECT_THROW(d.class_of(Root{{1, 0}}), std::invalid_argument);
}

TEST(ResidueClasses, ThreeDiagonalBlocks) {
  // Blocks of sizes 3, 4, 2 in A8: Theta omits alpha_3 and alpha_7.
  const RootSystem a8 = sys("A8");
  const auto d = residue_classes(a8, ThetaSubset::parse("1,2,4,5,6,8", 8));
  EXPECT_EQ(d.nonzero_count(), 3u);
  std::vector<std::size_t> sizes;
  for (std::size_t c = 1; c < d.classes.size(); ++c) sizes.push_back(d.classes[c].members.size());
  std::sort(sizes.begin(), sizes.end());
  EXPECT_EQ(sizes, (std::vector<std::size_t>{6, 8, 12}));  // 3*2, 4*2, 3*4
}

TEST(ResidueClasses, SmallCounts) {
  EXPECT_EQ(metric_parameter_count(residue_classes(sys("B2"), ThetaSubset{})), 4u);
  EXPECT_EQ(metric_parameter_count(residue_classes(sys("A2"), ThetaSubset::parse("1", 2))), 1u);
  EXPECT_EQ(metric_parameter_count(residue_classes(sys("A3"), ThetaSubset::parse("1,2,3", 3))), 0u);
}

TEST(ResidueClasses, NonreducedBC2) {
  const auto d = residue_classes(sys("BC2"), ThetaSubset::parse("1", 2));
  EXPECT_FALSE(d.reduced);
  EXPECT_FALSE(d.component_dims);
  ASSERT_EQ(d.nonzero_count(), 2u);
  EXPECT_EQ(d.classes[1].members, (std::vector<Root>{Root{{0, 1}}, Root{{1, 1}}}));
  EXPECT_EQ(d.classes[2].members, (std::vector<Root>{Root{{0, 2}}, Root{{1, 2}}, Root{{2, 2}}}));
  EXPECT_EQ(d.classes[2].lengths_present, (std::set<LengthClass>{LengthClass::Long, LengthClass::Longer}));
}

TEST(ResidueClasses, MembershipAndCoefficientPartitionsAgree) {
  for (const auto& kind : oracle::kinds_up_to(5)) {
    SCOPED_TRACE(kind.name());
    const RootSystem s = RootSystem::build(kind);
    for (unsigned long mask = 0; mask < (1ul << s.rank()); ++mask) {
      const auto theta = ThetaSubset::from_mask(mask, s.rank());
      const auto a = residue_classes(s, theta);
      const auto b = residue_classes_by_coefficients(s, theta);
      EXPECT_EQ(member_lists(a), member_lists(b)) << theta.str();
      // Reference grouping built here from the coordinates outside Theta.
      std::map<std::vector<int>, std::vector<Root>> groups;
      for (const auto& r : s.positive_roots()) {
        std::vector<int> key;
        for (std::size_t i = 0; i < s.rank(); ++i)
          if (!theta.contains(i)) key.push_back(r.coords[i]);
        groups[key].push_back(r);
      }
      std::set<std::vector<Root>> expected, got;
      for (auto& [k, v] : groups) expected.insert(v);
      for (const auto& c : a.classes)
        if (!c.members.empty()) got.insert(c.members);
      EXPECT_EQ(got, expected);
    }
  }
}

TEST(ResidueClasses, InvariantUnderThetaReflections) {
  for (const auto& kind : oracle::kinds_up_to(4)) {
    const RootSystem s = RootSystem::build(kind);
    for (unsigned long mask = 0; mask < (1ul << s.rank()); ++mask) {
      const auto theta = ThetaSubset::from_mask(mask, s.rank());
      const auto d = residue_classes(s, theta);
      for (std::size_t c = 1; c < d.classes.size(); ++c)
        for (const auto& r : d.classes[c].members)
          for (auto i : theta.indices()) EXPECT_TRUE(d.classes[c].contains(reflect(s, i, r)));
    }
  }
}

TEST(InvariantGeometry, SameGeometry) {
  const RootSystem g2 = sys("G2");
  const auto t1 = ThetaSubset::parse("1", 2);
  EXPECT_TRUE(same_invariant_geometry(g2, t1, Root{{0, 1}}, Root{{0, 1}}));
  EXPECT_TRUE(same_invariant_geometry(g2, t1, Root{{0, 1}}, Root{{1, 1}}));
  EXPECT_FALSE(same_invariant_geometry(g2, t1, Root{{0, 1}}, Root{{3, 2}}));
  EXPECT_FALSE(same_invariant_geometry(sys("A2"), ThetaSubset{}, Root{{1, 0}}, Root{{0, 1}}));
  EXPECT_THROW(same_invariant_geometry(g2, t1, Root{{1, 0}}, Root{{0, 1}}), std::invalid_argument);
}

TEST(InvariantGeometry, IsometryWitness) {
  const RootSystem g2 = sys("G2");
  const auto t1 = ThetaSubset::parse("1", 2);
  const auto same = isometry_witness(g2, t1, Root{{0, 1}}, Root{{0, 1}});
  ASSERT_TRUE(same);
  EXPECT_TRUE(same->letters.empty());
  const auto w = isometry_witness(g2, t1, Root{{0, 1}}, Root{{3, 1}});
  ASSERT_TRUE(w);
  EXPECT_EQ(w->letters, (std::vector<std::size_t>{0}));
  EXPECT_FALSE(isometry_witness(g2, t1, Root{{0, 1}}, Root{{1, 1}}));
  EXPECT_FALSE(isometry_witness(g2, t1, Root{{0, 1}}, Root{{3, 2}}));
  EXPECT_THROW(isometry_witness(g2, t1, Root{{1, 0}}, Root{{0, 1}}), std::invalid_argument);
}

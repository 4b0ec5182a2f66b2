#include <gtest/gtest.h>

#include <algorithm>
#include <array>
#include <iterator>
#include <sstream>
#include <vector>

#include "stringc/errors.hpp"
#include "stringc/polytope.hpp"
#include "stringc/report.hpp"

using namespace stringc;

namespace {

struct Fixture {
  explicit Fixture(std::int64_t p, std::int64_t e, std::int64_t r)
      : group(GroupParams::validate(p, e, r)), autos(group), ext(group, autos), gens(build_generators(ext)) {}
  Group group;
  Automorphisms autos;
  Extension ext;
  CGroupGenerators gens;
};

const std::vector<std::array<std::int64_t, 3>> kSmall = {{3, 1, 2}, {3, 2, 1}, {5, 1, 2}, {7, 1, 2}};

}  // namespace

TEST(ClosedForm, FrozenCounts) {
  EXPECT_EQ(closed_form_counts(GroupParams::validate(3, 1, 2)), (FaceCounts{9, 27, 18, 108}));
  EXPECT_EQ(closed_form_counts(GroupParams::validate(3, 2, 1)), (FaceCounts{27, 81, 54, 324}));
  EXPECT_EQ(closed_form_counts(GroupParams::validate(5, 1, 2)), (FaceCounts{25, 125, 50, 500}));
}

TEST(Euler, FrozenValues) {
  EXPECT_EQ(euler_characteristic(GroupParams::validate(3, 1, 2)), 0);
  EXPECT_EQ(euler_characteristic(GroupParams::validate(3, 2, 2)), 0);
  EXPECT_EQ(euler_characteristic(GroupParams::validate(5, 1, 2)), -50);
  EXPECT_EQ(euler_characteristic(GroupParams::validate(7, 1, 2)), -4 * 49);
}

TEST(BuildLattice, CountsMatchClosedForm) {
  for (const auto& [p, e, r] : kSmall) {
    const Fixture f(p, e, r);
    const auto lattice = build_lattice(f.ext, f.gens);
    const auto params = GroupParams::validate(p, e, r);
    EXPECT_EQ(lattice.counts(), closed_form_counts(params)) << p << e << r;
    EXPECT_EQ(euler_characteristic(lattice), euler_characteristic(params));
    const auto check = check_lattice(lattice);
    EXPECT_TRUE(check.passed()) << p << e << r << " " << (check.failures.empty() ? "" : check.failures[0]);
  }
}

TEST(BuildLattice, IncidenceMatchesCosetIntersection) {
  for (const auto& [p, e, r] : std::vector<std::array<std::int64_t, 3>>{{3, 1, 2}, {3, 2, 1}}) {
    const Fixture f(p, e, r);
    const auto lattice = build_lattice(f.ext, f.gens);
    std::vector<std::pair<std::uint32_t, std::uint32_t>> oracle;
    for (int lo = 0; lo < 3; ++lo) {
      for (int hi = lo + 1; hi < 3; ++hi) {
        for (const Face& a : lattice.faces[lo]) {
          for (const Face& b : lattice.faces[hi]) {
            std::vector<std::uint32_t> common;
            std::set_intersection(a.members.begin(), a.members.end(), b.members.begin(),
                                  b.members.end(), std::back_inserter(common));
            if (!common.empty()) oracle.emplace_back(a.id, b.id);
          }
        }
      }
    }
    std::sort(oracle.begin(), oracle.end());
    EXPECT_EQ(lattice.incidences, oracle) << p << e << r;
  }
}

TEST(BuildLattice, FacesAreCosetsWithMinimalReps) {
  const Fixture f(3, 1, 2);
  const auto lattice = build_lattice(f.ext, f.gens);
  const std::array<std::size_t, 3> sizes{12, 4, 6};  // |G_0| = 4p, |G_1| = 4, |G_2| = 2p
  for (int rank = 0; rank < 3; ++rank) {
    for (std::size_t k = 0; k < lattice.faces[rank].size(); ++k) {
      const Face& face = lattice.faces[rank][k];
      EXPECT_EQ(face.members.size(), sizes[rank]);
      for (auto idx : face.members) EXPECT_LE(face.rep, lattice.elements[idx]);
      if (k > 0) EXPECT_LT(lattice.faces[rank][k - 1].rep, face.rep);
    }
  }
}

TEST(BuildLattice, VertexAndFaceDegreesMatchType) {
  const Fixture f(5, 1, 2);
  const auto lattice = build_lattice(f.ext, f.gens);
  std::vector<int> deg(lattice.face_count(), 0);
  const auto v = lattice.faces[0].size(), e = lattice.faces[1].size();
  for (const auto& [lo, hi] : lattice.incidences) {
    if (lo < v && hi >= v && hi < v + e) ++deg[lo];
    if (lo >= v && lo < v + e && hi >= v + e) ++deg[hi];
  }
  for (std::size_t id = 0; id < v; ++id) EXPECT_EQ(deg[id], 10);
  for (std::size_t id = v + e; id < lattice.face_count(); ++id) EXPECT_EQ(deg[id], 5);
}

TEST(BuildLattice, CapExceeded) {
  const Fixture f(5, 1, 4);
  EXPECT_THROW(build_lattice(f.ext, f.gens, 1000), CapExceeded);
}

TEST(Export, JsonCountsAndFieldOrder) {
  const Fixture f(3, 1, 2);
  const auto lattice = build_lattice(f.ext, f.gens);
  std::ostringstream out;
  export_lattice(out, f.group.params(), lattice.schlafli, lattice, ExportFormat::json);
  const auto doc = Json::parse(out.str());
  EXPECT_EQ(doc["counts"]["vertices"], 9);
  EXPECT_EQ(doc["counts"]["edges"], 27);
  EXPECT_EQ(doc["counts"]["faces"], 18);
  EXPECT_EQ(doc["counts"]["flags"], 108);
  EXPECT_EQ(doc["euler"], 0);
  EXPECT_EQ(doc["schlafli"], Json::array({3, 6}));
  EXPECT_EQ(doc["faces"].size(), 54u);
  std::vector<std::string> keys;
  for (auto it = doc.begin(); it != doc.end(); ++it) keys.push_back(it.key());
  EXPECT_EQ(keys, (std::vector<std::string>{"params", "group_order", "schlafli", "counts", "euler",
                                            "faces", "incidences"}));
}

TEST(Export, JsonWithoutLatticeHasCountsOnly) {
  const auto params = GroupParams::validate(5, 2, 2);
  std::ostringstream out;
  export_lattice(out, params, {5, 10}, std::nullopt, ExportFormat::json);
  const auto doc = Json::parse(out.str());
  EXPECT_EQ(doc["counts"]["flags"], 312500);
  EXPECT_FALSE(doc.contains("faces"));
}

TEST(Export, DotNodeCountAndNames) {
  const Fixture f(3, 1, 2);
  const auto lattice = build_lattice(f.ext, f.gens);
  std::ostringstream out;
  export_lattice(out, f.group.params(), lattice.schlafli, lattice, ExportFormat::dot);
  const std::string dot = out.str();
  EXPECT_EQ(dot.rfind("graph hasse {", 0), 0u);
  std::size_t nodes = 0;
  std::istringstream lines(dot);
  for (std::string line; std::getline(lines, line);) {
    if (line.find("rank=same") == std::string::npos) continue;
    nodes += static_cast<std::size_t>(std::count(line.begin(), line.end(), ';')) - 1;
  }
  EXPECT_EQ(nodes, 54u);
  EXPECT_NE(dot.find("r0_0"), std::string::npos);
  EXPECT_NE(dot.find("r2_17"), std::string::npos);
  EXPECT_EQ(dot.find("r2_18"), std::string::npos);
}

TEST(Export, UnsupportedFormat) {
  EXPECT_THROW(parse_export_format("svg"), UnsupportedFormat);
  EXPECT_EQ(parse_export_format("dot"), ExportFormat::dot);
  const auto params = GroupParams::validate(3, 1, 2);
  std::ostringstream out;
  EXPECT_THROW(export_lattice(out, params, {3, 6}, std::nullopt, ExportFormat::dot), UnsupportedFormat);
}

TEST(Export, Deterministic) {
  auto render = [] {
    const Fixture f(3, 2, 1);
    const auto lattice = build_lattice(f.ext, f.gens);
    std::ostringstream out;
    export_lattice(out, f.group.params(), lattice.schlafli, lattice, ExportFormat::json);
    return out.str();
  };
  EXPECT_EQ(render(), render());
}

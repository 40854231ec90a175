#include <doctest.h>

#include <algorithm>
#include <stdexcept>

#include <set>

#include "cubelink/gamma.hpp"

using namespace cubelink;

TEST_CASE("vertex ids, tokens and parsing round-trip") {
  int p = 5;
  for (int id = 0; id < 4 * p; ++id) {
    GammaVertex v = GammaVertex::from_id(p, id);
    CHECK(v.id(p) == id);
    CHECK(GammaVertex::parse(v.token()) == v);
  }
  CHECK(GammaVertex{Family::A, Sign::Plus, 3}.token() == "A+3");
  CHECK(GammaVertex{Family::B, Sign::Minus, 6}.token() == "B-6");
  CHECK(GammaVertex::parse("B-6") == GammaVertex{Family::B, Sign::Minus, 6});
  CHECK(GammaVertex{Family::B, Sign::Minus, 6}.id(11) == 3 * 11 + 6);
  CHECK_THROWS_AS((void)GammaVertex::parse("C+1"), std::invalid_argument);
  CHECK_THROWS_AS((void)GammaVertex::parse("A1"), std::invalid_argument);
}

TEST_CASE("offset scheme reduction and validation") {
  OffsetScheme def;
  CHECK(def.describe() == "e1=0,1 e2=3,5 e3=0,2");
  OffsetScheme r5 = def.reduced(5);
  CHECK(r5.e2 == std::array<int, 2>{0, 3});  // 5 mod 5 = 0, sorted
  CHECK(r5.e1 == std::array<int, 2>{0, 1});
  // collapsing offset set is rejected
  OffsetScheme collapsing{{0, 1}, {1, 5}, {0, 2}};
  CHECK_THROWS_AS((void)collapsing.reduced(4), std::invalid_argument);
  CHECK_THROWS_AS((void)build_gamma(2), std::invalid_argument);
}

TEST_CASE("graph structure at the default parameter") {
  Gamma g = build_gamma(11);
  CHECK(g.num_vertices() == 44);
  CHECK(g.edge_count == 88);
  for (int v = 0; v < g.num_vertices(); ++v) CHECK(g.nbr[v].size() == 4);

  auto at = [&](const char* a, const char* b) {
    return g.adjacent(GammaVertex::parse(a).id(11), GammaVertex::parse(b).id(11));
  };
  // same-sign edges at offsets 0 and 1
  CHECK(at("A+0", "B+0"));
  CHECK(at("A+0", "B+1"));
  CHECK(at("A-4", "B-5"));
  CHECK_FALSE(at("A+0", "B+2"));
  // plus-to-minus edges at offsets 3 and 5
  CHECK(at("A+0", "B-3"));
  CHECK(at("A+0", "B-5"));
  CHECK_FALSE(at("A+0", "B-7"));
  // minus-to-plus edges at offsets 0 and 2
  CHECK(at("A-0", "B+0"));
  CHECK(at("A-0", "B+2"));
  CHECK_FALSE(at("A-0", "B+1"));
  // never within a family
  CHECK_FALSE(at("A+0", "A-0"));
  CHECK_FALSE(at("B+0", "B-2"));

  // symmetry and edge list consistency
  auto edges = g.edges();
  CHECK(edges.size() == 88);
  CHECK(std::is_sorted(edges.begin(), edges.end()));
  for (auto [u, v] : edges) {
    CHECK(u < v);
    CHECK(g.adjacent(v, u));
  }
}

TEST_CASE("sign quadrants each induce one long cycle") {
  for (int p : {11, 13}) {
    SignCycleReport rep = check_sign_cycles(build_gamma(p));
    CHECK(rep.pass());
    CHECK(rep.a_part_edges == 0);
    CHECK(rep.b_part_edges == 0);
    for (const auto& q : rep.quadrants) {
      CHECK(q.pass);
      CHECK(q.edge_count == 2 * p);
      CHECK(q.cycle_length == 2 * p);
      CHECK(q.detail.empty());
    }
  }
  // even parameters split the quadrant into two cycles
  SignCycleReport bad = check_sign_cycles(build_gamma(6));
  CHECK_FALSE(bad.pass());
  bool found_detail = false;
  for (const auto& q : bad.quadrants)
    if (!q.pass) {
      CHECK(q.detail.find("closes after") != std::string::npos);
      found_detail = true;
    }
  CHECK(found_detail);
}

TEST_CASE("short cycle enumeration is canonical and matches known counts") {
  // (p, number of 4-cycles under the default scheme)
  const std::pair<int, long> expected[] = {{3, 27}, {4, 20}, {5, 15}, {6, 12},
                                           {7, 7},  {8, 0},  {11, 0}, {13, 0}};
  for (auto [p, n4] : expected) {
    Gamma g = build_gamma(p);
    auto cycles = find_short_cycles(g, 4);
    long got3 = 0, got4 = 0;
    std::set<std::string> seen;
    for (const auto& w : cycles) {
      (w.length() == 3 ? got3 : got4)++;
      CHECK(seen.insert(w.describe()).second);  // no duplicates
      // canonical orientation: minimal vertex first, second < last
      CHECK(w.vertices[0] == *std::min_element(w.vertices.begin(), w.vertices.end()));
      CHECK(w.vertices[1] < w.vertices.back());
      // actually a closed walk
      for (int i = 0; i < w.length(); ++i)
        CHECK(g.adjacent(w.vertices[i].id(p), w.vertices[(i + 1) % w.length()].id(p)));
    }
    CHECK(got3 == 0);
    CHECK(got4 == n4);
  }
  CHECK_THROWS_AS((void)find_short_cycles(build_gamma(5), 2), std::invalid_argument);
  CHECK_THROWS_AS((void)find_short_cycles(build_gamma(5), 7), std::invalid_argument);
}

TEST_CASE("diagonal-pattern census agrees with exhaustive enumeration") {
  for (int p : {3, 4, 5, 6, 7, 8, 11}) {
    Gamma g = build_gamma(p);
    long enumerated = 0;
    for (const auto& w : find_short_cycles(g, 4))
      if (w.length() == 4) ++enumerated;
    CHECK(four_cycle_census(g).total() == enumerated);
  }
  // at p=7 every square has both diagonal pairs in mixed sign classes
  FourCycleCensus c7 = four_cycle_census(build_gamma(7));
  CHECK(c7.mixed[4] == 7);
  CHECK(c7.total() == 7);
}

TEST_CASE("planted cycles are found") {
  auto v = [](const char* tok) { return GammaVertex::parse(tok); };

  // hand-built 4-cycle, not expressible through an offset scheme
  Gamma planted = Gamma::from_edges(
      3, {{v("A+0"), v("B+0")}, {v("B+0"), v("A+1")}, {v("A+1"), v("B+1")}, {v("B+1"), v("A+0")}});
  auto cycles = find_short_cycles(planted, 4);
  REQUIRE(cycles.size() == 1);
  CHECK(cycles[0].describe() == "A+0,B+0,A+1,B+1");

  // a scheme with a repeated-difference pair creates squares
  Gamma g = build_gamma(4, OffsetScheme{{0, 2}, {3, 1}, {0, 2}});
  auto got = find_short_cycles(g, 4);
  bool found = false;
  for (const auto& w : got)
    if (w.describe() == "A+0,B+0,A+2,B+2") found = true;
  CHECK(found);

  // census rejects graphs with same-family edges
  Gamma odd = Gamma::from_edges(3, {{v("A+0"), v("A-1")}});
  CHECK_THROWS_AS((void)four_cycle_census(odd), std::invalid_argument);
}

TEST_CASE("serialization is stable and sorted") {
  Gamma g = build_gamma(11);
  std::string text = serialize_gamma(g);
  CHECK(text.substr(0, text.find('\n')) == "gamma p=11 e1=0,1 e2=3,5 e3=0,2");
  CHECK(text.find("A+0 B-3\n") != std::string::npos);
  long lines = std::count(text.begin(), text.end(), '\n');
  CHECK(lines == 89);  // header + one line per edge
  CHECK(serialize_gamma(g) == text);
}

#include <doctest.h>

#include <algorithm>
#include <stdexcept>

#include <sstream>

#include "cubelink/cube_complex.hpp"
#include "cubelink/simplicial.hpp"

using namespace cubelink;

namespace {

const Gamma& g11() {
  static Gamma g = build_gamma(11);
  return g;
}

const CubeComplex& delta11() {
  static CubeComplex cc = build_delta(g11(), 4);
  return cc;
}

uint32_t gid(const char* tok) { return static_cast<uint32_t>(GammaVertex::parse(tok).id(11)); }

CubeCell dvert(const char* x, const char* y, const char* z) {
  return CubeCell{{gid(x), gid(y), gid(z)}};
}

// expected full link of an equal-part vertex: three 4-point join factors
SimplicialComplex triple_join4() {
  return join(join(SimplicialComplex::points(4, "x"), SimplicialComplex::points(4, "y")),
              SimplicialComplex::points(4, "z"));
}

}  // namespace

TEST_CASE("membership constraint by parts") {
  CHECK(omega_constraint(1, 1, 1) == OmegaConstraint::AllSame);
  CHECK(omega_constraint(2, 2, 2) == OmegaConstraint::AllSame);
  CHECK(omega_constraint(1, 2, 1) == OmegaConstraint::PairUV);
  CHECK(omega_constraint(1, 2, 2) == OmegaConstraint::PairUV);
  CHECK(omega_constraint(1, 1, 2) == OmegaConstraint::PairVW);
  CHECK(omega_constraint(2, 1, 2) == OmegaConstraint::PairVW);
  CHECK(omega_constraint(2, 1, 1) == OmegaConstraint::PairUW);
  CHECK(omega_constraint(2, 2, 1) == OmegaConstraint::PairUW);
  CHECK_THROWS_AS((void)omega_constraint(0, 1, 2), std::invalid_argument);
}

TEST_CASE("theta factors: parallel labeled edges with sign-split orientation") {
  FactorGraph t1 = make_theta(1, 11);
  CHECK(t1.num_vertices() == 2);
  CHECK(t1.vlabels == std::vector<std::string>{"v1", "v2"});
  CHECK(t1.edges.size() == 22);
  CHECK(t1.edges[0].label == "A+0");
  CHECK(t1.edges[11].label == "A-0");
  // positive edges point at v1, negative at v2
  for (const auto& e : t1.edges) {
    CHECK(e.head == (e.label[1] == '+' ? 0u : 1u));
    CHECK(e.tail == 1u - e.head);
  }
  CHECK(t1.out_edges[0].size() == 11);  // v1 emits the negative edges
  CHECK(t1.incident[0].size() == 22);

  FactorGraph t2 = make_theta(2, 11);
  CHECK(t2.vlabels == std::vector<std::string>{"v3", "v4"});
  CHECK(t2.edges[3].label == "B+3");
}

TEST_CASE("bipartite factors: complete, oriented by sign agreement") {
  FactorGraph u = make_bipartite(FactorId::U, 11);
  CHECK(u.num_vertices() == 44);
  CHECK(u.edges.size() == 484);
  CHECK(u.vlabels[0] == "A+0");
  CHECK(u.vlabels[22] == "B+0");
  CHECK(u.part[0] == 1);
  CHECK(u.part[43] == 2);
  for (int v = 0; v < u.num_vertices(); ++v) {
    CHECK(u.incident[v].size() == 22);
    CHECK(u.out_edges[v].size() == 11);  // half out, half in
  }
  // same signs: edge points at the a-side endpoint
  for (const auto& e : u.edges) {
    int a = static_cast<int>(std::min(e.tail, e.head));
    int b = static_cast<int>(std::max(e.tail, e.head));
    bool same = (a < 11) == (b - 22 < 11);
    CHECK(static_cast<int>(e.head) == (same ? a : b));
  }
}

TEST_CASE("square complex census and membership") {
  CubeComplex x = build_x(g11());
  CHECK(x.nfactors() == 2);
  CHECK(x.dim() == 2);
  CHECK(x.cells[0].size() == 4);
  CHECK(x.cells[1].size() == 88);
  CHECK(x.cells[2].size() == 88);

  // one square per parameter-graph edge: theta edge ids match vertex ids
  CubeCell present{{gid("A+0") | kEdgeFlag, gid("B+0") - 22 | kEdgeFlag, 0}};
  CHECK(x.has_cell(present));
  CHECK(x.cell_dim(present) == 2);
  CubeCell absent{{gid("A+0") | kEdgeFlag, gid("B+2") - 22 | kEdgeFlag, 0}};
  CHECK_FALSE(x.has_cell(absent));

  // corners of the present square are the four product vertices
  CHECK(x.corner(present, 0b00) == CubeCell{{1, 1, 0}});  // both tails: v2, v4
  CHECK(x.corner(present, 0b11) == CubeCell{{0, 0, 0}});  // both heads: v1, v3

  CHECK(x.cell_text(present) == "(e[A+0], e[B+0])");
}

TEST_CASE("square complex links are copies of the parameter graph") {
  CubeComplex x = build_x(g11());
  SimplicialComplex expected = to_simplicial(g11());
  for (const CubeCell& v : x.cells[0]) {
    VertexLink lk = link(x, v);
    CHECK(lk.complex.count(0) == 44);
    CHECK(lk.complex.count(1) == 88);
    std::map<std::string, std::string> strip;
    for (const auto& pt : lk.points) strip[pt.label] = pt.label.substr(3);
    CHECK(is_isomorphic_relabel(lk.complex, expected, strip));

    // each half of the link is one long cycle; the sign of each point is
    // fixed by its coordinate (positive edges point at v1 and v3)
    for (bool up : {true, false}) {
      VertexLink half = up ? ascending_link(x, v) : descending_link(x, v);
      CHECK(half.complex.count(0) == 22);
      CHECK(half.complex.count(1) == 22);
      CHECK(is_connected(half.complex));
      for (const auto& pt : half.points) {
        char expect = (v.c[pt.factor] == 0) == up ? '-' : '+';
        CHECK(pt.label[4] == expect);
      }
    }
  }
}

TEST_CASE("three-factor vertex membership") {
  const CubeComplex& d = delta11();
  CHECK(d.nfactors() == 3);
  CHECK(d.dim() == 3);

  // equal-part triples are unconditionally in
  CHECK(d.vertex_member(dvert("A+0", "A+0", "A+0")));
  CHECK(d.vertex_member(dvert("B+3", "B-5", "B+0")));
  // mixed triples defer to the coupled pair
  CHECK(d.vertex_member(dvert("A+0", "B+1", "B-4")));   // pair (U,V), edge offset 1
  CHECK_FALSE(d.vertex_member(dvert("A+0", "B-7", "A+0")));  // offset 7 is no edge
  CHECK(d.vertex_member(dvert("B+0", "A+0", "A+0")));   // pair (U,W) via B+0 - A+0

  CHECK(vertex_type(d, dvert("A+0", "A+3", "A-5")) == VertexType::Type1);
  CHECK(vertex_type(d, dvert("A+0", "B+1", "B-4")) == VertexType::Type2);
  CubeCell outside = dvert("B+3", "A+0", "A+0");  // B+3 - A+0 is no edge
  CHECK_FALSE(d.vertex_member(outside));
  CHECK_THROWS_AS((void)vertex_type(d, outside), std::invalid_argument);
}

TEST_CASE("three-factor census at the default parameter") {
  const CubeComplex& d = delta11();
  CHECK(d.cells[0].size() == 32912);
  CHECK(d.cells[1].size() == 406560);
  CHECK(d.cells[2].size() == 1022208);
  CHECK(d.cells[3].size() == 681472);

  long type1 = 0;
  for (const CubeCell& v : d.cells[0])
    if (vertex_type(d, v) == VertexType::Type1) ++type1;
  CHECK(type1 == 21296);                      // 2 * (2p)^3
  CHECK(d.cells[0].size() - type1 == 11616);  // 6 * |E| * 2p
}

TEST_CASE("worker count does not change the complex") {
  Gamma g3 = build_gamma(3);
  CHECK(build_delta(g3, 1) == build_delta(g3, 7));
}

TEST_CASE("equal-part vertex links: triple join of four points each") {
  const CubeComplex& d = delta11();
  CubeCell v = dvert("A+0", "A+3", "A-5");
  VertexLink lk = link(d, v);
  CHECK(lk.complex.count(0) == 12);
  CHECK(lk.complex.count(1) == 48);
  CHECK(lk.complex.count(2) == 64);

  // four admissible ends in every direction, so no distinguished one
  CHECK_FALSE(upsilon_direction(d, v).has_value());

  std::map<std::string, std::string> relabel;
  std::array<int, 3> seen{0, 0, 0};
  const char* prefix[3] = {"x", "y", "z"};
  for (const auto& pt : lk.points)
    relabel[pt.label] = prefix[pt.factor] + std::to_string(seen[pt.factor]++);
  CHECK(is_isomorphic_relabel(lk.complex, triple_join4(), relabel));

  for (bool up : {true, false}) {
    VertexLink half = up ? ascending_link(d, v) : descending_link(d, v);
    CHECK(half.complex.count(0) == 6);
    CHECK(half.complex.count(1) == 12);
    CHECK(half.complex.count(2) == 8);
    CHECK(is_two_sphere(half.complex).sphere);
  }
}

TEST_CASE("mixed vertex links: graph joined with four points") {
  const CubeComplex& d = delta11();
  CubeCell v = dvert("A+0", "B+1", "B-4");
  VertexLink lk = link(d, v);
  CHECK(lk.complex.count(0) == 48);
  CHECK(lk.complex.count(1) == 264);
  CHECK(lk.complex.count(2) == 352);

  auto ups = upsilon_direction(d, v);
  REQUIRE(ups.has_value());
  CHECK(*ups == 1);  // the coupled pair leaves V with exactly 4 admissible ends

  // the non-distinguished directions form a copy of the parameter graph,
  // indexed by far endpoints; the distinguished one contributes the 4 points
  SimplicialComplex expected = join(to_simplicial(g11()), SimplicialComplex::points(4, "y"));
  std::map<std::string, std::string> relabel;
  int nyc = 0;
  for (const auto& pt : lk.points) {
    if (pt.factor == *ups) {
      relabel[pt.label] = "y" + std::to_string(nyc++);
    } else {
      const FactorGraph& f = d.factors[pt.factor];
      relabel[pt.label] = f.vlabels[f.other_end(pt.edge, v.c[pt.factor])];
    }
  }
  CHECK(is_isomorphic_relabel(lk.complex, expected, relabel));

  // ascending and descending links are suspensions of a long cycle
  for (bool up : {true, false}) {
    VertexLink half = up ? ascending_link(d, v) : descending_link(d, v);
    CHECK(half.complex.count(0) == 24);
    CHECK(half.complex.count(1) == 66);
    CHECK(half.complex.count(2) == 44);
    CHECK(is_two_sphere(half.complex).sphere);
  }
}

TEST_CASE("special edge audit") {
  SpecialCellAudit audit = special_one_cells(delta11());
  CHECK(audit.edge_cells == 406560);
  CHECK(audit.special_count == 23232);
  CHECK(audit.iff_holds);
  CHECK(audit.witness.empty());
  CHECK(audit.special.size() == 23232);
  CHECK(std::is_sorted(audit.special.begin(), audit.special.end()));
  CHECK(audit.special_count <= audit.type2_type2_edges);
  CHECK(audit.type2_type2_edges <= audit.edge_cells);

  // spot check: every special edge runs in the distinguished direction of
  // both of its endpoints
  const CubeComplex& d = delta11();
  for (size_t i = 0; i < audit.special.size(); i += 4001) {
    const CubeCell& e = audit.special[i];
    int dir = -1;
    for (int f = 0; f < 3; ++f)
      if (e.c[f] & kEdgeFlag) dir = f;
    for (unsigned m : {0u, 1u}) {
      auto u = upsilon_direction(d, d.corner(e, m));
      REQUIRE(u.has_value());
      CHECK(*u == dir);
    }
  }
}

TEST_CASE("export and import round-trip") {
  // the square complex
  CubeComplex x = build_x(g11());
  std::string text = export_complex_string(x);
  CHECK(text.rfind("cubecomplex factors=2\n", 0) == 0);
  CHECK(std::count(text.begin(), text.end(), '\n') == 1 + 4 + 88 + 88);
  std::istringstream in(text);
  CubeComplex back = import_complex(in, {make_theta(1, 11), make_theta(2, 11)});
  CHECK(back == x);

  // the three-factor complex at a small parameter
  Gamma g3 = build_gamma(3);
  CubeComplex d3 = build_delta(g3);
  std::string dtext = export_complex_string(d3);
  CHECK(dtext.rfind("cubecomplex factors=3\n", 0) == 0);
  std::istringstream din(dtext);
  CubeComplex dback = import_complex(
      din, {make_bipartite(FactorId::U, 3), make_bipartite(FactorId::V, 3),
            make_bipartite(FactorId::W, 3)});
  CHECK(dback == d3);
  // sorted line output is reproducible
  CHECK(export_complex_string(dback) == dtext);
}

TEST_CASE("import rejects malformed input") {
  auto factors2 = [] {
    return std::vector<FactorGraph>{make_theta(1, 3), make_theta(2, 3)};
  };
  {
    std::istringstream in("squarecomplex factors=2\n");
    CHECK_THROWS_AS((void)import_complex(in, factors2()), std::invalid_argument);
  }
  {
    std::istringstream in("cubecomplex factors=2\ndim=0 v:v1 v:v9\n");
    CHECK_THROWS_AS((void)import_complex(in, factors2()), std::invalid_argument);
  }
  {
    std::istringstream in("cubecomplex factors=2\ndim=1 v:v1 v:v3\n");
    CHECK_THROWS_AS((void)import_complex(in, factors2()), std::invalid_argument);
  }
  {
    std::istringstream in("cubecomplex factors=2\ndim=0 v:v1\n");
    CHECK_THROWS_AS((void)import_complex(in, factors2()), std::invalid_argument);
  }
  {
    // edge token that names no edge of the factor
    std::istringstream in("cubecomplex factors=2\ndim=1 e:A+9:v1 v:v3\n");
    CHECK_THROWS_AS((void)import_complex(in, factors2()), std::invalid_argument);
  }
}

#ifndef CUBELINK_CUBE_COMPLEX_HPP
#define CUBELINK_CUBE_COMPLEX_HPP

#include <array>
#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "cubelink/gamma.hpp"
#include "cubelink/simplicial.hpp"

namespace cubelink {

enum class FactorId : uint8_t { Theta1, Theta2, U, V, W };

/// A factor of the ambient product: either a theta graph (two vertices
/// joined by 2p parallel labeled edges) or a complete bipartite graph on
/// 2p + 2p labeled vertices. Edges are oriented; tail/head drive the
/// ascending/descending split.
struct FactorGraph {
  FactorId id = FactorId::Theta1;
  std::vector<std::string> vlabels;
  std::vector<int> part;  // bipartite: 1 = a-side, 2 = b-side; theta: 0

  struct Edge {
    uint32_t tail = 0;
    uint32_t head = 0;
    std::string label;  // theta only; bipartite edges are named by endpoints
    friend bool operator==(const Edge&, const Edge&) = default;
  };
  std::vector<Edge> edges;
  std::vector<std::vector<uint32_t>> incident;   // vertex -> sorted edge ids
  std::vector<std::vector<uint32_t>> out_edges;  // vertex -> edges with this tail

  bool is_theta() const { return id == FactorId::Theta1 || id == FactorId::Theta2; }
  int num_vertices() const { return static_cast<int>(vlabels.size()); }
  uint32_t other_end(uint32_t edge, uint32_t v) const {
    return edges[edge].tail == v ? edges[edge].head : edges[edge].tail;
  }
  /// Export token, "e:<edge-label>:<head-label>" for theta (parallel edges
  /// are not determined by endpoints), "e:<min>:<max>" for bipartite.
  std::string edge_token(uint32_t edge) const;
  /// Short form for witnesses and link point labels.
  std::string edge_text(uint32_t edge) const;

  friend bool operator==(const FactorGraph&, const FactorGraph&) = default;
};

/// Theta factor number 1 or 2: vertex pair (v1,v2) or (v3,v4); edges carry
/// the a-labels (factor 1) or b-labels (factor 2) of the parameter graph.
/// Positive edges point at the odd vertex (v1 or v3), negative at the even.
FactorGraph make_theta(int which, int p);

/// Complete bipartite factor on the a-labels and b-labels; the edge
/// {a,b} points at a when the two signs agree and at b otherwise.
FactorGraph make_bipartite(FactorId id, int p);

// Coordinates of a cell: factor vertex id, or factor edge id | kEdgeFlag.
// Unused trailing coordinates (two-factor complexes) stay 0.
inline constexpr uint32_t kEdgeFlag = 0x80000000u;

struct CubeCell {
  std::array<uint32_t, 3> c{};
  friend auto operator<=>(const CubeCell&, const CubeCell&) = default;
};

/// Cube complex sitting inside a product of 2 or 3 factor graphs. Cells are
/// kept per dimension in sorted order, so complexes compare by ==.
struct CubeComplex {
  std::vector<FactorGraph> factors;
  std::vector<std::vector<CubeCell>> cells;  // [dim], each sorted ascending
  std::vector<uint8_t> vertex_in;            // membership over all coordinate tuples

  int nfactors() const { return static_cast<int>(factors.size()); }
  int dim() const { return static_cast<int>(cells.size()) - 1; }

  int cell_dim(const CubeCell& cell) const;
  bool has_cell(const CubeCell& cell) const;
  bool vertex_member(const CubeCell& v) const;
  long vertex_index(const CubeCell& v) const;

  /// Corner of a cell: bit i of mask resolves the i-th edge coordinate
  /// (in factor order) to its head (1) or tail (0).
  CubeCell corner(const CubeCell& cell, unsigned mask) const;

  std::string cell_text(const CubeCell& cell) const;  // "(A+0, B-3, e[A+0:B+5])"

  /// Sorts cells, trims empty top dimensions, rebuilds the vertex bitset.
  void finalize();

  friend bool operator==(const CubeComplex&, const CubeComplex&) = default;
};

/// Which coordinates a vertex-membership constraint couples, as a function
/// of the three parts. Mixed-part triples couple exactly one pair: the
/// matching pairs the 1-side of one factor with the 2-side of the next,
/// cyclically U1-V2, V1-W2, W1-U2.
enum class OmegaConstraint : uint8_t { AllSame, PairUV, PairVW, PairUW };
OmegaConstraint omega_constraint(int part_u, int part_v, int part_w);

/// The square complex: two theta factors, all four product vertices and all
/// product edges, one square per edge of the parameter graph.
CubeComplex build_x(const Gamma& g);

/// The 3-dimensional complex inside U x V x W: vertices satisfy the
/// part-wise constraint (equal-part triples are free; mixed triples need
/// their coupled pair to be an edge of the parameter graph), and a higher
/// cell belongs iff all of its corners do. Each cell is found exactly once
/// at its all-tails corner.
CubeComplex build_delta(const Gamma& g, int parallelism = 1);

enum class VertexType : uint8_t { Type1, Type2 };

/// Type1 = all three coordinates on the same side, Type2 = mixed.
/// Throws std::invalid_argument unless v is a vertex of a 3-factor complex.
VertexType vertex_type(const CubeComplex& cc, const CubeCell& v);

/// One edge-end at a vertex. The factor edge id (not just the far endpoint)
/// identifies the point, because theta factors carry parallel edges.
struct LinkPoint {
  int factor = 0;
  uint32_t edge = 0;
  bool outgoing = false;  // true when the edge leaves the vertex
  std::string label;      // "d0:A+3" (theta) or "d2:A+0:B+5" (bipartite)
};

/// Link of a vertex with its point bookkeeping; points are index-aligned
/// with the vertices of the simplicial complex.
struct VertexLink {
  SimplicialComplex complex;
  std::vector<LinkPoint> points;
};

/// Link of a vertex: one point per admissible edge-end, one k-simplex per
/// (k+1)-cell of the complex containing the vertex.
VertexLink link(const CubeComplex& cc, const CubeCell& v);

/// Full subcomplex of the link on outgoing (resp. incoming) edge-ends.
VertexLink ascending_link(const CubeComplex& cc, const CubeCell& v);
VertexLink descending_link(const CubeComplex& cc, const CubeCell& v);

/// The direction whose admissible edge-ends number exactly 4, when unique.
/// For mixed-part vertices this is the factor contributing the 4-point
/// join part of the link.
std::optional<int> upsilon_direction(const CubeComplex& cc, const CubeCell& v);

struct SpecialCellAudit {
  long edge_cells = 0;
  long type2_type2_edges = 0;
  long special_count = 0;
  bool iff_holds = true;            // special set == both-endpoint test, per edge
  std::vector<std::string> witness;
  std::vector<CubeCell> special;    // sorted
};

/// Special 1-cells: edges whose direction is the 4-point direction of both
/// endpoints. The audit recomputes the set per endpoint and cross-checks.
SpecialCellAudit special_one_cells(const CubeComplex& cc);

/// Line format: "cubecomplex factors=<n>" then one sorted line per cell.
void export_complex(const CubeComplex& cc, std::ostream& os);
std::string export_complex_string(const CubeComplex& cc);

/// Inverse of export_complex given the same factors; throws
/// std::invalid_argument on malformed or unresolvable input.
CubeComplex import_complex(std::istream& is, std::vector<FactorGraph> factors);

}  // namespace cubelink

#endif

#ifndef CUBELINK_SIMPLICIAL_HPP
#define CUBELINK_SIMPLICIAL_HPP

#include <array>
#include <map>
#include <string>
#include <vector>

#include "cubelink/gamma.hpp"

namespace cubelink {

/// Finite abstract simplicial complex with labeled vertices. Simplices are
/// stored per dimension as sorted vertex-id lists, each dimension sorted
/// lexicographically, so equality of complexes is plain container equality.
struct SimplicialComplex {
  std::vector<std::string> labels;                        // vertex id -> label
  std::vector<std::vector<std::vector<int>>> simplices;   // [dim][i] -> sorted ids

  int dim() const { return static_cast<int>(simplices.size()) - 1; }
  long count(int k) const {
    return k >= 0 && k <= dim() ? static_cast<long>(simplices[k].size()) : 0;
  }
  long num_vertices() const { return count(0); }
  bool has(const std::vector<int>& sorted_simplex) const;

  /// Downward closure of the given simplices over n labeled vertices.
  static SimplicialComplex from_maximal(std::vector<std::string> labels,
                                        const std::vector<std::vector<int>>& maximal);

  /// n isolated vertices labeled prefix0..prefix(n-1).
  static SimplicialComplex points(int n, const std::string& prefix);

  /// Cycle graph on n >= 3 vertices.
  static SimplicialComplex cycle(int n, const std::string& prefix);

  friend bool operator==(const SimplicialComplex&, const SimplicialComplex&) = default;
};

/// The graph as a 1-complex, vertex labels taken from vertex tokens.
SimplicialComplex to_simplicial(const Gamma& g);

struct FlagResult {
  bool flag = true;
  std::vector<int> witness;  // smallest clique whose span is missing
};

/// Flag test: every clique of the 1-skeleton spans a simplex. The witness is
/// the first failing clique in a size-then-lexicographic scan, so it is
/// minimal and deterministic.
FlagResult is_flag(const SimplicialComplex& sc);

/// Induced 4-cycles (x,u,y,w) with both diagonals {x,y}, {u,w} non-adjacent;
/// one canonical representative per square, sorted.
std::vector<std::array<int, 4>> empty_squares(const SimplicialComplex& sc);

bool is_connected(const SimplicialComplex& sc);

long euler_characteristic(const SimplicialComplex& sc);

struct SurfaceResult {
  bool sphere = false;
  std::string diagnostic;  // first failed clause, empty when sphere
};

/// Combinatorial 2-sphere test: pure 2-dimensional, each edge in exactly two
/// triangles, each vertex link a single cycle, connected, Euler
/// characteristic 2.
SurfaceResult is_two_sphere(const SimplicialComplex& sc);

/// Simplicial join; vertex label sets must be disjoint.
SimplicialComplex join(const SimplicialComplex& a, const SimplicialComplex& b);

/// Full subcomplex on the given vertex ids (need not be sorted).
SimplicialComplex induced_on(const SimplicialComplex& sc, const std::vector<int>& verts);

/// True when the label map carries the simplices of a bijectively onto the
/// simplices of b. Throws if the map is not a label bijection a -> b.
bool is_isomorphic_relabel(const SimplicialComplex& a, const SimplicialComplex& b,
                           const std::map<std::string, std::string>& relabel);

/// One line "s <label>..." per maximal simplex, lines sorted.
std::string serialize_maximal(const SimplicialComplex& sc);

}  // namespace cubelink

#endif

#ifndef CUBELINK_GAMMA_HPP
#define CUBELINK_GAMMA_HPP

#include <array>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace cubelink {

// Vertex classes of the parameter graph, in canonical id order:
// A+ ids [0,p), A- ids [p,2p), B+ ids [2p,3p), B- ids [3p,4p).
enum class Family : uint8_t { A = 0, B = 1 };
enum class Sign : uint8_t { Plus = 0, Minus = 1 };

struct GammaVertex {
  Family family = Family::A;
  Sign sign = Sign::Plus;
  int index = 0;

  int id(int p) const;
  static GammaVertex from_id(int p, int id);

  /// Textual form, e.g. "A+3" or "B-6".
  std::string token() const;
  static GammaVertex parse(std::string_view tok);

  friend auto operator<=>(const GammaVertex&, const GammaVertex&) = default;
};

/// Offsets (mod p) selecting the three edge families: same-sign A-B edges,
/// plus-to-minus edges, minus-to-plus edges. Each set has exactly two
/// elements, distinct mod p.
struct OffsetScheme {
  std::array<int, 2> e1{0, 1};
  std::array<int, 2> e2{3, 5};
  std::array<int, 2> e3{0, 2};

  /// All six offsets reduced mod p and sorted within each set.
  /// Throws std::invalid_argument if a set collapses to one residue.
  OffsetScheme reduced(int p) const;

  std::string describe() const;  // "e1=0,1 e2=3,5 e3=0,2"

  friend bool operator==(const OffsetScheme&, const OffsetScheme&) = default;
};

/// The 4-partite graph on 4p vertices. Adjacency is stored over the full
/// vertex set so that structural claims (no A-A or B-B edges, degree 4)
/// are verified facts rather than representation artifacts.
struct Gamma {
  int p = 0;
  OffsetScheme scheme;  // reduced mod p
  std::vector<uint8_t> adj;
  std::vector<std::vector<int>> nbr;  // sorted neighbor lists
  long edge_count = 0;

  int num_vertices() const { return 4 * p; }
  bool adjacent(int u, int v) const { return adj[static_cast<size_t>(u) * num_vertices() + v] != 0; }

  GammaVertex vertex(int id) const { return GammaVertex::from_id(p, id); }

  /// Edges as (min id, max id), sorted.
  std::vector<std::pair<int, int>> edges() const;

  /// Build a graph with an explicit edge list; used for planted test graphs.
  static Gamma from_edges(int p, const std::vector<std::pair<GammaVertex, GammaVertex>>& edge_list,
                          const OffsetScheme& scheme = OffsetScheme{});
};

/// Construct the graph from the modular edge rules. Requires p >= 3 and a
/// scheme whose offset sets stay two-element after reduction mod p.
Gamma build_gamma(int p, const OffsetScheme& scheme = OffsetScheme{});

struct CycleWitness {
  std::vector<GammaVertex> vertices;  // canonical: min vertex first, second < last
  int length() const { return static_cast<int>(vertices.size()); }
  std::string describe() const;  // "A+0,B+0,A-0,B-0"
};

/// Every simple cycle of length <= max_len (max_len in 3..6), each exactly
/// once up to rotation and reflection, sorted by (length, vertex ids).
/// Empty result certifies girth > max_len.
std::vector<CycleWitness> find_short_cycles(const Gamma& g, int max_len);

struct QuadrantReport {
  Sign a_sign = Sign::Plus;
  Sign b_sign = Sign::Plus;
  bool pass = false;
  long edge_count = 0;
  int cycle_length = 0;  // meaningful when pass
  std::string detail;    // failure description, empty on pass
};

struct SignCycleReport {
  long a_part_edges = 0;  // edges inside A+ u A-; expect 0
  long b_part_edges = 0;
  std::array<QuadrantReport, 4> quadrants;  // (+,+), (+,-), (-,+), (-,-)
  bool pass() const;
};

/// Verifies that the same-family vertex sets span no edges and that each of
/// the four sign quadrants induces a single 2p-cycle.
SignCycleReport check_sign_cycles(const Gamma& g);

/// Counts of 4-cycles split by the sign pattern of their two diagonal pairs.
/// mixed[0..4] are the five patterns that touch three or four sign classes;
/// quadrant[] are the four patterns inside a single sign quadrant.
struct FourCycleCensus {
  std::array<long, 5> mixed{};
  std::array<long, 4> quadrant{};  // (+,+), (+,-), (-,+), (-,-)
  long total() const;
};

/// Common-neighbor enumeration of all 4-cycles; requires a family-bipartite
/// graph. Serves as an independent route against find_short_cycles.
FourCycleCensus four_cycle_census(const Gamma& g);

/// Line-oriented text form: header "gamma p=..." then one edge per line.
std::string serialize_gamma(const Gamma& g);

}  // namespace cubelink

#endif

#include "cubelink/cube_complex.hpp"

#include <algorithm>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <thread>

namespace cubelink {

namespace {

void require(bool cond, const std::string& msg) {
  if (!cond) throw std::invalid_argument(msg);
}

void index_factor(FactorGraph& f) {
  f.incident.assign(f.num_vertices(), {});
  f.out_edges.assign(f.num_vertices(), {});
  // edges are visited in id order, so the per-vertex lists come out sorted
  for (uint32_t e = 0; e < f.edges.size(); ++e) {
    f.incident[f.edges[e].tail].push_back(e);
    f.incident[f.edges[e].head].push_back(e);
    f.out_edges[f.edges[e].tail].push_back(e);
  }
}

}  // namespace

std::string FactorGraph::edge_token(uint32_t edge) const {
  const Edge& ed = edges[edge];
  if (is_theta()) return "e:" + ed.label + ":" + vlabels[ed.head];
  const std::string& x = vlabels[ed.tail];
  const std::string& y = vlabels[ed.head];
  return x < y ? "e:" + x + ":" + y : "e:" + y + ":" + x;
}

std::string FactorGraph::edge_text(uint32_t edge) const {
  const Edge& ed = edges[edge];
  if (is_theta()) return ed.label;
  const std::string& x = vlabels[ed.tail];
  const std::string& y = vlabels[ed.head];
  return x < y ? x + ":" + y : y + ":" + x;
}

FactorGraph make_theta(int which, int p) {
  require(which == 1 || which == 2, "theta factor number must be 1 or 2");
  require(p >= 3, "parameter p must be at least 3");
  FactorGraph f;
  f.id = which == 1 ? FactorId::Theta1 : FactorId::Theta2;
  f.vlabels = which == 1 ? std::vector<std::string>{"v1", "v2"}
                         : std::vector<std::string>{"v3", "v4"};
  f.part = {0, 0};
  // positive edges point at v1 (resp. v3) = local vertex 0, negative at the other
  char fam = which == 1 ? 'A' : 'B';
  for (char sign : {'+', '-'})
    for (int i = 0; i < p; ++i) {
      uint32_t head = sign == '+' ? 0 : 1;
      f.edges.push_back({1 - head, head, std::string(1, fam) + sign + std::to_string(i)});
    }
  index_factor(f);
  return f;
}

FactorGraph make_bipartite(FactorId id, int p) {
  require(id == FactorId::U || id == FactorId::V || id == FactorId::W,
          "bipartite factor must be U, V or W");
  require(p >= 3, "parameter p must be at least 3");
  FactorGraph f;
  f.id = id;
  int n = 4 * p;
  f.vlabels.reserve(n);
  f.part.reserve(n);
  // vertex ids share the parameter graph's layout: a-labels then b-labels
  for (int v = 0; v < n; ++v) {
    f.vlabels.push_back(GammaVertex::from_id(p, v).token());
    f.part.push_back(v < 2 * p ? 1 : 2);
  }
  for (uint32_t a = 0; a < static_cast<uint32_t>(2 * p); ++a)
    for (uint32_t b = 2 * p; b < static_cast<uint32_t>(4 * p); ++b) {
      bool same_sign = (a < static_cast<uint32_t>(p)) ==
                       (b - 2 * p < static_cast<uint32_t>(p));
      uint32_t head = same_sign ? a : b;
      f.edges.push_back({head == a ? b : a, head, ""});
    }
  index_factor(f);
  return f;
}

int CubeComplex::cell_dim(const CubeCell& cell) const {
  int d = 0;
  for (int i = 0; i < nfactors(); ++i)
    if (cell.c[i] & kEdgeFlag) ++d;
  return d;
}

bool CubeComplex::has_cell(const CubeCell& cell) const {
  int d = cell_dim(cell);
  if (d > dim()) return false;
  return std::binary_search(cells[d].begin(), cells[d].end(), cell);
}

long CubeComplex::vertex_index(const CubeCell& v) const {
  long idx = 0;
  for (int i = 0; i < nfactors(); ++i) idx = idx * factors[i].num_vertices() + v.c[i];
  return idx;
}

bool CubeComplex::vertex_member(const CubeCell& v) const {
  return vertex_in[vertex_index(v)] != 0;
}

CubeCell CubeComplex::corner(const CubeCell& cell, unsigned mask) const {
  CubeCell out = cell;
  int bit = 0;
  for (int i = 0; i < nfactors(); ++i) {
    if (!(cell.c[i] & kEdgeFlag)) continue;
    const auto& e = factors[i].edges[cell.c[i] & ~kEdgeFlag];
    out.c[i] = (mask >> bit & 1) ? e.head : e.tail;
    ++bit;
  }
  return out;
}

std::string CubeComplex::cell_text(const CubeCell& cell) const {
  std::string s = "(";
  for (int i = 0; i < nfactors(); ++i) {
    if (i) s += ", ";
    if (cell.c[i] & kEdgeFlag)
      s += "e[" + factors[i].edge_text(cell.c[i] & ~kEdgeFlag) + "]";
    else
      s += factors[i].vlabels[cell.c[i]];
  }
  return s + ")";
}

void CubeComplex::finalize() {
  if (cells.empty()) cells.resize(1);
  for (auto& level : cells) {
    std::sort(level.begin(), level.end());
    level.erase(std::unique(level.begin(), level.end()), level.end());
  }
  while (cells.size() > 1 && cells.back().empty()) cells.pop_back();
  long total = 1;
  for (const auto& f : factors) total *= f.num_vertices();
  vertex_in.assign(total, 0);
  for (const auto& v : cells[0]) vertex_in[vertex_index(v)] = 1;
}

OmegaConstraint omega_constraint(int part_u, int part_v, int part_w) {
  for (int x : {part_u, part_v, part_w}) require(x == 1 || x == 2, "parts must be 1 or 2");
  if (part_u == part_v && part_v == part_w) return OmegaConstraint::AllSame;
  if (part_u == 1 && part_v == 2) return OmegaConstraint::PairUV;
  if (part_v == 1 && part_w == 2) return OmegaConstraint::PairVW;
  if (part_u == 2 && part_w == 1) return OmegaConstraint::PairUW;
  // exhaustive over the six mixed triples: (1,1,2)->VW (1,2,1)->UV (1,2,2)->UV
  // (2,1,1)->UW (2,1,2)->VW (2,2,1)->UW
  throw std::logic_error("unreachable part triple");
}

CubeComplex build_x(const Gamma& g) {
  int p = g.p;
  for (auto [u, v] : g.edges())
    require(u < 2 * p && v >= 2 * p, "square complex needs a family-bipartite graph");

  CubeComplex cc;
  cc.factors = {make_theta(1, p), make_theta(2, p)};
  cc.cells.resize(3);
  for (uint32_t x = 0; x < 2; ++x)
    for (uint32_t y = 0; y < 2; ++y) cc.cells[0].push_back({x, y, 0});
  for (uint32_t e = 0; e < static_cast<uint32_t>(2 * p); ++e)
    for (uint32_t y = 0; y < 2; ++y) {
      cc.cells[1].push_back({e | kEdgeFlag, y, 0});
      cc.cells[1].push_back({y, e | kEdgeFlag, 0});
    }
  // one square per edge of the parameter graph: a-label edge of theta1
  // against b-label edge of theta2
  for (auto [u, v] : g.edges())
    cc.cells[2].push_back(
        {static_cast<uint32_t>(u) | kEdgeFlag, static_cast<uint32_t>(v - 2 * p) | kEdgeFlag, 0});
  cc.finalize();
  return cc;
}

namespace {

struct DeltaMembership {
  const Gamma* g = nullptr;
  int n = 0;  // vertices per factor

  int part(uint32_t v) const { return v < static_cast<uint32_t>(n / 2) ? 1 : 2; }

  bool member(uint32_t x, uint32_t y, uint32_t z) const {
    switch (omega_constraint(part(x), part(y), part(z))) {
      case OmegaConstraint::AllSame:
        return true;  // equal-part triples carry no label constraint
      case OmegaConstraint::PairUV:
        return g->adjacent(static_cast<int>(x), static_cast<int>(y));
      case OmegaConstraint::PairVW:
        return g->adjacent(static_cast<int>(y), static_cast<int>(z));
      case OmegaConstraint::PairUW:
        return g->adjacent(static_cast<int>(x), static_cast<int>(z));
    }
    return false;
  }
};

struct DeltaCells {
  std::vector<CubeCell> edges, squares, cubes;
};

// Grow every cell from its unique all-tails corner; admissible means the
// opposite corner of the single-edge step stays in the vertex set.
void grow_from_vertices(const CubeComplex& cc, const std::vector<uint8_t>& vin, long lo,
                        long hi, DeltaCells& out) {
  int n = cc.factors[0].num_vertices();
  const long stride[3] = {static_cast<long>(n) * n, n, 1};
  std::array<std::vector<uint32_t>, 3> adm;

  for (long idx = lo; idx < hi; ++idx) {
    if (!vin[idx]) continue;
    uint32_t co[3] = {static_cast<uint32_t>(idx / stride[0]),
                      static_cast<uint32_t>(idx / n % n), static_cast<uint32_t>(idx % n)};
    for (int d = 0; d < 3; ++d) {
      adm[d].clear();
      for (uint32_t e : cc.factors[d].out_edges[co[d]]) {
        long nidx = idx + (static_cast<long>(cc.factors[d].edges[e].head) - co[d]) * stride[d];
        if (vin[nidx]) adm[d].push_back(e);
      }
    }

    auto head_shift = [&](int d, uint32_t e) {
      return (static_cast<long>(cc.factors[d].edges[e].head) - co[d]) * stride[d];
    };
    auto cell_with = [&](int d1, uint32_t e1, int d2 = -1, uint32_t e2 = 0, int d3 = -1,
                         uint32_t e3 = 0) {
      CubeCell cell{co[0], co[1], co[2]};
      cell.c[d1] = e1 | kEdgeFlag;
      if (d2 >= 0) cell.c[d2] = e2 | kEdgeFlag;
      if (d3 >= 0) cell.c[d3] = e3 | kEdgeFlag;
      return cell;
    };

    for (int d = 0; d < 3; ++d)
      for (uint32_t e : adm[d]) out.edges.push_back(cell_with(d, e));

    for (int d1 = 0; d1 < 3; ++d1)
      for (int d2 = d1 + 1; d2 < 3; ++d2)
        for (uint32_t e1 : adm[d1])
          for (uint32_t e2 : adm[d2])
            if (vin[idx + head_shift(d1, e1) + head_shift(d2, e2)])
              out.squares.push_back(cell_with(d1, e1, d2, e2));

    for (uint32_t e1 : adm[0]) {
      long s1 = head_shift(0, e1);
      for (uint32_t e2 : adm[1]) {
        long s2 = head_shift(1, e2);
        if (!vin[idx + s1 + s2]) continue;
        for (uint32_t e3 : adm[2]) {
          long s3 = head_shift(2, e3);
          if (vin[idx + s1 + s3] && vin[idx + s2 + s3] && vin[idx + s1 + s2 + s3])
            out.cubes.push_back(cell_with(0, e1, 1, e2, 2, e3));
        }
      }
    }
  }
}

}  // namespace

CubeComplex build_delta(const Gamma& g, int parallelism) {
  require(parallelism >= 1, "parallelism must be positive");
  int p = g.p, n = 4 * p;
  for (auto [u, v] : g.edges())
    require(u < 2 * p && v >= 2 * p, "delta needs a family-bipartite graph");

  CubeComplex cc;
  cc.factors = {make_bipartite(FactorId::U, p), make_bipartite(FactorId::V, p),
                make_bipartite(FactorId::W, p)};
  cc.cells.resize(4);

  DeltaMembership mem{&g, n};
  long total = static_cast<long>(n) * n * n;
  std::vector<uint8_t> vin(total, 0);
  for (uint32_t x = 0; x < static_cast<uint32_t>(n); ++x)
    for (uint32_t y = 0; y < static_cast<uint32_t>(n); ++y) {
      long base = (static_cast<long>(x) * n + y) * n;
      for (uint32_t z = 0; z < static_cast<uint32_t>(n); ++z)
        if (mem.member(x, y, z)) {
          vin[base + z] = 1;
          cc.cells[0].push_back({x, y, z});
        }
    }

  int workers = std::min<long>(parallelism, std::max<long>(1, total));
  std::vector<DeltaCells> chunk(workers);
  if (workers == 1) {
    grow_from_vertices(cc, vin, 0, total, chunk[0]);
  } else {
    std::vector<std::thread> pool;
    for (int w = 0; w < workers; ++w) {
      long lo = total * w / workers, hi = total * (w + 1) / workers;
      pool.emplace_back(grow_from_vertices, std::cref(cc), std::cref(vin), lo, hi,
                        std::ref(chunk[w]));
    }
    for (auto& t : pool) t.join();
  }
  for (auto& part : chunk) {
    cc.cells[1].insert(cc.cells[1].end(), part.edges.begin(), part.edges.end());
    cc.cells[2].insert(cc.cells[2].end(), part.squares.begin(), part.squares.end());
    cc.cells[3].insert(cc.cells[3].end(), part.cubes.begin(), part.cubes.end());
  }
  cc.finalize();
  return cc;
}

VertexType vertex_type(const CubeComplex& cc, const CubeCell& v) {
  require(cc.nfactors() == 3, "vertex types are defined for three-factor complexes");
  require(cc.cell_dim(v) == 0 && cc.vertex_member(v),
          "not a vertex of the complex: " + cc.cell_text(v));
  auto constraint = omega_constraint(cc.factors[0].part[v.c[0]], cc.factors[1].part[v.c[1]],
                                     cc.factors[2].part[v.c[2]]);
  return constraint == OmegaConstraint::AllSame ? VertexType::Type1 : VertexType::Type2;
}

VertexLink link(const CubeComplex& cc, const CubeCell& v) {
  require(cc.cell_dim(v) == 0 && cc.vertex_member(v),
          "not a vertex of the complex: " + cc.cell_text(v));
  int nf = cc.nfactors();

  VertexLink lk;
  std::vector<std::vector<int>> by_dir(nf);  // direction -> point ids
  for (int d = 0; d < nf; ++d)
    for (uint32_t e : cc.factors[d].incident[v.c[d]]) {
      CubeCell cell = v;
      cell.c[d] = e | kEdgeFlag;
      if (!cc.has_cell(cell)) continue;
      by_dir[d].push_back(static_cast<int>(lk.points.size()));
      lk.points.push_back({d, e, cc.factors[d].edges[e].tail == v.c[d],
                           "d" + std::to_string(d) + ":" + cc.factors[d].edge_text(e)});
    }

  int np = static_cast<int>(lk.points.size());
  std::vector<uint8_t> adj(static_cast<size_t>(np) * np, 0);
  std::vector<std::vector<int>> maximal;
  for (int d1 = 0; d1 < nf; ++d1)
    for (int d2 = d1 + 1; d2 < nf; ++d2)
      for (int i : by_dir[d1])
        for (int j : by_dir[d2]) {
          CubeCell cell = v;
          cell.c[d1] = lk.points[i].edge | kEdgeFlag;
          cell.c[d2] = lk.points[j].edge | kEdgeFlag;
          if (!cc.has_cell(cell)) continue;
          adj[static_cast<size_t>(i) * np + j] = 1;
          adj[static_cast<size_t>(j) * np + i] = 1;
          maximal.push_back({i, j});
        }

  if (nf == 3 && cc.dim() >= 3) {
    for (int i : by_dir[0])
      for (int j : by_dir[1]) {
        if (!adj[static_cast<size_t>(i) * np + j]) continue;
        for (int k : by_dir[2]) {
          if (!adj[static_cast<size_t>(i) * np + k] || !adj[static_cast<size_t>(j) * np + k])
            continue;
          CubeCell cell{lk.points[i].edge | kEdgeFlag, lk.points[j].edge | kEdgeFlag,
                        lk.points[k].edge | kEdgeFlag};
          if (cc.has_cell(cell)) maximal.push_back({i, j, k});
        }
      }
  }

  std::vector<std::string> labels;
  labels.reserve(np);
  for (const auto& pt : lk.points) labels.push_back(pt.label);
  lk.complex = SimplicialComplex::from_maximal(std::move(labels), maximal);
  return lk;
}

namespace {

VertexLink directed_link(const CubeComplex& cc, const CubeCell& v, bool outgoing) {
  VertexLink full = link(cc, v);
  std::vector<int> keep;
  VertexLink part;
  for (int i = 0; i < static_cast<int>(full.points.size()); ++i)
    if (full.points[i].outgoing == outgoing) {
      keep.push_back(i);
      part.points.push_back(full.points[i]);
    }
  part.complex = induced_on(full.complex, keep);
  return part;
}

}  // namespace

VertexLink ascending_link(const CubeComplex& cc, const CubeCell& v) {
  return directed_link(cc, v, true);
}

VertexLink descending_link(const CubeComplex& cc, const CubeCell& v) {
  return directed_link(cc, v, false);
}

std::optional<int> upsilon_direction(const CubeComplex& cc, const CubeCell& v) {
  require(cc.cell_dim(v) == 0 && cc.vertex_member(v),
          "not a vertex of the complex: " + cc.cell_text(v));
  std::optional<int> found;
  for (int d = 0; d < cc.nfactors(); ++d) {
    int cnt = 0;
    for (uint32_t e : cc.factors[d].incident[v.c[d]]) {
      CubeCell cell = v;
      cell.c[d] = e | kEdgeFlag;
      if (cc.has_cell(cell)) ++cnt;
    }
    if (cnt == 4) {
      if (found) return std::nullopt;  // not unique
      found = d;
    }
  }
  return found;
}

SpecialCellAudit special_one_cells(const CubeComplex& cc) {
  require(cc.nfactors() == 3, "special 1-cells are defined for three-factor complexes");
  SpecialCellAudit audit;
  audit.edge_cells = static_cast<long>(cc.cells[1].size());

  // cache type and 4-point direction per vertex
  long total = static_cast<long>(cc.vertex_in.size());
  std::vector<int8_t> is_type2(total, 0), ups(total, -1);
  for (const auto& v : cc.cells[0]) {
    long idx = cc.vertex_index(v);
    is_type2[idx] = vertex_type(cc, v) == VertexType::Type2 ? 1 : 0;
    if (is_type2[idx]) {
      auto d = upsilon_direction(cc, v);
      ups[idx] = d ? static_cast<int8_t>(*d) : -1;
    }
  }

  for (const auto& cell : cc.cells[1]) {
    int dir = 0;
    for (int i = 0; i < 3; ++i)
      if (cell.c[i] & kEdgeFlag) dir = i;
    long tail = cc.vertex_index(cc.corner(cell, 0));
    long head = cc.vertex_index(cc.corner(cell, 1));
    if (!is_type2[tail] || !is_type2[head]) continue;
    ++audit.type2_type2_edges;
    bool at_tail = ups[tail] == dir;
    bool at_head = ups[head] == dir;
    if (at_tail != at_head) {
      audit.iff_holds = false;
      if (audit.witness.size() < 8)
        audit.witness.push_back("one-sided 4-point direction on " + cc.cell_text(cell));
    }
    if (at_tail && at_head) {
      ++audit.special_count;
      audit.special.push_back(cell);  // cells[1] is sorted, so this stays sorted
    }
  }
  return audit;
}

void export_complex(const CubeComplex& cc, std::ostream& os) {
  os << "cubecomplex factors=" << cc.nfactors() << '\n';
  std::vector<std::string> lines;
  for (int d = 0; d <= cc.dim(); ++d)
    for (const auto& cell : cc.cells[d]) {
      std::string line = "dim=" + std::to_string(d);
      for (int i = 0; i < cc.nfactors(); ++i) {
        line += ' ';
        if (cell.c[i] & kEdgeFlag)
          line += cc.factors[i].edge_token(cell.c[i] & ~kEdgeFlag);
        else
          line += "v:" + cc.factors[i].vlabels[cell.c[i]];
      }
      lines.push_back(std::move(line));
    }
  std::sort(lines.begin(), lines.end());
  for (const auto& l : lines) os << l << '\n';
}

std::string export_complex_string(const CubeComplex& cc) {
  std::ostringstream os;
  export_complex(cc, os);
  return os.str();
}

CubeComplex import_complex(std::istream& is, std::vector<FactorGraph> factors) {
  std::string header;
  require(static_cast<bool>(std::getline(is, header)), "missing cubecomplex header");
  require(header == "cubecomplex factors=" + std::to_string(factors.size()),
          "header does not match the provided factors: '" + header + "'");

  struct Lookup {
    std::map<std::string, uint32_t> vertex;
    std::map<std::string, uint32_t> theta_edge;                   // edge label -> id
    std::map<std::pair<std::string, std::string>, uint32_t> pair;  // sorted endpoints -> id
  };
  std::vector<Lookup> lut(factors.size());
  for (size_t i = 0; i < factors.size(); ++i) {
    for (uint32_t v = 0; v < factors[i].vlabels.size(); ++v)
      lut[i].vertex[factors[i].vlabels[v]] = v;
    for (uint32_t e = 0; e < factors[i].edges.size(); ++e) {
      const auto& ed = factors[i].edges[e];
      if (factors[i].is_theta()) {
        lut[i].theta_edge[ed.label] = e;
      } else {
        std::string x = factors[i].vlabels[ed.tail], y = factors[i].vlabels[ed.head];
        if (x > y) std::swap(x, y);
        lut[i].pair[{x, y}] = e;
      }
    }
  }

  CubeComplex cc;
  cc.factors = std::move(factors);
  cc.cells.resize(cc.nfactors() + 1);
  std::string line;
  while (std::getline(is, line)) {
    if (line.empty()) continue;
    std::istringstream ls(line);
    std::string tok;
    require(static_cast<bool>(ls >> tok) && tok.rfind("dim=", 0) == 0,
            "cell line must start with dim=: '" + line + "'");
    int d = std::stoi(tok.substr(4));
    require(d >= 0 && d <= cc.nfactors(), "cell dimension out of range: '" + line + "'");

    CubeCell cell{};
    int edge_coords = 0;
    for (int i = 0; i < cc.nfactors(); ++i) {
      require(static_cast<bool>(ls >> tok), "cell line has too few coordinates: '" + line + "'");
      if (tok.rfind("v:", 0) == 0) {
        auto it = lut[i].vertex.find(tok.substr(2));
        require(it != lut[i].vertex.end(), "unknown vertex label in '" + line + "'");
        cell.c[i] = it->second;
      } else if (tok.rfind("e:", 0) == 0) {
        size_t colon = tok.find(':', 2);
        require(colon != std::string::npos && colon + 1 < tok.size(),
                "malformed edge token in '" + line + "'");
        std::string first = tok.substr(2, colon - 2), second = tok.substr(colon + 1);
        uint32_t e;
        if (cc.factors[i].is_theta()) {
          auto it = lut[i].theta_edge.find(first);
          require(it != lut[i].theta_edge.end(), "unknown edge label in '" + line + "'");
          e = it->second;
          require(cc.factors[i].vlabels[cc.factors[i].edges[e].head] == second,
                  "edge head label mismatch in '" + line + "'");
        } else {
          auto it = lut[i].pair.find({first, second});
          require(it != lut[i].pair.end(), "unknown edge endpoints in '" + line + "'");
          e = it->second;
        }
        cell.c[i] = e | kEdgeFlag;
        ++edge_coords;
      } else {
        throw std::invalid_argument("unknown coordinate token '" + tok + "'");
      }
    }
    require(!(ls >> tok), "cell line has too many coordinates: '" + line + "'");
    require(edge_coords == d, "declared dim disagrees with coordinates: '" + line + "'");
    cc.cells[d].push_back(cell);
  }
  cc.finalize();
  return cc;
}

}  // namespace cubelink

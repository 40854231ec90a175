#include "cubelink/verifier.hpp"

#include <algorithm>
#include <chrono>
#include <numeric>
#include <random>
#include <sstream>
#include <thread>

#include "cubelink/homology.hpp"
#include "cubelink/simplicial.hpp"

namespace cubelink {

namespace {

void require(bool cond, const std::string& msg) {
  if (!cond) throw std::invalid_argument(msg);
}

struct Timer {
  std::chrono::steady_clock::time_point t0 = std::chrono::steady_clock::now();
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  }
};

constexpr size_t kWitnessCap = 8;

void add_witness(std::vector<std::string>& dst, std::string text) {
  if (dst.size() < kWitnessCap) dst.push_back(std::move(text));
}

void merge_witnesses(std::vector<std::string>& dst, const std::vector<std::string>& src) {
  for (const auto& w : src) add_witness(dst, w);
}

// Deterministic fork/join: contiguous index ranges, one state per worker,
// merged in worker order. Results do not depend on the worker count as long
// as per-state aggregation is order-insensitive or merged sequentially.
template <class State, class Body>
std::vector<State> run_chunks(long n, int workers, const Body& body) {
  workers = static_cast<int>(std::clamp<long>(workers, 1, std::max<long>(n, 1)));
  std::vector<State> states(workers);
  if (workers == 1) {
    body(0, n, states[0]);
    return states;
  }
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (int w = 0; w < workers; ++w) {
    long lo = n * w / workers, hi = n * (w + 1) / workers;
    pool.emplace_back([&, lo, hi, w] { body(lo, hi, states[w]); });
  }
  for (auto& t : pool) t.join();
  return states;
}

bool is_prime(int n) {
  if (n < 2) return false;
  for (int d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

bool is_single_cycle(const SimplicialComplex& sc, long len, std::string* why) {
  auto fail = [&](const std::string& msg) {
    if (why) *why = msg;
    return false;
  };
  if (sc.dim() != 1) return fail("dimension is " + std::to_string(sc.dim()) + ", not 1");
  if (sc.count(0) != len || sc.count(1) != len)
    return fail("counts " + std::to_string(sc.count(0)) + "/" + std::to_string(sc.count(1)) +
                ", expected " + std::to_string(len) + "/" + std::to_string(len));
  std::vector<int> deg(sc.count(0), 0);
  for (const auto& e : sc.simplices[1]) {
    ++deg[e[0]];
    ++deg[e[1]];
  }
  for (size_t v = 0; v < deg.size(); ++v)
    if (deg[v] != 2)
      return fail("vertex " + sc.labels[v] + " has degree " + std::to_string(deg[v]));
  if (!is_connected(sc)) return fail("not connected");
  return true;
}

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  }
  void unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
};

// ---------------------------------------------------------------- gamma

void gamma_checks(const Gamma& g, std::vector<CheckRecord>& out) {
  int p = g.p, n = g.num_vertices();

  {
    Timer t;
    CheckRecord c{"gamma.degree-regular"};
    long bad = 0;
    for (int v = 0; v < n; ++v)
      if (g.nbr[v].size() != 4) {
        ++bad;
        add_witness(c.witness, "vertex " + g.vertex(v).token() + " has degree " +
                                   std::to_string(g.nbr[v].size()));
      }
    c.count("vertices", n);
    c.count("expected-degree", 4);
    c.count("violations", bad);
    c.pass = bad == 0;
    c.elapsed_sec = t.seconds();
    out.push_back(std::move(c));
  }

  SignCycleReport sign = check_sign_cycles(g);
  {
    CheckRecord c{"gamma.bipartite-parts"};
    c.count("a-side-edges", sign.a_part_edges);
    c.count("b-side-edges", sign.b_part_edges);
    c.pass = sign.a_part_edges == 0 && sign.b_part_edges == 0;
    out.push_back(std::move(c));
  }
  {
    CheckRecord c{"gamma.edge-census"};
    c.count("edges", g.edge_count);
    c.count("expected", 8L * p);
    c.pass = g.edge_count == 8L * p;
    out.push_back(std::move(c));
  }
  {
    CheckRecord c{"gamma.sign-cycles"};
    static const char* kQuadKey[4] = {"quad-pp", "quad-pm", "quad-mp", "quad-mm"};
    bool ok = true;
    for (int q = 0; q < 4; ++q) {
      const QuadrantReport& r = sign.quadrants[q];
      if (r.pass) {
        c.count(kQuadKey[q], "cycle:" + std::to_string(r.cycle_length));
      } else {
        c.count(kQuadKey[q], "fail");
        add_witness(c.witness, std::string(kQuadKey[q]) + ": " + r.detail);
        ok = false;
      }
    }
    c.pass = ok;
    out.push_back(std::move(c));
  }

  Timer t_cycles;
  auto cycles = find_short_cycles(g, 4);
  {
    CheckRecord c{"gamma.no-short-cycles"};
    long len3 = 0, len4 = 0;
    for (const auto& w : cycles) {
      (w.length() == 3 ? len3 : len4)++;
      add_witness(c.witness, "cycle " + w.describe());
    }
    c.count("cycles-length-3", len3);
    c.count("cycles-length-4", len4);
    c.pass = cycles.empty();
    c.elapsed_sec = t_cycles.seconds();
    out.push_back(std::move(c));
  }
  {
    // the five-case proof analysis, doubling as a second enumeration route
    CheckRecord c{"gamma.four-cycle-cases"};
    FourCycleCensus census = four_cycle_census(g);
    for (int i = 0; i < 5; ++i) c.count("case" + std::to_string(i + 1), census.mixed[i]);
    static const char* kQuadKey[4] = {"quad-pp", "quad-pm", "quad-mp", "quad-mm"};
    for (int q = 0; q < 4; ++q) c.count(kQuadKey[q], census.quadrant[q]);
    long enumerated = 0;
    for (const auto& w : cycles)
      if (w.length() == 4) ++enumerated;
    c.count("total", census.total());
    c.count("enumerated", enumerated);
    c.pass = census.total() == enumerated && census.total() == 0;
    if (census.total() != enumerated)
      add_witness(c.witness, "census and exhaustive enumeration disagree");
    out.push_back(std::move(c));
  }
}

// ---------------------------------------------------------------- shared

// face closure (immediate facets) and corner sanity for one cell dimension
struct CellScanState {
  long facets_checked = 0;
  long missing_facets = 0;
  long corner_defects = 0;
  std::vector<std::string> facet_witness, corner_witness;
};

CellScanState scan_cells(const CubeComplex& cc, int d, int parallelism) {
  const auto& level = cc.cells[d];
  auto states = run_chunks<CellScanState>(
      static_cast<long>(level.size()), parallelism,
      [&](long lo, long hi, CellScanState& st) {
        for (long i = lo; i < hi; ++i) {
          const CubeCell& cell = level[i];
          // facets: resolve one edge coordinate each way
          for (int f = 0; f < cc.nfactors(); ++f) {
            if (!(cell.c[f] & kEdgeFlag)) continue;
            const auto& e = cc.factors[f].edges[cell.c[f] & ~kEdgeFlag];
            for (uint32_t end : {e.tail, e.head}) {
              CubeCell facet = cell;
              facet.c[f] = end;
              ++st.facets_checked;
              if (!cc.has_cell(facet)) {
                ++st.missing_facets;
                add_witness(st.facet_witness, "cell " + cc.cell_text(cell) +
                                                  " misses facet " + cc.cell_text(facet));
              }
            }
          }
          // corners: pairwise distinct vertices of the complex
          unsigned ncorners = 1u << d;
          std::array<long, 8> seen{};
          bool defect = false;
          for (unsigned m = 0; m < ncorners; ++m) {
            CubeCell v = cc.corner(cell, m);
            if (!cc.vertex_member(v)) defect = true;
            seen[m] = cc.vertex_index(v);
          }
          std::sort(seen.begin(), seen.begin() + ncorners);
          if (std::adjacent_find(seen.begin(), seen.begin() + ncorners) !=
              seen.begin() + ncorners)
            defect = true;
          if (defect) {
            ++st.corner_defects;
            add_witness(st.corner_witness, "degenerate corners on " + cc.cell_text(cell));
          }
        }
      });
  CellScanState merged;
  for (const auto& st : states) {
    merged.facets_checked += st.facets_checked;
    merged.missing_facets += st.missing_facets;
    merged.corner_defects += st.corner_defects;
    merge_witnesses(merged.facet_witness, st.facet_witness);
    merge_witnesses(merged.corner_witness, st.corner_witness);
  }
  return merged;
}

void closure_checks(const CubeComplex& cc, const std::string& prefix, int parallelism,
                    std::vector<CheckRecord>& out) {
  Timer t;
  CheckRecord closure{prefix + ".face-closure"};
  CheckRecord extremal{prefix + ".extremal-corners"};
  long cells_checked = 0;
  for (int d = 1; d <= cc.dim(); ++d) {
    CellScanState st = scan_cells(cc, d, parallelism);
    cells_checked += static_cast<long>(cc.cells[d].size());
    closure.counts.emplace_back("facets-dim" + std::to_string(d),
                                std::to_string(st.facets_checked));
    if (st.missing_facets) {
      closure.pass = false;
      closure.counts.emplace_back("missing-dim" + std::to_string(d),
                                  std::to_string(st.missing_facets));
    }
    merge_witnesses(closure.witness, st.facet_witness);
    if (st.corner_defects) {
      extremal.pass = false;
      extremal.counts.emplace_back("defects-dim" + std::to_string(d),
                                   std::to_string(st.corner_defects));
    }
    merge_witnesses(extremal.witness, st.corner_witness);
  }
  closure.count("cells-checked", cells_checked);
  extremal.count("cells-checked", cells_checked);
  closure.elapsed_sec = extremal.elapsed_sec = t.seconds();
  out.push_back(std::move(closure));
  out.push_back(std::move(extremal));
}

// ---------------------------------------------------------------- X

void x_checks(const Gamma& g, const CubeComplex& x, int parallelism,
              std::vector<CheckRecord>& out) {
  int p = g.p;
  {
    CheckRecord c{"x.census"};
    long nv = x.cells[0].size(), ne = x.dim() >= 1 ? x.cells[1].size() : 0;
    long ns = x.dim() >= 2 ? x.cells[2].size() : 0;
    c.count("vertices", nv);
    c.count("edges", ne);
    c.count("squares", ns);
    c.count("expected-vertices", 4);
    c.count("expected-edges", 8L * p);
    c.count("expected-squares", g.edge_count);
    c.pass = nv == 4 && ne == 8L * p && ns == g.edge_count;
    out.push_back(std::move(c));
  }

  closure_checks(x, "x", parallelism, out);

  Timer t;
  CheckRecord iso{"x.link-iso-gamma"};
  CheckRecord flag{"x.links-flag"};
  CheckRecord nosq{"x.links-no-square"};
  CheckRecord updown{"x.updown-circles"};
  SimplicialComplex gamma_sc = to_simplicial(g);
  long squares_found = 0;

  for (const CubeCell& v : x.cells[0]) {
    VertexLink lk = link(x, v);
    std::string at = " at " + x.cell_text(v);

    // canonical relabeling: link point "d0:A+3" -> parameter-graph token "A+3"
    std::map<std::string, std::string> relabel;
    for (const auto& pt : lk.points) relabel[pt.label] = pt.label.substr(3);
    if (!is_isomorphic_relabel(lk.complex, gamma_sc, relabel)) {
      iso.pass = false;
      add_witness(iso.witness, "link not label-isomorphic" + at);
    }

    FlagResult fr = is_flag(lk.complex);
    if (!fr.flag) {
      flag.pass = false;
      std::string cl;
      for (int w : fr.witness) cl += (cl.empty() ? "" : ",") + lk.complex.labels[w];
      add_witness(flag.witness, "non-spanning clique {" + cl + "}" + at);
    }

    auto sq = empty_squares(lk.complex);
    squares_found += static_cast<long>(sq.size());
    if (!sq.empty()) {
      nosq.pass = false;
      const auto& s = sq.front();
      add_witness(nosq.witness, "empty square " + lk.complex.labels[s[0]] + "," +
                                    lk.complex.labels[s[1]] + "," + lk.complex.labels[s[2]] +
                                    "," + lk.complex.labels[s[3]] + at);
    }

    // ascending uses outgoing ends; on theta factors these carry the sign
    // opposite to the vertex parity (positive edges point at v1/v3)
    for (bool outgoing : {true, false}) {
      std::vector<int> keep;
      for (int i = 0; i < static_cast<int>(lk.points.size()); ++i)
        if (lk.points[i].outgoing == outgoing) keep.push_back(i);
      SimplicialComplex sub = induced_on(lk.complex, keep);
      std::string why;
      if (!is_single_cycle(sub, 2L * p, &why)) {
        updown.pass = false;
        add_witness(updown.witness, std::string(outgoing ? "ascending" : "descending") +
                                        " link: " + why + at);
      }
      for (int i : keep) {
        const LinkPoint& pt = lk.points[i];
        char expect = (v.c[pt.factor] == 0) == outgoing ? '-' : '+';
        if (pt.label[4] != expect) {
          updown.pass = false;
          add_witness(updown.witness, "point " + pt.label + " has unexpected sign" + at);
          break;
        }
      }
    }
  }
  iso.count("links", 4);
  flag.count("links", 4);
  nosq.count("links", 4);
  nosq.count("empty-squares", squares_found);
  updown.count("links-checked", 8);
  updown.count("expected-length", 2L * p);
  iso.elapsed_sec = flag.elapsed_sec = nosq.elapsed_sec = updown.elapsed_sec = t.seconds();
  out.push_back(std::move(iso));
  out.push_back(std::move(flag));
  out.push_back(std::move(nosq));
  out.push_back(std::move(updown));
}

// ---------------------------------------------------------------- Delta

struct LinkScanState {
  long type1 = 0, type2 = 0;
  long sum_points = 0, sum_edges = 0, sum_triangles = 0;
  long flag_fail = 0, s2_fail = 0, profile_fail = 0;
  std::vector<std::string> flag_witness, s2_witness, profile_witness;
};

void delta_checks(const Gamma& g, const CubeComplex& delta, const VerificationConfig& cfg,
                  std::vector<CheckRecord>& out) {
  int p = g.p;
  long nv = delta.cells[0].size();
  long ne = delta.dim() >= 1 ? delta.cells[1].size() : 0;
  long ns = delta.dim() >= 2 ? delta.cells[2].size() : 0;
  long nc = delta.dim() >= 3 ? delta.cells[3].size() : 0;

  require(cfg.sample_homology <= nv,
          "sample-homology exceeds the vertex count (" + std::to_string(nv) + ")");

  {
    CheckRecord c{"delta.census"};
    long t1 = 0, t2 = 0;
    for (const auto& v : delta.cells[0])
      (vertex_type(delta, v) == VertexType::Type1 ? t1 : t2)++;
    c.count("vertices", nv);
    c.count("type1-vertices", t1);
    c.count("type2-vertices", t2);
    c.count("edges", ne);
    c.count("squares", ns);
    c.count("cubes", nc);
    c.count("expected-type1", 2L * (2 * p) * (2 * p) * (2 * p));
    c.count("expected-type2", 6L * g.edge_count * (2 * p));
    c.pass = t1 + t2 == nv && t1 == 2L * (2 * p) * (2 * p) * (2 * p) &&
             t2 == 6L * g.edge_count * (2 * p);
    out.push_back(std::move(c));
  }

  {
    Timer t;
    CheckRecord c{"delta.connected"};
    std::vector<int> pos(delta.vertex_in.size(), -1);
    for (long i = 0; i < nv; ++i) pos[delta.vertex_index(delta.cells[0][i])] = static_cast<int>(i);
    UnionFind uf(static_cast<int>(nv));
    for (const auto& cell : delta.cells[1])
      uf.unite(pos[delta.vertex_index(delta.corner(cell, 0))],
               pos[delta.vertex_index(delta.corner(cell, 1))]);
    long components = 0;
    for (int i = 0; i < nv; ++i)
      if (uf.find(i) == i) ++components;
    c.count("vertices", nv);
    c.count("components", components);
    c.pass = components == 1;
    if (!c.pass) add_witness(c.witness, std::to_string(components) + " components");
    c.elapsed_sec = t.seconds();
    out.push_back(std::move(c));
  }

  closure_checks(delta, "delta", cfg.parallelism, out);

  // one fan-out over every vertex: link profile, flag, up/down surface test,
  // and the incidence sums for the census identities
  Timer t_scan;
  auto states = run_chunks<LinkScanState>(
      nv, cfg.parallelism, [&](long lo, long hi, LinkScanState& st) {
        for (long i = lo; i < hi; ++i) {
          const CubeCell& v = delta.cells[0][i];
          VertexType type = vertex_type(delta, v);
          (type == VertexType::Type1 ? st.type1 : st.type2)++;
          VertexLink lk = link(delta, v);
          st.sum_points += lk.complex.count(0);
          st.sum_edges += lk.complex.count(1);
          st.sum_triangles += lk.complex.count(2);
          std::string at = " at " + delta.cell_text(v);

          std::array<long, 3> per{0, 0, 0};
          for (const auto& pt : lk.points) ++per[pt.factor];
          std::sort(per.begin(), per.end());
          std::array<long, 3> want = type == VertexType::Type1
                                         ? std::array<long, 3>{4, 4, 4}
                                         : std::array<long, 3>{4, 2L * p, 2L * p};
          bool profile_ok = per == want;

          if (!is_flag(lk.complex).flag) {
            ++st.flag_fail;
            add_witness(st.flag_witness, "link not flag" + at);
          }

          for (bool outgoing : {true, false}) {
            std::vector<int> keep;
            for (int j = 0; j < static_cast<int>(lk.points.size()); ++j)
              if (lk.points[j].outgoing == outgoing) keep.push_back(j);
            SimplicialComplex half = induced_on(lk.complex, keep);
            long expect =
                type == VertexType::Type1 ? 6 : 2L * p + 2;  // octahedron / suspension
            if (half.count(0) != expect) profile_ok = false;
            SurfaceResult sr = is_two_sphere(half);
            if (!sr.sphere) {
              ++st.s2_fail;
              add_witness(st.s2_witness, std::string(outgoing ? "ascending" : "descending") +
                                             " link: " + sr.diagnostic + at);
            }
          }
          if (!profile_ok) {
            ++st.profile_fail;
            add_witness(st.profile_witness, "link point profile off" + at);
          }
        }
      });
  LinkScanState scan;
  for (const auto& st : states) {
    scan.type1 += st.type1;
    scan.type2 += st.type2;
    scan.sum_points += st.sum_points;
    scan.sum_edges += st.sum_edges;
    scan.sum_triangles += st.sum_triangles;
    scan.flag_fail += st.flag_fail;
    scan.s2_fail += st.s2_fail;
    scan.profile_fail += st.profile_fail;
    merge_witnesses(scan.flag_witness, st.flag_witness);
    merge_witnesses(scan.s2_witness, st.s2_witness);
    merge_witnesses(scan.profile_witness, st.profile_witness);
  }
  double scan_sec = t_scan.seconds();

  {
    CheckRecord c{"delta.census-identities"};
    c.count("sum-link-vertices", scan.sum_points);
    c.count("twice-edges", 2 * ne);
    c.count("sum-link-edges", scan.sum_edges);
    c.count("four-squares", 4 * ns);
    c.count("sum-link-triangles", scan.sum_triangles);
    c.count("eight-cubes", 8 * nc);
    c.pass = scan.sum_points == 2 * ne && scan.sum_edges == 4 * ns &&
             scan.sum_triangles == 8 * nc;
    c.elapsed_sec = scan_sec;
    out.push_back(std::move(c));
  }
  {
    CheckRecord c{"delta.link-profile"};
    c.count("links", nv);
    c.count("violations", scan.profile_fail);
    c.pass = scan.profile_fail == 0;
    c.witness = scan.profile_witness;
    c.elapsed_sec = scan_sec;
    out.push_back(std::move(c));
  }
  {
    CheckRecord c{"delta.links-flag"};
    c.count("links", nv);
    c.count("violations", scan.flag_fail);
    c.pass = scan.flag_fail == 0;
    c.witness = scan.flag_witness;
    c.elapsed_sec = scan_sec;
    out.push_back(std::move(c));
  }
  {
    CheckRecord c{"delta.updown-s2"};
    c.count("links-checked", 2 * nv);
    c.count("violations", scan.s2_fail);
    c.pass = scan.s2_fail == 0;
    c.witness = scan.s2_witness;
    c.elapsed_sec = scan_sec;
    out.push_back(std::move(c));
  }

  Timer t_special;
  SpecialCellAudit audit = special_one_cells(delta);
  {
    CheckRecord c{"delta.special-iff"};
    c.count("edge-cells", audit.edge_cells);
    c.count("type2-type2-edges", audit.type2_type2_edges);
    c.count("special-cells", audit.special_count);
    c.pass = audit.iff_holds;
    c.witness = audit.witness;
    c.elapsed_sec = t_special.seconds();
    out.push_back(std::move(c));
  }

  {
    // Fig. 2 pattern: 2 antipodal equal-part corners per cube; the three
    // special edges pair up the remaining six corners perfectly
    Timer t;
    CheckRecord c{"delta.cube-pattern"};
    struct CubeState {
      long bad = 0;
      std::vector<std::string> witness;
    };
    const auto& cubes = delta.dim() >= 3 ? delta.cells[3] : delta.cells[0];
    long ncubes = delta.dim() >= 3 ? static_cast<long>(cubes.size()) : 0;
    auto states2 = run_chunks<CubeState>(
        ncubes, cfg.parallelism, [&](long lo, long hi, CubeState& st) {
          for (long i = lo; i < hi; ++i) {
            const CubeCell& cube = cubes[i];
            bool ok = true;
            unsigned type1_mask[2];
            int n_type1 = 0;
            bool corner_type2[8];
            for (unsigned m = 0; m < 8; ++m) {
              CubeCell corner = delta.corner(cube, m);
              int part0 = delta.factors[0].part[corner.c[0]];
              int part1 = delta.factors[1].part[corner.c[1]];
              int part2 = delta.factors[2].part[corner.c[2]];
              bool type1 = part0 == part1 && part1 == part2;
              corner_type2[m] = !type1;
              if (type1) {
                if (n_type1 < 2) type1_mask[n_type1] = m;
                ++n_type1;
              }
            }
            if (n_type1 != 2 || (type1_mask[0] ^ type1_mask[1]) != 7u) ok = false;

            int n_special = 0;
            unsigned covered = 0;  // bitmask over corner masks hit by special edges
            bool double_cover = false;
            for (int d = 0; d < 3 && ok; ++d) {
              int o1 = d == 0 ? 1 : 0, o2 = d == 2 ? 1 : 2;
              for (unsigned m = 0; m < 4; ++m) {
                CubeCell edge = cube;
                edge.c[o1] = delta.corner(cube, (m & 1u) << o1).c[o1];
                edge.c[o2] = delta.corner(cube, (m >> 1 & 1u) << o2).c[o2];
                if (!std::binary_search(audit.special.begin(), audit.special.end(), edge))
                  continue;
                ++n_special;
                unsigned base = (m & 1u) << o1 | (m >> 1 & 1u) << o2;
                for (unsigned corner_mask : {base, base | 1u << d}) {
                  if (!corner_type2[corner_mask] || (covered >> corner_mask & 1u))
                    double_cover = true;
                  covered |= 1u << corner_mask;
                }
              }
            }
            if (n_special != 3 || double_cover) ok = false;
            if (ok) {
              // all six mixed corners covered exactly once
              unsigned type2_mask = 0;
              for (unsigned m = 0; m < 8; ++m)
                if (corner_type2[m]) type2_mask |= 1u << m;
              if (covered != type2_mask) ok = false;
            }
            if (!ok) {
              ++st.bad;
              add_witness(st.witness, "pattern fails on cube " + delta.cell_text(cube));
            }
          }
        });
    long bad = 0;
    for (const auto& st : states2) {
      bad += st.bad;
      merge_witnesses(c.witness, st.witness);
    }
    c.count("cubes", ncubes);
    c.count("violations", bad);
    c.pass = bad == 0;
    c.elapsed_sec = t.seconds();
    out.push_back(std::move(c));
  }

  {
    // homology oracle on a seeded sample of links
    Timer t;
    CheckRecord c{"delta.homology-sample"};
    long k = cfg.sample_homology;

    std::mt19937_64 rng(cfg.seed);
    auto bounded = [&rng](uint64_t m) {
      uint64_t limit = std::numeric_limits<uint64_t>::max() / m * m;
      uint64_t x;
      do {
        x = rng();
      } while (x >= limit);
      return x % m;
    };
    std::vector<long> pool(nv);
    std::iota(pool.begin(), pool.end(), 0);
    for (long i = 0; i < k; ++i)
      std::swap(pool[i], pool[i + static_cast<long>(bounded(nv - i))]);
    pool.resize(k);

    long gamma_b1 = reduced_homology(to_simplicial(g)).betti[1];

    struct HomState {
      long type1 = 0, type2 = 0, fails = 0;
      std::vector<std::string> witness;
    };
    auto hstates = run_chunks<HomState>(k, cfg.parallelism, [&](long lo, long hi,
                                                                HomState& st) {
      for (long i = lo; i < hi; ++i) {
        const CubeCell& v = delta.cells[0][pool[i]];
        VertexType type = vertex_type(delta, v);
        (type == VertexType::Type1 ? st.type1 : st.type2)++;
        VertexLink lk = link(delta, v);
        std::string at = " at " + delta.cell_text(v);
        auto complain = [&](const std::string& msg) {
          ++st.fails;
          add_witness(st.witness, msg + at);
        };

        // boundary composition must vanish before we trust the ranks
        auto bnd = boundary_matrices(lk.complex);
        for (size_t j = 0; j + 1 < bnd.size(); ++j)
          if (!is_zero(multiply(bnd[j], bnd[j + 1]))) complain("boundary square nonzero");

        for (bool outgoing : {true, false}) {
          std::vector<int> keep;
          for (int j = 0; j < static_cast<int>(lk.points.size()); ++j)
            if (lk.points[j].outgoing == outgoing) keep.push_back(j);
          SimplicialComplex half = induced_on(lk.complex, keep);
          bool sphere = is_two_sphere(half).sphere;
          HomologyResult h = reduced_homology(half);
          bool hom_sphere = h.betti == std::vector<long>{0, 0, 1} && h.torsion_free();
          if (sphere != hom_sphere)
            complain("surface test and homology disagree on half link");
          if (!sphere) complain("half link is not a sphere");
        }

        HomologyResult full = reduced_homology(lk.complex);
        long expect_b2 = type == VertexType::Type1 ? 27 : 3 * gamma_b1;
        if (full.betti != std::vector<long>{0, 0, expect_b2} || !full.torsion_free())
          complain("full link homology is " + full.describe() + ", expected b2=" +
                   std::to_string(expect_b2));
      }
    });
    long fails = 0, t1 = 0, t2 = 0;
    for (const auto& st : hstates) {
      fails += st.fails;
      t1 += st.type1;
      t2 += st.type2;
      merge_witnesses(c.witness, st.witness);
    }
    c.count("sampled", k);
    c.count("type1-sampled", t1);
    c.count("type2-sampled", t2);
    c.count("gamma-betti1", gamma_b1);
    c.count("violations", fails);
    c.pass = fails == 0;
    c.elapsed_sec = t.seconds();
    out.push_back(std::move(c));
  }
}

}  // namespace

// ---------------------------------------------------------------- report

std::string_view target_name(Target t) {
  switch (t) {
    case Target::Gamma: return "gamma";
    case Target::X: return "x";
    case Target::Delta: return "delta";
  }
  return "?";
}

void CheckRecord::count(const std::string& key, long value) {
  counts.emplace_back(key, std::to_string(value));
}

void CheckRecord::count(const std::string& key, const std::string& value) {
  counts.emplace_back(key, value);
}

bool VerificationReport::all_pass() const {
  return std::all_of(checks.begin(), checks.end(),
                     [](const CheckRecord& c) { return c.pass; });
}

const CheckRecord* VerificationReport::find(std::string_view id) const {
  for (const auto& c : checks)
    if (c.id == id) return &c;
  return nullptr;
}

std::string VerificationReport::to_text() const {
  std::ostringstream os;
  os << "cubelink-report schema=" << schema << '\n';
  // worker count deliberately not echoed: the report is byte-identical
  // whatever parallelism produced it
  os << "config p=" << config.p << " sample-homology=" << config.sample_homology
     << " scheme-e1=" << config.scheme.e1[0]
     << ',' << config.scheme.e1[1] << " scheme-e2=" << config.scheme.e2[0] << ','
     << config.scheme.e2[1] << " scheme-e3=" << config.scheme.e3[0] << ','
     << config.scheme.e3[1] << " seed=" << config.seed << " target="
     << target_name(config.target) << '\n';
  long failed = 0;
  for (const auto& c : checks)
    if (!c.pass) ++failed;
  os << "summary checks=" << checks.size() << " failed=" << failed
     << " passed=" << (checks.size() - failed) << " result=" << (failed ? "fail" : "pass")
     << '\n';
  for (const auto& c : checks) {
    os << "\ncheck " << c.id << '\n';
    os << "status " << (c.pass ? "pass" : "fail") << '\n';
    auto counts = c.counts;
    std::sort(counts.begin(), counts.end());
    for (const auto& [k, v] : counts) os << "count " << k << '=' << v << '\n';
    for (const auto& w : c.witness) os << "witness " << w << '\n';
  }
  return os.str();
}

VerificationReport run_verification(const VerificationConfig& config) {
  require(config.parallelism >= 1, "parallelism must be positive");
  require(config.sample_homology >= 0, "sample-homology must be non-negative");

  VerificationReport rep;
  rep.config = config;
  rep.config.scheme = config.scheme.reduced(config.p);

  Gamma g = build_gamma(config.p, config.scheme);
  gamma_checks(g, rep.checks);
  if (config.target == Target::X) {
    CubeComplex x = build_x(g);
    x_checks(g, x, config.parallelism, rep.checks);
  } else if (config.target == Target::Delta) {
    CubeComplex delta = build_delta(g, config.parallelism);
    delta_checks(g, delta, rep.config, rep.checks);
  }
  std::sort(rep.checks.begin(), rep.checks.end(),
            [](const CheckRecord& a, const CheckRecord& b) { return a.id < b.id; });
  return rep;
}

// ---------------------------------------------------------------- sweep

std::string SweepResult::to_text() const {
  std::ostringstream os;
  os << "cubelink-sweep schema=1 mode="
     << (mode == SchemeMode::DefaultOnly ? "default" : "all-schemes") << " p-max=" << p_max
     << " p-min=" << p_min << '\n';
  for (const auto& r : rows) {
    os << "p=" << r.p << " prime=" << (r.prime ? "yes" : "no") << ' ' << r.scheme.describe()
       << " degree4=" << (r.degree4 ? "pass" : "fail")
       << " sign-cycles=" << (r.sign_cycles ? "pass" : "fail")
       << " no-short-cycles=" << (r.no_short_cycles ? "pass" : "fail")
       << " result=" << (r.pass() ? "pass" : "fail");
    if (!r.witness.empty()) os << " witness=" << r.witness;
    os << '\n';
  }
  return os.str();
}

SweepResult sweep(int p_min, int p_max, SchemeMode mode, int parallelism) {
  require(p_min >= 3 && p_max <= 64 && p_min <= p_max, "sweep range must lie in [3, 64]");
  require(mode == SchemeMode::DefaultOnly || p_max <= 13,
          "all-schemes sweep is limited to p <= 13");
  require(parallelism >= 1, "parallelism must be positive");

  std::vector<std::pair<int, OffsetScheme>> jobs;
  for (int p = p_min; p <= p_max; ++p) {
    if (mode == SchemeMode::DefaultOnly) {
      jobs.emplace_back(p, OffsetScheme{}.reduced(p));
    } else {
      std::vector<std::array<int, 2>> pairs;
      for (int i = 0; i < p; ++i)
        for (int j = i + 1; j < p; ++j) pairs.push_back({i, j});
      for (const auto& e1 : pairs)
        for (const auto& e2 : pairs)
          for (const auto& e3 : pairs) jobs.emplace_back(p, OffsetScheme{e1, e2, e3});
    }
  }

  std::vector<SweepRow> rows(jobs.size());
  auto body = [&](long lo, long hi, int& /*state*/) {
    for (long i = lo; i < hi; ++i) {
      auto [p, scheme] = jobs[i];
      SweepRow& r = rows[i];
      r.p = p;
      r.scheme = scheme;
      r.prime = is_prime(p);
      Gamma g = build_gamma(p, scheme);

      r.degree4 = true;
      for (int v = 0; v < g.num_vertices() && r.degree4; ++v)
        if (g.nbr[v].size() != 4) {
          r.degree4 = false;
          r.witness = "vertex " + g.vertex(v).token() + " has degree " +
                      std::to_string(g.nbr[v].size());
        }

      SignCycleReport sign = check_sign_cycles(g);
      r.sign_cycles = sign.pass();
      if (!r.sign_cycles && r.witness.empty()) {
        for (const auto& q : sign.quadrants)
          if (!q.pass) {
            r.witness = q.detail;
            break;
          }
        if (r.witness.empty()) r.witness = "same-family edges present";
      }

      auto cycles = find_short_cycles(g, 4);
      r.no_short_cycles = cycles.empty();
      if (!r.no_short_cycles && r.witness.empty())
        r.witness = "cycle " + cycles.front().describe();
    }
  };
  run_chunks<int>(static_cast<long>(jobs.size()), parallelism, body);

  SweepResult res;
  res.mode = mode;
  res.p_min = p_min;
  res.p_max = p_max;
  res.rows = std::move(rows);
  return res;
}

}  // namespace cubelink

#include "cubelink/gamma.hpp"

#include <algorithm>
#include <charconv>
#include <functional>
#include <sstream>
#include <stdexcept>

namespace cubelink {

namespace {

int mod(int x, int p) {
  int r = x % p;
  return r < 0 ? r + p : r;
}

void require(bool cond, const std::string& msg) {
  if (!cond) throw std::invalid_argument(msg);
}

}  // namespace

int GammaVertex::id(int p) const {
  require(index >= 0 && index < p, "vertex index out of range for p=" + std::to_string(p));
  int block = (family == Family::A ? 0 : 2) + (sign == Sign::Plus ? 0 : 1);
  return block * p + index;
}

GammaVertex GammaVertex::from_id(int p, int id) {
  require(id >= 0 && id < 4 * p, "vertex id out of range");
  int block = id / p;
  return GammaVertex{block < 2 ? Family::A : Family::B,
                     block % 2 == 0 ? Sign::Plus : Sign::Minus, id % p};
}

std::string GammaVertex::token() const {
  std::string s(1, family == Family::A ? 'A' : 'B');
  s += sign == Sign::Plus ? '+' : '-';
  s += std::to_string(index);
  return s;
}

GammaVertex GammaVertex::parse(std::string_view tok) {
  require(tok.size() >= 3, "vertex token too short: '" + std::string(tok) + "'");
  require(tok[0] == 'A' || tok[0] == 'B', "vertex token must start with A or B");
  require(tok[1] == '+' || tok[1] == '-', "vertex token needs a sign");
  int idx = 0;
  auto [ptr, ec] = std::from_chars(tok.data() + 2, tok.data() + tok.size(), idx);
  require(ec == std::errc{} && ptr == tok.data() + tok.size() && idx >= 0,
          "bad vertex index in token '" + std::string(tok) + "'");
  return GammaVertex{tok[0] == 'A' ? Family::A : Family::B,
                     tok[1] == '+' ? Sign::Plus : Sign::Minus, idx};
}

OffsetScheme OffsetScheme::reduced(int p) const {
  require(p >= 3, "parameter p must be at least 3");
  OffsetScheme r;
  auto reduce_set = [&](const std::array<int, 2>& in, const char* name) {
    std::array<int, 2> out{mod(in[0], p), mod(in[1], p)};
    if (out[0] > out[1]) std::swap(out[0], out[1]);
    require(out[0] != out[1],
            std::string(name) + " offsets coincide mod " + std::to_string(p));
    return out;
  };
  r.e1 = reduce_set(e1, "e1");
  r.e2 = reduce_set(e2, "e2");
  r.e3 = reduce_set(e3, "e3");
  return r;
}

std::string OffsetScheme::describe() const {
  std::ostringstream os;
  os << "e1=" << e1[0] << ',' << e1[1] << " e2=" << e2[0] << ',' << e2[1]
     << " e3=" << e3[0] << ',' << e3[1];
  return os.str();
}

namespace {

Gamma empty_gamma(int p, const OffsetScheme& scheme) {
  Gamma g;
  g.p = p;
  g.scheme = scheme.reduced(p);
  int n = 4 * p;
  g.adj.assign(static_cast<size_t>(n) * n, 0);
  g.nbr.assign(n, {});
  return g;
}

void add_edge(Gamma& g, int u, int v) {
  require(u != v, "self loop");
  size_t n = g.num_vertices();
  require(!g.adj[u * n + v], "duplicate edge " + g.vertex(u).token() + " " + g.vertex(v).token());
  g.adj[u * n + v] = g.adj[v * n + u] = 1;
  g.nbr[u].push_back(v);
  g.nbr[v].push_back(u);
  ++g.edge_count;
}

void finish(Gamma& g) {
  for (auto& lst : g.nbr) std::sort(lst.begin(), lst.end());
}

}  // namespace

Gamma build_gamma(int p, const OffsetScheme& scheme) {
  Gamma g = empty_gamma(p, scheme);
  auto vid = [&](Family f, Sign s, int i) { return GammaVertex{f, s, mod(i, p)}.id(p); };
  for (int i = 0; i < p; ++i) {
    for (int d : g.scheme.e1) {
      // same-sign edges a_i^s -- b_(i+d)^s
      add_edge(g, vid(Family::A, Sign::Plus, i), vid(Family::B, Sign::Plus, i + d));
      add_edge(g, vid(Family::A, Sign::Minus, i), vid(Family::B, Sign::Minus, i + d));
    }
    for (int d : g.scheme.e2)  // a_i^+ -- b_(i+d)^-
      add_edge(g, vid(Family::A, Sign::Plus, i), vid(Family::B, Sign::Minus, i + d));
    for (int d : g.scheme.e3)  // a_i^- -- b_(i+d)^+
      add_edge(g, vid(Family::A, Sign::Minus, i), vid(Family::B, Sign::Plus, i + d));
  }
  finish(g);
  return g;
}

Gamma Gamma::from_edges(int p, const std::vector<std::pair<GammaVertex, GammaVertex>>& edge_list,
                        const OffsetScheme& scheme) {
  Gamma g = empty_gamma(p, scheme);
  for (const auto& [u, v] : edge_list) add_edge(g, u.id(p), v.id(p));
  finish(g);
  return g;
}

std::vector<std::pair<int, int>> Gamma::edges() const {
  std::vector<std::pair<int, int>> out;
  out.reserve(edge_count);
  int n = num_vertices();
  for (int u = 0; u < n; ++u)
    for (int v : nbr[u])
      if (u < v) out.emplace_back(u, v);
  return out;
}

std::string CycleWitness::describe() const {
  std::string s;
  for (size_t i = 0; i < vertices.size(); ++i) {
    if (i) s += ',';
    s += vertices[i].token();
  }
  return s;
}

std::vector<CycleWitness> find_short_cycles(const Gamma& g, int max_len) {
  require(max_len >= 3 && max_len <= 6, "cycle search supports lengths 3..6");
  int n = g.num_vertices();
  std::vector<CycleWitness> out;
  std::vector<int> path;
  std::vector<char> on_path(n, 0);

  // Each simple cycle has exactly one representation with its smallest
  // vertex first and its second vertex smaller than its last, so a DFS
  // restricted to vertices above the root emits every cycle once.
  std::function<void(int)> extend = [&](int last) {
    if (path.size() >= 3 && g.adjacent(last, path[0]) && path[1] < path.back()) {
      CycleWitness w;
      w.vertices.reserve(path.size());
      for (int idv : path) w.vertices.push_back(g.vertex(idv));
      out.push_back(std::move(w));
    }
    if (static_cast<int>(path.size()) == max_len) return;
    for (int w : g.nbr[last]) {
      if (w <= path[0] || on_path[w]) continue;
      path.push_back(w);
      on_path[w] = 1;
      extend(w);
      path.pop_back();
      on_path[w] = 0;
    }
  };

  for (int v0 = 0; v0 < n; ++v0) {
    path.assign(1, v0);
    on_path.assign(n, 0);
    on_path[v0] = 1;
    extend(v0);
  }

  std::sort(out.begin(), out.end(), [&](const CycleWitness& x, const CycleWitness& y) {
    if (x.vertices.size() != y.vertices.size()) return x.vertices.size() < y.vertices.size();
    auto key = [&](const CycleWitness& c) {
      std::vector<int> ids;
      ids.reserve(c.vertices.size());
      for (const auto& v : c.vertices) ids.push_back(v.id(g.p));
      return ids;
    };
    return key(x) < key(y);
  });
  return out;
}

bool SignCycleReport::pass() const {
  if (a_part_edges != 0 || b_part_edges != 0) return false;
  for (const auto& q : quadrants)
    if (!q.pass) return false;
  return true;
}

SignCycleReport check_sign_cycles(const Gamma& g) {
  SignCycleReport rep;
  int p = g.p, n = g.num_vertices();

  for (int u = 0; u < n; ++u)
    for (int v : g.nbr[u]) {
      if (v <= u) continue;
      bool ua = u < 2 * p, va = v < 2 * p;
      if (ua && va) ++rep.a_part_edges;
      if (!ua && !va) ++rep.b_part_edges;
    }

  int qi = 0;
  for (Sign sa : {Sign::Plus, Sign::Minus})
    for (Sign sb : {Sign::Plus, Sign::Minus}) {
      QuadrantReport& q = rep.quadrants[qi++];
      q.a_sign = sa;
      q.b_sign = sb;

      std::vector<int> verts;
      verts.reserve(2 * p);
      for (int i = 0; i < p; ++i) verts.push_back(GammaVertex{Family::A, sa, i}.id(p));
      for (int i = 0; i < p; ++i) verts.push_back(GammaVertex{Family::B, sb, i}.id(p));
      std::vector<char> in_quad(n, 0);
      for (int v : verts) in_quad[v] = 1;

      // induced neighbor lists; a single cycle needs degree 2 everywhere
      std::vector<std::vector<int>> qn(n);
      bool degree_ok = true;
      for (int v : verts) {
        for (int w : g.nbr[v])
          if (in_quad[w]) qn[v].push_back(w);
        q.edge_count += static_cast<long>(qn[v].size());
        if (qn[v].size() != 2 && degree_ok) {
          degree_ok = false;
          q.detail = "vertex " + g.vertex(v).token() + " has " +
                     std::to_string(qn[v].size()) + " neighbors in quadrant";
        }
      }
      q.edge_count /= 2;
      if (!degree_ok) continue;

      // walk the cycle from the smallest vertex
      int start = verts[0], prev = -1, cur = start, len = 0;
      do {
        int nxt = (qn[cur][0] == prev) ? qn[cur][1] : qn[cur][0];
        prev = cur;
        cur = nxt;
        ++len;
      } while (cur != start && len <= 2 * p);
      if (cur == start && len == 2 * p) {
        q.pass = true;
        q.cycle_length = len;
      } else {
        q.detail = "quadrant splits: cycle through " + g.vertex(start).token() +
                   " closes after " + std::to_string(len) + " of " +
                   std::to_string(2 * p) + " vertices";
      }
    }
  return rep;
}

long FourCycleCensus::total() const {
  long t = 0;
  for (long c : mixed) t += c;
  for (long c : quadrant) t += c;
  return t;
}

FourCycleCensus four_cycle_census(const Gamma& g) {
  int p = g.p, n = g.num_vertices();
  for (int u = 0; u < n; ++u)
    for (int v : g.nbr[u])
      require((u < 2 * p) != (v < 2 * p), "census requires a family-bipartite graph");

  FourCycleCensus c;
  auto sign_of = [&](int id) { return (id % (2 * p)) < p ? Sign::Plus : Sign::Minus; };
  // Every 4-cycle is a1-b1-a2-b2, determined by its diagonal pairs {a1,a2}
  // and {b1,b2}; classify by the two sign multisets.
  for (int a1 = 0; a1 < 2 * p; ++a1)
    for (int a2 = a1 + 1; a2 < 2 * p; ++a2) {
      std::vector<int> common;
      std::set_intersection(g.nbr[a1].begin(), g.nbr[a1].end(), g.nbr[a2].begin(),
                            g.nbr[a2].end(), std::back_inserter(common));
      for (size_t i = 0; i < common.size(); ++i)
        for (size_t j = i + 1; j < common.size(); ++j) {
          Sign sa1 = sign_of(a1), sa2 = sign_of(a2);
          Sign sb1 = sign_of(common[i]), sb2 = sign_of(common[j]);
          bool a_mixed = sa1 != sa2, b_mixed = sb1 != sb2;
          if (!a_mixed && !b_mixed) {
            ++c.quadrant[(sa1 == Sign::Minus ? 2 : 0) + (sb1 == Sign::Minus ? 1 : 0)];
          } else if (a_mixed && !b_mixed) {
            ++c.mixed[sb1 == Sign::Minus ? 0 : 1];  // case 1: b both -, case 2: b both +
          } else if (!a_mixed && b_mixed) {
            ++c.mixed[sa1 == Sign::Minus ? 2 : 3];  // case 3: a both -, case 4: a both +
          } else {
            ++c.mixed[4];  // case 5: both pairs mixed
          }
        }
    }
  return c;
}

std::string serialize_gamma(const Gamma& g) {
  std::ostringstream os;
  os << "gamma p=" << g.p << ' ' << g.scheme.describe() << '\n';
  for (auto [u, v] : g.edges())
    os << g.vertex(u).token() << ' ' << g.vertex(v).token() << '\n';
  return os.str();
}

}  // namespace cubelink

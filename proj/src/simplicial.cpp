#include "cubelink/simplicial.hpp"

#include <algorithm>
#include <functional>
#include <queue>
#include <set>
#include <sstream>
#include <stdexcept>

namespace cubelink {

namespace {

void require(bool cond, const std::string& msg) {
  if (!cond) throw std::invalid_argument(msg);
}

void sort_dims(SimplicialComplex& sc) {
  for (auto& level : sc.simplices) {
    std::sort(level.begin(), level.end());
    level.erase(std::unique(level.begin(), level.end()), level.end());
  }
  while (sc.simplices.size() > 1 && sc.simplices.back().empty()) sc.simplices.pop_back();
}

std::string label_list(const SimplicialComplex& sc, const std::vector<int>& s) {
  std::string out = "{";
  for (size_t i = 0; i < s.size(); ++i) {
    if (i) out += ',';
    out += sc.labels[s[i]];
  }
  return out + "}";
}

}  // namespace

bool SimplicialComplex::has(const std::vector<int>& sorted_simplex) const {
  int k = static_cast<int>(sorted_simplex.size()) - 1;
  if (k < 0 || k > dim()) return false;
  return std::binary_search(simplices[k].begin(), simplices[k].end(), sorted_simplex);
}

SimplicialComplex SimplicialComplex::from_maximal(std::vector<std::string> labels,
                                                  const std::vector<std::vector<int>>& maximal) {
  SimplicialComplex sc;
  int n = static_cast<int>(labels.size());
  sc.labels = std::move(labels);
  sc.simplices.resize(1);
  sc.simplices[0].reserve(n);
  for (int i = 0; i < n; ++i) sc.simplices[0].push_back({i});

  for (const auto& raw : maximal) {
    std::vector<int> s = raw;
    std::sort(s.begin(), s.end());
    require(std::adjacent_find(s.begin(), s.end()) == s.end(), "simplex repeats a vertex");
    require(!s.empty() && s.front() >= 0 && s.back() < n, "simplex vertex id out of range");
    int m = static_cast<int>(s.size());
    if (static_cast<int>(sc.simplices.size()) < m) sc.simplices.resize(m);
    // all non-empty subsets; subsets of a sorted list are sorted
    for (unsigned mask = 1; mask < (1u << m); ++mask) {
      std::vector<int> face;
      for (int b = 0; b < m; ++b)
        if (mask & (1u << b)) face.push_back(s[b]);
      if (face.size() >= 2) sc.simplices[face.size() - 1].push_back(std::move(face));
    }
  }
  sort_dims(sc);
  return sc;
}

SimplicialComplex SimplicialComplex::points(int n, const std::string& prefix) {
  std::vector<std::string> labels;
  labels.reserve(n);
  for (int i = 0; i < n; ++i) labels.push_back(prefix + std::to_string(i));
  return from_maximal(std::move(labels), {});
}

SimplicialComplex SimplicialComplex::cycle(int n, const std::string& prefix) {
  require(n >= 3, "cycle needs at least 3 vertices");
  std::vector<std::string> labels;
  labels.reserve(n);
  for (int i = 0; i < n; ++i) labels.push_back(prefix + std::to_string(i));
  std::vector<std::vector<int>> maximal;
  for (int i = 0; i < n; ++i) maximal.push_back({i, (i + 1) % n});
  return from_maximal(std::move(labels), maximal);
}

SimplicialComplex to_simplicial(const Gamma& g) {
  std::vector<std::string> labels;
  labels.reserve(g.num_vertices());
  for (int v = 0; v < g.num_vertices(); ++v) labels.push_back(g.vertex(v).token());
  std::vector<std::vector<int>> maximal;
  maximal.reserve(g.edge_count);
  for (auto [u, v] : g.edges()) maximal.push_back({u, v});
  return SimplicialComplex::from_maximal(std::move(labels), maximal);
}

namespace {

std::vector<std::vector<int>> neighbor_lists(const SimplicialComplex& sc) {
  std::vector<std::vector<int>> nbr(sc.num_vertices());
  if (sc.dim() >= 1)
    for (const auto& e : sc.simplices[1]) {
      nbr[e[0]].push_back(e[1]);
      nbr[e[1]].push_back(e[0]);
    }
  for (auto& lst : nbr) std::sort(lst.begin(), lst.end());
  return nbr;
}

bool adjacent_in(const std::vector<std::vector<int>>& nbr, int u, int v) {
  return std::binary_search(nbr[u].begin(), nbr[u].end(), v);
}

}  // namespace

FlagResult is_flag(const SimplicialComplex& sc) {
  auto nbr = neighbor_lists(sc);
  int n = static_cast<int>(sc.num_vertices());

  // Scan clique sizes 3..dim+2 in increasing order; if the 1-skeleton has a
  // clique of size dim+2 it cannot be spanned, so larger sizes never matter.
  for (int k = 3; k <= sc.dim() + 2; ++k) {
    std::vector<int> clique;
    FlagResult failure;
    std::function<bool(const std::vector<int>&)> grow =
        [&](const std::vector<int>& candidates) {
          if (static_cast<int>(clique.size()) == k) {
            if (!sc.has(clique)) {
              failure = FlagResult{false, clique};
              return true;
            }
            return false;
          }
          for (int v : candidates) {
            std::vector<int> next;
            for (int w : candidates)
              if (w > v && adjacent_in(nbr, v, w)) next.push_back(w);
            clique.push_back(v);
            if (grow(next)) return true;
            clique.pop_back();
          }
          return false;
        };
    std::vector<int> all(n);
    for (int i = 0; i < n; ++i) all[i] = i;
    if (grow(all)) return failure;
  }
  return FlagResult{};
}

std::vector<std::array<int, 4>> empty_squares(const SimplicialComplex& sc) {
  auto nbr = neighbor_lists(sc);
  int n = static_cast<int>(sc.num_vertices());
  std::vector<std::array<int, 4>> out;
  // Square x-u-y-w with diagonals {x,y} and {u,w}; keeping x below both u and
  // w selects one diagonal pair per square, hence one representative.
  for (int x = 0; x < n; ++x)
    for (int y = x + 1; y < n; ++y) {
      if (adjacent_in(nbr, x, y)) continue;
      std::vector<int> common;
      std::set_intersection(nbr[x].begin(), nbr[x].end(), nbr[y].begin(), nbr[y].end(),
                            std::back_inserter(common));
      for (size_t i = 0; i < common.size(); ++i) {
        if (common[i] < x) continue;
        for (size_t j = i + 1; j < common.size(); ++j)
          if (!adjacent_in(nbr, common[i], common[j]))
            out.push_back({x, common[i], y, common[j]});
      }
    }
  std::sort(out.begin(), out.end());
  return out;
}

bool is_connected(const SimplicialComplex& sc) {
  int n = static_cast<int>(sc.num_vertices());
  if (n == 0) return true;
  auto nbr = neighbor_lists(sc);
  std::vector<char> seen(n, 0);
  std::queue<int> q;
  q.push(0);
  seen[0] = 1;
  int reached = 1;
  while (!q.empty()) {
    int v = q.front();
    q.pop();
    for (int w : nbr[v])
      if (!seen[w]) {
        seen[w] = 1;
        ++reached;
        q.push(w);
      }
  }
  return reached == n;
}

long euler_characteristic(const SimplicialComplex& sc) {
  long chi = 0;
  for (int k = 0; k <= sc.dim(); ++k) chi += (k % 2 == 0) ? sc.count(k) : -sc.count(k);
  return chi;
}

SurfaceResult is_two_sphere(const SimplicialComplex& sc) {
  auto fail = [](std::string why) { return SurfaceResult{false, std::move(why)}; };
  if (sc.num_vertices() == 0) return fail("complex is empty");
  if (sc.dim() != 2) return fail("dimension is " + std::to_string(sc.dim()) + ", not 2");

  // purity: every vertex in an edge, every edge in a triangle
  std::vector<long> vertex_deg(sc.num_vertices(), 0);
  for (const auto& e : sc.simplices[1]) {
    ++vertex_deg[e[0]];
    ++vertex_deg[e[1]];
  }
  for (int v = 0; v < sc.num_vertices(); ++v)
    if (vertex_deg[v] == 0) return fail("vertex " + sc.labels[v] + " lies in no edge");

  std::map<std::vector<int>, long> tri_per_edge;
  for (const auto& e : sc.simplices[1]) tri_per_edge[e] = 0;
  for (const auto& t : sc.simplices[2]) {
    ++tri_per_edge[{t[0], t[1]}];
    ++tri_per_edge[{t[0], t[2]}];
    ++tri_per_edge[{t[1], t[2]}];
  }
  for (const auto& [e, cnt] : tri_per_edge) {
    if (cnt == 0) return fail("edge " + label_list(sc, e) + " lies in no triangle");
    if (cnt != 2)
      return fail("edge " + label_list(sc, e) + " lies in " + std::to_string(cnt) +
                  " triangles, not 2");
  }

  // vertex links must each be a single cycle
  for (int v = 0; v < sc.num_vertices(); ++v) {
    std::map<int, std::vector<int>> link_nbr;
    for (const auto& t : sc.simplices[2]) {
      if (t[0] != v && t[1] != v && t[2] != v) continue;
      std::array<int, 2> rest{};
      int k = 0;
      for (int u : t)
        if (u != v) rest[k++] = u;
      link_nbr[rest[0]].push_back(rest[1]);
      link_nbr[rest[1]].push_back(rest[0]);
    }
    for (const auto& [u, lst] : link_nbr)
      if (lst.size() != 2)
        return fail("link of " + sc.labels[v] + " is not 2-regular at " + sc.labels[u]);
    int start = link_nbr.begin()->first, prev = -1, cur = start;
    size_t len = 0;
    do {
      const auto& lst = link_nbr[cur];
      int nxt = (lst[0] == prev) ? lst[1] : lst[0];
      prev = cur;
      cur = nxt;
      ++len;
    } while (cur != start && len <= link_nbr.size());
    if (len != link_nbr.size())
      return fail("link of " + sc.labels[v] + " is a disjoint union of cycles");
  }

  if (!is_connected(sc)) return fail("complex is not connected");
  long chi = euler_characteristic(sc);
  if (chi != 2) return fail("euler characteristic is " + std::to_string(chi) + ", not 2");
  return SurfaceResult{true, ""};
}

SimplicialComplex join(const SimplicialComplex& a, const SimplicialComplex& b) {
  std::set<std::string> seen(a.labels.begin(), a.labels.end());
  for (const auto& l : b.labels)
    require(!seen.count(l), "join operands share vertex label '" + l + "'");

  SimplicialComplex out;
  out.labels = a.labels;
  out.labels.insert(out.labels.end(), b.labels.begin(), b.labels.end());
  int na = static_cast<int>(a.num_vertices());
  out.simplices.resize(a.dim() + b.dim() + 2);

  static const std::vector<std::vector<int>> kEmptyLevel{{}};
  for (int ka = -1; ka <= a.dim(); ++ka)
    for (int kb = -1; kb <= b.dim(); ++kb) {
      if (ka == -1 && kb == -1) continue;
      const auto* left = ka == -1 ? &kEmptyLevel : &a.simplices[ka];
      const auto* right = kb == -1 ? &kEmptyLevel : &b.simplices[kb];
      for (const auto& s : *left)
        for (const auto& t : *right) {
          std::vector<int> u = s;
          for (int v : t) u.push_back(v + na);  // stays sorted: b ids follow a ids
          out.simplices[ka + kb + 1].push_back(std::move(u));
        }
    }
  sort_dims(out);
  return out;
}

SimplicialComplex induced_on(const SimplicialComplex& sc, const std::vector<int>& verts) {
  std::vector<int> keep = verts;
  std::sort(keep.begin(), keep.end());
  keep.erase(std::unique(keep.begin(), keep.end()), keep.end());
  require(keep.empty() || (keep.front() >= 0 && keep.back() < sc.num_vertices()),
          "induced vertex id out of range");

  std::vector<int> new_id(sc.num_vertices(), -1);
  SimplicialComplex out;
  for (int v : keep) {
    new_id[v] = static_cast<int>(out.labels.size());
    out.labels.push_back(sc.labels[v]);
  }
  out.simplices.resize(std::max(1, sc.dim() + 1));
  for (int k = 0; k <= sc.dim(); ++k)
    for (const auto& s : sc.simplices[k]) {
      std::vector<int> mapped;
      mapped.reserve(s.size());
      for (int v : s) {
        if (new_id[v] < 0) break;
        mapped.push_back(new_id[v]);  // monotone map keeps simplices sorted
      }
      if (mapped.size() == s.size()) out.simplices[k].push_back(std::move(mapped));
    }
  sort_dims(out);
  return out;
}

bool is_isomorphic_relabel(const SimplicialComplex& a, const SimplicialComplex& b,
                           const std::map<std::string, std::string>& relabel) {
  require(a.labels.size() == b.labels.size(),
          "relabel requires equal vertex counts");
  std::map<std::string, int> b_id;
  for (size_t i = 0; i < b.labels.size(); ++i) b_id[b.labels[i]] = static_cast<int>(i);

  std::vector<int> image(a.num_vertices(), -1);
  std::vector<char> hit(b.num_vertices(), 0);
  for (size_t i = 0; i < a.labels.size(); ++i) {
    auto it = relabel.find(a.labels[i]);
    require(it != relabel.end(), "relabel misses vertex '" + a.labels[i] + "'");
    auto jt = b_id.find(it->second);
    require(jt != b_id.end(), "relabel target '" + it->second + "' is not a vertex");
    require(!hit[jt->second], "relabel maps two vertices to '" + it->second + "'");
    hit[jt->second] = 1;
    image[i] = jt->second;
  }

  if (a.dim() != b.dim()) return false;
  for (int k = 0; k <= a.dim(); ++k) {
    if (a.count(k) != b.count(k)) return false;
    std::vector<std::vector<int>> mapped;
    mapped.reserve(a.simplices[k].size());
    for (const auto& s : a.simplices[k]) {
      std::vector<int> t;
      t.reserve(s.size());
      for (int v : s) t.push_back(image[v]);
      std::sort(t.begin(), t.end());
      mapped.push_back(std::move(t));
    }
    std::sort(mapped.begin(), mapped.end());
    if (mapped != b.simplices[k]) return false;
  }
  return true;
}

std::string serialize_maximal(const SimplicialComplex& sc) {
  // a simplex is maximal iff it is not a facet of some higher simplex
  std::vector<std::set<std::vector<int>>> facets(std::max(1, sc.dim() + 1));
  for (int k = 1; k <= sc.dim(); ++k)
    for (const auto& s : sc.simplices[k])
      for (size_t drop = 0; drop < s.size(); ++drop) {
        std::vector<int> f;
        for (size_t i = 0; i < s.size(); ++i)
          if (i != drop) f.push_back(s[i]);
        facets[k - 1].insert(std::move(f));
      }

  std::vector<std::string> lines;
  for (int k = 0; k <= sc.dim(); ++k)
    for (const auto& s : sc.simplices[k]) {
      if (facets[k].count(s)) continue;
      std::string line = "s";
      for (int v : s) line += " " + sc.labels[v];
      lines.push_back(std::move(line));
    }
  std::sort(lines.begin(), lines.end());
  std::ostringstream os;
  for (const auto& l : lines) os << l << '\n';
  return os.str();
}

}  // namespace cubelink

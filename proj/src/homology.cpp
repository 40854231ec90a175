#include "cubelink/homology.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace cubelink {

IntegerMatrix multiply(const IntegerMatrix& x, const IntegerMatrix& y) {
  if (x.cols != y.rows) throw std::invalid_argument("matrix shape mismatch");
  IntegerMatrix out = IntegerMatrix::zero(x.rows, y.cols);
  for (int i = 0; i < x.rows; ++i)
    for (int k = 0; k < x.cols; ++k) {
      const BigInt& v = x.at(i, k);
      if (v == 0) continue;
      for (int j = 0; j < y.cols; ++j)
        if (y.at(k, j) != 0) out.at(i, j) += v * y.at(k, j);
    }
  return out;
}

bool is_zero(const IntegerMatrix& m) {
  return std::all_of(m.a.begin(), m.a.end(), [](const BigInt& v) { return v == 0; });
}

std::vector<IntegerMatrix> boundary_matrices(const SimplicialComplex& sc) {
  std::vector<IntegerMatrix> out;
  for (int k = 1; k <= sc.dim(); ++k) {
    const auto& faces = sc.simplices[k - 1];
    const auto& cells = sc.simplices[k];
    IntegerMatrix m = IntegerMatrix::zero(static_cast<int>(faces.size()),
                                          static_cast<int>(cells.size()));
    for (int j = 0; j < static_cast<int>(cells.size()); ++j) {
      const auto& s = cells[j];
      std::vector<int> face(s.size() - 1);
      for (size_t drop = 0; drop < s.size(); ++drop) {
        for (size_t i = 0, w = 0; i < s.size(); ++i)
          if (i != drop) face[w++] = s[i];
        auto it = std::lower_bound(faces.begin(), faces.end(), face);
        if (it == faces.end() || *it != face)
          throw std::logic_error("complex is not closed under faces");
        int i = static_cast<int>(it - faces.begin());
        m.at(i, j) = (drop % 2 == 0) ? 1 : -1;
      }
    }
    out.push_back(std::move(m));
  }
  return out;
}

namespace {

void swap_rows(IntegerMatrix& m, int r1, int r2) {
  if (r1 == r2) return;
  for (int c = 0; c < m.cols; ++c) std::swap(m.at(r1, c), m.at(r2, c));
}

void swap_cols(IntegerMatrix& m, int c1, int c2) {
  if (c1 == c2) return;
  for (int r = 0; r < m.rows; ++r) std::swap(m.at(r, c1), m.at(r, c2));
}

void make_pivot_positive(IntegerMatrix& m, int t) {
  if (m.at(t, t) < 0)
    for (int c = t; c < m.cols; ++c) m.at(t, c) = -m.at(t, c);
}

}  // namespace

std::vector<BigInt> smith_normal_form(IntegerMatrix m) {
  using boost::multiprecision::abs;
  int limit = std::min(m.rows, m.cols);
  int t = 0;
  for (; t < limit; ++t) {
    // move the nonzero entry of smallest magnitude to the pivot
    int pr = -1, pc = -1;
    for (int r = t; r < m.rows; ++r)
      for (int c = t; c < m.cols; ++c) {
        const BigInt& v = m.at(r, c);
        if (v == 0) continue;
        if (pr < 0 || abs(v) < abs(m.at(pr, pc))) {
          pr = r;
          pc = c;
        }
      }
    if (pr < 0) break;  // submatrix is zero
    swap_rows(m, t, pr);
    swap_cols(m, t, pc);
    make_pivot_positive(m, t);

    // Euclidean reduction; every swap strictly shrinks the pivot, so the
    // pass terminates with row t and column t zero beyond the pivot.
    bool clean = false;
    while (!clean) {
      clean = true;
      for (int r = t + 1; r < m.rows; ++r) {
        if (m.at(r, t) == 0) continue;
        BigInt q = m.at(r, t) / m.at(t, t);
        if (q != 0)
          for (int c = t; c < m.cols; ++c) m.at(r, c) -= q * m.at(t, c);
        if (m.at(r, t) != 0) {  // remainder beats the pivot
          swap_rows(m, t, r);
          make_pivot_positive(m, t);
          clean = false;
        }
      }
      for (int c = t + 1; c < m.cols; ++c) {
        if (m.at(t, c) == 0) continue;
        BigInt q = m.at(t, c) / m.at(t, t);
        if (q != 0)
          for (int r = t; r < m.rows; ++r) m.at(r, c) -= q * m.at(r, t);
        if (m.at(t, c) != 0) {
          swap_cols(m, t, c);
          make_pivot_positive(m, t);
          clean = false;
        }
      }
    }
  }

  std::vector<BigInt> d;
  d.reserve(t);
  for (int i = 0; i < t; ++i) d.push_back(abs(m.at(i, i)));

  // repair the divisibility chain: diag(x, y) ~ diag(gcd, lcm)
  bool changed = true;
  while (changed) {
    changed = false;
    for (size_t i = 0; i + 1 < d.size(); ++i)
      if (d[i + 1] % d[i] != 0) {
        BigInt g = gcd(d[i], d[i + 1]);
        d[i + 1] = d[i] / g * d[i + 1];
        d[i] = g;
        changed = true;
      }
  }
  return d;
}

bool HomologyResult::torsion_free() const {
  return std::all_of(torsion.begin(), torsion.end(),
                     [](const std::vector<BigInt>& t) { return t.empty(); });
}

std::string HomologyResult::describe() const {
  std::ostringstream os;
  for (size_t k = 0; k < betti.size(); ++k) {
    if (k) os << ' ';
    os << 'b' << k << '=' << betti[k];
  }
  for (size_t k = 0; k < torsion.size(); ++k) {
    if (torsion[k].empty()) continue;
    os << " torsion" << k << '=';
    for (size_t i = 0; i < torsion[k].size(); ++i) {
      if (i) os << ',';
      os << torsion[k][i];
    }
  }
  return os.str();
}

HomologyResult reduced_homology(const SimplicialComplex& sc) {
  int d = sc.dim();
  auto bnd = boundary_matrices(sc);

  std::vector<long> rank(d + 2, 0);
  std::vector<std::vector<BigInt>> factors(d + 2);
  for (int k = 1; k <= d; ++k) {
    factors[k] = smith_normal_form(bnd[k - 1]);
    rank[k] = static_cast<long>(factors[k].size());
  }

  HomologyResult res;
  res.betti.resize(d + 1);
  res.torsion.resize(d + 1);
  long aug_rank = sc.count(0) > 0 ? 1 : 0;  // augmentation C_0 -> Z
  for (int k = 0; k <= d; ++k) {
    long cycles = sc.count(k) - (k == 0 ? aug_rank : rank[k]);
    res.betti[k] = cycles - rank[k + 1];
    for (const BigInt& f : factors[k + 1])
      if (f > 1) res.torsion[k].push_back(f);
  }
  return res;
}

}  // namespace cubelink

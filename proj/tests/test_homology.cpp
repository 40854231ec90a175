#include <doctest.h>

#include <algorithm>
#include <stdexcept>

#include <functional>
#include <random>

#include "cubelink/homology.hpp"

using namespace cubelink;

namespace {

std::vector<std::string> names(int n, const std::string& prefix) {
  std::vector<std::string> out;
  for (int i = 0; i < n; ++i) out.push_back(prefix + std::to_string(i));
  return out;
}

SimplicialComplex octahedron() {
  return join(join(SimplicialComplex::points(2, "x"), SimplicialComplex::points(2, "y")),
              SimplicialComplex::points(2, "z"));
}

// six-vertex projective plane: every pair of vertices an edge, ten triangles
SimplicialComplex projective_plane() {
  return SimplicialComplex::from_maximal(
      names(6, "r"), {{0, 1, 2}, {0, 1, 3}, {0, 2, 4}, {0, 3, 5}, {0, 4, 5},
                      {1, 2, 5}, {1, 3, 4}, {1, 4, 5}, {2, 3, 4}, {2, 3, 5}});
}

IntegerMatrix from_ints(int rows, int cols, const std::vector<long>& vals) {
  IntegerMatrix m = IntegerMatrix::zero(rows, cols);
  for (int i = 0; i < rows * cols; ++i) m.a[i] = vals[i];
  return m;
}

int matrix_rank(const std::vector<BigInt>& factors) { return static_cast<int>(factors.size()); }

// gcd of all k x k minors; the classical characterization of d_1 * ... * d_k
BigInt minor_gcd(const IntegerMatrix& m, int k) {
  std::vector<int> rows(k), cols(k);
  BigInt g = 0;
  std::function<void(int, int)> pick_cols = [&](int ci, int start) {
    if (ci == k) {
      IntegerMatrix sub = IntegerMatrix::zero(k, k);
      for (int r = 0; r < k; ++r)
        for (int c = 0; c < k; ++c) sub.at(r, c) = m.at(rows[r], cols[c]);
      // Laplace expansion is fine at these sizes
      std::function<BigInt(IntegerMatrix)> det = [&](IntegerMatrix x) -> BigInt {
        int n = x.rows;
        if (n == 1) return x.at(0, 0);
        BigInt acc = 0;
        for (int c = 0; c < n; ++c) {
          if (x.at(0, c) == 0) continue;
          IntegerMatrix minor = IntegerMatrix::zero(n - 1, n - 1);
          for (int r = 1; r < n; ++r) {
            int cc = 0;
            for (int c2 = 0; c2 < n; ++c2)
              if (c2 != c) minor.at(r - 1, cc++) = x.at(r, c2);
          }
          BigInt term = x.at(0, c) * det(minor);
          acc += (c % 2 ? -term : term);
        }
        return acc;
      };
      g = boost::multiprecision::gcd(g, det(sub));
      return;
    }
    for (int c = start; c + (k - ci) <= m.cols; ++c) {
      cols[ci] = c;
      pick_cols(ci + 1, c + 1);
    }
  };
  std::function<void(int, int)> pick_rows = [&](int ri, int start) {
    if (ri == k) {
      pick_cols(0, 0);
      return;
    }
    for (int r = start; r + (k - ri) <= m.rows; ++r) {
      rows[ri] = r;
      pick_rows(ri + 1, r + 1);
    }
  };
  pick_rows(0, 0);
  return g < 0 ? BigInt(-g) : g;
}

}  // namespace

TEST_CASE("boundary of a single edge") {
  SimplicialComplex edge = SimplicialComplex::from_maximal(names(2, "v"), {{0, 1}});
  auto bnd = boundary_matrices(edge);
  REQUIRE(bnd.size() == 1);
  CHECK(bnd[0].rows == 2);
  CHECK(bnd[0].cols == 1);
  CHECK(bnd[0].at(0, 0) == -1);
  CHECK(bnd[0].at(1, 0) == 1);
}

TEST_CASE("boundary composition vanishes") {
  for (const SimplicialComplex& sc : {octahedron(), projective_plane()}) {
    auto bnd = boundary_matrices(sc);
    REQUIRE(bnd.size() == 2);
    CHECK(is_zero(multiply(bnd[0], bnd[1])));
  }
}

TEST_CASE("smith normal form on fixtures") {
  CHECK(smith_normal_form(IntegerMatrix::zero(3, 4)).empty());

  IntegerMatrix id3 = from_ints(3, 3, {1, 0, 0, 0, 1, 0, 0, 0, 1});
  CHECK(smith_normal_form(id3) == std::vector<BigInt>{1, 1, 1});

  IntegerMatrix m = from_ints(2, 2, {2, 4, 6, 8});
  CHECK(smith_normal_form(m) == std::vector<BigInt>{2, 4});

  IntegerMatrix neg = from_ints(1, 1, {-7});
  CHECK(smith_normal_form(neg) == std::vector<BigInt>{7});

  // octahedron boundary ranks: 5 and 7
  auto bnd = boundary_matrices(octahedron());
  CHECK(matrix_rank(smith_normal_form(bnd[0])) == 5);
  CHECK(matrix_rank(smith_normal_form(bnd[1])) == 7);
}

TEST_CASE("smith normal form against the minor-gcd characterization") {
  std::mt19937_64 rng(20240915);
  std::uniform_int_distribution<int> dim(1, 4), entry(-9, 9);
  for (int trial = 0; trial < 60; ++trial) {
    int r = dim(rng), c = dim(rng);
    IntegerMatrix m = IntegerMatrix::zero(r, c);
    for (auto& x : m.a) x = entry(rng);
    auto factors = smith_normal_form(m);
    // divisibility chain
    for (size_t i = 0; i + 1 < factors.size(); ++i) {
      CHECK(factors[i] > 0);
      CHECK(factors[i + 1] % factors[i] == 0);
    }
    // product of the first k factors equals the gcd of k x k minors
    BigInt prod = 1;
    for (size_t k = 1; k <= factors.size(); ++k) {
      prod *= factors[k - 1];
      CHECK(prod == minor_gcd(m, static_cast<int>(k)));
    }
    // everything beyond the rank has vanishing minors
    if (static_cast<int>(factors.size()) < std::min(r, c))
      CHECK(minor_gcd(m, static_cast<int>(factors.size()) + 1) == 0);
  }
}

TEST_CASE("homology of spheres and graphs") {
  HomologyResult oct = reduced_homology(octahedron());
  CHECK(oct.betti == std::vector<long>{0, 0, 1});
  CHECK(oct.torsion_free());
  CHECK(oct.describe() == "b0=0 b1=0 b2=1");

  HomologyResult circle = reduced_homology(SimplicialComplex::cycle(22, "c"));
  CHECK(circle.betti == std::vector<long>{0, 1});

  // the parameter graph at p=11 is connected with first betti number 45
  HomologyResult graph = reduced_homology(to_simplicial(build_gamma(11)));
  CHECK(graph.betti == std::vector<long>{0, 45});
  CHECK(graph.torsion_free());

  HomologyResult two_points = reduced_homology(SimplicialComplex::points(2, "p"));
  CHECK(two_points.betti == std::vector<long>{1});
}

TEST_CASE("joins of point sets behave like products of wedges") {
  // points(a) * points(b) * points(c) has reduced homology concentrated in
  // degree 2, free of rank (a-1)(b-1)(c-1)
  const int sizes[][3] = {{2, 2, 2}, {2, 4, 4}, {4, 4, 4}};
  for (auto [a, b, c] : sizes) {
    SimplicialComplex sc =
        join(join(SimplicialComplex::points(a, "x"), SimplicialComplex::points(b, "y")),
             SimplicialComplex::points(c, "z"));
    HomologyResult h = reduced_homology(sc);
    long expect = static_cast<long>(a - 1) * (b - 1) * (c - 1);
    CHECK(h.betti == std::vector<long>{0, 0, expect});
    CHECK(h.torsion_free());
  }
}

TEST_CASE("torsion is detected") {
  HomologyResult rp2 = reduced_homology(projective_plane());
  CHECK(rp2.betti == std::vector<long>{0, 0, 0});
  CHECK_FALSE(rp2.torsion_free());
  REQUIRE(rp2.torsion.size() == 3);
  CHECK(rp2.torsion[1] == std::vector<BigInt>{2});
  CHECK(rp2.torsion[2].empty());
  CHECK(rp2.describe() == "b0=0 b1=0 b2=0 torsion1=2");
}

#ifndef CUBELINK_HOMOLOGY_HPP
#define CUBELINK_HOMOLOGY_HPP

#include <boost/multiprecision/cpp_int.hpp>
#include <string>
#include <vector>

#include "cubelink/simplicial.hpp"

namespace cubelink {

// Arbitrary-precision integers: Smith normal form is notorious for
// intermediate entry blow-up, so fixed-width arithmetic is not an option.
using BigInt = boost::multiprecision::cpp_int;

struct IntegerMatrix {
  int rows = 0;
  int cols = 0;
  std::vector<BigInt> a;  // row-major, rows*cols entries

  static IntegerMatrix zero(int rows, int cols) {
    return IntegerMatrix{rows, cols, std::vector<BigInt>(static_cast<size_t>(rows) * cols)};
  }
  BigInt& at(int r, int c) { return a[static_cast<size_t>(r) * cols + c]; }
  const BigInt& at(int r, int c) const { return a[static_cast<size_t>(r) * cols + c]; }
};

IntegerMatrix multiply(const IntegerMatrix& x, const IntegerMatrix& y);
bool is_zero(const IntegerMatrix& m);

/// Boundary operators of the chain complex over the stored simplex order:
/// entry (i, j) of result[k-1] is the signed incidence of the i-th
/// (k-1)-simplex in the j-th k-simplex, k = 1..dim.
std::vector<IntegerMatrix> boundary_matrices(const SimplicialComplex& sc);

/// Invariant factors d_1 | d_2 | ... (positive, ones included), computed by
/// integer row/column reduction with a minimal-pivot strategy.
std::vector<BigInt> smith_normal_form(IntegerMatrix m);

struct HomologyResult {
  std::vector<long> betti;                   // reduced Betti numbers, degrees 0..dim
  std::vector<std::vector<BigInt>> torsion;  // invariant factors > 1 per degree

  bool torsion_free() const;
  std::string describe() const;  // e.g. "b0=0 b1=45" or "b2=3 torsion2=2,2"
};

/// Reduced integral simplicial homology. Degree 0 uses the augmentation map,
/// so a connected complex reports betti[0] == 0.
HomologyResult reduced_homology(const SimplicialComplex& sc);

}  // namespace cubelink

#endif

#pragma once
// Structure constants lambda_ijk computed from a standard basis through the
// trace form, integrality / positivity verdicts, and quotients by closed
// subsets.

#include <array>
#include <vector>

#include "rba6/realize.hpp"

namespace rba6 {

// An element of R + R + M2(R): (degree part, phi part, matrix part).
// The involution fixes the scalar parts and transposes the matrix.
struct Element {
  Rational de, ph;
  std::array<std::array<Surd, 2>, 2> X;
};

Element basis_element(const StandardBasis& b, int i);
Element mul(const Element& x, const Element& y);

// <x, y> = tau(x y*) = de_x de_y + m_phi ph_x ph_y + m_chi tr(X Y^T)
// (y real, i.e. y* has the same scalar parts and transposed matrix).
Surd trace_form(const Element& x, const Element& y, const CharacterTable& t);

struct StructureTensor {
  std::array<std::array<std::array<Surd, 6>, 6>, 6> lam;
  bool integral;        // all lambda_ijk integers
  bool table_algebra;   // all lambda_ijk >= 0
  bool standard;        // lambda_{i i* 0} = delta_i
  bool std_ta_bounds;   // |phi_i| <= delta_i and |chi_i| <= 2 delta_i

  const Surd& at(int i, int j, int k) const { return lam[i][j][k]; }
};

// lambda_ijk = <b_i b_j, b_k> / (n delta_k).
StructureTensor lambda_tensor(const StandardBasis& b, const CharacterTable& t);

// Second, independent route: coefficients of an arbitrary element in the
// b-basis via the Q matrix, c_k = (1/(n delta_k)) sum_i m_i P_ik x^E_i
// where x^E = (de, ph, X00, X11, X01, X10).  Used to cross-check the trace
// form route.
std::array<Surd, 6> expand_in_basis(const Element& x, const TransitionMatrix& P,
                                    const CharacterTable& t);

// Quotient by a closed subset N (indices, containing 0): basis elements are
// the coset sums (1/o(N)) sum_{m in C} b_m.  Throws std::domain_error when
// N is not closed or the product coefficients are inconsistent with the
// coset partition.
struct QuotientTensor {
  std::vector<std::vector<int>> cosets;  // index sets, cosets[0] = N
  std::vector<Rational> degrees;         // o(C)/o(N)
  std::vector<std::vector<std::vector<Surd>>> lam;
  int rank() const { return (int)cosets.size(); }
};

QuotientTensor quotient_tensor(const StructureTensor& t,
                               const std::vector<int>& N,
                               const std::array<Rational, 6>& delta);

}  // namespace rba6

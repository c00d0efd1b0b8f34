#pragma once
// Constructive realization: build the 6x6 transition matrix P row by row
// from a character table, assemble the 2x2 matrices B_i, and verify the
// characterization conditions exactly.

#include <array>
#include <vector>

#include "rba6/spectrum.hpp"
#include "rba6/surd.hpp"

namespace rba6 {

// Free sign choices fixing the representative among the equivalent bases:
// e1 scales P4 - P5, e2 scales P4 + P5, e3 scales P2 - P3.
// All eight choices yield the same structure tensor up to swapping b4 and
// b5; the canonical choice is (+,+,+).
struct SignChoice {
  int e1 = 1, e2 = 1, e3 = 1;
  bool valid() const {
    return (e1 == 1 || e1 == -1) && (e2 == 1 || e2 == -1) && (e3 == 1 || e3 == -1);
  }
};

// Rows are indexed by the standard basis e0..e5 of R + R + M2(R) (e2..e5
// are the matrix entry positions r, u, s, t), columns by b0..b5:
//   row 0: (1, d1, d2, d3, d4, d4)
//   row 1: (1, p1, p2, p3, p4, p4)
//   row 2: (1, r1, r2, r3, r4, r4)
//   row 3: (1, u1, u2, u3, u4, u4)
//   row 4: (0, s1, s2, s3, s4, t4)
//   row 5: (0, s1, s2, s3, t4, s4)
// The symmetric index with phi_i/delta_i != phi_4/delta_4 is permuted into
// slot 3 before building (sym_index records which original index that was;
// the columns of P are in the permuted order).
struct TransitionMatrix {
  std::array<std::array<Surd, 6>, 6> P;
  int sym_index = 3;
};

// Weighted inner product (u, v)_w = sum u_i v_i / w_i.
// Throws std::domain_error when a weight is not positive.
Surd inner_product_delta(const std::array<Surd, 6>& u,
                         const std::array<Surd, 6>& v,
                         const std::array<Rational, 6>& weights);

// The character table with the symmetric-slot permutation applied (swap of
// indices sym and 3 in delta, phi, chi).
CharacterTable permuted_table(const CharacterTable& t, int sym);

// Executes the constructive existence proof:
//   P2 + P3 := chi row;  P4 - P5 := e1 sqrt(n d4 / m_chi) (0,...,0,1,-1);
//   P4 + P5 := e2 lambda w with w built from the ratio differences;
//   P2 - P3 := e3 times the normalized kernel of the rank-3 linear system.
// Every entry is a Surd with at most one radical term.  Throws
// std::domain_error on a degenerate ratio configuration.
TransitionMatrix build_transition(const CharacterTable& table,
                                  const SignChoice& signs = {});

// Six elements b_i = (delta_i, phi_i, B_i); B_i = [[r_i, s_i], [t_i, u_i]]
// read off column i of P.  B0 = I, B1..B3 symmetric with B1 diagonal,
// B5 = B4^T, tr B_i = chi_i.  delta/phi/chi are stored in the same
// (permuted) column order as the transition matrix.
struct StandardBasis {
  std::array<Rational, 6> delta, phi, chi;
  std::array<std::array<std::array<Surd, 2>, 2>, 6> B;
  SignChoice signs;
  int sym_index = 3;
};

StandardBasis assemble_basis(const TransitionMatrix& P,
                             const CharacterTable& table);

struct VerifyReport {
  std::vector<std::string> violations;
  bool ok() const { return violations.empty(); }
};

// Exact checks (Surd equality, zero tolerance): the fixed row structure,
// row orthogonality (P_i, P_j)_delta = (n/m_i) delta_ij, the Q-matrix
// relation P Q = n I with Q_ij = m_j P_ji / delta_i, the idempotent
// identities sum B_i = 0, sum (phi_i/delta_i) B_i = 0,
// sum (chi_i/delta_i) B_i = (n/m_chi) I, and tau(b_i) = 0 for i >= 1.
VerifyReport verify_transition(const TransitionMatrix& P,
                               const CharacterTable& table);

}  // namespace rba6

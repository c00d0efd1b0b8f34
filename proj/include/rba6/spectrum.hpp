#pragma once
// Parameter sets and character tables for noncommutative rank-6 RBAs with
// positive degree map, plus admissibility checks and multiplicities.

#include <array>
#include <optional>
#include <string>

#include "rba6/surd.hpp"

namespace rba6 {

// The seven defining values: degrees delta_1..delta_4 and phi_1..phi_4,
// with delta_0 = phi_0 = 1 and index 5 duplicating index 4 implicitly.
// Indices 1,2,3 are the symmetric basis elements, (4,5) the non-symmetric
// pair.  All values rational; for the integral census they are integers
// with |phi_i| <= delta_i.
struct ParameterSet {
  std::array<Rational, 4> delta;  // delta_1..delta_4
  std::array<Rational, 4> phi;    // phi_1..phi_4

  Rational d(int i) const {  // i in 0..5
    if (i == 0) return 1;
    return delta[i == 5 ? 3 : i - 1];
  }
  Rational p(int i) const {
    if (i == 0) return 1;
    return phi[i == 5 ? 3 : i - 1];
  }

  // Literal "d1,d2,d3,d4;p1,p2,p3,p4" with rational entries.
  static std::optional<ParameterSet> parse(const std::string& lit);
  std::string str() const;

  bool operator==(const ParameterSet& o) const = default;
  // Lexicographic on (delta, phi); used for deterministic census ordering.
  bool operator<(const ParameterSet& o) const;
};

// nullopt means admissible.  Rejections (as values, not errors):
//   - a nonpositive degree,
//   - the linear relation 1 + phi1 + phi2 + phi3 + 2 phi4 != 0,
//   - all three ratios phi_i/delta_i equal to phi_4/delta_4 (the algebra
//     would degenerate to a commutative one).
std::optional<std::string> validate(const ParameterSet& ps);

struct CharacterTable {
  ParameterSet params;
  Rational n;              // order, 1 + d1 + d2 + d3 + 2 d4
  Rational m_phi, m_chi;   // multiplicities (m_delta = 1)
  std::array<Rational, 6> chi;

  Rational mult(int i) const {  // multiplicity of row i of the transition matrix
    if (i == 0) return 1;
    if (i == 1) return m_phi;
    return m_chi;
  }
};

// Pre: validate(ps) has no rejection.  Computes
//   n = sum delta_i,  m_phi = n / sum(phi_i^2/delta_i),
//   m_chi = (n - 1 - m_phi)/2 > 0,  chi_i = (-delta_i - m_phi phi_i)/m_chi.
CharacterTable character_table(const ParameterSet& ps);

}  // namespace rba6

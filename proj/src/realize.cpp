#include "rba6/realize.hpp"

#include <stdexcept>

namespace rba6 {

Surd inner_product_delta(const std::array<Surd, 6>& u,
                         const std::array<Surd, 6>& v,
                         const std::array<Rational, 6>& weights) {
  Surd acc;
  for (int i = 0; i < 6; ++i) {
    if (weights[i] <= 0) throw std::domain_error("inner_product_delta: nonpositive weight");
    acc += (u[i] * v[i]).div(weights[i]);
  }
  return acc;
}

CharacterTable permuted_table(const CharacterTable& t, int sym) {
  CharacterTable r = t;
  if (sym != 3) {
    std::swap(r.params.delta[sym - 1], r.params.delta[2]);
    std::swap(r.params.phi[sym - 1], r.params.phi[2]);
    std::swap(r.chi[sym], r.chi[3]);
  }
  return r;
}

TransitionMatrix build_transition(const CharacterTable& table,
                                  const SignChoice& signs) {
  if (!signs.valid()) throw std::domain_error("build_transition: bad sign choice");
  // Move the largest symmetric index with phi_i/delta_i != phi_4/delta_4
  // into slot 3 (deterministic tie-break; at least one exists for any
  // admissible parameter set).
  int sel = -1;
  for (int i = 1; i <= 3; ++i)
    if (table.params.p(i) * table.params.d(4) != table.params.p(4) * table.params.d(i))
      sel = i;
  if (sel < 0) throw std::domain_error("build_transition: degenerate ratios");
  CharacterTable t = permuted_table(table, sel);

  std::array<Rational, 6> d, p;
  for (int i = 0; i < 6; ++i) {
    d[i] = t.params.d(i);
    p[i] = t.params.p(i);
  }
  const Rational& n = t.n;
  const Rational& mchi = t.m_chi;

  TransitionMatrix out;
  out.sym_index = sel;
  auto& P = out.P;
  for (int j = 0; j < 6; ++j) {
    P[0][j] = Surd(d[j]);
    P[1][j] = Surd(p[j]);
  }

  // P4 + P5 is spanned by w = (0, 0, 2(rc-rb), 2(ra-rc), rb-ra, rb-ra)
  // where ra, rb, rc are the phi/delta ratios at 2, 3, 4; the vector is
  // scaled so that its delta-norm-square is 2n/m_chi.
  Rational ra = p[2] / d[2], rb = p[3] / d[3], rc = p[4] / d[4];
  std::array<Rational, 6> w = {0, 0, 2 * (rc - rb), 2 * (ra - rc), rb - ra, rb - ra};
  Rational ww = 0;
  for (int j = 0; j < 6; ++j) ww += w[j] * w[j] / d[j];
  if (ww == 0) throw std::domain_error("build_transition: degenerate ratios");
  Surd lam = Surd::sqrt_of(2 * n / (mchi * ww)) * Rational(signs.e2);
  Surd dv = Surd::sqrt_of(n * d[4] / mchi) * Rational(signs.e1);

  // P2 - P3 = (0, x1, x2, x3, x4, x4) where x solves the rank-3 system
  // with rows (1,1,1,2), (phi_i/delta_i weights), (w_i/delta_i weights);
  // the kernel is computed by signed 3x3 minors and oriented so that its
  // first nonzero component is positive.
  Rational M[3][4] = {
      {1, 1, 1, 2},
      {p[1] / d[1], p[2] / d[2], p[3] / d[3], 2 * p[4] / d[4]},
      {0, w[2] / d[2], w[3] / d[3], 2 * w[4] / d[4]}};
  std::array<Rational, 4> v;
  for (int j = 0; j < 4; ++j) {
    Rational m[3][3];
    int cc = 0;
    for (int c = 0; c < 4; ++c) {
      if (c == j) continue;
      for (int r = 0; r < 3; ++r) m[r][cc] = M[r][c];
      ++cc;
    }
    Rational det = m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) -
                   m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
                   m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
    v[j] = (j & 1) ? Rational(-det) : det;
  }
  bool nz = false;
  for (int j = 0; j < 4 && !nz; ++j) {
    if (v[j] != 0) {
      if (v[j] < 0)
        for (auto& x : v) x = -x;
      nz = true;
    }
  }
  if (!nz) throw std::domain_error("build_transition: kernel of the linear system is not 1-dimensional");
  std::array<Rational, 6> v6 = {0, v[0], v[1], v[2], v[3], v[3]};
  Rational vv = 0;
  for (int j = 0; j < 6; ++j) vv += v6[j] * v6[j] / d[j];
  Surd sc = Surd::sqrt_of(2 * n / (mchi * vv)) * Rational(signs.e3);

  Rational half(1, 2);
  for (int j = 0; j < 6; ++j) {
    Surd chi_j(t.chi[j]);
    Surd d23 = sc * v6[j];
    Surd s45 = lam * w[j];
    Surd d45 = (j == 4) ? dv : (j == 5) ? -dv : Surd();
    P[2][j] = (chi_j + d23) * half;
    P[3][j] = (chi_j - d23) * half;
    P[4][j] = (s45 + d45) * half;
    P[5][j] = (s45 - d45) * half;
  }
  return out;
}

StandardBasis assemble_basis(const TransitionMatrix& P,
                             const CharacterTable& table) {
  CharacterTable t = permuted_table(table, P.sym_index);
  StandardBasis b;
  b.sym_index = P.sym_index;
  for (int i = 0; i < 6; ++i) {
    b.delta[i] = t.params.d(i);
    b.phi[i] = t.params.p(i);
    b.chi[i] = t.chi[i];
    b.B[i][0][0] = P.P[2][i];
    b.B[i][0][1] = P.P[4][i];
    b.B[i][1][0] = P.P[5][i];
    b.B[i][1][1] = P.P[3][i];
  }
  return b;
}

VerifyReport verify_transition(const TransitionMatrix& Pm,
                               const CharacterTable& table) {
  VerifyReport rep;
  auto fail = [&](const std::string& s) { rep.violations.push_back(s); };
  CharacterTable t = permuted_table(table, Pm.sym_index);
  const auto& P = Pm.P;
  std::array<Rational, 6> d, p;
  for (int i = 0; i < 6; ++i) {
    d[i] = t.params.d(i);
    p[i] = t.params.p(i);
  }

  // Fixed row structure.
  for (int j = 0; j < 6; ++j) {
    if (P[0][j] != Surd(d[j])) fail("row 0 is not the degree row");
    if (P[1][j] != Surd(p[j])) fail("row 1 is not the phi row");
  }
  for (int j = 1; j <= 3; ++j)
    if (P[4][j] != P[5][j]) fail("s/t rows disagree on a symmetric column");
  if (P[2][4] != P[2][5] || P[3][4] != P[3][5] || P[4][4] != P[5][5] ||
      P[4][5] != P[5][4])
    fail("columns 4 and 5 do not form a transpose pair");
  if (P[2][0] != Surd(1l) || P[3][0] != Surd(1l) || !P[4][0].is_zero() ||
      !P[5][0].is_zero())
    fail("column 0 is not the identity");

  // Row orthogonality (P_i, P_j)_delta = (n/m_i) delta_ij.
  for (int i = 0; i < 6; ++i)
    for (int j = i; j < 6; ++j) {
      Surd ip = inner_product_delta(P[i], P[j], d);
      Surd want = (i == j) ? Surd(t.n / t.mult(i)) : Surd();
      if (ip != want)
        fail("row orthogonality fails at (" + std::to_string(i) + "," +
             std::to_string(j) + ")");
    }

  // Q relation: Q_ij = m_j P_ji / delta_i must satisfy P Q = n I.
  std::array<std::array<Surd, 6>, 6> Q;
  for (int i = 0; i < 6; ++i)
    for (int j = 0; j < 6; ++j) Q[i][j] = (P[j][i] * t.mult(j)).div(d[i]);
  for (int i = 0; i < 6; ++i)
    for (int k = 0; k < 6; ++k) {
      Surd acc;
      for (int j = 0; j < 6; ++j) acc += P[i][j] * Q[j][k];
      Surd want = (i == k) ? Surd(t.n) : Surd();
      if (acc != want)
        fail("PQ = nI fails at (" + std::to_string(i) + "," + std::to_string(k) + ")");
    }

  // Idempotent identities on the matrix parts.
  for (int r = 2; r <= 5; ++r) {
    Surd s0, s1, s2;
    for (int j = 0; j < 6; ++j) {
      s0 += P[r][j];
      s1 += P[r][j] * (p[j] / d[j]);
      s2 += P[r][j] * (t.chi[j] / d[j]);
    }
    if (!s0.is_zero()) fail("sum B_i != 0");
    if (!s1.is_zero()) fail("sum (phi_i/delta_i) B_i != 0");
    Surd want = (r <= 3) ? Surd(t.n / t.m_chi) : Surd();
    if (s2 != want) fail("sum (chi_i/delta_i) B_i != (n/m_chi) I");
  }

  // tau(b_i) = 0 for i >= 1 (and tau(b_0) = n), with chi_i read as tr B_i.
  for (int i = 0; i < 6; ++i) {
    Surd tau = Surd(d[i] + t.m_phi * p[i]) + (P[2][i] + P[3][i]) * t.m_chi;
    Surd want = (i == 0) ? Surd(t.n) : Surd();
    if (tau != want) fail("tau(b_" + std::to_string(i) + ") wrong");
  }
  return rep;
}

}  // namespace rba6

#include "rba6/tensor.hpp"

#include <algorithm>
#include <stdexcept>

namespace rba6 {

Element basis_element(const StandardBasis& b, int i) {
  return Element{b.delta[i], b.phi[i], b.B[i]};
}

Element mul(const Element& x, const Element& y) {
  Element r;
  r.de = x.de * y.de;
  r.ph = x.ph * y.ph;
  for (int a = 0; a < 2; ++a)
    for (int c = 0; c < 2; ++c)
      r.X[a][c] = x.X[a][0] * y.X[0][c] + x.X[a][1] * y.X[1][c];
  return r;
}

Surd trace_form(const Element& x, const Element& y, const CharacterTable& t) {
  Surd tr;
  for (int a = 0; a < 2; ++a)
    for (int c = 0; c < 2; ++c) tr += x.X[a][c] * y.X[a][c];  // tr(X Y^T)
  return Surd(x.de * y.de) + Surd(t.m_phi * x.ph * y.ph) + tr * t.m_chi;
}

StructureTensor lambda_tensor(const StandardBasis& b, const CharacterTable& t) {
  StructureTensor out;
  out.integral = true;
  out.table_algebra = true;
  out.standard = true;
  std::array<Element, 6> el;
  for (int i = 0; i < 6; ++i) el[i] = basis_element(b, i);
  for (int i = 0; i < 6; ++i)
    for (int j = 0; j < 6; ++j) {
      Element prod = mul(el[i], el[j]);
      for (int k = 0; k < 6; ++k) {
        Surd lam = trace_form(prod, el[k], t).div(t.n * b.delta[k]);
        if (!lam.as_integer()) out.integral = false;
        if (lam.sign() < 0) out.table_algebra = false;
        out.lam[i][j][k] = std::move(lam);
      }
    }
  // lambda_{i i* 0} = delta_i (i* swaps 4 and 5).
  for (int i = 0; i < 6; ++i) {
    int istar = i == 4 ? 5 : i == 5 ? 4 : i;
    if (out.lam[i][istar][0] != Surd(b.delta[i])) out.standard = false;
  }
  out.std_ta_bounds = true;
  for (int i = 0; i < 6; ++i) {
    if (abs(b.phi[i]) > b.delta[i]) out.std_ta_bounds = false;
    if (abs(b.chi[i]) > 2 * b.delta[i]) out.std_ta_bounds = false;
  }
  return out;
}

std::array<Surd, 6> expand_in_basis(const Element& x, const TransitionMatrix& P,
                                    const CharacterTable& table) {
  CharacterTable t = permuted_table(table, P.sym_index);
  std::array<Surd, 6> xe = {Surd(x.de), Surd(x.ph), x.X[0][0],
                            x.X[1][1],  x.X[0][1],  x.X[1][0]};
  std::array<Surd, 6> c;
  for (int k = 0; k < 6; ++k) {
    Surd acc;
    for (int i = 0; i < 6; ++i) acc += P.P[i][k] * xe[i] * t.mult(i);
    c[k] = acc.div(t.n * t.params.d(k));
  }
  return c;
}

QuotientTensor quotient_tensor(const StructureTensor& t,
                               const std::vector<int>& N,
                               const std::array<Rational, 6>& delta) {
  // Closedness of N: supports of products of members stay inside.
  auto inN = [&](int i) { return std::find(N.begin(), N.end(), i) != N.end(); };
  if (!inN(0)) throw std::domain_error("quotient_tensor: N must contain 0");
  for (int a : N)
    for (int b : N)
      for (int k = 0; k < 6; ++k)
        if (!t.lam[a][b][k].is_zero() && !inN(k))
          throw std::domain_error("quotient_tensor: subset is not closed");

  // Coset of b_i: support of (sum_N) b_i (sum_N).
  auto coset_of = [&](int i) {
    std::array<Surd, 6> c;
    for (int a : N)
      for (int b : N)
        for (int k = 0; k < 6; ++k) {
          if (t.lam[i][b][k].is_zero()) continue;
          for (int m = 0; m < 6; ++m) c[m] += t.lam[a][k][m] * t.lam[i][b][k];
        }
    std::vector<int> idx;
    for (int m = 0; m < 6; ++m)
      if (!c[m].is_zero()) idx.push_back(m);
    return idx;
  };

  QuotientTensor q;
  std::array<int, 6> which;
  which.fill(-1);
  q.cosets.push_back(N);
  std::sort(q.cosets[0].begin(), q.cosets[0].end());
  for (int i : N) which[i] = 0;
  for (int i = 0; i < 6; ++i) {
    if (which[i] >= 0) continue;
    auto c = coset_of(i);
    for (int m : c) {
      if (which[m] >= 0) throw std::domain_error("quotient_tensor: cosets do not partition");
      which[m] = (int)q.cosets.size();
    }
    q.cosets.push_back(c);
  }

  Rational oN = 0;
  for (int i : q.cosets[0]) oN += delta[i];
  for (auto& C : q.cosets) {
    Rational oC = 0;
    for (int i : C) oC += delta[i];
    q.degrees.push_back(oC / oN);
  }

  int R = q.rank();
  q.lam.assign(R, std::vector<std::vector<Surd>>(R, std::vector<Surd>(R)));
  for (int ci = 0; ci < R; ++ci)
    for (int cj = 0; cj < R; ++cj) {
      std::array<Surd, 6> c;
      for (int a : q.cosets[ci])
        for (int b : q.cosets[cj])
          for (int m = 0; m < 6; ++m) c[m] += t.lam[a][b][m];
      for (int ck = 0; ck < R; ++ck) {
        // The coefficient must be constant across the coset.
        const Surd& first = c[q.cosets[ck][0]];
        for (int m : q.cosets[ck])
          if (c[m] != first)
            throw std::domain_error("quotient_tensor: inconsistent coset coefficients");
        q.lam[ci][cj][ck] = first.div(oN);
      }
    }
  return q;
}

}  // namespace rba6

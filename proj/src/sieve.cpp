#include "rba6/sieve.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <thread>
#include <utility>

namespace rba6 {

using i64 = long long;

ParameterSet canonicalize(const ParameterSet& ps) {
  ParameterSet r = ps;
  std::array<std::pair<Rational, Rational>, 3> pairs;
  for (int i = 0; i < 3; ++i) pairs[i] = {r.delta[i], r.phi[i]};
  std::sort(pairs.begin(), pairs.end(),
            [](const auto& a, const auto& b) { return b < a; });
  for (int i = 0; i < 3; ++i) {
    r.delta[i] = pairs[i].first;
    r.phi[i] = pairs[i].second;
  }
  return r;
}

bool chi_divisibility_filter(const long d[4], const long p[4]) {
  i64 d1 = d[0], d2 = d[1], d3 = d[2], d4 = d[3];
  i64 p1 = p[0], p2 = p[1], p3 = p[2], p4 = p[3];
  if (d1 <= 0 || d2 <= 0 || d3 <= 0 || d4 <= 0) return false;
  if (1 + p1 + p2 + p3 + 2 * p4 != 0) return false;
  i64 n = 1 + d1 + d2 + d3 + 2 * d4;
  i64 D = std::lcm(std::lcm(d1, d2), std::lcm(d3, d4));
  i64 nD = n * D;
  i64 Q = D + (D / d1) * p1 * p1 + (D / d2) * p2 * p2 + (D / d3) * p3 * p3 +
          2 * (D / d4) * p4 * p4;
  i64 R = (n - 1) * Q - nD;  // R > 0 iff m_chi > 0
  if (R <= 0) return false;
  // chi_i = -2 (delta_i Q + n D phi_i) / R must be an integer candidate.
  if ((2 * (d4 * Q + nD * p4)) % R) return false;
  if ((2 * (d1 * Q + nD * p1)) % R) return false;
  if ((2 * (d2 * Q + nD * p2)) % R) return false;
  if ((2 * (d3 * Q + nD * p3)) % R) return false;
  // All ratios equal to phi_4/delta_4 degenerates to a commutative algebra.
  if (p1 * d4 == p4 * d1 && p2 * d4 == p4 * d2 && p3 * d4 == p4 * d3)
    return false;
  return true;
}

bool numeric_lambda_check(const long dd[4], const long pp[4], bool& ta) {
  double d[6] = {1, (double)dd[0], (double)dd[1], (double)dd[2], (double)dd[3],
                 (double)dd[3]};
  double ph[6] = {1, (double)pp[0], (double)pp[1], (double)pp[2], (double)pp[3],
                  (double)pp[3]};
  double n = 0;
  for (double x : d) n += x;
  double q = 0;
  for (int i = 0; i < 6; ++i) q += ph[i] * ph[i] / d[i];
  double mphi = n / q, mchi = (n - 1 - mphi) / 2;
  ta = false;
  if (mchi <= 0) return false;
  int sel = -1;
  for (int i = 1; i <= 3; ++i)
    if (ph[i] * d[4] != ph[4] * d[i]) sel = i;
  if (sel < 0) return false;
  std::swap(d[3], d[sel]);
  std::swap(ph[3], ph[sel]);
  double P[6][6];
  for (int j = 0; j < 6; ++j) {
    P[0][j] = d[j];
    P[1][j] = ph[j];
  }
  double chi[6];
  for (int j = 0; j < 6; ++j)
    chi[j] = ((j == 0 ? n : 0.0) - mphi * ph[j] - d[j]) / mchi;
  double ra = ph[2] / d[2], rb = ph[3] / d[3], rc = ph[4] / d[4];
  double w[6] = {0, 0, 2 * (rc - rb), 2 * (ra - rc), rb - ra, rb - ra};
  double ww = 0;
  for (int i = 0; i < 6; ++i) ww += w[i] * w[i] / d[i];
  if (ww <= 0) return false;
  double lam = std::sqrt(2 * n / (mchi * ww));
  double dv = std::sqrt(n * d[4] / mchi);
  double M[3][4] = {{1, 1, 1, 2},
                    {ph[1] / d[1], ph[2] / d[2], ph[3] / d[3], 2 * ph[4] / d[4]},
                    {0, w[2] / d[2], w[3] / d[3], 2 * w[4] / d[4]}};
  double v[4];
  for (int j = 0; j < 4; ++j) {
    double m[3][3];
    int cc = 0;
    for (int c = 0; c < 4; ++c) {
      if (c == j) continue;
      for (int r = 0; r < 3; ++r) m[r][cc] = M[r][c];
      ++cc;
    }
    double det = m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) -
                 m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
                 m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
    v[j] = ((j & 1) ? -1 : 1) * det;
  }
  double mag = 0;
  for (double x : v) mag = std::max(mag, std::fabs(x));
  if (mag < 1e-9) return false;
  for (int j = 0; j < 4; ++j)
    if (std::fabs(v[j]) > 1e-9 * mag) {
      if (v[j] < 0)
        for (double& x : v) x = -x;
      break;
    }
  double v6[6] = {0, v[0], v[1], v[2], v[3], v[3]};
  double vv = 0;
  for (int i = 0; i < 6; ++i) vv += v6[i] * v6[i] / d[i];
  double sc = std::sqrt((2 * n / mchi) / vv);
  for (int j = 0; j < 6; ++j) {
    double d23 = sc * v6[j], s45 = lam * w[j];
    double d45 = (j == 4) ? dv : (j == 5) ? -dv : 0.0;
    P[2][j] = (chi[j] + d23) / 2;
    P[3][j] = (chi[j] - d23) / 2;
    P[4][j] = (s45 + d45) / 2;
    P[5][j] = (s45 - d45) / 2;
  }
  struct El {
    double de, phv, B[2][2];
  };
  El b[6];
  for (int i = 0; i < 6; ++i) {
    b[i].de = d[i];
    b[i].phv = ph[i];
    b[i].B[0][0] = P[2][i];
    b[i].B[1][1] = P[3][i];
    b[i].B[0][1] = P[4][i];
    b[i].B[1][0] = P[5][i];
  }
  ta = true;
  for (int i = 0; i < 6; ++i)
    for (int j = 0; j < 6; ++j) {
      El x;
      x.de = b[i].de * b[j].de;
      x.phv = b[i].phv * b[j].phv;
      for (int r = 0; r < 2; ++r)
        for (int c = 0; c < 2; ++c)
          x.B[r][c] = b[i].B[r][0] * b[j].B[0][c] + b[i].B[r][1] * b[j].B[1][c];
      for (int k = 0; k < 6; ++k) {
        double tr = 0;
        for (int r = 0; r < 2; ++r)
          for (int c = 0; c < 2; ++c) tr += x.B[r][c] * b[k].B[r][c];
        double l = (x.de * b[k].de + mphi * x.phv * b[k].phv + mchi * tr) /
                   (n * d[k]);
        if (std::fabs(l - std::round(l)) > 1e-6) return false;
        if (l < -0.5) ta = false;
      }
    }
  return true;
}

PruneVerdict prune(const SearchPrefix& pre) {
  if (pre.delta.size() > 4 || pre.phi.size() > 4)
    return PruneVerdict::Cut;
  long sum = 1;
  for (size_t i = 0; i < 4; ++i) {
    long di = i < pre.delta.size() ? pre.delta[i] : 1;  // 1 is the minimum
    if (i < pre.delta.size() && di <= 0) return PruneVerdict::Cut;
    sum += (i == 3) ? 2 * di : di;
  }
  if (sum > pre.max_order) return PruneVerdict::Cut;
  if (pre.delta.size() < 4) return PruneVerdict::Keep;
  for (size_t i = 0; i < pre.phi.size(); ++i)
    if (std::labs(pre.phi[i]) > pre.delta[i]) return PruneVerdict::Cut;
  if (pre.phi.size() == 3) {
    // phi_4 is forced by the linear relation; it must be a bounded integer.
    long s = 1 + pre.phi[0] + pre.phi[1] + pre.phi[2];
    if (s & 1) return PruneVerdict::Cut;
    if (std::labs(s / 2) > pre.delta[3]) return PruneVerdict::Cut;
  }
  if (pre.phi.size() == 4) {
    long d[4], p[4];
    for (int i = 0; i < 4; ++i) {
      d[i] = pre.delta[i];
      p[i] = pre.phi[i];
    }
    if (!chi_divisibility_filter(d, p)) return PruneVerdict::Cut;
  }
  return PruneVerdict::Keep;
}

AlgebraRecord realize_record(const ParameterSet& ps) {
  if (auto err = validate(ps))
    throw std::domain_error("realize_record: " + *err);
  AlgebraRecord rec;
  rec.params = ps;
  rec.table = character_table(ps);
  if (rec.table.m_chi <= 0)
    throw std::domain_error("realize_record: m_chi <= 0");
  TransitionMatrix P = build_transition(rec.table);
  VerifyReport vr = verify_transition(P, rec.table);
  if (!vr.ok())
    throw std::domain_error("realize_record: verification failed: " +
                            vr.violations.front());
  rec.basis = assemble_basis(P, rec.table);
  rec.tensor = lambda_tensor(rec.basis, rec.table);
  return rec;
}

CensusRecord classify_record(const AlgebraRecord& rec) {
  CensusRecord r;
  r.params = rec.params;
  r.table = rec.table;
  r.integral = rec.tensor.integral;
  r.table_algebra = rec.tensor.table_algebra;
  r.mult_integral =
      rec.table.m_phi.get_den() == 1 && rec.table.m_chi.get_den() == 1;
  r.std_bounds = rec.tensor.std_ta_bounds;
  r.primitive = true;
  for (auto& cs : closed_subsets(rec.tensor, rec.basis.delta))
    if (cs.idx.size() > 1 && cs.idx.size() < 6) r.primitive = false;
  r.evenness_pass = evenness_filter(rec.tensor, rec.basis.delta).pass;
  r.family = match_family(rec);
  return r;
}

namespace {

// All records for one fixed d4 slice.  The degree loops go d1 >= d2 >= d3 and
// the phi loops are tie-broken (p2 <= p1 when d2 = d1, likewise p3), so each
// equivalence class is visited exactly once, already in canonical form.
void slice(long N, i64 d4, bool require_ta, std::vector<CensusRecord>& out) {
  for (i64 d1 = 1; 1 + d1 + 2 + 2 * d4 <= N; ++d1)
    for (i64 d2 = 1; d2 <= d1 && 1 + d1 + d2 + 1 + 2 * d4 <= N; ++d2)
      for (i64 d3 = 1; d3 <= d2 && 1 + d1 + d2 + d3 + 2 * d4 <= N; ++d3) {
        i64 n = 1 + d1 + d2 + d3 + 2 * d4;
        i64 D = std::lcm(std::lcm(d1, d2), std::lcm(d3, d4));
        i64 c1 = D / d1, c2 = D / d2, c3 = D / d3, c4 = 2 * (D / d4);
        i64 nD = n * D;
        for (i64 p1 = -d1; p1 <= d1; ++p1) {
          i64 Q1 = D + c1 * p1 * p1;
          i64 p2max = (d2 == d1) ? p1 : d2;
          for (i64 p2 = -d2; p2 <= p2max; ++p2) {
            i64 Q12 = Q1 + c2 * p2 * p2;
            i64 S0 = 1 + p1 + p2;
            i64 p3max = (d3 == d2) ? p2 : d3;
            i64 p3 = -d3;
            if ((p3 + S0) & 1) ++p3;  // phi_4 = -(1+p1+p2+p3)/2 integral
            for (; p3 <= p3max; p3 += 2) {
              i64 u = (S0 + p3) >> 1;
              if (u > d4 || u < -d4) continue;
              i64 Q = Q12 + c3 * p3 * p3 + c4 * u * u;
              i64 R = (n - 1) * Q - nD;
              if (R <= 0) continue;
              if ((2 * (d4 * Q - nD * u)) % R) continue;
              if ((2 * (d1 * Q + nD * p1)) % R) continue;
              if ((2 * (d2 * Q + nD * p2)) % R) continue;
              if ((2 * (d3 * Q + nD * p3)) % R) continue;
              if (p1 * d4 == -u * d1 && p2 * d4 == -u * d2 && p3 * d4 == -u * d3)
                continue;
              long dd[4] = {(long)d1, (long)d2, (long)d3, (long)d4};
              long pp[4] = {(long)p1, (long)p2, (long)p3, (long)-u};
              bool ta;
              if (!numeric_lambda_check(dd, pp, ta)) continue;
              ParameterSet ps;
              for (int i = 0; i < 4; ++i) {
                ps.delta[i] = Rational(dd[i]);
                ps.phi[i] = Rational(pp[i]);
              }
              AlgebraRecord rec = realize_record(canonicalize(ps));
              if (!rec.tensor.integral) continue;  // numeric near-miss
              if (require_ta && !rec.tensor.table_algebra) continue;
              out.push_back(classify_record(rec));
            }
          }
        }
      }
}

}  // namespace

std::vector<CensusRecord> enumerate(long max_order, bool require_ta, int jobs) {
  if (max_order < 6) return {};
  if (jobs < 1) jobs = 1;
  i64 d4max = (max_order - 4) / 2;
  if (d4max < 1) return {};
  std::vector<std::vector<CensusRecord>> slices((size_t)d4max);
  if (jobs == 1) {
    for (i64 d4 = 1; d4 <= d4max; ++d4)
      slice(max_order, d4, require_ta, slices[(size_t)(d4 - 1)]);
  } else {
    std::atomic<i64> next{1};
    auto worker = [&] {
      for (;;) {
        i64 d4 = next.fetch_add(1);
        if (d4 > d4max) return;
        slice(max_order, d4, require_ta, slices[(size_t)(d4 - 1)]);
      }
    };
    std::vector<std::thread> pool;
    for (int t = 0; t < jobs; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }
  std::vector<CensusRecord> out;
  for (auto& s : slices)
    for (auto& r : s) out.push_back(std::move(r));
  std::sort(out.begin(), out.end(), [](const CensusRecord& a, const CensusRecord& b) {
    if (a.table.n != b.table.n) return a.table.n < b.table.n;
    return a.params < b.params;
  });
  return out;
}

}  // namespace rba6

#include "rba6/taxonomy.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace rba6 {

namespace {

bool contains(const std::vector<int>& v, int x) {
  return std::find(v.begin(), v.end(), x) != v.end();
}

std::optional<Integer> as_int(const Rational& q) {
  if (q.get_den() != 1) return std::nullopt;
  return q.get_num();
}

std::string rat_str(const Rational& q) { return q.get_str(); }

}  // namespace

std::vector<ClosedSubset> closed_subsets(const StructureTensor& t,
                                         const std::array<Rational, 6>& delta) {
  std::vector<ClosedSubset> out;
  for (unsigned mask = 0; mask < 32; ++mask) {
    std::vector<int> idx = {0};
    for (int i = 1; i < 6; ++i)
      if (mask & (1u << (i - 1))) idx.push_back(i);
    bool closed = true;
    for (int i : idx)
      for (int j : idx)
        for (int k = 0; k < 6 && closed; ++k)
          if (!t.lam[i][j][k].is_zero() && !contains(idx, k)) closed = false;
    if (!closed) continue;
    ClosedSubset cs;
    cs.idx = idx;
    cs.order = 0;
    for (int i : idx) cs.order += delta[i];
    cs.star_invariant = contains(idx, 4) == contains(idx, 5);
    cs.normal = true;
    for (int i = 0; i < 6 && cs.normal; ++i)
      for (int m = 0; m < 6 && cs.normal; ++m) {
        bool left = false, right = false;
        for (int a : idx) {
          if (!t.lam[i][a][m].is_zero()) left = true;
          if (!t.lam[a][i][m].is_zero()) right = true;
        }
        if (left != right) cs.normal = false;
      }
    out.push_back(std::move(cs));
  }
  return out;
}

std::vector<int> kernel_phi(const CharacterTable& t) {
  std::vector<int> idx = {0};
  for (int i = 1; i < 6; ++i)
    if (t.params.p(i) == t.params.d(i)) idx.push_back(i);
  return idx;
}

bool is_closed(const std::vector<int>& idx, const StructureTensor& t) {
  for (int i : idx)
    for (int j : idx)
      for (int k = 0; k < 6; ++k)
        if (!t.lam[i][j][k].is_zero() && !contains(idx, k)) return false;
  return true;
}

std::optional<CenterPartition> center_fusion(const ParameterSet& ps) {
  std::vector<Rational> distinct;
  auto ratio = [&](int i) { return Rational(ps.p(i) / ps.d(i)); };
  for (int i = 0; i < 6; ++i) {
    Rational r = ratio(i);
    if (std::find(distinct.begin(), distinct.end(), r) == distinct.end())
      distinct.push_back(r);
  }
  if (distinct.size() > 3) return std::nullopt;
  Rational alpha;
  bool found = false;
  for (int i = 1; i < 6 && !found; ++i)
    if (ratio(i) != 1) {
      alpha = ratio(i);
      found = true;
    }
  if (!found) return std::nullopt;  // degenerate, rejected upstream
  CenterPartition part;
  for (int i = 1; i < 6; ++i)
    (ratio(i) == alpha ? part.I : part.J).push_back(i);
  return part;
}

FusionProfile rank4_fusion_profile(const ParameterSet& ps,
                                   const CenterPartition& part,
                                   const std::vector<int>& K) {
  if (K.empty() || K.size() >= part.I.size())
    throw std::domain_error("rank4_fusion_profile: K must be a nonempty proper subset of I");
  for (int i : K)
    if (!contains(part.I, i))
      throw std::domain_error("rank4_fusion_profile: K not contained in I");
  if (contains(K, 4) != contains(K, 5))
    throw std::domain_error("rank4_fusion_profile: K not *-invariant");
  CharacterTable t = character_table(ps);
  FusionProfile f;
  Rational oK = 0, oIK = 0, oJ = 0;
  for (int i : part.I) (contains(K, i) ? oK : oIK) += ps.d(i);
  for (int i : part.J) oJ += ps.d(i);
  f.degrees = {1, oK, oIK, oJ};
  f.mults = {1, t.m_phi, t.m_chi, t.m_chi};
  return f;
}

EvennessResult evenness_filter(const StructureTensor& t,
                               const std::array<Rational, 6>& delta) {
  EvennessResult r;
  r.pass = true;
  for (int j = 1; j <= 3; ++j)
    for (int i = 1; i < 6; ++i) {
      if (i == j || delta[i] <= 1) continue;
      auto lam = t.lam[i][j][i].as_integer();
      auto di = as_int(delta[i]);
      if (!lam || !di) continue;  // filter applies to integral tensors only
      if (mpz_odd_p(lam->get_mpz_t()) && mpz_odd_p(di->get_mpz_t())) {
        if (r.pass) {
          r.pass = false;
          r.i = i;
          r.j = j;
          r.lambda = *lam;
        }
        r.witnesses.push_back({i, j, *lam});
      }
    }
  return r;
}

Mphi1Report classify_mphi1(const ParameterSet& ps, const CharacterTable& t,
                           const StructureTensor& tensor) {
  if (t.m_phi != 1) throw std::domain_error("classify_mphi1: m_phi != 1");
  (void)tensor;
  std::vector<int> ker = kernel_phi(t);
  if (ker.size() != 3 && ker.size() != 5)
    throw std::logic_error("classify_mphi1: |ker phi| must be 3 or 5");
  Mphi1Report rep;
  if (ker.size() == 5) {
    rep.kind = Mphi1Kind::WreathRank5;
    // Wreath of a rank-2 group over a noncommutative rank-5 RBA; rank-5
    // noncommutative RBAs are never integral, so neither is this family.
    rep.integral_predicted = false;
    return rep;
  }
  if (contains(ker, 4)) {
    rep.kind = Mphi1Kind::NonRealBipartite;
    rep.integral_predicted = false;
    std::array<Integer, 3> D;
    for (int s = 0; s < 3; ++s) {
      auto v = as_int(ps.delta[s]);
      if (!v) return rep;
      D[s] = *v;
    }
    auto d4 = as_int(ps.delta[3]);
    if (!d4) return rep;
    // Try each choice of which symmetric degree plays alpha^2 k1 k2,
    // preferring slot 3 so the documented example yields its witness.
    int tries[3][3] = {{0, 1, 2}, {0, 2, 1}, {1, 2, 0}};
    for (auto& tr : tries) {
      Integer a = D[tr[0]], b = D[tr[1]], c = D[tr[2]];
      Integer d;
      mpz_gcd(d.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
      Integer k1 = a / d, k2 = b / d;
      if (c % (k1 * k2) != 0) continue;
      Integer s = c / (k1 * k2);
      if (!mpz_perfect_square_p(s.get_mpz_t())) continue;
      Integer alpha;
      mpz_sqrt(alpha.get_mpz_t(), s.get_mpz_t());
      if (mpz_even_p(alpha.get_mpz_t())) continue;
      if (d % alpha != 0) continue;
      Integer gamma = d / alpha;
      if (mpz_even_p(gamma.get_mpz_t()) || mpz_even_p(k1.get_mpz_t()) ||
          mpz_even_p(k2.get_mpz_t()))
        continue;
      if (alpha * alpha >= 2 * gamma) continue;
      Integer g12;
      mpz_gcd(g12.get_mpz_t(), k1.get_mpz_t(), k2.get_mpz_t());
      if (g12 != 1) continue;
      Integer gk12 = gamma * k1 * k2;
      if (gk12 % *d4 != 0) continue;
      if ((gamma * k1 * (alpha * gamma * k1 - 1)) % *d4 != 0) continue;
      if ((gamma * k2 * (alpha * gamma * k2 - 1)) % *d4 != 0) continue;
      if ((k1 * k2 * (alpha * alpha * k1 * k2 - 1)) % *d4 != 0) continue;
      rep.integral_predicted = true;
      rep.witness = BipartiteWitness{alpha, gamma, k1, k2, gk12 / *d4};
      return rep;
    }
    return rep;
  }
  rep.kind = Mphi1Kind::RealBipartite;
  // Kernel is {0} plus two symmetric indices; the remaining symmetric index
  // is the thin candidate.  Integral iff delta_thin = 1, the two kernel
  // degrees and delta_4 agree, are even, and 8 | n - 2.
  int thin = -1;
  std::vector<Rational> kd;
  for (int s = 1; s <= 3; ++s)
    if (contains(ker, s)) kd.push_back(ps.d(s)); else thin = s;
  rep.integral_predicted = false;
  if (thin >= 0 && kd.size() == 2 && ps.d(thin) == 1 && kd[0] == kd[1] &&
      kd[0] == ps.delta[3]) {
    auto k = as_int(kd[0]);
    auto n = as_int(t.n);
    if (k && n && mpz_even_p(k->get_mpz_t()) && (*n - 2) % 8 == 0)
      rep.integral_predicted = true;
  }
  return rep;
}

std::optional<ParameterSet> lemma_2ks_generator(long k1, long k2) {
  if (k1 <= 0 || k2 <= 0 || k1 % 2 == 0 || k2 % 2 == 0) return std::nullopt;
  if (std::gcd(k1, k2) != 1) return std::nullopt;
  long s = k1 + k2;
  if ((k1 * k2 + 1) % s != 0) return std::nullopt;
  long gamma = (k1 * k2 + 1) / s;
  if (gamma % 2 == 0) return std::nullopt;
  if ((k1 * k1 - 1) % s != 0 || (k2 * k2 - 1) % s != 0) return std::nullopt;
  ParameterSet ps;
  ps.delta = {Rational(gamma * k1), Rational(gamma * k2), Rational(k1 * k2),
              Rational(k1 * k2)};
  ps.phi = {Rational(-gamma * k1), Rational(-gamma * k2), Rational(-k1 * k2),
            Rational(k1 * k2)};
  return ps;
}

FamilyLabel match_family(const AlgebraRecord& rec) {
  const ParameterSet& ps = rec.params;
  const CharacterTable& t = rec.table;
  std::array<Integer, 5> d{}, p{};
  bool ints = true;
  for (int i = 1; i <= 4; ++i) {
    auto di = as_int(ps.d(i)), pi = as_int(ps.p(i));
    if (!di || !pi) { ints = false; break; }
    d[i] = *di;
    p[i] = *pi;
  }
  auto n_i = as_int(t.n);

  auto sym_pairs = [&] {
    std::vector<std::pair<Integer, Integer>> v = {
        {d[1], p[1]}, {d[2], p[2]}, {d[3], p[3]}};
    std::sort(v.begin(), v.end());
    return v;
  };

  if (ints && n_i) {
    const Integer& n = *n_i;
    // Complete p-array (Mersenne-type): delta = (p+1, (p^2-1)/2, (p^2-1)/2,
    // (p-1)/2), phi = (-1, -(p-1)/2, -(p-1)/2, (p-1)/2), order p^2 + 2p.
    {
      Integer root;
      mpz_sqrt(root.get_mpz_t(), Integer(n + 1).get_mpz_t());
      Integer q = root - 1;  // candidate p
      if ((q + 1) * (q + 1) == n + 1 && q >= 3 && q % 4 == 3) {
        Integer h = (q - 1) / 2;
        std::vector<std::pair<Integer, Integer>> want = {
            {q + 1, -1}, {(q * q - 1) / 2, -h}, {(q * q - 1) / 2, -h}};
        std::sort(want.begin(), want.end());
        if (sym_pairs() == want && d[4] == h && p[4] == h) {
          std::ostringstream os;
          os << q.get_str() << "-array (T" << q.get_str() << ":K"
             << Integer(q + 2).get_str() << ")";
          return {"p-array", os.str()};
        }
      }
    }
    // PG(1, q) / Coxeter scheme: delta = (q, q, q^3, q^2), phi = (-1,-1,-1,1).
    for (Integer q = 2; q * q * q + 2 * q * q + 2 * q + 1 <= n; ++q) {
      if (q * q * q + 2 * q * q + 2 * q + 1 != n) continue;
      std::vector<std::pair<Integer, Integer>> want = {
          {q, -1}, {q, -1}, {q * q * q, -1}};
      std::sort(want.begin(), want.end());
      if (sym_pairs() == want && d[4] == q * q && p[4] == 1)
        return {"PG", "PG(1," + q.get_str() + ") = CS(b_i,b_j)"};
    }
    // C3 : K_{n/3}: delta = (l, l, l, 1), phi = (-1, -1, -1, 1), l = 1 mod 3.
    if (d[1] == d[2] && d[2] == d[3] && d[4] == 1 && p[1] == -1 && p[2] == -1 &&
        p[3] == -1 && p[4] == 1 && d[1] % 3 == 1) {
      std::string det = "C3:K" + Integer(n / 3).get_str();
      if (d[1] == 1) det += " (the group S3)";
      return {"C3:K", det};
    }
  }

  if (t.m_phi == 1) {
    Mphi1Report rep = classify_mphi1(ps, t, rec.tensor);
    auto half = as_int(t.n / 2);
    std::string m = half ? half->get_str() : rat_str(t.n / 2);
    switch (rep.kind) {
      case Mphi1Kind::RealBipartite:
        return {"UxC2", "U" + m + "xC2"};
      case Mphi1Kind::NonRealBipartite: {
        bool thin1 = false;
        for (int s = 1; s <= 3; ++s)
          if (ps.d(s) == 1) thin1 = true;
        if (thin1) return {"TxC2", "T" + m + "xC2"};
        return {"T:C2", "T" + m + ":C2"};
      }
      case Mphi1Kind::WreathRank5:
        return {"other", "rank-2 wreath over rank-5 (never integral)"};
    }
  }

  // E o K circle product: a single symmetric phi_j = -1, all other phi zero.
  {
    int j = -1;
    bool ok = ps.p(4) == 0;
    int negs = 0;
    for (int s = 1; s <= 3 && ok; ++s) {
      if (ps.p(s) == -1) { j = s; ++negs; }
      else if (ps.p(s) != 0) ok = false;
    }
    if (ok && negs == 1) {
      Rational m = 1 + ps.d(j);
      return {"EoK", "E" + rat_str(t.n / m) + "oK" + rat_str(m)};
    }
  }

  // Closed-subset-derived extension labels.
  auto css = closed_subsets(rec.tensor, rec.basis.delta);
  std::vector<ClosedSubset> nontrivial;
  for (auto& cs : css)
    if (cs.idx.size() > 1 && cs.idx.size() < 6) nontrivial.push_back(cs);
  if (nontrivial.empty()) return {"primitive", "primitive"};

  auto quot = [&](const Rational& m) {
    Rational tq = t.n / m;
    bool integral = tq.get_den() == 1;
    return std::pair<bool, std::string>(integral, rat_str(tq));
  };
  for (auto& cs : nontrivial) {
    if (cs.idx.size() == 3 && !contains(cs.idx, 4)) {
      // Symmetric normal closed subset of rank 3: U_m extension by rank 2.
      auto [ik, tq] = quot(cs.order);
      bool even_rep = false;
      auto v = as_int(ps.d(cs.idx[1]));
      if (v && mpz_even_p(v->get_mpz_t())) even_rep = true;
      std::string sep = !ik ? ":D" : (even_rep ? ":K" : "xK");
      return {"U:K-or-D", "U" + rat_str(cs.order) + sep + tq};
    }
  }
  for (auto& cs : nontrivial) {
    if (cs.idx.size() == 3 && contains(cs.idx, 4) && contains(cs.idx, 5)) {
      // Anti-symmetric closed subset {0,4,5}: T_m extension by rank 2.
      auto [ik, tq] = quot(cs.order);
      return {"T:K-or-D", "T" + rat_str(cs.order) + (ik ? ":K" : ":D") + tq};
    }
  }
  for (auto& cs : nontrivial) {
    if (cs.idx.size() == 2) {
      auto [ik, tq] = quot(cs.order);
      return {"K:T", "K" + rat_str(cs.order) + ":T" + tq};
    }
  }
  return {"other", "imprimitive"};
}

std::vector<LiteratureNote> literature_notes(const ParameterSet& ps) {
  // Static annotations from the strongly-regular-graph literature, keyed by
  // fusion profiles; cited facts only, nothing here is computed.  The same
  // table ships as data/literature.json.
  static const struct {
    const char* profile;
    const char* fact;
  } kTable[] = {
      {"center degrees 1,20,60",
       "Brouwer's SRG tables: a unique strongly regular graph with these "
       "parameters exists [literature]"},
      {"center degrees 1,38,57",
       "Brouwer's SRG tables: no strongly regular graph with these "
       "parameters exists [literature]"},
      {"center degrees 1,34,85",
       "Brouwer's SRG tables: existence of a strongly regular graph with "
       "these parameters is open [literature]"},
      {"rank-4 fusion degrees 1,20,20,40 multiplicities 1,20,30,30",
       "van Dam: no association scheme with this fusion profile exists "
       "[literature]"},
  };
  std::vector<LiteratureNote> out;
  auto part = center_fusion(ps);
  if (!part) return out;
  Rational oI = 0, oJ = 0;
  for (int i : part->I) oI += ps.d(i);
  for (int i : part->J) oJ += ps.d(i);
  std::vector<Rational> degs = {oI, oJ};
  std::sort(degs.begin(), degs.end());
  std::string center =
      "center degrees 1," + degs[0].get_str() + "," + degs[1].get_str();
  std::vector<std::string> keys = {center};
  // Rank-4 profiles over all admissible K.
  for (unsigned mask = 1; mask < (1u << part->I.size()); ++mask) {
    std::vector<int> K;
    for (size_t s = 0; s < part->I.size(); ++s)
      if (mask & (1u << s)) K.push_back(part->I[s]);
    if (K.size() == part->I.size()) continue;
    if (contains(K, 4) != contains(K, 5)) continue;
    FusionProfile f = rank4_fusion_profile(ps, *part, K);
    std::array<Rational, 4> dg = f.degrees;
    std::sort(dg.begin() + 1, dg.end());
    std::array<Rational, 4> mu = f.mults;
    std::sort(mu.begin() + 1, mu.end());
    std::string key = "rank-4 fusion degrees " + dg[0].get_str();
    for (int i = 1; i < 4; ++i) key += "," + dg[i].get_str();
    key += " multiplicities " + mu[0].get_str();
    for (int i = 1; i < 4; ++i) key += "," + mu[i].get_str();
    keys.push_back(key);
  }
  // Distinct K choices can fuse to the same profile; report each note once.
  std::sort(keys.begin(), keys.end());
  keys.erase(std::unique(keys.begin(), keys.end()), keys.end());
  for (auto& k : keys)
    for (auto& e : kTable)
      if (k == e.profile) out.push_back({k, e.fact});
  return out;
}

}  // namespace rba6

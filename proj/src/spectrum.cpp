#include "rba6/spectrum.hpp"

#include <cassert>
#include <cctype>
#include <sstream>
#include <vector>

namespace rba6 {

std::optional<ParameterSet> ParameterSet::parse(const std::string& lit) {
  auto semi = lit.find(';');
  if (semi == std::string::npos) return std::nullopt;
  auto split = [](const std::string& s) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : s) {
      if (c == ',') {
        out.push_back(cur);
        cur.clear();
      } else if (!isspace((unsigned char)c)) {
        cur.push_back(c);
      }
    }
    out.push_back(cur);
    return out;
  };
  auto ds = split(lit.substr(0, semi)), ps = split(lit.substr(semi + 1));
  if (ds.size() != 4 || ps.size() != 4) return std::nullopt;
  ParameterSet r;
  for (int i = 0; i < 4; ++i) {
    Rational d, p;
    if (ds[i].empty() || ps[i].empty()) return std::nullopt;
    if (d.set_str(ds[i], 10) != 0 || p.set_str(ps[i], 10) != 0)
      return std::nullopt;
    d.canonicalize();
    p.canonicalize();
    r.delta[i] = d;
    r.phi[i] = p;
  }
  return r;
}

std::string ParameterSet::str() const {
  std::ostringstream os;
  for (int i = 0; i < 4; ++i) os << (i ? "," : "") << delta[i].get_str();
  os << ";";
  for (int i = 0; i < 4; ++i) os << (i ? "," : "") << phi[i].get_str();
  return os.str();
}

bool ParameterSet::operator<(const ParameterSet& o) const {
  for (int i = 0; i < 4; ++i)
    if (delta[i] != o.delta[i]) return delta[i] < o.delta[i];
  for (int i = 0; i < 4; ++i)
    if (phi[i] != o.phi[i]) return phi[i] < o.phi[i];
  return false;
}

std::optional<std::string> validate(const ParameterSet& ps) {
  for (int i = 0; i < 4; ++i)
    if (ps.delta[i] <= 0)
      return "degree delta_" + std::to_string(i + 1) + " must be positive";
  Rational s = 1 + ps.phi[0] + ps.phi[1] + ps.phi[2] + 2 * ps.phi[3];
  if (s != 0)
    return "linear relation violated: 1 + phi1 + phi2 + phi3 + 2*phi4 = " +
           s.get_str();
  bool distinct = false;
  for (int i = 0; i < 3; ++i)
    if (ps.phi[i] * ps.delta[3] != ps.phi[3] * ps.delta[i]) distinct = true;
  if (!distinct)
    return "commutative degeneration: phi_i/delta_i = phi_4/delta_4 for all i";
  return std::nullopt;
}

CharacterTable character_table(const ParameterSet& ps) {
  assert(!validate(ps));
  CharacterTable t;
  t.params = ps;
  t.n = 0;
  Rational q = 0;
  for (int i = 0; i < 6; ++i) {
    t.n += ps.d(i);
    q += ps.p(i) * ps.p(i) / ps.d(i);
  }
  t.m_phi = t.n / q;
  t.m_chi = (t.n - 1 - t.m_phi) / 2;
  assert(t.m_chi > 0);
  t.chi[0] = 2;
  for (int i = 1; i < 6; ++i) t.chi[i] = (-ps.d(i) - t.m_phi * ps.p(i)) / t.m_chi;
  return t;
}

}  // namespace rba6

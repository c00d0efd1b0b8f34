// Command-line front door: check, construct, lambda, enumerate, classify.
// Exact strings by default; --approx adds decimal renderings.

#include <cstdlib>
#include <iostream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "rba6/sieve.hpp"

using nlohmann::json;
using namespace rba6;

namespace {

json surd_json(const Surd& s, bool approx) {
  json j;
  j["str"] = s.str();
  json terms = json::array();
  for (auto& [coeff, rad] : s.term_list()) {
    json t = json::array();
    t.push_back(coeff);
    if (rad.fits_slong_p())
      t.push_back(rad.get_si());
    else
      t.push_back(rad.get_str());
    terms.push_back(t);
  }
  j["terms"] = terms;
  if (approx) j["approx"] = s.approx();
  return j;
}

json rat_json(const Rational& q, bool approx) {
  if (!approx) return json(q.get_str());
  json j;
  j["str"] = q.get_str();
  j["approx"] = q.get_d();
  return j;
}

json params_json(const ParameterSet& ps) {
  json d = json::array(), p = json::array();
  for (int i = 0; i < 4; ++i) {
    d.push_back(ps.delta[i].get_str());
    p.push_back(ps.phi[i].get_str());
  }
  return json{{"delta", d}, {"phi", p}};
}

int parse_params(const std::string& lit, ParameterSet& ps) {
  auto r = ParameterSet::parse(lit);
  if (!r) {
    std::cerr << "error: malformed parameter literal \"" << lit
              << "\" (expected d1,d2,d3,d4;p1,p2,p3,p4)\n";
    return 2;
  }
  ps = *r;
  return 0;
}

int parse_signs(const std::string& lit, SignChoice& sc) {
  int vals[3];
  size_t pos = 0;
  for (int i = 0; i < 3; ++i) {
    if (pos >= lit.size()) return 2;
    if (lit[pos] == '+')
      vals[i] = 1;
    else if (lit[pos] == '-')
      vals[i] = -1;
    else {
      std::cerr << "error: bad sign at position " << pos << " in \"" << lit
                << "\" (expected e.g. +,+,-)\n";
      return 2;
    }
    ++pos;
    if (i < 2) {
      if (pos >= lit.size() || lit[pos] != ',') {
        std::cerr << "error: expected ',' at position " << pos << " in \""
                  << lit << "\"\n";
        return 2;
      }
      ++pos;
    }
  }
  if (pos != lit.size()) {
    std::cerr << "error: trailing characters in sign literal \"" << lit << "\"\n";
    return 2;
  }
  sc = SignChoice{vals[0], vals[1], vals[2]};
  return 0;
}

int cmd_check(const std::string& lit, bool approx) {
  ParameterSet ps;
  if (int rc = parse_params(lit, ps)) return rc;
  json out;
  out["schema"] = 1;
  out["params"] = ps.str();
  out["params_json"] = params_json(ps);
  if (auto err = validate(ps)) {
    out["ok"] = false;
    out["reason"] = *err;
    std::cout << out.dump(2) << "\n";
    return 1;
  }
  CharacterTable t = character_table(ps);
  if (t.m_chi <= 0) {
    out["ok"] = false;
    out["reason"] = "m_chi = " + Rational(t.m_chi).get_str() + " is not positive";
    std::cout << out.dump(2) << "\n";
    return 1;
  }
  out["ok"] = true;
  out["n"] = rat_json(t.n, approx);
  out["m_phi"] = rat_json(t.m_phi, approx);
  out["m_chi"] = rat_json(t.m_chi, approx);
  json chi = json::array();
  for (int i = 0; i < 6; ++i) chi.push_back(rat_json(t.chi[i], approx));
  out["chi"] = chi;
  std::cout << out.dump(2) << "\n";
  return 0;
}

int table_or_reject(const ParameterSet& ps, CharacterTable& t, json& out) {
  if (auto err = validate(ps)) {
    out["ok"] = false;
    out["reason"] = *err;
    std::cout << out.dump(2) << "\n";
    return 1;
  }
  t = character_table(ps);
  if (t.m_chi <= 0) {
    out["ok"] = false;
    out["reason"] = "m_chi is not positive";
    std::cout << out.dump(2) << "\n";
    return 1;
  }
  return 0;
}

int cmd_construct(const std::string& lit, const std::string& signs_lit,
                  bool approx) {
  ParameterSet ps;
  if (int rc = parse_params(lit, ps)) return rc;
  SignChoice sc;
  if (int rc = parse_signs(signs_lit, sc)) return rc;
  json out;
  out["schema"] = 1;
  out["params"] = ps.str();
  out["params_json"] = params_json(ps);
  CharacterTable t;
  if (int rc = table_or_reject(ps, t, out)) return rc;
  TransitionMatrix P;
  try {
    P = build_transition(t, sc);
  } catch (const std::domain_error& e) {
    out["ok"] = false;
    out["reason"] = e.what();
    std::cout << out.dump(2) << "\n";
    return 1;
  }
  VerifyReport vr = verify_transition(P, t);
  out["ok"] = vr.ok();
  out["sym_index"] = P.sym_index;
  out["signs"] = {sc.e1, sc.e2, sc.e3};
  json rows = json::array();
  for (int i = 0; i < 6; ++i) {
    json row = json::array();
    for (int j = 0; j < 6; ++j) row.push_back(surd_json(P.P[i][j], approx));
    rows.push_back(row);
  }
  out["P"] = rows;
  out["violations"] = vr.violations;
  std::cout << out.dump(2) << "\n";
  return vr.ok() ? 0 : 1;
}

int cmd_lambda(const std::string& lit, bool approx) {
  ParameterSet ps;
  if (int rc = parse_params(lit, ps)) return rc;
  json out;
  out["schema"] = 1;
  out["params"] = ps.str();
  out["params_json"] = params_json(ps);
  CharacterTable t;
  if (int rc = table_or_reject(ps, t, out)) return rc;
  AlgebraRecord rec;
  try {
    rec = realize_record(ps);
  } catch (const std::domain_error& e) {
    out["ok"] = false;
    out["reason"] = e.what();
    std::cout << out.dump(2) << "\n";
    return 1;
  }
  out["ok"] = true;
  out["sym_index"] = rec.basis.sym_index;
  // Sparse tensor: only the nonzero entries.
  json lam = json::array();
  json prods = json::array();
  for (int i = 0; i < 6; ++i)
    for (int j = 0; j < 6; ++j) {
      std::string expansion;
      for (int k = 0; k < 6; ++k) {
        const Surd& v = rec.tensor.lam[i][j][k];
        if (v.is_zero()) continue;
        json e;
        e["i"] = i;
        e["j"] = j;
        e["k"] = k;
        e["value"] = surd_json(v, approx);
        lam.push_back(e);
        if (!expansion.empty()) expansion += " + ";
        if (v == Surd(1l))
          expansion += "b" + std::to_string(k);
        else
          expansion += "(" + v.str() + ")*b" + std::to_string(k);
      }
      prods.push_back("b" + std::to_string(i) + "*b" + std::to_string(j) +
                      " = " + (expansion.empty() ? "0" : expansion));
    }
  out["lambda"] = lam;
  out["products"] = prods;
  out["integral"] = rec.tensor.integral;
  out["table_algebra"] = rec.tensor.table_algebra;
  out["standard"] = rec.tensor.standard;
  out["std_ta_bounds"] = rec.tensor.std_ta_bounds;
  std::cout << out.dump(2) << "\n";
  return 0;
}

int cmd_classify(const std::string& lit) {
  ParameterSet ps;
  if (int rc = parse_params(lit, ps)) return rc;
  json out;
  out["schema"] = 1;
  out["params"] = ps.str();
  out["params_json"] = params_json(ps);
  CharacterTable t;
  if (int rc = table_or_reject(ps, t, out)) return rc;
  AlgebraRecord rec;
  try {
    rec = realize_record(ps);
  } catch (const std::domain_error& e) {
    out["ok"] = false;
    out["reason"] = e.what();
    std::cout << out.dump(2) << "\n";
    return 1;
  }
  CensusRecord cr = classify_record(rec);
  out["ok"] = true;
  out["integral"] = cr.integral;
  out["table_algebra"] = cr.table_algebra;
  out["mult_integral"] = cr.mult_integral;
  out["std_ta_bounds"] = cr.std_bounds;
  out["primitive"] = cr.primitive;
  out["evenness_pass"] = cr.evenness_pass;
  out["family"] = {{"tag", cr.family.tag}, {"detail", cr.family.detail}};
  out["labels_best_effort"] = true;
  json css = json::array();
  for (auto& cs : closed_subsets(rec.tensor, rec.basis.delta)) {
    json c;
    c["idx"] = cs.idx;
    c["order"] = cs.order.get_str();
    c["star_invariant"] = cs.star_invariant;
    c["normal"] = cs.normal;
    css.push_back(c);
  }
  out["closed_subsets"] = css;
  auto ker = kernel_phi(rec.table);
  out["kernel_phi"] = {{"idx", ker}, {"closed", is_closed(ker, rec.tensor)}};
  if (auto part = center_fusion(ps)) {
    out["center_fusion"] = {{"I", part->I}, {"J", part->J}};
  }
  if (rec.table.m_phi == 1) {
    Mphi1Report rep = classify_mphi1(ps, rec.table, rec.tensor);
    json m;
    m["kind"] = rep.kind == Mphi1Kind::WreathRank5      ? "wreath-rank5"
                : rep.kind == Mphi1Kind::RealBipartite  ? "real-bipartite"
                                                        : "non-real-bipartite";
    m["integral_predicted"] = rep.integral_predicted;
    if (rep.witness) {
      m["witness"] = {{"alpha", rep.witness->alpha.get_str()},
                      {"gamma", rep.witness->gamma.get_str()},
                      {"k1", rep.witness->k1.get_str()},
                      {"k2", rep.witness->k2.get_str()},
                      {"beta", rep.witness->beta.get_str()}};
    }
    out["mphi1"] = m;
  }
  json notes = json::array();
  for (auto& nt : literature_notes(ps))
    notes.push_back({{"profile", nt.profile}, {"fact", nt.fact}});
  out["literature"] = notes;
  std::cout << out.dump(2) << "\n";
  return 0;
}

std::string record_comment(const CensusRecord& r) {
  std::string c = r.family.detail;
  c += r.table_algebra ? ", TA" : ", not TA";
  if (r.primitive) c += ", primitive";
  if (r.table_algebra && !r.evenness_pass) c += ", fails evenness";
  return c;
}

int cmd_enumerate(long max_order, bool require_ta, int jobs,
                  const std::string& format) {
  if (max_order < 6) {
    std::cerr << "error: --max-order must be at least 6\n";
    return 2;
  }
  auto recs = enumerate(max_order, require_ta, jobs);
  if (format == "json") {
    json out;
    out["schema"] = 1;
    out["max_order"] = max_order;
    out["require_ta"] = require_ta;
    json rows = json::array();
    for (auto& r : recs) {
      json j;
      j["n"] = r.table.n.get_str();
      j["params"] = r.params.str();
      j["m_phi"] = r.table.m_phi.get_str();
      j["m_chi"] = r.table.m_chi.get_str();
      j["table_algebra"] = r.table_algebra;
      j["mult_integral"] = r.mult_integral;
      j["primitive"] = r.primitive;
      j["evenness_pass"] = r.evenness_pass;
      j["family"] = {{"tag", r.family.tag}, {"detail", r.family.detail}};
      rows.push_back(j);
    }
    out["records"] = rows;
    std::cout << out.dump(2) << "\n";
  } else if (format == "csv") {
    std::cout << "n,d1,d2,d3,d4,p1,p2,p3,p4,m_phi,m_chi,ta,family\n";
    for (auto& r : recs) {
      std::cout << r.table.n.get_str();
      for (int i = 0; i < 4; ++i) std::cout << "," << r.params.delta[i].get_str();
      for (int i = 0; i < 4; ++i) std::cout << "," << r.params.phi[i].get_str();
      std::cout << "," << r.table.m_phi.get_str() << ","
                << r.table.m_chi.get_str() << "," << (r.table_algebra ? 1 : 0)
                << "," << r.family.detail << "\n";
    }
  } else if (format == "md") {
    std::cout << "| n | [delta; phi] | (m_phi, m_chi) | comment |\n";
    std::cout << "|---|---|---|---|\n";
    for (auto& r : recs) {
      std::cout << "| " << r.table.n.get_str() << " | [" << r.params.str()
                << "] | (" << r.table.m_phi.get_str() << ", "
                << r.table.m_chi.get_str() << ") | " << record_comment(r)
                << " |\n";
    }
  } else {
    std::cerr << "error: unknown format \"" << format << "\"\n";
    return 2;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"rank-6 reality-based algebra toolkit"};
  app.require_subcommand(1);

  int default_jobs = 1;
  if (const char* env = std::getenv("RBA6_JOBS")) {
    int v = std::atoi(env);
    if (v >= 1) default_jobs = v;
  }

  std::string params, signs = "+,+,+", format = "json";
  bool approx = false, require_ta = false;
  long max_order = 50;
  int jobs = default_jobs;

  auto* check = app.add_subcommand("check", "validate a parameter set");
  check->add_option("--params", params, "d1,d2,d3,d4;p1,p2,p3,p4")->required();
  check->add_flag("--approx", approx, "add decimal renderings (approximate)");

  auto* construct = app.add_subcommand("construct", "build the transition matrix");
  construct->add_option("--params", params)->required();
  construct->add_option("--signs", signs, "sign choice, e.g. +,+,-");
  construct->add_flag("--approx", approx);

  auto* lambda = app.add_subcommand("lambda", "compute the structure tensor");
  lambda->add_option("--params", params)->required();
  lambda->add_flag("--approx", approx);

  auto* enumerate_cmd = app.add_subcommand("enumerate", "run the census");
  enumerate_cmd->add_option("--max-order", max_order, "order bound")->required();
  enumerate_cmd->add_flag("--require-ta", require_ta, "keep only nonnegative tensors");
  enumerate_cmd->add_option("--jobs", jobs, "worker threads (default $RBA6_JOBS or 1)");
  enumerate_cmd->add_option("--format", format, "json | csv | md");

  auto* classify = app.add_subcommand("classify", "taxonomy report");
  classify->add_option("--params", params)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  if (check->parsed()) return cmd_check(params, approx);
  if (construct->parsed()) return cmd_construct(params, signs, approx);
  if (lambda->parsed()) return cmd_lambda(params, approx);
  if (enumerate_cmd->parsed())
    return cmd_enumerate(max_order, require_ta, jobs, format);
  if (classify->parsed()) return cmd_classify(params);
  return 2;
}

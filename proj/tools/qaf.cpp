// Command-line front end: exact reports over named verbs, with text or JSON
// output.  Exit codes: 0 every requested check holds, 1 a verified check
// failed, 2 usage or input error, 3 out-of-scope request (inconclusive
// criterion, cap exceeded, divergent construction).
//
// Timings go to stderr only; stdout reports are deterministic byte-for-byte
// for a given invocation.

#include <CLI11.hpp>

#include "qaf/aform.hpp"
#include "qaf/fixtures.hpp"
#include "qaf/fusion.hpp"
#include "qaf/jsonio.hpp"
#include "qaf/qchar.hpp"
#include "qaf/tsystem.hpp"

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

namespace {

using namespace qaf;

struct Common {
  std::string cartan_file;
  std::string fixture;
  std::string format = "text";
  std::string cache;
  int workers = 0;  // reserved; accepted but never affects output
};

void add_output_opts(CLI::App* sub, Common& c) {
  sub->add_option("--format", c.format, "report format")
      ->check(CLI::IsMember({"text", "json"}));
  sub->add_option("--cache", c.cache,
                  "optional q-character cache file; reports never depend on its contents");
  sub->add_option("--workers", c.workers, "reserved for parallel runs; does not affect output");
}

void add_cartan_opts(CLI::App* sub, Common& c) {
  auto* file = sub->add_option("--cartan", c.cartan_file, "Cartan matrix JSON file");
  auto* name = sub->add_option("--fixture", c.fixture,
                               "built-in Cartan datum (sl2, sl3, b2, g2, a1aff); default sl2");
  file->excludes(name);
}

CartanData load_cd(const Common& c) {
  if (!c.cartan_file.empty()) return load_cartan_file(c.cartan_file);
  return fixture_cartan(c.fixture.empty() ? "sl2" : c.fixture);
}

void require_admissible(const CartanData& cd) {
  if (!cd.admissible())
    throw std::invalid_argument(
        "the Cartan matrix fails the admissibility requirement: whenever "
        "C[i][j] < -1 the symmetrizer entry r[i] and the opposite entry "
        "-C[j][i] must both equal 1");
}

int node_index(const CartanData& cd, int i_user) {
  if (i_user < 1 || i_user > cd.n)
    throw std::out_of_range("--i is 1-based and must lie in 1.." + std::to_string(cd.n));
  return i_user - 1;
}

std::vector<RatQU> unit_vec(int dim, int k) {
  std::vector<RatQU> v((size_t)dim, RatQU::zero());
  v[(size_t)k] = RatQU::one();
  return v;
}

long chi_size(const YPolynomial& p) {
  long s = 0;
  for (const auto& [m, mult] : p) s += mult;
  return s;
}

const char* simplicity_str(Simplicity s) {
  switch (s) {
    case Simplicity::Simple: return "Simple";
    case Simplicity::NotSimple: return "NotSimple";
    default: return "Inconclusive";
  }
}

// ---------------------------------------------------------------- rendering

std::string term_str(const ExpPolySig& sig, const RatQU& coeff, const std::string& target) {
  std::vector<std::string> parts;
  if (!(sig.base == RatQ::one())) parts.push_back("(" + sig.base.str() + ")^m");
  if (sig.uexp == 1)
    parts.push_back("u^m");
  else if (sig.uexp != 0)
    parts.push_back("u^(" + std::to_string(sig.uexp) + "m)");
  if (sig.mdeg == 1)
    parts.push_back("m");
  else if (sig.mdeg != 0)
    parts.push_back("m^" + std::to_string(sig.mdeg));
  if (!coeff.is_one() || parts.empty()) parts.push_back("(" + coeff.str() + ")");
  std::string out;
  for (const auto& p : parts) {
    if (!out.empty()) out += " ";
    out += p;
  }
  return out + " " + target;
}

void family_table_text(std::ostream& os, const ExpPolyFamily& fam, const std::string& name,
                       const std::vector<std::string>& labels) {
  os << name << ":\n";
  for (int j = 0; j < fam.cols(); ++j) {
    std::string rhs;
    for (const auto& [sig, mat] : fam.terms())
      for (int i = 0; i < fam.rows(); ++i)
        if (!mat.at(i, j).is_zero()) {
          if (!rhs.empty()) rhs += "  +  ";
          rhs += term_str(sig, mat.at(i, j), labels[(size_t)i]);
        }
    os << "  " << labels[(size_t)j] << " -> " << (rhs.empty() ? "0" : rhs) << "\n";
  }
}

void action_table_text(std::ostream& os, ExplicitModule& m) {
  for (int node = 0; node < m.cd.n; ++node) {
    std::string suffix = m.cd.n > 1 ? " (node " + std::to_string(node + 1) + ")" : "";
    family_table_text(os, m.xp[(size_t)node], "x+" + suffix, m.label);
    family_table_text(os, m.xm[(size_t)node], "x-" + suffix, m.label);
  }
  if (m.phi_diagonal) {
    os << "phi (diagonal):\n";
    for (int node = 0; node < m.cd.n; ++node)
      for (int v = 0; v < m.dim; ++v) {
        os << "  ";
        if (m.cd.n > 1) os << "node " << node + 1 << ", ";
        os << m.label[(size_t)v] << " : " << m.phi[(size_t)node][(size_t)v].str() << "\n";
      }
  }
}

void chi_text(std::ostream& os, const CartanData& cd, const YPolynomial& chi) {
  for (const auto& [m, mult] : chi) os << "  " << mult << " x " << mono_str(cd, m) << "\n";
}

std::string lattice_row_str(const ALattice& lat, size_t row) {
  std::string out;
  for (int j = 0; j < lat.ambient.dim; ++j) {
    const RatQU& e = lat.basis[row][(size_t)j];
    if (e.is_zero()) continue;
    if (!out.empty()) out += "  +  ";
    if (e.is_one())
      out += lat.ambient.label[(size_t)j];
    else
      out += "(" + e.str() + ") " + lat.ambient.label[(size_t)j];
  }
  return out.empty() ? "0" : out;
}

// ------------------------------------------------------------------- verbs

int run_cartan_check(const Common& c) {
  CartanData cd = load_cd(c);
  bool constraints = cd.admissible() && symmetrizer_constraints_ok(cd);
  if (c.format == "json") {
    OrderedJson j = report_envelope("cartan-check");
    j["cartan"] = cartan_to_json(cd);
    j["rank"] = cd.rank_c;
    j["extension_rows"] = cd.ext();
    j["weight_dim"] = cd.wdim();
    j["symmetrizer_constraints_ok"] = constraints;
    j["quantum_det"] = cd.quantum_det().str();
    j["quantum_det_regular"] = cd.quantum_det_regular();
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "nodes: " << cd.n << "\n";
    std::cout << "symmetrizer:";
    for (long ri : cd.r) std::cout << " " << ri;
    std::cout << "\n";
    std::cout << "admissible: " << (cd.admissible() ? "yes" : "no") << "\n";
    std::cout << "symmetrizer constraints: "
              << (cd.admissible() ? (constraints ? "ok" : "violated") : "n/a") << "\n";
    std::cout << "rank: " << cd.rank_c << "  extension rows: " << cd.ext()
              << "  weight dim: " << cd.wdim() << "\n";
    std::cout << "quantum determinant: " << cd.quantum_det().str()
              << (cd.quantum_det_regular() ? "" : "  (vanishes at generic q)") << "\n";
  }
  return 0;
}

int run_kr_qchar(const Common& c, int i_user, int r, const std::string& a_tok, std::size_t cap) {
  CartanData cd = load_cd(c);
  require_admissible(cd);
  int i = node_index(cd, i_user);
  if (r < 1) throw std::invalid_argument("--r must be a positive level");
  Spectral a = parse_spectral(a_tok);
  Monomial top = kr_top(cd, i, r, a);
  FMResult res = fm_expand(cd, top, cap);
  if (res.status != FMResult::Status::Ok) {
    if (res.status == FMResult::Status::CapExceeded)
      std::cerr << "scope error: expansion exceeded the node cap (" << cap << ")\n";
    else if (res.status == FMResult::Status::NotSpecial)
      std::cerr << "scope error: a second dominant monomial appeared: "
                << mono_str(cd, res.offender) << "\n";
    else
      std::cerr << "scope error: expansion stuck at " << mono_str(cd, res.offender) << "\n";
    return 3;
  }

  if (!c.cache.empty()) {
    OrderedJson key;
    key["cartan"] = cd.C;
    key["i"] = i_user;
    key["r"] = r;
    key["a"] = a.str();
    OrderedJson doc;
    doc["key"] = key;
    doc["chi"] = ypoly_to_json(cd, res.chi);
    {
      std::ifstream in(c.cache);
      if (in) {
        try {
          OrderedJson old;
          in >> old;
          if (old.contains("key") && old["key"] == key && old["chi"] != doc["chi"])
            std::cerr << "[cache] stale entry in '" << c.cache << "' replaced\n";
        } catch (...) {
          std::cerr << "[cache] unreadable file '" << c.cache << "' replaced\n";
        }
      }
    }
    std::ofstream out(c.cache);
    if (!out) throw std::invalid_argument("cannot write cache file '" + c.cache + "'");
    out << doc.dump(2) << "\n";
  }

  long dim = chi_size(res.chi);
  long dom = chi_size(dominant_part(res.chi));
  if (c.format == "json") {
    OrderedJson j = report_envelope("kr-qchar");
    j["node"] = i_user;
    j["r"] = r;
    j["a"] = a.str();
    j["top"] = mono_str(cd, top);
    j["dim"] = dim;
    j["dominant_monomials"] = dom;
    j["chi"] = ypoly_to_json(cd, res.chi);
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "top monomial: " << mono_str(cd, top) << "\n";
    std::cout << "dim: " << dim << "  dominant monomials: " << dom << "\n";
    chi_text(std::cout, cd, res.chi);
  }
  return 0;
}

int run_fuse_sl2(const Common& c, int r, int rp, const std::string& a_tok,
                 const std::string& b_tok, long power, int window) {
  ExplicitModule left = kr_sl2(r, parse_spectral(a_tok));
  ExplicitModule right = kr_sl2(rp, parse_spectral(b_tok));
  ExplicitModule fused = fuse(left, right, power);
  RelationReport rep = verify_relations(fused, window);
  bool mult_ok = qcharacter(fused) == ypoly_mul(qcharacter(left), qcharacter(right));
  if (c.format == "json") {
    OrderedJson j = report_envelope("fuse-sl2");
    j["r"] = r;
    j["rprime"] = rp;
    j["a"] = parse_spectral(a_tok).str();
    j["b"] = parse_spectral(b_tok).str();
    j["power"] = power;
    j["dim"] = fused.dim;
    j["grade"] = fused.grade;
    j["base_field"] = fused.base_field;
    j["relations_ok"] = rep.ok;
    j["violations"] = rep.violations;
    j["character_multiplicative"] = mult_ok;
    j["module"] = module_to_json(fused);
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "fused module: dim " << fused.dim << ", grade " << fused.grade << ", over "
              << fused.base_field << "\n";
    std::cout << "relations: " << (rep.ok ? "ok" : "violated") << "\n";
    for (const auto& v : rep.violations) std::cout << "  violation: " << v << "\n";
    std::cout << "character multiplicative: " << (mult_ok ? "yes" : "no") << "\n";
    action_table_text(std::cout, fused);
  }
  return (rep.ok && mult_ok) ? 0 : 1;
}

int run_aform(const Common& c, const std::string& pair_name, const std::string& order,
              int seed, int window) {
  std::string name = pair_name + (order == "RL" ? "-rl" : "");
  ExplicitModule m = fixture_module(name);
  if (seed < 0 || seed >= m.dim)
    throw std::out_of_range("--seed must index a basis vector of the fixture");
  ALattice lat = cyclic_aform(m, unit_vec(m.dim, seed));

  std::vector<long> nvals;
  for (int j = 0; j < m.dim; ++j) nvals.push_back(n_valuation(lat, unit_vec(m.dim, j)));

  ExplicitModule spec = specialize_u1(lat);
  RelationReport rep = verify_relations(spec, window);
  bool chi_match = qcharacter(spec) == qcharacter(m);
  std::vector<int> lines;
  for (int j = 0; j < spec.dim; ++j)
    if (is_invariant_coordinate_subspace(spec, {j})) lines.push_back(j);
  Simplicity simp = is_simple_criterion(spec);
  bool lhw = is_lu_highest_weight(spec);

  if (c.format == "json") {
    OrderedJson j = report_envelope("aform");
    j["fixture"] = pair_name;
    j["order"] = order;
    j["seed"] = m.label[(size_t)seed];
    OrderedJson lj;
    lj["pivot_columns"] = lat.pivot_col;
    lj["pivot_exponents"] = lat.pivot_val;
    OrderedJson rows = OrderedJson::array();
    for (size_t row = 0; row < lat.basis.size(); ++row) rows.push_back(lattice_row_str(lat, row));
    lj["basis"] = rows;
    lj["n_valuations"] = nvals;
    j["lattice"] = lj;
    OrderedJson sj;
    sj["dim"] = spec.dim;
    sj["relations_ok"] = rep.ok;
    sj["character_matches_ambient"] = chi_match;
    sj["invariant_lines"] = lines;
    sj["simplicity"] = simplicity_str(simp);
    sj["lu_highest_weight"] = lhw;
    j["specialization"] = sj;
    j["ambient"] = module_to_json(m);
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "fixture " << name << ": dim " << m.dim << " over " << m.base_field << "\n";
    std::cout << "cyclic lattice at " << m.label[(size_t)seed] << ":\n";
    for (size_t row = 0; row < lat.basis.size(); ++row)
      std::cout << "  row " << row << " (pivot " << m.label[(size_t)lat.pivot_col[row]]
                << ", (1-u)^" << lat.pivot_val[row] << "): " << lattice_row_str(lat, row) << "\n";
    std::cout << "n-valuations:";
    for (int j = 0; j < m.dim; ++j) std::cout << "  n(" << m.label[(size_t)j] << ")=" << nvals[(size_t)j];
    std::cout << "\n";
    std::cout << "specialization at u=1: dim " << spec.dim << ", relations "
              << (rep.ok ? "ok" : "violated") << ", character "
              << (chi_match ? "matches ambient" : "MISMATCH") << "\n";
    std::cout << "invariant lines:";
    if (lines.empty()) std::cout << " none";
    for (int j : lines) std::cout << " " << spec.label[(size_t)j];
    std::cout << "\n";
    std::cout << "simplicity: " << simplicity_str(simp)
              << "; l-u-highest-weight: " << (lhw ? "yes" : "no") << "\n";
    std::cout << "ambient action table:\n";
    action_table_text(std::cout, m);
  }
  if (simp == Simplicity::Inconclusive) return 3;
  return (rep.ok && chi_match) ? 0 : 1;
}

int run_star_fuse(const Common& c, int r, int rp, const std::string& a_tok,
                  const std::string& b_tok, int window) {
  ExplicitModule m1 = kr_sl2(r, parse_spectral(a_tok));
  ExplicitModule m2 = kr_sl2(rp, parse_spectral(b_tok));
  ExplicitModule star = star_fusion({m1, m2});
  RelationReport rep = verify_relations(star, window);
  bool mult_ok = qcharacter(star) == ypoly_mul(qcharacter(m1), qcharacter(m2));
  bool lhw = is_lu_highest_weight(star);
  Simplicity simp = is_simple_criterion(star);
  long dom = chi_size(dominant_part(qcharacter(star)));
  if (c.format == "json") {
    OrderedJson j = report_envelope("star-fuse");
    j["r"] = r;
    j["rprime"] = rp;
    j["a"] = parse_spectral(a_tok).str();
    j["b"] = parse_spectral(b_tok).str();
    j["dim"] = star.dim;
    j["relations_ok"] = rep.ok;
    j["character_multiplicative"] = mult_ok;
    j["lu_highest_weight"] = lhw;
    j["dominant_monomials"] = dom;
    j["simplicity"] = simplicity_str(simp);
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "star fusion: dim " << star.dim << " over " << star.base_field << "\n";
    std::cout << "relations: " << (rep.ok ? "ok" : "violated") << "\n";
    std::cout << "character multiplicative: " << (mult_ok ? "yes" : "no") << "\n";
    std::cout << "l-u-highest-weight: " << (lhw ? "yes" : "no")
              << "; dominant monomials: " << dom << "; simplicity: " << simplicity_str(simp)
              << "\n";
  }
  if (!rep.ok || !mult_ok) return 1;
  if (simp == Simplicity::Inconclusive) return 3;
  return 0;
}

int run_tensor_d(const Common& c, int r, int rp, const std::string& a_tok,
                 const std::string& b_tok, int window) {
  ExplicitModule m1 = kr_sl2(r, parse_spectral(a_tok));
  ExplicitModule m2 = kr_sl2(rp, parse_spectral(b_tok));
  ExplicitModule td = tensor_d(m1, m2);
  RelationReport rep = verify_relations(td, window);
  bool mult_ok = qcharacter(td) == ypoly_mul(qcharacter(m1), qcharacter(m2));
  bool lhw = is_lu_highest_weight(td);
  Simplicity simp = is_simple_criterion(td);
  if (c.format == "json") {
    OrderedJson j = report_envelope("tensor-d");
    j["r"] = r;
    j["rprime"] = rp;
    j["a"] = parse_spectral(a_tok).str();
    j["b"] = parse_spectral(b_tok).str();
    j["dim"] = td.dim;
    j["relations_ok"] = rep.ok;
    j["character_multiplicative"] = mult_ok;
    j["lu_highest_weight"] = lhw;
    j["simplicity"] = simplicity_str(simp);
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "deformed tensor product: dim " << td.dim << " over " << td.base_field << "\n";
    std::cout << "relations: " << (rep.ok ? "ok" : "violated") << "\n";
    std::cout << "character multiplicative: " << (mult_ok ? "yes" : "no") << "\n";
    std::cout << "l-u-highest-weight: " << (lhw ? "yes" : "no")
              << "; simplicity: " << simplicity_str(simp) << "\n";
  }
  if (!rep.ok || !mult_ok) return 1;
  if (simp == Simplicity::Inconclusive) return 3;
  return 0;
}

int run_tsys_verify(const Common& c, int i_user, int r, const std::string& a_tok) {
  CartanData cd = load_cd(c);
  require_admissible(cd);
  int i = node_index(cd, i_user);
  if (r < 1) throw std::invalid_argument("--r must be a positive level");
  Spectral a = parse_spectral(a_tok);
  STermSpec spec = s_term_spec(cd, i, r, a);
  TSystemReport rep = verify_tsystem(cd, i, r, a);
  bool dom = dominant_identity_check(cd, i, r, a);
  ExactSequenceReport seq = exact_sequence_check(cd, i, r, a);
  bool pass = rep.holds && dom && seq.holds;
  if (c.format == "json") {
    OrderedJson j = report_envelope("tsys-verify");
    j["node"] = i_user;
    j["r"] = r;
    j["a"] = a.str();
    OrderedJson facs = OrderedJson::array();
    for (const auto& f : spec.factors)
      facs.push_back(OrderedJson{{"node", f.j + 1}, {"column", f.k}, {"level", f.level},
                                 {"shift", f.shift}});
    j["splitting_factors"] = facs;
    j["nu_zero"] = wv_is_zero(spec.nu);
    j["holds"] = rep.holds;
    j["residual_terms"] = (long)rep.residual.size();
    if (!rep.residual.empty()) j["residual"] = ypoly_to_json(cd, rep.residual);
    j["dominant_identity"] = dom;
    OrderedJson sj;
    sj["character_ok"] = seq.character_ok;
    sj["module_checked"] = seq.module_checked;
    sj["middle_lhw"] = seq.middle_lhw;
    sj["middle_dominant_monomials"] = seq.middle_dominant_monomials;
    sj["middle_not_simple"] = seq.middle_not_simple;
    sj["sub_ok"] = seq.sub_ok;
    sj["quotient_simple"] = seq.quotient_simple;
    sj["holds"] = seq.holds;
    if (!seq.detail.empty()) sj["detail"] = seq.detail;
    j["exact_sequence"] = sj;
    j["pass"] = pass;
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "T-system at node " << i_user << ", level " << r << ", base " << a.str()
              << "\n";
    std::cout << "splitting factors:";
    if (spec.factors.empty()) std::cout << " (none)";
    for (const auto& f : spec.factors)
      std::cout << "  [node " << f.j + 1 << ", level " << f.level << ", shift "
                << (f.shift >= 0 ? "+" : "") << f.shift << "]";
    std::cout << "\n";
    std::cout << "character identity: " << (rep.holds ? "holds" : "FAILS") << " (residual "
              << rep.residual.size() << " terms)\n";
    if (!rep.residual.empty()) chi_text(std::cout, cd, rep.residual);
    std::cout << "dominant identity: " << (dom ? "ok" : "FAILS") << "\n";
    std::cout << "exact sequence: character " << (seq.character_ok ? "ok" : "FAILS");
    if (seq.module_checked)
      std::cout << "; modules checked (middle l-hw " << (seq.middle_lhw ? "yes" : "no") << ", "
                << seq.middle_dominant_monomials << " dominant monomials, middle "
                << (seq.middle_not_simple ? "not simple" : "SIMPLE") << ", sub "
                << (seq.sub_ok ? "ok" : "FAILS") << ", quotient "
                << (seq.quotient_simple ? "simple" : "NOT SIMPLE") << ")";
    else
      std::cout << "; character-level only for this datum";
    std::cout << "\n";
    std::cout << "result: " << (pass ? "pass" : "fail") << "\n";
  }
  return pass ? 0 : 1;
}

int run_qsys_verify(const Common& c, int i_user, int r) {
  CartanData cd = load_cd(c);
  require_admissible(cd);
  int i = node_index(cd, i_user);
  if (r < 1) throw std::invalid_argument("--r must be a positive level");
  QSystemReport rep = qsystem_check(cd, i, r);
  bool pass = rep.holds && rep.spectral_independent;
  if (c.format == "json") {
    OrderedJson j = report_envelope("qsys-verify");
    j["node"] = i_user;
    j["r"] = r;
    j["holds"] = rep.holds;
    j["spectral_independent"] = rep.spectral_independent;
    j["lhs_dim"] = rep.lhs_dim;
    j["rhs_dim"] = rep.rhs_dim;
    j["pass"] = pass;
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "Q-system at node " << i_user << ", level " << r << "\n";
    std::cout << "weight-character identity: " << (rep.holds ? "holds" : "FAILS") << "\n";
    std::cout << "spectral independence: " << (rep.spectral_independent ? "yes" : "no") << "\n";
    std::cout << "dims: lhs " << rep.lhs_dim << ", rhs " << rep.rhs_dim << "\n";
    std::cout << "result: " << (pass ? "pass" : "fail") << "\n";
  }
  return pass ? 0 : 1;
}

int run_asymptotic(const Common& c, int i_user, const std::string& a_tok, int depth, int kmax) {
  CartanData cd = load_cd(c);
  require_admissible(cd);
  int i = node_index(cd, i_user);
  if (depth < 0) throw std::invalid_argument("--depth must be nonnegative");
  if (kmax < 1) throw std::invalid_argument("--kmax must be positive");
  Spectral a = parse_spectral(a_tok);
  AsymptoticReport rep = asymptotic_check(cd, i, a, depth, kmax);
  bool pass = rep.char_stabilized && rep.beta_stabilized;
  if (c.format == "json") {
    OrderedJson j = report_envelope("asymptotic");
    j["node"] = i_user;
    j["a"] = a.str();
    j["depth"] = rep.depth;
    j["k_max"] = rep.k_max;
    j["char_stabilized"] = rep.char_stabilized;
    j["char_k0"] = rep.char_k0;
    j["beta_stabilized"] = rep.beta_stabilized;
    j["beta_k0"] = rep.beta_k0;
    j["pass"] = pass;
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "asymptotic truncation at node " << i_user << ", depth " << rep.depth
              << ", levels up to " << rep.k_max << "\n";
    std::cout << "normalized character: "
              << (rep.char_stabilized ? "stabilizes from level " + std::to_string(rep.char_k0)
                                      : "does not stabilize in range")
              << "\n";
    std::cout << "weight restriction: "
              << (rep.beta_stabilized ? "stabilizes from level " + std::to_string(rep.beta_k0)
                                      : "does not stabilize in range")
              << "\n";
    std::cout << "result: " << (pass ? "pass" : "fail") << "\n";
  }
  return pass ? 0 : 1;
}

int run_relations_check(const Common& c, const std::string& module_fixture, int r,
                        const std::string& a_tok, int window) {
  ExplicitModule m = (r > 0) ? kr_sl2(r, parse_spectral(a_tok)) : fixture_module(module_fixture);
  RelationReport rep = verify_relations(m, window);
  if (c.format == "json") {
    OrderedJson j = report_envelope("relations-check");
    j["module"] = (r > 0) ? "kr-sl2 r=" + std::to_string(r) + " a=" + parse_spectral(a_tok).str()
                          : module_fixture;
    j["dim"] = m.dim;
    j["window"] = window;
    j["relations_ok"] = rep.ok;
    j["violations"] = rep.violations;
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "module: dim " << m.dim << " over " << m.base_field << "\n";
    std::cout << "relations: " << (rep.ok ? "ok" : "violated") << " (window " << window << ")\n";
    for (const auto& v : rep.violations) std::cout << "  violation: " << v << "\n";
  }
  return rep.ok ? 0 : 1;
}

template <class F>
int timed(const std::string& name, F&& f) {
  auto t0 = std::chrono::steady_clock::now();
  int rc = f();
  auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                std::chrono::steady_clock::now() - t0)
                .count();
  std::cerr << "[time] " << name << ": " << ms << " ms\n";
  return rc;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact computations for quantum affinizations: explicit modules, deformed "
               "fusion, integral forms, q-characters, and T/Q-system checks"};
  app.require_subcommand(1);
  int rc = 0;

  // cartan-check
  auto c_cc = std::make_shared<Common>();
  auto* cc = app.add_subcommand("cartan-check", "validate a Cartan datum and report invariants");
  add_cartan_opts(cc, *c_cc);
  add_output_opts(cc, *c_cc);
  cc->callback([&rc, c_cc] { rc = timed("cartan-check", [&] { return run_cartan_check(*c_cc); }); });

  // kr-qchar
  auto c_kq = std::make_shared<Common>();
  auto kq_i = std::make_shared<int>(1);
  auto kq_r = std::make_shared<int>(1);
  auto kq_a = std::make_shared<std::string>("a:0");
  auto kq_cap = std::make_shared<std::size_t>(100000);
  auto* kq = app.add_subcommand("kr-qchar", "q-character of a one-node string module");
  add_cartan_opts(kq, *c_kq);
  add_output_opts(kq, *c_kq);
  kq->add_option("--i", *kq_i, "node (1-based)");
  kq->add_option("--r", *kq_r, "level");
  kq->add_option("--a", *kq_a, "spectral parameter, class:shift (e.g. a:0 or c0:2)");
  kq->add_option("--cap", *kq_cap, "expansion node cap");
  kq->callback([&rc, c_kq, kq_i, kq_r, kq_a, kq_cap] {
    rc = timed("kr-qchar", [&] { return run_kr_qchar(*c_kq, *kq_i, *kq_r, *kq_a, *kq_cap); });
  });

  // fuse-sl2
  auto c_fs = std::make_shared<Common>();
  auto fs_r = std::make_shared<int>(1);
  auto fs_rp = std::make_shared<int>(1);
  auto fs_a = std::make_shared<std::string>("a:0");
  auto fs_b = std::make_shared<std::string>("a:2");
  auto fs_pow = std::make_shared<long>(1);
  auto fs_win = std::make_shared<int>(6);
  auto* fs = app.add_subcommand("fuse-sl2", "deformed fusion of two sl2 string modules");
  add_output_opts(fs, *c_fs);
  fs->add_option("--r", *fs_r, "left level");
  fs->add_option("--rprime", *fs_rp, "right level");
  fs->add_option("--a", *fs_a, "left spectral parameter");
  fs->add_option("--b", *fs_b, "right spectral parameter");
  fs->add_option("--power", *fs_pow, "deformation power (grade of the left factor)");
  fs->add_option("--window", *fs_win, "relation verification window");
  fs->callback([&rc, c_fs, fs_r, fs_rp, fs_a, fs_b, fs_pow, fs_win] {
    rc = timed("fuse-sl2",
               [&] { return run_fuse_sl2(*c_fs, *fs_r, *fs_rp, *fs_a, *fs_b, *fs_pow, *fs_win); });
  });

  // aform
  auto c_af = std::make_shared<Common>();
  auto af_fixture = std::make_shared<std::string>("pair-q2");
  auto af_order = std::make_shared<std::string>("LR");
  auto af_seed = std::make_shared<int>(0);
  auto af_win = std::make_shared<int>(6);
  auto* af = app.add_subcommand("aform", "cyclic integral form and u=1 specialization of a "
                                         "bundled fusion pair");
  add_output_opts(af, *c_af);
  af->add_option("--fixture", *af_fixture, "fusion pair fixture name (default pair-q2)");
  af->add_option("--order", *af_order, "factor order")->check(CLI::IsMember({"LR", "RL"}));
  af->add_option("--seed", *af_seed, "basis index generating the cyclic form (default 0)");
  af->add_option("--window", *af_win, "relation verification window");
  af->callback([&rc, c_af, af_fixture, af_order, af_seed, af_win] {
    rc = timed("aform",
               [&] { return run_aform(*c_af, *af_fixture, *af_order, *af_seed, *af_win); });
  });

  // star-fuse
  auto c_sf = std::make_shared<Common>();
  auto sf_r = std::make_shared<int>(1);
  auto sf_rp = std::make_shared<int>(1);
  auto sf_a = std::make_shared<std::string>("a:0");
  auto sf_b = std::make_shared<std::string>("a:2");
  auto sf_win = std::make_shared<int>(6);
  auto* sf = app.add_subcommand("star-fuse", "fusion specialized at u=1 on the cyclic form");
  add_output_opts(sf, *c_sf);
  sf->add_option("--r", *sf_r, "left level");
  sf->add_option("--rprime", *sf_rp, "right level");
  sf->add_option("--a", *sf_a, "left spectral parameter");
  sf->add_option("--b", *sf_b, "right spectral parameter");
  sf->add_option("--window", *sf_win, "relation verification window");
  sf->callback([&rc, c_sf, sf_r, sf_rp, sf_a, sf_b, sf_win] {
    rc = timed("star-fuse",
               [&] { return run_star_fuse(*c_sf, *sf_r, *sf_rp, *sf_a, *sf_b, *sf_win); });
  });

  // tensor-d
  auto c_td = std::make_shared<Common>();
  auto td_r = std::make_shared<int>(1);
  auto td_rp = std::make_shared<int>(1);
  auto td_a = std::make_shared<std::string>("a:0");
  auto td_b = std::make_shared<std::string>("a:2");
  auto td_win = std::make_shared<int>(6);
  auto* td = app.add_subcommand("tensor-d", "full-basis deformed tensor product at u=1");
  add_output_opts(td, *c_td);
  td->add_option("--r", *td_r, "left level");
  td->add_option("--rprime", *td_rp, "right level");
  td->add_option("--a", *td_a, "left spectral parameter");
  td->add_option("--b", *td_b, "right spectral parameter");
  td->add_option("--window", *td_win, "relation verification window");
  td->callback([&rc, c_td, td_r, td_rp, td_a, td_b, td_win] {
    rc = timed("tensor-d",
               [&] { return run_tensor_d(*c_td, *td_r, *td_rp, *td_a, *td_b, *td_win); });
  });

  // tsys-verify
  auto c_tv = std::make_shared<Common>();
  auto tv_i = std::make_shared<int>(1);
  auto tv_r = std::make_shared<int>(1);
  auto tv_a = std::make_shared<std::string>("a:0");
  auto* tv = app.add_subcommand("tsys-verify", "exact T-system identity with splitting term");
  add_cartan_opts(tv, *c_tv);
  add_output_opts(tv, *c_tv);
  tv->add_option("--i", *tv_i, "node (1-based)");
  tv->add_option("--r", *tv_r, "level");
  tv->add_option("--a", *tv_a, "spectral parameter");
  tv->callback([&rc, c_tv, tv_i, tv_r, tv_a] {
    rc = timed("tsys-verify", [&] { return run_tsys_verify(*c_tv, *tv_i, *tv_r, *tv_a); });
  });

  // qsys-verify
  auto c_qv = std::make_shared<Common>();
  auto qv_i = std::make_shared<int>(1);
  auto qv_r = std::make_shared<int>(1);
  auto* qv = app.add_subcommand("qsys-verify", "weight-character Q-system identity");
  add_cartan_opts(qv, *c_qv);
  add_output_opts(qv, *c_qv);
  qv->add_option("--i", *qv_i, "node (1-based)");
  qv->add_option("--r", *qv_r, "level");
  qv->callback([&rc, c_qv, qv_i, qv_r] {
    rc = timed("qsys-verify", [&] { return run_qsys_verify(*c_qv, *qv_i, *qv_r); });
  });

  // asymptotic
  auto c_as = std::make_shared<Common>();
  auto as_i = std::make_shared<int>(1);
  auto as_a = std::make_shared<std::string>("a:0");
  auto as_depth = std::make_shared<int>(2);
  auto as_kmax = std::make_shared<int>(4);
  auto* as = app.add_subcommand("asymptotic", "stabilization of normalized characters in the "
                                              "A^{-1} truncation");
  add_cartan_opts(as, *c_as);
  add_output_opts(as, *c_as);
  as->add_option("--i", *as_i, "node (1-based)");
  as->add_option("--a", *as_a, "spectral parameter");
  as->add_option("--depth", *as_depth, "truncation degree");
  as->add_option("--kmax", *as_kmax, "largest level examined");
  as->callback([&rc, c_as, as_i, as_a, as_depth, as_kmax] {
    rc = timed("asymptotic",
               [&] { return run_asymptotic(*c_as, *as_i, *as_a, *as_depth, *as_kmax); });
  });

  // relations-check
  auto c_rl = std::make_shared<Common>();
  auto rl_fixture = std::make_shared<std::string>("pair-q2");
  auto rl_r = std::make_shared<int>(0);
  auto rl_a = std::make_shared<std::string>("a:0");
  auto rl_win = std::make_shared<int>(6);
  auto* rl = app.add_subcommand("relations-check", "verify the defining relations on a module");
  add_output_opts(rl, *c_rl);
  rl->add_option("--fixture", *rl_fixture, "module fixture name (default pair-q2)");
  rl->add_option("--r", *rl_r, "build kr-sl2 of this level instead of a fixture");
  rl->add_option("--a", *rl_a, "spectral parameter for --r");
  rl->add_option("--window", *rl_win, "relation verification window");
  rl->callback([&rc, c_rl, rl_fixture, rl_r, rl_a, rl_win] {
    rc = timed("relations-check",
               [&] { return run_relations_check(*c_rl, *rl_fixture, *rl_r, *rl_a, *rl_win); });
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  } catch (const std::runtime_error& e) {
    std::cerr << "scope error: " << e.what() << "\n";
    return 3;
  } catch (const std::logic_error& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 2;
  }
  return rc;
}

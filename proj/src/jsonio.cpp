#include "qaf/jsonio.hpp"

#include <fstream>
#include <stdexcept>

namespace qaf {

CartanData cartan_from_json(const OrderedJson& j) {
  if (!j.is_object() || !j.contains("cartan"))
    throw std::invalid_argument("Cartan document must be an object with a \"cartan\" matrix");
  const auto& m = j.at("cartan");
  if (!m.is_array() || m.empty())
    throw std::invalid_argument("\"cartan\" must be a nonempty row-major integer matrix");
  std::vector<std::vector<long>> rows;
  for (const auto& row : m) {
    if (!row.is_array() || row.size() != m.size())
      throw std::invalid_argument("\"cartan\" must be a square matrix");
    std::vector<long> r;
    for (const auto& e : row) {
      if (!e.is_number_integer())
        throw std::invalid_argument("\"cartan\" entries must be integers");
      r.push_back(e.get<long>());
    }
    rows.push_back(std::move(r));
  }
  return CartanData::from_matrix(rows);
}

CartanData load_cartan_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open Cartan file '" + path + "'");
  OrderedJson j;
  try {
    in >> j;
  } catch (const std::exception& e) {
    throw std::invalid_argument("cannot parse '" + path + "' as JSON: " + std::string(e.what()));
  }
  return cartan_from_json(j);
}

OrderedJson cartan_to_json(const CartanData& cd) {
  OrderedJson j;
  j["cartan"] = cd.C;
  j["symmetrizer"] = cd.r;
  j["admissible"] = cd.admissible();
  return j;
}

OrderedJson ypoly_to_json(const CartanData& cd, const YPolynomial& p) {
  OrderedJson arr = OrderedJson::array();
  for (const auto& [m, mult] : p)
    arr.push_back(OrderedJson{{"monomial", mono_str(cd, m)}, {"mult", mult}});
  return arr;
}

namespace {

OrderedJson family_json(const ExpPolyFamily& f) {
  OrderedJson terms = OrderedJson::array();
  for (const auto& [sig, mat] : f.terms()) {
    OrderedJson entries = OrderedJson::array();
    for (int r = 0; r < mat.r; ++r)
      for (int c = 0; c < mat.c; ++c)
        if (!mat.at(r, c).is_zero())
          entries.push_back(OrderedJson{{"row", r}, {"col", c}, {"coeff", mat.at(r, c).str()}});
    terms.push_back(OrderedJson{{"base", sig.base.str()},
                                {"uexp", sig.uexp},
                                {"mdeg", sig.mdeg},
                                {"entries", entries}});
  }
  return terms;
}

}  // namespace

OrderedJson module_to_json(ExplicitModule& m) {
  OrderedJson j;
  j["base_field"] = m.base_field;
  j["dim"] = m.dim;
  j["grade"] = m.grade;
  j["labels"] = m.label;
  OrderedJson wts = OrderedJson::array();
  for (const auto& w : m.wt) wts.push_back(m.cd.wv_str(w));
  j["weights"] = wts;
  OrderedJson xp = OrderedJson::array(), xm = OrderedJson::array();
  for (int i = 0; i < m.cd.n; ++i) {
    xp.push_back(family_json(m.xp[(size_t)i]));
    xm.push_back(family_json(m.xm[(size_t)i]));
  }
  j["x_plus"] = xp;
  j["x_minus"] = xm;
  if (m.phi_diagonal) {
    OrderedJson phi = OrderedJson::array();
    for (int i = 0; i < m.cd.n; ++i) {
      OrderedJson per = OrderedJson::array();
      for (const auto& s : m.phi[(size_t)i]) per.push_back(s.str());
      phi.push_back(per);
    }
    j["phi"] = phi;
  } else {
    OrderedJson pp = OrderedJson::array(), pm = OrderedJson::array();
    for (int i = 0; i < m.cd.n; ++i) {
      pp.push_back(family_json(phi_family(m, i, true)));
      pm.push_back(family_json(phi_family(m, i, false)));
    }
    j["phi_plus_modes"] = pp;
    j["phi_minus_modes"] = pm;
  }
  return j;
}

OrderedJson report_envelope(const std::string& verb) {
  OrderedJson j;
  j["schema"] = "qaf-report/1";
  j["verb"] = verb;
  return j;
}

}  // namespace qaf

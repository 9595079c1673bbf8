#pragma once
// JSON import/export: Cartan data files, q-character polynomials, and module
// summaries on a stable, versioned report schema.

#include "qaf/cartan.hpp"
#include "qaf/module.hpp"
#include "qaf/monomial.hpp"

#include <json.hpp>

#include <string>

namespace qaf {

using OrderedJson = nlohmann::ordered_json;

// {"cartan": [[...]], "labels": optional}; row-major integers
CartanData cartan_from_json(const OrderedJson& j);
CartanData load_cartan_file(const std::string& path);
OrderedJson cartan_to_json(const CartanData& cd);

// list of {"monomial": "...", "mult": n}, keys in canonical monomial order
OrderedJson ypoly_to_json(const CartanData& cd, const YPolynomial& p);

// basis weights and labels plus per-node signature/coefficient tables for
// the raising/lowering families and the loop-Cartan series
OrderedJson module_to_json(ExplicitModule& m);

// {"schema": "qaf-report/1", "verb": ...}
OrderedJson report_envelope(const std::string& verb);

}  // namespace qaf

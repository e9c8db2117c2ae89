#pragma once

// Structured-text (JSON) records. Rationals are written as exact "p/q" strings
// and zero terms are omitted; readers treat a missing term as zero.
//
//   ConstForm        {dim, degree, terms: [{indices: [..], coeff: "p/q"}]}
//   VectorValuedForm {dim, k, components: [ConstForm, ...]}
//   EntropyReport    {arity, values, weights, entropy_nats, disorder}
//   Polynomial       [{exps: [..], coeff: "p/q"}]
//   PolyForm         {nvars, degree, terms: [{indices, poly}]}
//   VectorPolyForm   {nvars, degree, components: [PolyForm, ...]}
//   PolyMap          {source, target, components: [Polynomial, ...]}

#include "mplectic/deform.hpp"
#include "mplectic/operad.hpp"

#include <json.hpp>

#include <string>

namespace mplectic {

using Json = nlohmann::json;

Json to_json(const ConstForm& f);
Json to_json(const VectorValuedForm& w);
Json to_json(const EntropyReport& r);
Json to_json(const Polynomial& p);
Json to_json(const PolyForm& f);
Json to_json(const VectorPolyForm& w);
Json to_json(const PolyMap& f);
Json to_json(const LocalPresentation& record);

/// Human-readable rendering such as "1/2*x2^2" or "x1 dx3^dx5 - x2 dx3^dx6".
std::string to_text(const Polynomial& p);
std::string to_text(const PolyForm& f);

// Readers throw std::invalid_argument on schema violations.
ConstForm const_form_from_json(const Json& j);
VectorValuedForm vector_form_from_json(const Json& j);
Polynomial polynomial_from_json(const Json& j, int nvars);
PolyForm poly_form_from_json(const Json& j);
VectorPolyForm vector_poly_form_from_json(const Json& j);
PolyMap poly_map_from_json(const Json& j);

}  // namespace mplectic

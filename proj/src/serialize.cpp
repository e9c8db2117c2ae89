#include "mplectic/serialize.hpp"

#include <stdexcept>
#include <string>

namespace mplectic {

namespace {

const Json& field(const Json& j, const char* name) {
  if (!j.is_object() || !j.contains(name)) throw std::invalid_argument(std::string("missing field '") + name + "'");
  return j.at(name);
}

int int_field(const Json& j, const char* name) {
  const Json& v = field(j, name);
  if (!v.is_number_integer()) throw std::invalid_argument(std::string("field '") + name + "' must be an integer");
  return v.get<int>();
}

Rational rational_field(const Json& j, const char* name) {
  const Json& v = field(j, name);
  if (v.is_string()) return parse_rational(v.get<std::string>());
  if (v.is_number_integer()) return Rational(v.get<long>());
  throw std::invalid_argument(std::string("field '") + name + "' must be a rational string");
}

const Json& array_field(const Json& j, const char* name) {
  const Json& v = field(j, name);
  if (!v.is_array()) throw std::invalid_argument(std::string("field '") + name + "' must be an array");
  return v;
}

MultiIndex indices_from_json(const Json& j, int dim) {
  if (!j.is_array()) throw std::invalid_argument("indices must be an array");
  return MultiIndex(dim, j.get<std::vector<int>>());
}

}  // namespace

Json to_json(const ConstForm& f) {
  Json terms = Json::array();
  if (f.degree() <= f.dim()) {
    const auto indices = all_multiindices(f.dim(), f.degree());
    for (std::size_t r = 0; r < indices.size(); ++r)
      if (f.coeffs()[r] != 0) terms.push_back({{"indices", indices[r].indices()}, {"coeff", to_string(f.coeffs()[r])}});
  }
  return {{"dim", f.dim()}, {"degree", f.degree()}, {"terms", std::move(terms)}};
}

Json to_json(const VectorValuedForm& w) {
  Json comps = Json::array();
  for (const auto& c : w.components()) comps.push_back(to_json(c));
  return {{"dim", w.dim()}, {"k", w.k()}, {"components", std::move(comps)}};
}

Json to_json(const EntropyReport& r) {
  Json values = Json::array();
  for (const auto& v : r.values) values.push_back(to_string(v));
  return {{"arity", r.arity},
          {"values", std::move(values)},
          {"weights", r.weights},
          {"entropy_nats", r.entropy},
          {"disorder", r.disorder}};
}

Json to_json(const Polynomial& p) {
  Json terms = Json::array();
  for (const auto& [e, c] : p.terms()) terms.push_back({{"exps", e}, {"coeff", to_string(c)}});
  return terms;
}

Json to_json(const PolyForm& f) {
  Json terms = Json::array();
  for (const auto& [mi, c] : f.terms()) terms.push_back({{"indices", mi.indices()}, {"poly", to_json(c)}});
  return {{"nvars", f.nvars()}, {"degree", f.degree()}, {"terms", std::move(terms)}};
}

Json to_json(const VectorPolyForm& w) {
  Json comps = Json::array();
  for (const auto& c : w.components()) comps.push_back(to_json(c));
  return {{"nvars", w.nvars()}, {"degree", w.degree()}, {"components", std::move(comps)}};
}

Json to_json(const PolyMap& f) {
  Json comps = Json::array();
  for (const auto& c : f.components()) comps.push_back(to_json(c));
  return {{"source", f.source()}, {"target", f.target()}, {"components", std::move(comps)}};
}

Json to_json(const LocalPresentation& record) {
  return {{"chart",
           {{"n", record.chart.n()}, {"k", record.chart.k()}, {"m", record.chart.m()},
            {"total_dim", record.chart.total_dim()}}},
          {"potential", to_json(record.potential)},
          {"embedding", to_json(record.embedding)},
          {"pullback", to_json(record.pulled_back)},
          {"residual", to_json(record.residual)},
          {"nondegenerate_at_center", record.nondegenerate_at_center},
          {"warnings", record.warnings},
          {"verified", record.verified()}};
}

std::string to_text(const Polynomial& p) {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
    const auto& [e, c] = *it;
    Rational magnitude = abs(c);
    std::string monomial;
    for (std::size_t v = 0; v < e.size(); ++v) {
      if (e[v] == 0) continue;
      if (!monomial.empty()) monomial += "*";
      monomial += "x" + std::to_string(v + 1);
      if (e[v] > 1) monomial += "^" + std::to_string(e[v]);
    }
    if (first)
      out += c < 0 ? "-" : "";
    else
      out += c < 0 ? " - " : " + ";
    if (monomial.empty())
      out += to_string(magnitude);
    else if (magnitude == 1)
      out += monomial;
    else
      out += to_string(magnitude) + "*" + monomial;
    first = false;
  }
  return out;
}

std::string to_text(const PolyForm& f) {
  if (f.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [mi, c] : f.terms()) {
    const bool compound = c.terms().size() > 1;
    std::string coeff = compound ? "(" + to_text(c) + ")" : to_text(c);
    if (!first) {
      if (coeff.front() == '-') {
        out += " - ";
        coeff.erase(0, 1);
      } else {
        out += " + ";
      }
    }
    first = false;
    out += coeff;
    std::string basis;
    for (int i : mi.indices()) basis += (basis.empty() ? "dx" : "^dx") + std::to_string(i);
    if (!basis.empty()) out += " " + basis;
  }
  return out;
}

ConstForm const_form_from_json(const Json& j) {
  const int dim = int_field(j, "dim");
  const int degree = int_field(j, "degree");
  ConstForm f(dim, degree);
  for (const auto& t : array_field(j, "terms")) {
    const MultiIndex mi = indices_from_json(field(t, "indices"), dim);
    if (mi.degree() != degree) throw std::invalid_argument("term degree does not match form degree");
    f.set_coeff(mi, f.coeff(mi) + rational_field(t, "coeff"));
  }
  return f;
}

VectorValuedForm vector_form_from_json(const Json& j) {
  const int dim = int_field(j, "dim");
  const int k = int_field(j, "k");
  std::vector<ConstForm> comps;
  for (const auto& c : array_field(j, "components")) comps.push_back(const_form_from_json(c));
  VectorValuedForm w(std::move(comps));
  if (w.dim() != dim || w.k() != k) throw std::invalid_argument("components disagree with the declared dim or k");
  return w;
}

Polynomial polynomial_from_json(const Json& j, int nvars) {
  if (!j.is_array()) throw std::invalid_argument("polynomial must be an array of terms");
  Polynomial p(nvars);
  for (const auto& t : j) {
    const Json& e = field(t, "exps");
    if (!e.is_array()) throw std::invalid_argument("exps must be an array");
    p.add_term(e.get<Exponents>(), rational_field(t, "coeff"));
  }
  return p;
}

PolyForm poly_form_from_json(const Json& j) {
  const int nvars = int_field(j, "nvars");
  const int degree = int_field(j, "degree");
  PolyForm f(nvars, degree);
  for (const auto& t : array_field(j, "terms"))
    f.add_term(indices_from_json(field(t, "indices"), nvars), polynomial_from_json(field(t, "poly"), nvars));
  return f;
}

VectorPolyForm vector_poly_form_from_json(const Json& j) {
  std::vector<PolyForm> comps;
  for (const auto& c : array_field(j, "components")) comps.push_back(poly_form_from_json(c));
  VectorPolyForm w(std::move(comps));
  if (w.nvars() != int_field(j, "nvars") || w.degree() != int_field(j, "degree"))
    throw std::invalid_argument("components disagree with the declared nvars or degree");
  return w;
}

PolyMap poly_map_from_json(const Json& j) {
  const int source = int_field(j, "source");
  const int target = int_field(j, "target");
  std::vector<Polynomial> comps;
  for (const auto& c : array_field(j, "components")) comps.push_back(polynomial_from_json(c, source));
  if (static_cast<int>(comps.size()) != target) throw std::invalid_argument("component count differs from target");
  return PolyMap(source, std::move(comps));
}

}  // namespace mplectic

#include "mplectic/deform.hpp"

#include <numeric>
#include <utility>

namespace mplectic {

CanonicalChart::CanonicalChart(int n, int k, int m) : n_(n), k_(k), m_(m), fiber_block_(binomial(n, k)) {
  if (n < 2) throw std::invalid_argument("base dimension must be at least 2");
  if (k < 1 || k > n - 1) throw std::invalid_argument("need 1 <= k <= n-1");
  if (m < 1) throw std::invalid_argument("need m >= 1");
}

int CanonicalChart::q(int a) const {
  if (a < 1 || a > n_) throw std::out_of_range("base coordinate out of range");
  return a;
}

int CanonicalChart::p(const MultiIndex& mi, int i) const {
  if (mi.dim() != n_ || mi.degree() != k_) throw std::invalid_argument("fiber multi-index has the wrong shape");
  if (i < 1 || i > m_) throw std::out_of_range("fiber component out of range");
  return n_ + static_cast<int>(static_cast<std::uint64_t>(i - 1) * fiber_block_ + rank_of(mi)) + 1;
}

namespace {

/// dq_I on R^n lifted to the chart of X.
MultiIndex lift(const CanonicalChart& chart, const MultiIndex& mi) { return MultiIndex(chart.total_dim(), mi.indices()); }

}  // namespace

VectorPolyForm canonical_theta(const CanonicalChart& chart) {
  const int total = chart.total_dim();
  const auto base = all_multiindices(chart.n(), chart.k());
  std::vector<PolyForm> comps;
  for (int i = 1; i <= chart.m(); ++i) {
    PolyForm theta(total, chart.k());
    for (const auto& mi : base) theta.add_term(lift(chart, mi), Polynomial::variable(total, chart.p(mi, i)));
    comps.push_back(std::move(theta));
  }
  return VectorPolyForm(std::move(comps));
}

VectorPolyForm canonical_omega(const CanonicalChart& chart) { return exterior_derivative(canonical_theta(chart)); }

bool omega_nondegenerate_at(const CanonicalChart& chart, std::span<const Rational> point) {
  if (static_cast<int>(point.size()) != chart.total_dim())
    throw std::invalid_argument("point must have " + std::to_string(chart.total_dim()) + " coordinates");
  const VectorPolyForm omega = canonical_omega(chart);
  std::vector<ConstForm> values;
  values.reserve(omega.arity());
  for (const auto& c : omega.components()) {
    if (!c.has_constant_coefficients()) throw std::logic_error("canonical Omega must have constant coefficients");
    values.push_back(c.evaluate_at(point));
  }
  return is_nondegenerate(VectorValuedForm(std::move(values)));
}

PolyForm poincare_potential(const PolyForm& w, std::span<const Rational> center) {
  const int n = w.nvars();
  const int d = w.degree();
  if (d < 1) throw std::invalid_argument("the homotopy operator needs a form of degree >= 1");
  if (static_cast<int>(center.size()) != n) throw std::invalid_argument("center has the wrong dimension");
  if (PolyForm dw = exterior_derivative(w); !dw.is_zero()) throw NotClosed(std::move(dw));

  // Work in y = q - center, where the chart is star-shaped about 0.
  RationalVector back(center.begin(), center.end());
  for (auto& c : back) c = -c;

  PolyForm out(n, d - 1);
  for (const auto& [mi, coeff] : w.terms()) {
    // integral_0^1 t^(d-1) t^D dt = 1 / (d + D) for each monomial of degree D
    const Polynomial shifted = coeff.translate(center);
    Polynomial radial(n);
    for (const auto& [exps, c] : shifted.terms()) {
      const unsigned degree = std::accumulate(exps.begin(), exps.end(), 0u);
      radial.add_term(exps, c / Rational(d + static_cast<int>(degree)));
    }
    for (std::size_t a = 0; a < mi.indices().size(); ++a) {
      Polynomial c = radial * Polynomial::variable(n, mi[a]);
      if (a % 2 == 1) c *= -1;
      out.add_term(mi.without(a), c.translate(back));
    }
  }
  return out;
}

VectorPolyForm poincare_potential(const VectorPolyForm& w, std::span<const Rational> center) {
  std::vector<PolyForm> out;
  out.reserve(w.arity());
  for (const auto& c : w.components()) out.push_back(poincare_potential(c, center));
  return VectorPolyForm(std::move(out));
}

PolyMap build_embedding(const VectorPolyForm& potential, const CanonicalChart& chart) {
  if (potential.nvars() != chart.n() || potential.degree() != chart.k() ||
      potential.arity() != static_cast<std::size_t>(chart.m()))
    throw std::invalid_argument("potential shape does not match the chart (n, k, m)");
  const int n = chart.n();
  std::vector<Polynomial> comps(static_cast<std::size_t>(chart.total_dim()), Polynomial(n));
  for (int a = 1; a <= n; ++a) comps[static_cast<std::size_t>(chart.q(a) - 1)] = Polynomial::variable(n, a);
  for (int i = 1; i <= chart.m(); ++i)
    for (const auto& [mi, c] : potential.component(static_cast<std::size_t>(i)).terms())
      comps[static_cast<std::size_t>(chart.p(mi, i) - 1)] = c;
  return PolyMap(n, std::move(comps));
}

LocalPresentation verify_local_presentation(const VectorPolyForm& omega, std::span<const Rational> center,
                                            const std::optional<VectorPolyForm>& potential) {
  if (static_cast<int>(center.size()) != omega.nvars()) throw std::invalid_argument("center has the wrong dimension");
  for (const auto& c : omega.components())
    if (PolyForm dw = exterior_derivative(c); !dw.is_zero()) throw NotClosed(std::move(dw));

  CanonicalChart chart(omega.nvars(), omega.degree() - 1, static_cast<int>(omega.arity()));

  std::vector<ConstForm> at_center;
  for (const auto& c : omega.components()) at_center.push_back(c.evaluate_at(center));
  const bool nondegenerate = is_nondegenerate(VectorValuedForm(std::move(at_center)));

  VectorPolyForm alpha = potential ? *potential : poincare_potential(omega, center);
  PolyMap f = build_embedding(alpha, chart);
  VectorPolyForm pulled = pullback(f, canonical_omega(chart));
  VectorPolyForm residual = pulled - omega;

  LocalPresentation record{chart, std::move(alpha), std::move(f), std::move(pulled), std::move(residual),
                           nondegenerate, {}};
  if (!nondegenerate) record.warnings.emplace_back("omega is degenerate at the center");
  return record;
}

}  // namespace mplectic

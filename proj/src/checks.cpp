#include "mplectic/checks.hpp"

#include "mplectic/deform.hpp"
#include "mplectic/operad.hpp"
#include "mplectic/random.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace mplectic {

bool SuiteReport::passed() const {
  return !properties.empty() &&
         std::all_of(properties.begin(), properties.end(), [](const PropertyResult& p) { return p.passed(); });
}

const PropertyResult& SuiteReport::property(std::string_view name) const {
  for (const auto& p : properties)
    if (p.name == name) return p;
  throw std::out_of_range("no property named '" + std::string(name) + "' in suite " + suite);
}

namespace {

Rng property_rng(std::uint64_t seed, std::uint32_t property) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32), property};
  return Rng(seq);
}

int uniform(Rng& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

std::size_t uniform_size(Rng& rng, std::size_t lo, std::size_t hi) {
  return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

std::vector<RationalVector> random_vectors(Rng& rng, int count, int n) {
  std::vector<RationalVector> out;
  for (int i = 0; i < count; ++i) out.push_back(random_vector(rng, n));
  return out;
}

bool all_nonzero(const RationalVector& values) {
  return std::none_of(values.begin(), values.end(), [](const Rational& v) { return v == 0; });
}

/// Argument vectors at which every component of w is nonzero, if a few draws find them.
bool draw_generic_vectors(Rng& rng, const OperadElement& w, std::vector<RationalVector>& out) {
  for (int attempt = 0; attempt < 20; ++attempt) {
    out = random_vectors(rng, w.k() + 1, w.dim());
    if (all_nonzero(evaluate_vv(w.form(), out))) return true;
  }
  return false;
}

/// Random element together with vectors where all its components are nonzero.
OperadElement generic_element(Rng& rng, int n, int k, std::size_t m, std::vector<RationalVector>& vectors) {
  for (;;) {
    OperadElement w = random_operad_element(rng, n, k, m);
    if (draw_generic_vectors(rng, w, vectors)) return w;
  }
}

/// A^* f for the linear map x -> A x, computed through the polynomial pullback.
ConstForm linear_pullback(const RationalMatrix& a, const ConstForm& f) {
  const int n = f.dim();
  std::vector<Polynomial> comps;
  for (int r = 0; r < n; ++r) {
    Polynomial p(n);
    for (int c = 0; c < n; ++c)
      p += a(static_cast<std::size_t>(r), static_cast<std::size_t>(c)) * Polynomial::variable(n, c + 1);
    comps.push_back(std::move(p));
  }
  const PolyForm pulled = pullback(PolyMap(n, std::move(comps)), PolyForm::from_const(f));
  const RationalVector origin(static_cast<std::size_t>(n), Rational(0));
  return pulled.evaluate_at(origin);
}

/// Random form on R^n; when `degenerate` is set no term involves dq_n, so e_n is in the kernel.
VectorValuedForm random_vector_form(Rng& rng, int n, int k, std::size_t m, bool degenerate) {
  std::vector<ConstForm> comps;
  for (std::size_t i = 0; i < m; ++i) {
    ConstForm f = random_const_form(rng, n, k + 1, 0.5);
    if (degenerate)
      for (const auto& mi : all_multiindices(n, k + 1))
        if (mi.contains(n)) f.set_coeff(mi, 0);
    comps.push_back(std::move(f));
  }
  return VectorValuedForm(std::move(comps));
}

}  // namespace

SuiteReport run_nondeg_suite(std::uint64_t seed) {
  SuiteReport report{"nondeg", seed, {}};

  {
    PropertyResult p{"cross_product_decisions"};
    const VectorValuedForm cross = cross_product_form();
    ++p.trials;
    if (!is_nondegenerate(cross)) ++p.failures;
    for (const auto& c : cross.components()) {
      ++p.trials;
      if (is_nondegenerate(VectorValuedForm({c}))) ++p.failures;
    }
    report.properties.push_back(p);
  }

  {
    PropertyResult p{"canonical_omega_nondegenerate"};
    Rng rng = property_rng(seed, 1);
    for (int n = 2; n <= 5; ++n)
      for (int k = 1; k <= n - 1; ++k)
        for (int m = 1; m <= 3; ++m) {
          const CanonicalChart chart(n, k, m);
          const RationalVector point = random_vector(rng, chart.total_dim());
          ++p.trials;
          if (!omega_nondegenerate_at(chart, point)) ++p.failures;
        }
    report.properties.push_back(p);
  }

  {
    PropertyResult p{"rank_matches_kernel"};
    Rng rng = property_rng(seed, 2);
    std::bernoulli_distribution degenerate(0.3);
    for (int t = 0; t < 200; ++t) {
      const int n = uniform(rng, 2, 5);
      const int k = uniform(rng, 1, n - 1);
      const auto m = uniform_size(rng, 1, 3);
      const VectorValuedForm w = random_vector_form(rng, n, k, m, degenerate(rng));
      const auto kernel = kernel_basis(contraction_matrix(w));
      bool ok = is_nondegenerate(w) == kernel.empty();
      ok = ok && rank(contraction_matrix(w)) + kernel.size() == static_cast<std::size_t>(n);
      for (const auto& v : kernel)
        for (const auto& c : w.components()) ok = ok && contract(c, v).is_zero();
      ++p.trials;
      if (!ok) ++p.failures;
    }
    report.properties.push_back(p);
  }

  {
    PropertyResult p{"basis_change_invariance"};
    Rng rng = property_rng(seed, 3);
    for (int t = 0; t < 100; ++t) {
      const int n = uniform(rng, 2, 4);
      const int k = uniform(rng, 1, n - 1);
      const auto m = uniform_size(rng, 1, 3);
      std::bernoulli_distribution degenerate(0.3);
      const VectorValuedForm w = random_vector_form(rng, n, k, m, degenerate(rng));
      RationalMatrix a(static_cast<std::size_t>(n), static_cast<std::size_t>(n));
      do {
        for (std::size_t r = 0; r < a.rows(); ++r)
          for (std::size_t c = 0; c < a.cols(); ++c) a(r, c) = random_rational(rng, 3);
      } while (rank(a) != static_cast<std::size_t>(n));
      std::vector<ConstForm> moved;
      for (const auto& c : w.components()) moved.push_back(linear_pullback(a, c));
      ++p.trials;
      if (is_nondegenerate(w) != is_nondegenerate(VectorValuedForm(std::move(moved)))) ++p.failures;
    }
    report.properties.push_back(p);
  }

  {
    PropertyResult p{"extra_components_preserve"};
    Rng rng = property_rng(seed, 4);
    for (int t = 0; t < 100; ++t) {
      const int n = uniform(rng, 2, 5);
      const int k = uniform(rng, 1, n - 1);
      const OperadElement w = random_operad_element(rng, n, k, uniform_size(rng, 2, 3));
      std::vector<ConstForm> comps = w.form().components();
      const auto extra = uniform_size(rng, 1, 2);
      for (std::size_t e = 0; e < extra; ++e) {
        const auto pos = uniform_size(rng, 0, comps.size());
        comps.insert(comps.begin() + static_cast<std::ptrdiff_t>(pos), random_const_form(rng, n, k + 1, 0.6));
      }
      ++p.trials;
      if (!is_nondegenerate(VectorValuedForm(std::move(comps)))) ++p.failures;
    }
    report.properties.push_back(p);
  }

  return report;
}

SuiteReport run_operad_suite(std::uint64_t seed) {
  SuiteReport report{"operad", seed, {}};
  std::size_t composed_total = 0;
  std::size_t composed_degenerate = 0;
  // Every composite is re-checked here, independent of compose_at's own guard.
  const auto track = [&](const OperadElement& w) -> const OperadElement& {
    ++composed_total;
    if (!is_nondegenerate(w.form())) ++composed_degenerate;
    return w;
  };
  const auto shape = [](Rng& rng, int& n, int& k) {
    n = uniform(rng, 3, 4);
    k = uniform(rng, 1, n - 1);
  };
  constexpr int kTrials = 100;

  {
    PropertyResult p{"sequential_composition"};
    Rng rng = property_rng(seed, 10);
    for (int t = 0; t < kTrials; ++t) {
      int n, k;
      shape(rng, n, k);
      const auto l = uniform_size(rng, 2, 5);
      const OperadElement f = random_operad_element(rng, n, k, l);
      const OperadElement g = random_operad_element(rng, n, k, uniform_size(rng, 2, 5));
      const OperadElement h = random_operad_element(rng, n, k, uniform_size(rng, 2, 5));
      const auto kk = uniform_size(rng, 2, l);
      const auto i = uniform_size(rng, 1, kk - 1);
      const auto lhs = compose_at(track(compose_at(f, kk, h)), i, g);
      const auto rhs = compose_at(track(compose_at(f, i, g)), kk - 1 + g.arity(), h);
      track(lhs);
      track(rhs);
      ++p.trials;
      if (!(lhs == rhs)) ++p.failures;
    }
    report.properties.push_back(p);
  }

  {
    PropertyResult p{"nested_composition"};
    Rng rng = property_rng(seed, 11);
    for (int t = 0; t < kTrials; ++t) {
      int n, k;
      shape(rng, n, k);
      const OperadElement f = random_operad_element(rng, n, k, uniform_size(rng, 2, 5));
      const OperadElement g = random_operad_element(rng, n, k, uniform_size(rng, 2, 5));
      const OperadElement h = random_operad_element(rng, n, k, uniform_size(rng, 2, 5));
      const auto i = uniform_size(rng, 1, f.arity());
      const auto j = uniform_size(rng, 1, g.arity());
      const auto lhs = compose_at(f, i, track(compose_at(g, j, h)));
      const auto rhs = compose_at(track(compose_at(f, i, g)), i - 1 + j, h);
      track(lhs);
      track(rhs);
      ++p.trials;
      if (!(lhs == rhs)) ++p.failures;
    }
    report.properties.push_back(p);
  }

  {
    PropertyResult p{"equivariance_inner"};
    Rng rng = property_rng(seed, 12);
    for (int t = 0; t < kTrials; ++t) {
      int n, k;
      shape(rng, n, k);
      const OperadElement beta = random_operad_element(rng, n, k, uniform_size(rng, 2, 5));
      const OperadElement alpha = random_operad_element(rng, n, k, uniform_size(rng, 2, 5));
      const auto i = uniform_size(rng, 1, beta.arity());
      const Permutation sigma = random_permutation(rng, alpha.arity());
      const auto lhs = compose_at(beta, i, act(sigma, alpha));
      const auto composed = compose_at(beta, i, alpha);
      const auto rhs = act(embed_promote(sigma, i, composed.arity()), composed);
      track(lhs);
      track(composed);
      ++p.trials;
      if (!(lhs == rhs)) ++p.failures;
    }
    report.properties.push_back(p);
  }

  {
    PropertyResult p{"equivariance_outer"};
    Rng rng = property_rng(seed, 13);
    for (int t = 0; t < kTrials; ++t) {
      int n, k;
      shape(rng, n, k);
      const OperadElement beta = random_operad_element(rng, n, k, uniform_size(rng, 2, 5));
      const OperadElement alpha = random_operad_element(rng, n, k, uniform_size(rng, 2, 5));
      const auto i = uniform_size(rng, 1, beta.arity());
      const Permutation sigma = random_permutation(rng, beta.arity());
      std::vector<std::size_t> blocks(beta.arity(), 1);
      blocks[i - 1] = alpha.arity();
      const auto lhs = compose_at(act(sigma, beta), i, alpha);
      const auto composed = compose_at(beta, sigma(i), alpha);
      const auto rhs = act(block_promote(sigma, blocks), composed);
      track(lhs);
      track(composed);
      ++p.trials;
      if (!(lhs == rhs)) ++p.failures;
    }
    report.properties.push_back(p);
  }

  {
    PropertyResult p{"right_action"};
    Rng rng = property_rng(seed, 14);
    for (int t = 0; t < kTrials; ++t) {
      int n, k;
      shape(rng, n, k);
      const OperadElement w = random_operad_element(rng, n, k, uniform_size(rng, 2, 6));
      const Permutation s = random_permutation(rng, w.arity());
      const Permutation u = random_permutation(rng, w.arity());
      ++p.trials;
      if (!(act(s * u, w) == act(u, act(s, w)))) ++p.failures;
    }
    report.properties.push_back(p);
  }

  PropertyResult membership{"composition_membership"};
  membership.trials = composed_total;
  membership.failures = composed_degenerate;
  report.properties.push_back(membership);
  return report;
}

SuiteReport run_entropy_suite(std::uint64_t seed) {
  SuiteReport report{"entropy", seed, {}};
  const auto shape = [](Rng& rng, int& n, int& k) {
    n = uniform(rng, 3, 4);
    k = uniform(rng, 1, n - 1);
  };

  {
    PropertyResult p{"doubling_bound", "min_slack", std::numeric_limits<double>::infinity()};
    Rng rng = property_rng(seed, 20);
    for (int t = 0; t < 1000; ++t) {
      int n, k;
      shape(rng, n, k);
      std::vector<RationalVector> vectors;
      const OperadElement alpha = generic_element(rng, n, k, uniform_size(rng, 2, 5), vectors);
      const auto i = uniform_size(rng, 1, alpha.arity());
      const BoundCheck check = check_entropy_doubling(alpha, i, vectors);
      p.metric = std::min(p.metric, check.slack);
      ++p.trials;
      if (!check.holds) ++p.failures;
    }
    report.properties.push_back(p);
  }

  {
    PropertyResult p{"chain_rule", "max_residual", 0.0};
    Rng rng = property_rng(seed, 21);
    for (int t = 0; t < 100; ++t) {
      int n, k;
      shape(rng, n, k);
      std::vector<RationalVector> vectors;
      const OperadElement beta = generic_element(rng, n, k, uniform_size(rng, 2, 5), vectors);
      OperadElement alpha = random_operad_element(rng, n, k, uniform_size(rng, 2, 5));
      while (!all_nonzero(evaluate_vv(alpha.form(), vectors)))
        alpha = random_operad_element(rng, n, k, uniform_size(rng, 2, 5));
      const auto i = uniform_size(rng, 1, beta.arity());
      const ScaledElement normalized = normalize_for_chain(alpha, beta, i, vectors);
      const ChainCheck check = check_entropy_chain(beta, i, normalized, vectors);
      p.metric = std::max(p.metric, check.residual);
      ++p.trials;
      if (!check.holds) ++p.failures;
    }
    report.properties.push_back(p);
  }

  {
    PropertyResult p{"max_entropy_constant_stack", "max_error", 0.0};
    Rng rng = property_rng(seed, 22);
    // gamma must be nondegenerate on its own so that the constant stack lies in
    // P(q); these (n, k) admit such forms (a lone 2-form on R^3 never is).
    constexpr int kShapes[][2] = {{3, 2}, {4, 1}, {4, 3}};
    for (std::size_t q = 2; q <= 10; ++q) {
      const auto& s = kShapes[uniform(rng, 0, 2)];
      const int n = s[0];
      const int k = s[1];
      ConstForm gamma;
      std::vector<RationalVector> vectors;
      do {
        gamma = random_const_form(rng, n, k + 1, 0.0);
        vectors = random_vectors(rng, k + 1, n);
      } while (!is_nondegenerate(VectorValuedForm({gamma})) || evaluate(gamma, vectors) == 0);
      const OperadElement stack(VectorValuedForm(std::vector<ConstForm>(q, gamma)));
      const double error = std::abs(entropy(stack, vectors).entropy - std::log(static_cast<double>(q)));
      p.metric = std::max(p.metric, error);
      ++p.trials;
      if (error > 1e-12) ++p.failures;
    }
    report.properties.push_back(p);
  }

  {
    PropertyResult p{"entropy_bounds_and_scale", "max_scale_error", 0.0};
    Rng rng = property_rng(seed, 23);
    for (int t = 0; t < 200; ++t) {
      int n, k;
      shape(rng, n, k);
      std::vector<RationalVector> vectors;
      const OperadElement w = generic_element(rng, n, k, uniform_size(rng, 2, 6), vectors);
      const EntropyReport r = entropy(w, vectors);
      const EntropyReport scaled = entropy(OperadElement(w.form().scaled(random_nonzero_rational(rng))), vectors);
      double weight_sum = 0.0;
      for (double x : r.weights) weight_sum += x;
      const double error = std::abs(r.entropy - scaled.entropy);
      p.metric = std::max(p.metric, error);
      const bool ok = std::abs(weight_sum - 1.0) <= 1e-12 && r.entropy >= 0.0 &&
                      r.entropy <= std::log(static_cast<double>(r.arity)) + 1e-12 && r.weights == scaled.weights &&
                      error <= 1e-12;
      ++p.trials;
      if (!ok) ++p.failures;
    }
    report.properties.push_back(p);
  }

  return report;
}

SuiteReport run_poincare_suite(std::uint64_t seed) {
  SuiteReport report{"poincare", seed, {}};

  {
    PropertyResult p{"d_squared_zero"};
    Rng rng = property_rng(seed, 30);
    for (int t = 0; t < 100; ++t) {
      const int nvars = uniform(rng, 2, 6);
      const PolyForm w = random_poly_form(rng, nvars, uniform(rng, 0, nvars - 2), 3);
      ++p.trials;
      if (!exterior_derivative(exterior_derivative(w)).is_zero()) ++p.failures;
    }
    report.properties.push_back(p);
  }

  {
    PropertyResult p{"pullback_commutes_with_d"};
    Rng rng = property_rng(seed, 31);
    for (int t = 0; t < 50; ++t) {
      const int source = uniform(rng, 2, 4);
      const int target = uniform(rng, 2, 4);
      const PolyMap f = random_poly_map(rng, source, target);
      const PolyForm w = random_poly_form(rng, target, uniform(rng, 0, target - 1), 2);
      ++p.trials;
      if (!(pullback(f, exterior_derivative(w)) == exterior_derivative(pullback(f, w)))) ++p.failures;
    }
    report.properties.push_back(p);
  }

  {
    PropertyResult p{"pullback_functorial"};
    Rng rng = property_rng(seed, 32);
    for (int t = 0; t < 50; ++t) {
      const int a = uniform(rng, 2, 3);
      const int b = uniform(rng, 2, 3);
      const int c = uniform(rng, 2, 3);
      const PolyMap f = random_poly_map(rng, a, b);
      const PolyMap g = random_poly_map(rng, b, c);
      const PolyForm w = random_poly_form(rng, c, uniform(rng, 0, c), 2);
      ++p.trials;
      if (!(pullback(compose(g, f), w) == pullback(f, pullback(g, w)))) ++p.failures;
    }
    report.properties.push_back(p);
  }

  {
    PropertyResult p{"poincare_inverts_d"};
    Rng rng = property_rng(seed, 33);
    for (int t = 0; t < 50; ++t) {
      const int nvars = uniform(rng, 2, 6);
      const PolyForm w = exterior_derivative(random_poly_form(rng, nvars, uniform(rng, 0, nvars - 1), 3));
      const RationalVector center = random_vector(rng, nvars, 3);
      ++p.trials;
      if (!(exterior_derivative(poincare_potential(w, center)) == w)) ++p.failures;
    }
    report.properties.push_back(p);
  }

  {
    PropertyResult p{"local_presentation_random"};
    Rng rng = property_rng(seed, 34);
    for (int t = 0; t < 20; ++t) {
      for (;;) {
        const int n = uniform(rng, 3, 4);
        const int k = uniform(rng, 1, n - 1);
        const int m = uniform(rng, 1, 3);
        const RationalVector center = random_vector(rng, n, 3);
        bool found = false;
        for (int attempt = 0; attempt < 50 && !found; ++attempt) {
          std::vector<PolyForm> alpha;
          for (int i = 0; i < m; ++i) alpha.push_back(random_poly_form(rng, n, k, 2, 4));
          const VectorPolyForm omega = exterior_derivative(VectorPolyForm(std::move(alpha)));
          std::vector<ConstForm> at_center;
          for (const auto& c : omega.components()) at_center.push_back(c.evaluate_at(center));
          if (!is_nondegenerate(VectorValuedForm(std::move(at_center)))) continue;
          found = true;
          const LocalPresentation record = verify_local_presentation(omega, center);
          ++p.trials;
          if (!record.verified() || !record.nondegenerate_at_center) ++p.failures;
        }
        if (found) break;
      }
    }
    report.properties.push_back(p);
  }

  return report;
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"nondeg", "operad", "entropy", "poincare"};
  return names;
}

SuiteReport run_suite(std::string_view name, std::uint64_t seed) {
  if (name == "nondeg") return run_nondeg_suite(seed);
  if (name == "operad") return run_operad_suite(seed);
  if (name == "entropy") return run_entropy_suite(seed);
  if (name == "poincare") return run_poincare_suite(seed);
  throw std::invalid_argument("unknown suite '" + std::string(name) + "' (expected nondeg, operad, entropy or poincare)");
}

}  // namespace mplectic

#pragma once

// Canonical forms on X = Lambda^k T*M (x) E_m over one chart of M = R^n, the
// radial Poincare homotopy operator, and the local presentation omega = f* Omega.

#include "mplectic/poly_form.hpp"
#include "mplectic/vector_form.hpp"

#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace mplectic {

/// Coordinates on X: q_1..q_n, then p_{I,i} component-major (i = 1..m), with
/// the degree-k multi-indices I in lexicographic order inside each component.
class CanonicalChart {
 public:
  /// Throws std::invalid_argument unless n >= 2, 1 <= k <= n-1 and m >= 1.
  CanonicalChart(int n, int k, int m);

  int n() const { return n_; }
  int k() const { return k_; }
  int m() const { return m_; }
  /// Total chart dimension n + m * C(n, k).
  int total_dim() const { return n_ + m_ * static_cast<int>(fiber_block_); }

  /// 1-based coordinate index of q_a.
  int q(int a) const;
  /// 1-based coordinate index of p_{I,i}; `mi` lives on R^n.
  int p(const MultiIndex& mi, int i) const;

  friend bool operator==(const CanonicalChart&, const CanonicalChart&) = default;

 private:
  int n_;
  int k_;
  int m_;
  std::uint64_t fiber_block_;
};

/// Theta: component i is sum_I p_{I,i} dq_I.
VectorPolyForm canonical_theta(const CanonicalChart& chart);
/// Omega = d Theta: component i is sum_I dp_{I,i} ^ dq_I.
VectorPolyForm canonical_omega(const CanonicalChart& chart);

/// Omega evaluated at a point of X, as a vector-valued form on R^N, tested for
/// nondegeneracy. Throws std::logic_error if Omega's coefficients are not constant.
bool omega_nondegenerate_at(const CanonicalChart& chart, std::span<const Rational> point);

/// Thrown when a form that must be closed is not; carries d of the input.
class NotClosed : public std::domain_error {
 public:
  explicit NotClosed(PolyForm residue)
      : std::domain_error("form is not closed"), residue_(std::move(residue)) {}
  const PolyForm& residue() const { return residue_; }

 private:
  PolyForm residue_;
};

/// Radial homotopy operator about `center`: returns K(w) with d K(w) = w.
/// Throws NotClosed if d w != 0 and std::invalid_argument for 0-forms.
PolyForm poincare_potential(const PolyForm& w, std::span<const Rational> center);
VectorPolyForm poincare_potential(const VectorPolyForm& w, std::span<const Rational> center);

/// f(x) = (x, alpha(x)): q_a -> x_a, p_{I,i} -> the dq_I coefficient of alpha_i.
PolyMap build_embedding(const VectorPolyForm& potential, const CanonicalChart& chart);

struct LocalPresentation {
  CanonicalChart chart;
  VectorPolyForm potential;
  PolyMap embedding;
  VectorPolyForm pulled_back;  // f* Omega
  VectorPolyForm residual;     // f* Omega - omega, zero on success
  bool nondegenerate_at_center = false;
  std::vector<std::string> warnings;

  bool verified() const { return residual.is_zero(); }
};

/// Builds alpha (the Poincare potential about `center` unless one is supplied),
/// the embedding f, and the exact difference f* Omega - omega.
/// Throws NotClosed if some component of omega is not closed. Degeneracy at the
/// center is reported as a warning only.
LocalPresentation verify_local_presentation(const VectorPolyForm& omega, std::span<const Rational> center,
                                            const std::optional<VectorPolyForm>& potential = std::nullopt);

}  // namespace mplectic

#pragma once

#include "mplectic/exterior.hpp"
#include "mplectic/linalg.hpp"

#include <span>
#include <vector>

namespace mplectic {

/// R^m-valued (k+1)-form on R^n, stored as its m scalar components.
///
/// The standing hypothesis 1 <= k <= n-1 is enforced at construction, so the
/// component degree lies in [2, n]. Component i is the projection p_i of the
/// vector-valued form; there is no separate "whole" representation.
class VectorValuedForm {
 public:
  /// Throws std::invalid_argument for an empty component list, mismatched
  /// shapes, or a degree outside [2, n].
  explicit VectorValuedForm(std::vector<ConstForm> components);

  int dim() const { return components_.front().dim(); }
  /// Component degree k+1.
  int degree() const { return components_.front().degree(); }
  int k() const { return degree() - 1; }
  /// Number of components m.
  std::size_t arity() const { return components_.size(); }

  const std::vector<ConstForm>& components() const { return components_; }
  /// 1-based, matching the component labels omega_1..omega_m.
  const ConstForm& component(std::size_t i) const { return components_.at(i - 1); }

  VectorValuedForm scaled(const Rational& factor) const;

  friend bool operator==(const VectorValuedForm&, const VectorValuedForm&) = default;

 private:
  std::vector<ConstForm> components_;
};

/// Component-wise evaluation (omega_1(v...), ..., omega_m(v...)).
RationalVector evaluate_vv(const VectorValuedForm& w, std::span<const RationalVector> vectors);

/// Matrix whose column a stacks omega_i(e_a, e_I) over components i (major)
/// and degree-k multi-indices I (lexicographic). Its kernel is the common
/// kernel of the induced maps V -> (Lambda^k V)*.
RationalMatrix contraction_matrix(const VectorValuedForm& w);

/// True iff the only vector contracting to zero against every component is 0,
/// decided as rank(contraction_matrix) == n.
bool is_nondegenerate(const VectorValuedForm& w);

/// The cross product on R^3: omega_1 = dq2^dq3, omega_2 = dq3^dq1, omega_3 = dq1^dq2.
VectorValuedForm cross_product_form();

/// Stacks 2-forms on a common R^n as the components of one vector-valued form.
VectorValuedForm direct_sum_form(const std::vector<ConstForm>& symplectic_forms);

/// The standard symplectic form dq1^dq2 + dq3^dq4 + ... on even-dimensional R^n.
ConstForm standard_symplectic_form(int n);

}  // namespace mplectic

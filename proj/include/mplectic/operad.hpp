#pragma once

// The non-unital operad of R^m-valued k-plectic forms on a fixed R^n:
// partial compositions, the symmetric-group action, and the entropy and
// disorder functionals of evaluated components.

#include "mplectic/vector_form.hpp"

#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace mplectic {

/// Nondegenerate vector-valued form with arity m >= 2, i.e. an element of P(m).
class OperadElement {
 public:
  /// Throws std::invalid_argument if arity < 2 or the form is degenerate.
  explicit OperadElement(VectorValuedForm form);

  const VectorValuedForm& form() const { return form_; }
  std::size_t arity() const { return form_.arity(); }
  int dim() const { return form_.dim(); }
  int k() const { return form_.k(); }
  const ConstForm& component(std::size_t i) const { return form_.component(i); }

  friend bool operator==(const OperadElement&, const OperadElement&) = default;

 private:
  VectorValuedForm form_;
};

/// Permutation of {1..m}, stored 0-based. Composition (s * t)(j) = s(t(j)).
class Permutation {
 public:
  Permutation() = default;
  /// `images` lists s(1), ..., s(m) in 1-based form. Throws unless it is a permutation.
  explicit Permutation(std::vector<std::size_t> images_one_based);

  static Permutation identity(std::size_t m);
  /// Transposition of the 1-based letters a and b.
  static Permutation transposition(std::size_t m, std::size_t a, std::size_t b);

  std::size_t size() const { return image_.size(); }
  /// 1-based image of the 1-based letter j.
  std::size_t operator()(std::size_t j) const { return image_.at(j - 1) + 1; }
  std::vector<std::size_t> images() const;
  Permutation inverse() const;

  friend Permutation operator*(const Permutation& s, const Permutation& t);
  friend bool operator==(const Permutation&, const Permutation&) = default;

 private:
  std::vector<std::size_t> image_;
};

/// beta o_i alpha: alpha's components replace beta_i in place. Throws
/// std::out_of_range for i outside [1, p] and std::invalid_argument on a
/// shape mismatch.
OperadElement compose_at(const OperadElement& beta, std::size_t i, const OperadElement& alpha);

/// Right action by reindexing: component j of the result is component sigma(j)
/// of w, so act(s * t, w) == act(t, act(s, w)).
OperadElement act(const Permutation& sigma, const OperadElement& w);

/// Promotes sigma on p blocks to the block permutation on sum(blocks) letters.
/// `blocks[j]` is the size of the j-th block of the domain; block j moves as a
/// unit to the slot of block sigma(j), keeping its internal order.
Permutation block_promote(const Permutation& sigma, std::span<const std::size_t> blocks);

/// Embeds sigma on q letters into the letters position..position+q-1 of a
/// permutation on `total` letters, fixing every other letter.
Permutation embed_promote(const Permutation& sigma, std::size_t position, std::size_t total);

/// A component value vanished where the entropy needs it nonzero.
class ZeroComponent : public std::domain_error {
 public:
  explicit ZeroComponent(std::size_t component)
      : std::domain_error("component " + std::to_string(component) + " evaluates to zero"),
        component_(component) {}
  /// 1-based.
  std::size_t component() const { return component_; }

 private:
  std::size_t component_;
};

/// The normalization hypothesis B_i = A of the entropy chain rule fails.
class HypothesisViolated : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

struct EntropyReport {
  std::size_t arity = 0;
  RationalVector values;        // evaluated components c_j
  std::vector<double> weights;  // c_j^2 / sum c_i^2
  double entropy = 0.0;         // nats
  double disorder = 0.0;        // entropy / ln(arity)
};

/// Entropy of the distribution proportional to the given positive squares.
/// `values` is copied into the report unchanged (it may be empty).
EntropyReport entropy_from_squares(const RationalVector& squares, RationalVector values = {});

/// Shannon entropy of the normalized squared component values of w at the vectors.
/// Throws ZeroComponent naming the first vanishing component.
EntropyReport entropy(const OperadElement& w, std::span<const RationalVector> vectors);

/// sqrt(radicand) * form. Squared evaluations are radicand * value^2, so they stay exact.
struct ScaledElement {
  OperadElement form;
  Rational radicand{1};
};

RationalVector squared_values(const ScaledElement& w, std::span<const RationalVector> vectors);

struct BoundCheck {
  bool holds = false;
  double slack = 0.0;  // 2E(alpha) + ln 2 - E(alpha o_i alpha)
  double lhs = 0.0;
  double rhs = 0.0;
};

/// Tolerance on the slack of the doubling bound and on the chain-rule residual.
inline constexpr double kEntropyTolerance = 1e-9;

/// E(alpha o_i alpha) <= 2 E(alpha) + ln 2, up to kEntropyTolerance.
BoundCheck check_entropy_doubling(const OperadElement& alpha, std::size_t i, std::span<const RationalVector> vectors);

struct ChainCheck {
  bool holds = false;
  double residual = 0.0;  // |E(beta o_i alpha) - E(beta) - (A/B) E(alpha)|
  double composed = 0.0;
  double predicted = 0.0;
};

/// Chain rule E(beta o_i alpha) = E(beta) + (A/B) E(alpha) under B_i = A.
/// The hypothesis is checked exactly; HypothesisViolated is thrown when it fails.
ChainCheck check_entropy_chain(const OperadElement& beta, std::size_t i, const ScaledElement& alpha,
                               std::span<const RationalVector> vectors);
ChainCheck check_entropy_chain(const OperadElement& beta, std::size_t i, const OperadElement& alpha,
                               std::span<const RationalVector> vectors);

/// sqrt(B_i / A) * alpha, so that the squared values of the result sum to B_i.
/// A rational square root is folded into the form; otherwise it stays as the radicand.
ScaledElement normalize_for_chain(const OperadElement& alpha, const OperadElement& beta, std::size_t i,
                                  std::span<const RationalVector> vectors);

struct EntropyDisorder {
  double entropy = 0.0;
  double disorder = 0.0;
};

/// Entropy and disorder of the cross-product form composed with itself j times
/// via o_1, from the squared component values (c1^2, c2^2, c3^2).
EntropyDisorder iterated_cross_entropy(int j, const RationalVector& c_squared);

/// The same quantity computed from explicit vectors u, v by building the
/// stacked element and calling entropy().
EntropyDisorder iterated_cross_entropy(int j, const RationalVector& u, const RationalVector& v);

/// The cross-product form composed with itself j times via o_1, arity 3 + 2j.
OperadElement iterated_cross_stack(int j);

struct CurveSample {
  double x = 0.0;
  double entropy = 0.0;
  double disorder = 0.0;
};

/// Closed-form entropy and disorder curves for c^2 = (10, 1/2, 1/2) at real j = x.
/// Throws std::domain_error for x <= -1.
CurveSample curve_sample(double x);
std::vector<CurveSample> curve_samples(std::span<const double> xs);

}  // namespace mplectic

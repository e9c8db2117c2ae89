#include "mplectic/operad.hpp"

#include <cmath>
#include <numeric>
#include <utility>

namespace mplectic {

OperadElement::OperadElement(VectorValuedForm form) : form_(std::move(form)) {
  if (form_.arity() < 2) throw std::invalid_argument("operad elements have arity >= 2");
  if (!is_nondegenerate(form_)) throw std::invalid_argument("operad elements must be nondegenerate");
}

Permutation::Permutation(std::vector<std::size_t> images_one_based) {
  const std::size_t m = images_one_based.size();
  std::vector<bool> seen(m, false);
  image_.reserve(m);
  for (std::size_t v : images_one_based) {
    if (v < 1 || v > m || seen[v - 1]) throw std::invalid_argument("not a permutation of {1.." + std::to_string(m) + "}");
    seen[v - 1] = true;
    image_.push_back(v - 1);
  }
}

Permutation Permutation::identity(std::size_t m) {
  std::vector<std::size_t> images(m);
  std::iota(images.begin(), images.end(), std::size_t{1});
  return Permutation(std::move(images));
}

Permutation Permutation::transposition(std::size_t m, std::size_t a, std::size_t b) {
  if (a < 1 || b < 1 || a > m || b > m) throw std::invalid_argument("transposition letters out of range");
  auto images = identity(m).images();
  std::swap(images[a - 1], images[b - 1]);
  return Permutation(std::move(images));
}

std::vector<std::size_t> Permutation::images() const {
  std::vector<std::size_t> out;
  out.reserve(image_.size());
  for (auto v : image_) out.push_back(v + 1);
  return out;
}

Permutation Permutation::inverse() const {
  std::vector<std::size_t> images(image_.size());
  for (std::size_t j = 0; j < image_.size(); ++j) images[image_[j]] = j + 1;
  return Permutation(std::move(images));
}

Permutation operator*(const Permutation& s, const Permutation& t) {
  if (s.size() != t.size()) throw std::invalid_argument("composing permutations of different sizes");
  std::vector<std::size_t> images(s.size());
  for (std::size_t j = 1; j <= s.size(); ++j) images[j - 1] = s(t(j));
  return Permutation(std::move(images));
}

OperadElement compose_at(const OperadElement& beta, std::size_t i, const OperadElement& alpha) {
  if (i < 1 || i > beta.arity())
    throw std::out_of_range("composition slot " + std::to_string(i) + " outside [1, " +
                            std::to_string(beta.arity()) + "]");
  if (beta.dim() != alpha.dim() || beta.k() != alpha.k())
    throw std::invalid_argument("composing forms of different dimension or degree");

  const auto& b = beta.form().components();
  const auto& a = alpha.form().components();
  std::vector<ConstForm> stacked;
  stacked.reserve(b.size() + a.size() - 1);
  stacked.insert(stacked.end(), b.begin(), b.begin() + static_cast<std::ptrdiff_t>(i - 1));
  stacked.insert(stacked.end(), a.begin(), a.end());
  stacked.insert(stacked.end(), b.begin() + static_cast<std::ptrdiff_t>(i), b.end());

  VectorValuedForm composed(std::move(stacked));
  if (!is_nondegenerate(composed)) throw std::logic_error("partial composition produced a degenerate form");
  return OperadElement(std::move(composed));
}

OperadElement act(const Permutation& sigma, const OperadElement& w) {
  if (sigma.size() != w.arity()) throw std::invalid_argument("permutation size does not match arity");
  std::vector<ConstForm> out;
  out.reserve(w.arity());
  for (std::size_t j = 1; j <= w.arity(); ++j) out.push_back(w.component(sigma(j)));
  return OperadElement(VectorValuedForm(std::move(out)));
}

Permutation block_promote(const Permutation& sigma, std::span<const std::size_t> blocks) {
  const std::size_t p = blocks.size();
  if (sigma.size() != p) throw std::invalid_argument("block count does not match permutation size");
  for (auto s : blocks)
    if (s == 0) throw std::invalid_argument("block sizes must be positive");

  // Block j of the domain occupies slot sigma(j) of the codomain, whose blocks
  // are the domain blocks reordered: codomain slot sigma(j) has size blocks[j].
  std::vector<std::size_t> codomain_size(p);
  for (std::size_t j = 1; j <= p; ++j) codomain_size[sigma(j) - 1] = blocks[j - 1];
  std::vector<std::size_t> codomain_start(p);
  std::size_t offset = 0;
  for (std::size_t l = 0; l < p; ++l) {
    codomain_start[l] = offset;
    offset += codomain_size[l];
  }

  std::vector<std::size_t> images;
  images.reserve(offset);
  for (std::size_t j = 1; j <= p; ++j)
    for (std::size_t o = 0; o < blocks[j - 1]; ++o) images.push_back(codomain_start[sigma(j) - 1] + o + 1);
  return Permutation(std::move(images));
}

Permutation embed_promote(const Permutation& sigma, std::size_t position, std::size_t total) {
  const std::size_t q = sigma.size();
  if (position < 1 || position + q - 1 > total)
    throw std::invalid_argument("embedded permutation does not fit in " + std::to_string(total) + " letters");
  auto images = Permutation::identity(total).images();
  for (std::size_t j = 1; j <= q; ++j) images[position + j - 2] = position + sigma(j) - 1;
  return Permutation(std::move(images));
}

EntropyReport entropy_from_squares(const RationalVector& squares, RationalVector values) {
  EntropyReport report;
  report.arity = squares.size();
  report.values = std::move(values);
  Rational total = 0;
  for (std::size_t j = 0; j < squares.size(); ++j) {
    if (squares[j] <= 0) throw ZeroComponent(j + 1);
    total += squares[j];
  }
  report.weights.reserve(squares.size());
  double h = 0.0;
  for (const auto& s : squares) {
    const Rational ratio = s / total;
    const double w = ratio.get_d();
    report.weights.push_back(w);
    h -= w * std::log(w);
  }
  report.entropy = h;
  report.disorder = report.arity > 1 ? h / std::log(static_cast<double>(report.arity)) : 0.0;
  return report;
}

EntropyReport entropy(const OperadElement& w, std::span<const RationalVector> vectors) {
  RationalVector values = evaluate_vv(w.form(), vectors);
  RationalVector squares;
  squares.reserve(values.size());
  for (std::size_t j = 0; j < values.size(); ++j) {
    if (values[j] == 0) throw ZeroComponent(j + 1);
    squares.push_back(values[j] * values[j]);
  }
  return entropy_from_squares(squares, std::move(values));
}

RationalVector squared_values(const ScaledElement& w, std::span<const RationalVector> vectors) {
  RationalVector out = evaluate_vv(w.form.form(), vectors);
  for (auto& v : out) v = w.radicand * v * v;
  return out;
}

namespace {

RationalVector nonzero_squares(const OperadElement& w, std::span<const RationalVector> vectors) {
  RationalVector squares = squared_values(ScaledElement{w}, vectors);
  for (std::size_t j = 0; j < squares.size(); ++j)
    if (squares[j] == 0) throw ZeroComponent(j + 1);
  return squares;
}

Rational sum(const RationalVector& v) {
  Rational total = 0;
  for (const auto& x : v) total += x;
  return total;
}

}  // namespace

BoundCheck check_entropy_doubling(const OperadElement& alpha, std::size_t i, std::span<const RationalVector> vectors) {
  const OperadElement doubled = compose_at(alpha, i, alpha);
  const double e_alpha = entropy(alpha, vectors).entropy;
  const double e_doubled = entropy(doubled, vectors).entropy;
  BoundCheck check;
  check.lhs = e_doubled;
  check.rhs = 2.0 * e_alpha + std::log(2.0);
  check.slack = check.rhs - check.lhs;
  check.holds = check.slack >= -kEntropyTolerance;
  return check;
}

ChainCheck check_entropy_chain(const OperadElement& beta, std::size_t i, const ScaledElement& alpha,
                               std::span<const RationalVector> vectors) {
  const RationalVector b = nonzero_squares(beta, vectors);
  const RationalVector a = squared_values(alpha, vectors);
  for (std::size_t j = 0; j < a.size(); ++j)
    if (a[j] == 0) throw ZeroComponent(j + 1);
  if (i < 1 || i > b.size()) throw std::out_of_range("composition slot out of range");

  const Rational a_total = sum(a);
  const Rational b_total = sum(b);
  if (b[i - 1] != a_total)
    throw HypothesisViolated("B_" + std::to_string(i) + " = " + to_string(b[i - 1]) + " differs from A = " +
                             to_string(a_total));

  // Squared values of beta o_i alpha, in the stacking order of compose_at.
  const OperadElement composed = compose_at(beta, i, alpha.form);
  RationalVector stacked = squared_values(ScaledElement{composed}, vectors);
  for (std::size_t r = 0; r < a.size(); ++r) stacked[i - 1 + r] *= alpha.radicand;

  ChainCheck check;
  check.composed = entropy_from_squares(stacked).entropy;
  const Rational ratio = a_total / b_total;
  check.predicted = entropy_from_squares(b).entropy + ratio.get_d() * entropy_from_squares(a).entropy;
  check.residual = std::abs(check.composed - check.predicted);
  check.holds = check.residual <= kEntropyTolerance;
  return check;
}

ChainCheck check_entropy_chain(const OperadElement& beta, std::size_t i, const OperadElement& alpha,
                               std::span<const RationalVector> vectors) {
  return check_entropy_chain(beta, i, ScaledElement{alpha}, vectors);
}

ScaledElement normalize_for_chain(const OperadElement& alpha, const OperadElement& beta, std::size_t i,
                                  std::span<const RationalVector> vectors) {
  const RationalVector a = nonzero_squares(alpha, vectors);
  const RationalVector b = nonzero_squares(beta, vectors);
  if (i < 1 || i > b.size()) throw std::out_of_range("composition slot out of range");
  const Rational ratio = b[i - 1] / sum(a);
  Rational root;
  if (exact_sqrt(ratio, root)) {
    if (root == 1) return ScaledElement{alpha};
    return ScaledElement{OperadElement(alpha.form().scaled(root))};
  }
  return ScaledElement{alpha, ratio};
}

EntropyDisorder iterated_cross_entropy(int j, const RationalVector& c_squared) {
  if (j < 0) throw std::invalid_argument("iteration count must be nonnegative");
  if (c_squared.size() != 3) throw std::invalid_argument("expected three squared component values");
  for (const auto& c : c_squared)
    if (c <= 0) throw std::invalid_argument("squared component values must be positive");

  const Rational reps = j + 1;
  const Rational total = c_squared[0] + reps * (c_squared[1] + c_squared[2]);
  const auto term = [&](const Rational& c2) {
    const Rational w = c2 / total;
    return w.get_d() * std::log(w.get_d());
  };
  const double e = -(term(c_squared[0]) + reps.get_d() * (term(c_squared[1]) + term(c_squared[2])));
  return {e, e / std::log(3.0 + 2.0 * j)};
}

OperadElement iterated_cross_stack(int j) {
  if (j < 0) throw std::invalid_argument("iteration count must be nonnegative");
  const OperadElement omega(cross_product_form());
  OperadElement stack = omega;
  for (int step = 0; step < j; ++step) stack = compose_at(stack, 1, omega);
  return stack;
}

EntropyDisorder iterated_cross_entropy(int j, const RationalVector& u, const RationalVector& v) {
  const OperadElement stack = iterated_cross_stack(j);
  const RationalVector vectors[] = {u, v};
  const EntropyReport report = entropy(stack, vectors);
  return {report.entropy, report.disorder};
}

CurveSample curve_sample(double x) {
  if (!(x > -1.0)) throw std::domain_error("curve parameter must exceed -1");
  const double bracket = 10.0 * std::log(0.1 * x + 1.1) + (x + 1.0) * std::log(2.0 * x + 22.0);
  const double e = bracket / (x + 11.0);
  return {x, e, e / std::log(2.0 * x + 3.0)};
}

std::vector<CurveSample> curve_samples(std::span<const double> xs) {
  std::vector<CurveSample> out;
  out.reserve(xs.size());
  for (double x : xs) out.push_back(curve_sample(x));
  return out;
}

}  // namespace mplectic

#include "mplectic/presets.hpp"

#include <stdexcept>
#include <string>

namespace mplectic {

namespace {

PolyForm constant_term(int n, std::initializer_list<int> indices, const Rational& c) {
  return PolyForm::term(MultiIndex(n, indices), Polynomial::constant(n, c));
}

PolyForm linear_term(int n, int var, std::initializer_list<int> indices, const Rational& c) {
  return PolyForm::term(MultiIndex(n, indices), c * Polynomial::variable(n, var));
}

}  // namespace

PresentationPreset cross3_preset() {
  constexpr int n = 3;
  VectorPolyForm omega({
      constant_term(n, {2, 3}, 1),
      constant_term(n, {1, 3}, -1),  // dq3 ^ dq1
      constant_term(n, {1, 2}, 1),
  });
  VectorPolyForm alpha({
      linear_term(n, 2, {3}, 1),
      linear_term(n, 3, {1}, 1),
      linear_term(n, 1, {2}, 1),
  });
  return {std::move(omega), std::move(alpha)};
}

PresentationPreset plectic6_preset() {
  constexpr int n = 6;
  PolyForm omega = constant_term(n, {1, 3, 5}, 1) + constant_term(n, {1, 4, 6}, -1) +
                   constant_term(n, {2, 3, 6}, -1) + linear_term(n, 2, {2, 4, 5}, 1);
  Exponents x2_squared(n, 0);
  x2_squared[1] = 2;
  PolyForm alpha = linear_term(n, 1, {3, 5}, 1) + linear_term(n, 1, {4, 6}, -1) + linear_term(n, 2, {3, 6}, -1) +
                   PolyForm::term(MultiIndex(n, {4, 5}), Polynomial::monomial(Rational(1, 2), x2_squared));
  return {VectorPolyForm({std::move(omega)}), VectorPolyForm({std::move(alpha)})};
}

PresentationPreset preset_by_name(std::string_view name) {
  if (name == "cross3") return cross3_preset();
  if (name == "plectic6") return plectic6_preset();
  throw std::invalid_argument("unknown example '" + std::string(name) + "' (expected cross3 or plectic6)");
}

}  // namespace mplectic

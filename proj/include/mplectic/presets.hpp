#pragma once

#include "mplectic/poly_form.hpp"

#include <string_view>

namespace mplectic {

/// A closed vector-valued form together with a hand-picked potential.
struct PresentationPreset {
  VectorPolyForm omega;
  VectorPolyForm potential;
};

/// Cross product on R^3 (m = 3, k = 1) with alpha = (q2 dq3, q3 dq1, q1 dq2).
PresentationPreset cross3_preset();

/// The 2-plectic form on R^6
///   dx1^dx3^dx5 - dx1^dx4^dx6 - dx2^dx3^dx6 + x2 dx2^dx4^dx5
/// with alpha = x1 dx3^dx5 - x1 dx4^dx6 - x2 dx3^dx6 + 1/2 x2^2 dx4^dx5.
PresentationPreset plectic6_preset();

/// Looks up "cross3" or "plectic6"; throws std::invalid_argument otherwise.
PresentationPreset preset_by_name(std::string_view name);

}  // namespace mplectic

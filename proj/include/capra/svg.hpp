#pragma once

#include "capra/decision.hpp"

#include <optional>
#include <string>

namespace capra {

/// Deterministic static figure: dashed unit sphere, cone, rho(K) trace,
/// cch(rho(K)) fill, and an open or filled origin marker. d = 2 only.
std::string render_svg(const std::optional<ConeSpec>& K, const SourceNorm& n);

}  // namespace capra

#pragma once

#include <optional>

#include "lgriffiths/rational.hpp"

namespace lgriffiths {

/// Positive square root when q is the square of a rational; empty otherwise
/// (including q < 0).
std::optional<Rational> rational_sqrt(const Rational& q);

}  // namespace lgriffiths

#pragma once

#include <string_view>
#include <vector>

#include "chz/forcing.hpp"

namespace chz {

// Shipped scalar nonlinearities f(t, x). Each declares total time derivatives of
// every order up to kForcingMaxOrder along a curve x(t).
inline constexpr std::size_t kForcingMaxOrder = 16;

ScalarForcing forcing_zero();
ScalarForcing forcing_sin_x();     // sin(x)
ScalarForcing forcing_neg_cube();  // -x^3
ScalarForcing forcing_sin_t();     // sin(t)
ScalarForcing forcing_t_x();       // t * x

/// "zero", "sin_x", "neg_cube", "sin_t", "t_x". Throws UnknownNameError otherwise.
ScalarForcing forcing_by_name(std::string_view name);
std::vector<std::string_view> forcing_names();

}  // namespace chz

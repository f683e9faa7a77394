#pragma once

#include "netform/cost.hpp"
#include "netform/errors.hpp"
#include "netform/formation.hpp"
#include "netform/game.hpp"
#include "netform/graph.hpp"
#include "netform/io.hpp"
#include "netform/rational.hpp"
#include "netform/stability.hpp"

namespace netform {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace netform

#pragma once

#include "flagtop/root_system.hpp"
#include "flagtop/weyl.hpp"

#include <string>

namespace flagtop {

/// SVG 1.1 drawing of the positive roots of a rank-2 system, one colour per
/// residue class mod R_Theta, with a legend of class sizes and rigidity.
/// With `dual` set, draws the dual system and its classes mod R^vee_Theta.
/// Output is a pure function of the arguments. Throws std::invalid_argument
/// for rank != 2.
std::string render_figure(const RootSystem& s, const ThetaSubset& theta, bool dual);

}  // namespace flagtop

#pragma once

#include <string>

#include "berktree/bt_tree.hpp"

namespace berktree {

/// ASCII sketch of the conjugate paths, their meet, the retraction point and
/// the apartment, with exact radii.
std::string fixed_point_figure(const GaloisOrbitReport& report);

}  // namespace berktree

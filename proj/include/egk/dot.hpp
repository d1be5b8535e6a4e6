#pragma once

#include <string>

#include "egk/kripke.hpp"
#include "egk/ordered_kripke.hpp"

namespace egk {

/// Graphviz digraph: one node per world labelled "w:(σ_1,σ_2)", player 1
/// edges solid, player 2 edges dashed.
std::string to_dot(const StandardKripkeModel& model);
/// Edges carry p_i(w)(w'); zero-weight accessible edges are dotted.
std::string to_dot(const ProbKripkeModel& model);
/// Edges carry "level:weight"; level-1 support edges are bold.
std::string to_dot(const OrderedKripkeModel& model);

}  // namespace egk

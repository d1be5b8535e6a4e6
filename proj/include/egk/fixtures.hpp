#pragma once

#include "egk/epistemic_types.hpp"
#include "egk/epsilon_kripke.hpp"
#include "egk/ordered_kripke.hpp"

namespace egk::fixtures {

/// Myerson's 2x2 game: (A,C) pays (1,1), every other cell (0,0).
Game myerson_game();

/// One type per player: θ_1 ranks (C,θ_2) over (D,θ_2), θ_2 ranks (A,θ_1)
/// over (B,θ_1).
LexEpistemicModel myerson_lex_types();

/// Four worlds (A,C), (A,D), (B,C), (B,D). R_1 groups worlds by σ_1 and R_2
/// by σ_2; λ_i(w) is the point on w followed by the point on the other world
/// of the class. Throws std::logic_error if the quoted LRAT / level-1 sets
/// are not reproduced.
OrderedKripkeModel myerson_ordered_model();

/// Same frame; p_i(w) puts 1-ε on the lower-indexed world of the class and ε
/// on the other, so p_i is constant along R_i. Throws
/// std::logic_error if the quoted RAT / upper-ε sets are not reproduced.
ProbKripkeModel myerson_prob_model(const Epsilon& eps);

/// t_1 believes (1-ε)(C,t_2) + ε(D,t_2), t_2 believes (1-ε)(A,t_1) + ε(B,t_1).
ProbEpistemicModel myerson_prob_types(const Epsilon& eps);

}  // namespace egk::fixtures

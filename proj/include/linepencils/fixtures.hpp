#pragma once

// Canonical fixtures used by the corpus, the tests and the CLI.

#include <vector>

#include "linepencils/combinatorics.hpp"

namespace linepencils {
namespace fixtures {

LineCombinatorics ceva();
LineCombinatorics generalized_ceva();
LineCombinatorics hesse();
LineCombinatorics degenerate_hesse();
LineCombinatorics ten_line_example();
LineCombinatorics pencil_of_lines(int k);

enum class DirectionChoice { GeneralPosition, Concurrent };

// affine plane over GF(q): q+1 directions of q parallel lines each; one
// stored point per affine plane point; per-direction structure as chosen.
// Supported q: 2, 3, 4, 5.
LineCombinatorics finite_field(int q, const std::vector<DirectionChoice>& choices);
LineCombinatorics finite_field(int q, DirectionChoice choice = DirectionChoice::GeneralPosition);

}  // namespace fixtures
}  // namespace linepencils

#pragma once

#include "ured/function_vector.hpp"
#include "ured/martingale.hpp"
#include "ured/measure.hpp"
#include "ured/rng.hpp"
#include "ured/set_family.hpp"

namespace ured {

// Named instances used throughout the tests.
set_family triangle_family();                 // {{0,1},{1,2},{0,2}} on 3 points
set_family disjoint_family(int m);            // m singleton sets on m points
set_family common_point_family(int m, int n); // m sets all containing point 0

/// Random family of pairwise distinct nonempty subsets. Ground size and set
/// count are drawn uniformly from the given inclusive ranges (the set count
/// is capped at the number of distinct nonempty subsets).
set_family random_family(rng& gen, int ground_lo, int ground_hi, int sets_lo, int sets_hi);

/// Entries p/q with q in [1, max_den] and |p/q| <= max_abs.
function_vector random_function(rng& gen, int n, int max_abs, int max_den);

/// Strictly positive probability measure with small integer weight ratios.
measure random_positive_probability(rng& gen, int n, int max_weight = 6);

/// Valid martingale over a random filtration: blocks split into 1-3 children
/// with random rational masses, increments drawn with the last child solved
/// so every conditional mean is exactly zero.
martingale random_martingale(rng& gen, int ground, int depth);

}  // namespace ured

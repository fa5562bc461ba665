#pragma once

#include "chordexp/report.hpp"

namespace chordexp {

// For C = C1 (0,i) C2 with 2 <= |C| <= n_max:
//   b(C) = b(C2) + 1,
//   delta_bar(C) = delta_bar(C2) + {b(C1) - 1} + delta_bar(C1) as multisets,
//   f_C f_{b(C)-k} = f_C1 f_{b(C1)-1} f_C2 f_{b(C2)-k+1} for 1 <= k <= b(C).
CheckReport check_delta_concat(int n_max);

// With D1, D2 the diagrams of the normalized root subtrees of T(C):
//   b(D1) >= b(C) - b(D2)  and  f_C = f_D1 f_{b(D1)+b(D2)-b(C)} f_D2.
CheckReport check_root_subtree_claims(int n_max);

// Order-preserving label shuffles onto root(T(D1), T(D2)) that land in the
// image, grouped by l = #{left labels below the fully right leaf}: exactly
// binom(b(D2)+l-1, l) of them for 1 <= l <= b(D1), none otherwise.
CheckReport check_shuffle_counts(int n_max);

// from_tree(to_tree(C)) = C and to_tree(from_tree(T)) = T, n <= n_max.
CheckReport check_round_trip(int n_max);
// fully_right_leaf(T(C)) = b(C), n <= n_max.
CheckReport check_fully_right_leaf(int n_max);
// T(C1 (0,i) C2) = tree_insert(relabeled T(C1), relabeled T(C2), i), n <= n_max.
CheckReport check_tree_insertion(int n_max);
// P1 and recursive P2 over every labeled tree with n leaves select exactly T(RCCD(n)).
CheckReport check_image_filter(int n);

}  // namespace chordexp

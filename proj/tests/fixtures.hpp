#pragma once

// Worked tableaux transcribed from the source figures.

#include <vector>

#include "qkostka/fills.hpp"

namespace fixtures {

using qkostka::Tableau;

// (7,7,7,7,5,5), content (7,6,6,6,6,6,1)
inline Tableau forward_7() {
    return Tableau::from_rows({{1, 1, 1, 1, 1, 1, 1},
                               {2, 2, 2, 2, 2, 2, 3},
                               {3, 3, 3, 3, 3, 4, 4},
                               {4, 4, 4, 4, 5, 5, 5},
                               {5, 5, 5, 6, 6},
                               {6, 6, 6, 6, 7}});
}

inline Tableau reverse_7() {
    return Tableau::from_rows({{1, 1, 1, 1, 1, 1, 1},
                               {2, 2, 2, 2, 2, 2, 3},
                               {3, 3, 3, 3, 3, 4, 4},
                               {4, 4, 4, 4, 5, 5, 6},
                               {5, 5, 5, 5, 6},
                               {6, 6, 6, 6, 7}});
}

// level 6, weights (6,6,5,5,5,2,1)
inline Tableau level6_unique() {
    return Tableau::from_rows({{1, 1, 1, 1, 1, 1},
                               {2, 2, 2, 2, 2, 2},
                               {3, 3, 3, 3, 3, 4},
                               {4, 4, 4, 4, 5, 5},
                               {5, 5, 5},
                               {6, 6, 7}});
}

// level 6, weights (6,6,6,6,2,2,2)
inline Tableau level6_maximal() {
    return Tableau::from_rows({{1, 1, 1, 1, 1, 1},
                               {2, 2, 2, 2, 2, 2},
                               {3, 3, 3, 3, 3, 3},
                               {4, 4, 4, 4, 4, 4},
                               {5, 5, 6},
                               {6, 7, 7}});
}

// level 5, weights (5,5,5,5,5,3,3,3)
inline Tableau level5_maximal() {
    return Tableau::from_rows({{1, 1, 1, 1, 1},
                               {2, 2, 2, 2, 2},
                               {3, 3, 3, 3, 3},
                               {4, 4, 4, 4, 4},
                               {5, 5, 5, 5, 5},
                               {6, 6, 6, 7, 8},
                               {7, 7},
                               {8, 8}});
}

// level 10, weights (10,8,8,7,6,3,1,1)
inline Tableau level10_fill() {
    return Tableau::from_rows({{1, 1, 1, 1, 1, 1, 1, 1, 1, 1},
                               {2, 2, 2, 2, 2, 2, 2, 2, 3, 3},
                               {3, 3, 3, 3, 3, 3, 4, 4, 4, 4},
                               {4, 4, 4, 5, 5, 5, 5, 5, 5, 6},
                               {6, 6},
                               {7, 8}});
}

// level10_fill with the 4 at (3,10) and the 5 at (4,4) exchanged
inline Tableau level10_swapped() {
    return Tableau::from_rows({{1, 1, 1, 1, 1, 1, 1, 1, 1, 1},
                               {2, 2, 2, 2, 2, 2, 2, 2, 3, 3},
                               {3, 3, 3, 3, 3, 3, 4, 4, 4, 5},
                               {4, 4, 4, 4, 5, 5, 5, 5, 5, 6},
                               {6, 6},
                               {7, 8}});
}

// level 9, weights (9,8,8,8,8,8,8,2,1)
inline Tableau level9_unique() {
    return Tableau::from_rows({{1, 1, 1, 1, 1, 1, 1, 1, 1},
                               {2, 2, 2, 2, 2, 2, 2, 2, 3},
                               {3, 3, 3, 3, 3, 3, 3, 4, 4},
                               {4, 4, 4, 4, 4, 4, 5, 5, 5},
                               {5, 5, 5, 5, 5, 6, 6, 6, 6},
                               {6, 6, 6, 6, 7, 7, 7, 7, 7},
                               {7, 7, 7},
                               {8, 8, 9}});
}

} // namespace fixtures

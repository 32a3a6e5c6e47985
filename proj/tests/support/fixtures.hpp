#pragma once

#include <string_view>

namespace phylotrop::fixtures {

// Balanced 4-leaf tree, all weights 1.
inline constexpr std::string_view kBal4 = "((1:1,2:1):1,(3:1,4:1):1);";

// 9-equidistant 10-leaf tree of total weight 35, rebuilt from the printed
// second row of its matrix.
inline constexpr std::string_view kFig1 =
    "(((1:1,2:1):3,(3:2,(4:1,5:1):1):2):5,(((6:1,7:1):2,(8:1,9:1):2):1,10:4):5);";

inline constexpr std::string_view kCherry = "(1:1,2:1);";

}  // namespace phylotrop::fixtures

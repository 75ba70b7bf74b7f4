#pragma once

#include <array>
#include <string_view>

namespace r13 {

/// Published thermodynamic-constraint table for the inverse-power-law models.
struct ReferenceRow {
    std::string_view eta;
    double k1, k2, k10, z1, w1;
    double k3, k4, k7, z2, w2;
};

inline constexpr std::array<ReferenceRow, 4> kReferenceTable = {{
    {"7", 3.0773e-3, 1.2550e-5, 2.8590e-7, 4.0729e-10, 0.5371, 2.6072e-3, 4.8885e-2, 9.7119e-1, 1.0265e-3, 0.9831},
    {"10", 8.7436e-3, 4.5818e-5, 1.1896e-6, 4.1035e-9, 0.6055, 7.4080e-3, 8.1805e-2, 9.5624e-1, 2.7104e-3, 0.9841},
    {"17", 1.6341e-2, 1.0021e-4, 2.8475e-6, 1.5190e-8, 0.6474, 1.3840e-2, 1.1124e-1, 9.4576e-1, 4.7852e-3, 0.9848},
    {"infinity", 3.0261e-2, 2.0798e-4, 6.3621e-6, 6.2756e-8, 0.6740, 2.5607e-2, 1.5056e-1, 9.3584e-1, 8.4295e-3,
     0.9853},
}};

} // namespace r13

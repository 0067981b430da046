#pragma once

#include <array>
#include <span>
#include <string_view>

#include "qc/linear_code.hpp"

namespace qc {

// RM(1,m) from the (u,u), (u,u+1) recursion starting at RM(1,1) = F_2^2.
// Valid for 1 <= m <= 6.
LinearCode rm1(int m);

// RM(1,m) spanned by the fixed generator matrices that the named length 16
// and length 32 codes are written against. m must be 4 or 5.
LinearCode rm1_fixed(int m);

// The literal rows behind rm1_fixed, coordinate 1 first.
std::span<const std::string_view> rm1_fixed_rows(int m);

enum class RmVariant { recursive, fixed };

struct RmSpec {
  int m = 0;
  RmVariant variant = RmVariant::recursive;
};

LinearCode build(const RmSpec& request);

}  // namespace qc

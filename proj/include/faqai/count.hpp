#pragma once

#include <string>

namespace faqai {

/// Exact multiplicity. Row counts of a join can reach n^m, so 64 bits are not enough.
__extension__ typedef unsigned __int128 Count;

/// Addition that throws OverflowError instead of wrapping.
Count checked_add(Count a, Count b);
/// Multiplication that throws OverflowError instead of wrapping.
Count checked_mul(Count a, Count b);

std::string to_string(Count c);
Count parse_count(const std::string& text);

inline long double to_real(Count c) { return static_cast<long double>(c); }

}

#include "faqai/count.hpp"

#include <algorithm>

#include "faqai/errors.hpp"

namespace faqai {

Count checked_add(Count a, Count b)
{
    Count r;
    if (__builtin_add_overflow(a, b, &r))
        throw OverflowError("count overflow in addition");
    return r;
}

Count checked_mul(Count a, Count b)
{
    Count r;
    if (__builtin_mul_overflow(a, b, &r))
        throw OverflowError("count overflow in multiplication");
    return r;
}

std::string to_string(Count c)
{
    if (c == 0)
        return "0";
    std::string out;
    while (c != 0) {
        out.push_back(static_cast<char>('0' + static_cast<int>(c % 10)));
        c /= 10;
    }
    std::reverse(out.begin(), out.end());
    return out;
}

Count parse_count(const std::string& text)
{
    if (text.empty())
        throw ParseError("empty count");
    Count c = 0;
    for (char ch : text) {
        if (ch < '0' || ch > '9')
            throw ParseError("invalid count '" + text + "'");
        c = checked_add(checked_mul(c, 10), static_cast<Count>(ch - '0'));
    }
    return c;
}

}

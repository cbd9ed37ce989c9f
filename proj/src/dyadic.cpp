#include "tg/dyadic.hpp"

#include <algorithm>
#include <bit>
#include <string>

namespace tg {

DyadicSplit dyadic_split(long long x, long long y) {
    if (x < 1 || x >= y) fail(errc::BadRange, "need 1 <= x < y, got x=" + std::to_string(x) + " y=" + std::to_string(y));
    if (y > (1LL << 62)) fail(errc::BadRange, "y exceeds the 2^62 guard");
    const unsigned long long a = (unsigned long long)(x - 1);
    const unsigned long long c = (unsigned long long)(y - 1);
    DyadicSplit out;
    out.f = std::bit_width(a ^ c);  // >= 1 since x != y
    out.q = (long long)((a >> out.f) << 1) + 1;
    const long long half = 1LL << (out.f - 1);
    out.Tminus = (out.q - 1) * half;
    out.T = out.q * half;
    out.Tplus = (out.q + 1) * half;
    return out;
}

std::vector<int> eta(int b, int n, const std::vector<int>& x) {
    if (b < 1 || n < 1 || n > 30) fail(errc::BadRange, "need b >= 1 and 1 <= n <= 30");
    if (int(x.size()) != 2 * b - 1)
        fail(errc::BadRange, "expected a (2b-1)-tuple, got " + std::to_string(x.size()) + " coordinates");
    const int top = 1 << n;
    std::vector<int> out(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) {
        const int v = x[x.size() - 1 - i];
        if (v < 1 || v > top) fail(errc::BadRange, "coordinate " + std::to_string(v) + " outside [2^n]");
        out[i] = top + 1 - v;
    }
    return out;
}

}  // namespace tg

#include "gtv/bigint.hpp"

#include <algorithm>

namespace gtv {

BigInt binom(long long a, long long b) {
    if (b < 0 || a < 0 || b > a) return 0;
    b = std::min(b, a - b);
    BigInt result = 1;
    // result stays integral at every step: after multiplying by (a-b+i) the
    // running product is C(a-b+i, i) * i!-free, i.e. divisible by i.
    for (long long i = 1; i <= b; ++i) {
        result *= a - b + i;
        result /= i;
    }
    return result;
}

}  // namespace gtv

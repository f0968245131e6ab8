#include "latinrect/common.hpp"

namespace latinrect {

std::string_view to_string(Variant v)
{
    return v == Variant::reduced ? "reduced" : "total";
}

Variant parse_variant(std::string_view name)
{
    if (name == "reduced") return Variant::reduced;
    if (name == "total") return Variant::total;
    throw std::invalid_argument("unknown variant: " + std::string(name));
}

std::string to_decimal(const BigInt& value)
{
    return value.str();
}

BigInt factorial(unsigned n)
{
    BigInt r = 1;
    for (unsigned i = 2; i <= n; ++i) r *= i;
    return r;
}

BigInt binomial(unsigned n, unsigned k)
{
    if (k > n) return 0;
    k = std::min(k, n - k);
    BigInt r = 1;
    // r stays integral: after step i it equals C(n-k+i, i)
    for (unsigned i = 1; i <= k; ++i) {
        r *= n - k + i;
        r /= i;
    }
    return r;
}

}  // namespace latinrect

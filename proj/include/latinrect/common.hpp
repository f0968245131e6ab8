#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace latinrect {

using BigInt = boost::multiprecision::cpp_int;

/// Which rectangles are counted: those with first row 1..n, or all of them.
enum class Variant { reduced, total };

std::string_view to_string(Variant v);
Variant parse_variant(std::string_view name);

std::string to_decimal(const BigInt& value);

BigInt factorial(unsigned n);
BigInt binomial(unsigned n, unsigned k);

/// Raised when a requested computation exceeds a configured feasibility ceiling.
/// `predicted` carries the estimated cost (term count, or search size) that tripped it.
class ResourceGuardError : public std::runtime_error {
public:
    ResourceGuardError(const std::string& what, BigInt predicted)
        : std::runtime_error(what), predicted_(std::move(predicted)) {}

    const BigInt& predicted() const noexcept { return predicted_; }

private:
    BigInt predicted_;
};

}  // namespace latinrect

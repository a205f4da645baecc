#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace hecke {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Quarter-integer: exact values in (1/4)Z stored as 4x the value.
// Covers all arguments that occur here: Hecke parameters m in Z/4,
// jump sequences in Z/2, and tableau fillings in Z +/- 1/4.
class Q4 {
public:
    constexpr Q4() : quarters_(0) {}
    constexpr Q4(long whole) : quarters_(4 * whole) {}
    static constexpr Q4 from_quarters(long q) {
        Q4 x;
        x.quarters_ = q;
        return x;
    }
    static constexpr Q4 half(long h) { return from_quarters(2 * h); }

    constexpr long quarters() const { return quarters_; }
    constexpr bool is_integer() const { return quarters_ % 4 == 0; }
    constexpr bool is_half_integer() const { return quarters_ % 2 == 0; }
    // strictly half: in Z + 1/2
    constexpr bool is_strict_half() const { return quarters_ % 4 != 0 && quarters_ % 2 == 0; }
    // in Z +/- 1/4
    constexpr bool is_strict_quarter() const { return quarters_ % 2 != 0; }

    long to_integer() const {
        if (!is_integer()) throw std::domain_error("Q4: value is not an integer");
        return quarters_ / 4;
    }
    // floor of the rational value
    constexpr long floor() const {
        long q = quarters_;
        return (q >= 0) ? q / 4 : -((-q + 3) / 4);
    }

    constexpr Q4 operator-() const { return from_quarters(-quarters_); }
    constexpr Q4 operator+(Q4 o) const { return from_quarters(quarters_ + o.quarters_); }
    constexpr Q4 operator-(Q4 o) const { return from_quarters(quarters_ - o.quarters_); }
    constexpr Q4 operator*(long k) const { return from_quarters(quarters_ * k); }
    friend constexpr Q4 operator*(long k, Q4 x) { return x * k; }
    constexpr Q4 abs() const { return quarters_ < 0 ? -*this : *this; }

    constexpr auto operator<=>(const Q4&) const = default;

    std::string str() const;
    static Q4 parse(const std::string& s);

private:
    long quarters_;
};

inline Q4 q4_half() { return Q4::from_quarters(2); }
inline Q4 q4_quarter() { return Q4::from_quarters(1); }

std::string rational_str(const Rational& r);

}  // namespace hecke

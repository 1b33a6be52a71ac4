#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <string>
#include <utility>

namespace superindex {

using Int = boost::multiprecision::cpp_int;

// Element a + b*eps of Z[eps]/(eps^2 - 1).  Always kept in the normalized
// two-component form; multiplication folds eps^2 back to 1.
struct EpsInt {
    Int even;
    Int odd;

    EpsInt() : even(0), odd(0) {}
    EpsInt(long long e) : even(e), odd(0) {}  // NOLINT: implicit by design
    EpsInt(Int e) : even(std::move(e)), odd(0) {}
    EpsInt(Int e, Int o) : even(std::move(e)), odd(std::move(o)) {}

    static EpsInt eps() { return EpsInt(Int(0), Int(1)); }

    bool is_zero() const { return even == 0 && odd == 0; }
    bool is_one() const { return even == 1 && odd == 0; }

    // Ring maps Z[eps]/(eps^2-1) -> Z given by eps -> +1 / eps -> -1.
    Int at_plus() const { return even + odd; }
    Int at_minus() const { return even - odd; }

    EpsInt operator-() const { return EpsInt(-even, -odd); }

    EpsInt& operator+=(const EpsInt& r) {
        even += r.even;
        odd += r.odd;
        return *this;
    }
    EpsInt& operator-=(const EpsInt& r) {
        even -= r.even;
        odd -= r.odd;
        return *this;
    }
    EpsInt& operator*=(const EpsInt& r) {
        Int e = even * r.even + odd * r.odd;
        Int o = even * r.odd + odd * r.even;
        even = std::move(e);
        odd = std::move(o);
        return *this;
    }

    friend EpsInt operator+(EpsInt a, const EpsInt& b) { return a += b; }
    friend EpsInt operator-(EpsInt a, const EpsInt& b) { return a -= b; }
    friend EpsInt operator*(EpsInt a, const EpsInt& b) { return a *= b; }

    bool operator==(const EpsInt&) const = default;

    // "0", "1", "-2", "e", "-e", "3e", "1+e", "2-3e", ...
    std::string str() const;

    // Parses the forms produced by str() (optionally parenthesized).
    static EpsInt parse(const std::string& text);
};

}  // namespace superindex

#pragma once

#include <string>

namespace nck {

// a + eps*b with eps^2 = 0 over a base scalar S.
template <class S>
struct Dual {
    S a;
    S b;

    Dual operator-() const { return {-a, -b}; }

    Dual& operator+=(const Dual& o) {
        a += o.a;
        b += o.b;
        return *this;
    }
    Dual& operator-=(const Dual& o) {
        a -= o.a;
        b -= o.b;
        return *this;
    }
    Dual& operator*=(const Dual& o) {
        b = a * o.b + o.a * b;
        a = a * o.a;
        return *this;
    }

    friend Dual operator+(Dual x, const Dual& y) { return x += y; }
    friend Dual operator-(Dual x, const Dual& y) { return x -= y; }
    friend Dual operator*(Dual x, const Dual& y) { return x *= y; }

    bool operator==(const Dual& o) const { return a == o.a && b == o.b; }
    bool operator!=(const Dual& o) const { return !(*this == o); }

    std::string to_string() const { return "(" + a.to_string() + ")+eps*(" + b.to_string() + ")"; }
};

}  // namespace nck

/** \file dual.hpp
    \brief Forward-mode differentiation on a dual-number scalar.

    Dual<T> carries a value together with one directional derivative and
    propagates both through arithmetic exactly (up to rounding).  Seeding the
    derivative slot of one input with 1 yields the exact partial derivative
    of any composite expression with respect to that input, so gradients of
    Hamiltonians and integrals of motion come out at machine precision
    instead of the ~1e-8 ceiling of finite differences.

    Nesting Dual<Dual<double>> gives second derivatives; the project only
    needs first order, but nothing here prevents nesting.
*/
#ifndef SUPERINT_DUAL_HPP
#define SUPERINT_DUAL_HPP

#include <cmath>
#include <type_traits>

namespace superint {

template <class T = double>
struct Dual {
    T val{};
    T der{};

    constexpr Dual() = default;
    constexpr Dual(T v) : val(v) {}  // NOLINT: implicit by design
    constexpr Dual(T v, T d) : val(v), der(d) {}

    constexpr Dual& operator+=(const Dual& o) {
        val += o.val;
        der += o.der;
        return *this;
    }
    constexpr Dual& operator-=(const Dual& o) {
        val -= o.val;
        der -= o.der;
        return *this;
    }
    constexpr Dual& operator*=(const Dual& o) {
        der = der * o.val + val * o.der;
        val *= o.val;
        return *this;
    }
    constexpr Dual& operator/=(const Dual& o) {
        der = (der * o.val - val * o.der) / (o.val * o.val);
        val /= o.val;
        return *this;
    }
};

using Duald = Dual<double>;

template <class T>
constexpr Dual<T> operator+(Dual<T> a, const Dual<T>& b) { return a += b; }
template <class T>
constexpr Dual<T> operator-(Dual<T> a, const Dual<T>& b) { return a -= b; }
template <class T>
constexpr Dual<T> operator*(Dual<T> a, const Dual<T>& b) { return a *= b; }
template <class T>
constexpr Dual<T> operator/(Dual<T> a, const Dual<T>& b) { return a /= b; }

template <class T>
constexpr Dual<T> operator-(const Dual<T>& a) { return {-a.val, -a.der}; }
template <class T>
constexpr Dual<T> operator+(const Dual<T>& a) { return a; }

// Mixed arithmetic with plain scalars (model parameters, constants).
template <class T, class S, class = std::enable_if_t<std::is_arithmetic_v<S>>>
constexpr Dual<T> operator+(Dual<T> a, S b) { return {a.val + T(b), a.der}; }
template <class T, class S, class = std::enable_if_t<std::is_arithmetic_v<S>>>
constexpr Dual<T> operator+(S b, Dual<T> a) { return {T(b) + a.val, a.der}; }
template <class T, class S, class = std::enable_if_t<std::is_arithmetic_v<S>>>
constexpr Dual<T> operator-(Dual<T> a, S b) { return {a.val - T(b), a.der}; }
template <class T, class S, class = std::enable_if_t<std::is_arithmetic_v<S>>>
constexpr Dual<T> operator-(S b, const Dual<T>& a) { return {T(b) - a.val, -a.der}; }
template <class T, class S, class = std::enable_if_t<std::is_arithmetic_v<S>>>
constexpr Dual<T> operator*(Dual<T> a, S b) { return {a.val * T(b), a.der * T(b)}; }
template <class T, class S, class = std::enable_if_t<std::is_arithmetic_v<S>>>
constexpr Dual<T> operator*(S b, Dual<T> a) { return {T(b) * a.val, T(b) * a.der}; }
template <class T, class S, class = std::enable_if_t<std::is_arithmetic_v<S>>>
constexpr Dual<T> operator/(Dual<T> a, S b) { return {a.val / T(b), a.der / T(b)}; }
template <class T, class S, class = std::enable_if_t<std::is_arithmetic_v<S>>>
constexpr Dual<T> operator/(S b, const Dual<T>& a) {
    return {T(b) / a.val, -T(b) * a.der / (a.val * a.val)};
}

template <class T>
Dual<T> sqrt(const Dual<T>& a) {
    using std::sqrt;
    const T s = sqrt(a.val);
    return {s, a.der / (T(2) * s)};
}

template <class T>
Dual<T> exp(const Dual<T>& a) {
    using std::exp;
    const T e = exp(a.val);
    return {e, a.der * e};
}

template <class T>
Dual<T> log(const Dual<T>& a) {
    using std::log;
    return {log(a.val), a.der / a.val};
}

template <class T>
Dual<T> sin(const Dual<T>& a) {
    using std::cos;
    using std::sin;
    return {sin(a.val), a.der * cos(a.val)};
}

template <class T>
Dual<T> cos(const Dual<T>& a) {
    using std::cos;
    using std::sin;
    return {cos(a.val), -a.der * sin(a.val)};
}

/// Integer power by repeated multiplication (exact derivative chain).
template <class T>
constexpr Dual<T> powi(Dual<T> a, int n) {
    Dual<T> out{T(1), T(0)};
    for (int i = 0; i < n; ++i) out *= a;
    return out;
}

/// Extracts the plain value of a possibly nested dual (or a double).
inline constexpr double value_of(double x) { return x; }
template <class T>
constexpr double value_of(const Dual<T>& x) { return value_of(x.val); }

}  // namespace superint

#endif

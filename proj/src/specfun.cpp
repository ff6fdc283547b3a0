#include "superint/specfun.hpp"

#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>

namespace superint::specfun {

namespace {

// Rescale whenever the running magnitude leaves [2^-512, 2^512].
constexpr double kUpper = 0x1p512;
constexpr double kLower = 0x1p-512;
constexpr double kShrink = 0x1p-512;
constexpr double kGrow = 0x1p512;

// Renormalizes the pair (a, b) sharing one exponent channel.
inline void rescale(double& a, double& b, int& exp2) {
    const double mag = std::fabs(a) > std::fabs(b) ? std::fabs(a) : std::fabs(b);
    if (mag > kUpper) {
        a *= kShrink;
        b *= kShrink;
        exp2 += 512;
    } else if (mag > 0.0 && mag < kLower) {
        a *= kGrow;
        b *= kGrow;
        exp2 -= 512;
    }
}

}  // namespace

double ScaledValue::value() const { return std::ldexp(mantissa, exp2); }

double ScaledValue::log_abs() const {
    if (mantissa == 0.0) return -std::numeric_limits<double>::infinity();
    return std::log(std::fabs(mantissa)) + exp2 * std::log(2.0);
}

PolyEval hermite_eval(int n, double x) {
    if (n < 0) throw std::invalid_argument("hermite: degree must be >= 0");
    PolyEval out;
    out.n = n;
    out.x = x;
    if (n == 0) {
        out.value = {1.0, 0};
        out.derivative = {0.0, 0};
        return out;
    }
    double prev = 1.0;       // H_{k-1}
    double cur = 2.0 * x;    // H_k
    int exp2 = 0;            // shared by prev and cur
    for (int k = 1; k < n; ++k) {
        const double next = 2.0 * x * cur - 2.0 * k * prev;
        prev = cur;
        cur = next;
        rescale(cur, prev, exp2);
    }
    out.value = {cur, exp2};
    out.derivative = {2.0 * n * prev, exp2};
    return out;
}

double hermite(int n, double x) { return hermite_eval(n, x).value.value(); }

PolyEval laguerre_eval(int n, double alpha, double x) {
    if (n < 0) throw std::invalid_argument("laguerre: degree must be >= 0");
    if (alpha <= -1.0)
        throw std::invalid_argument("laguerre: alpha must exceed -1");
    if (x < 0.0) throw std::invalid_argument("laguerre: x must be >= 0");
    PolyEval out;
    out.n = n;
    out.alpha = alpha;
    out.x = x;
    if (n == 0) {
        out.value = {1.0, 0};
        out.derivative = {0.0, 0};
        return out;
    }
    double prev = 1.0;               // L_{k-1}
    double cur = 1.0 + alpha - x;    // L_k
    int exp2 = 0;
    for (int k = 1; k < n; ++k) {
        const double next =
            ((2.0 * k + 1.0 + alpha - x) * cur - (k + alpha) * prev) / (k + 1.0);
        prev = cur;
        cur = next;
        rescale(cur, prev, exp2);
    }
    out.value = {cur, exp2};
    // d/dx L_n^a = -L_{n-1}^{a+1}
    out.derivative = laguerre_eval(n - 1, alpha + 1.0, x).value;
    out.derivative.mantissa = -out.derivative.mantissa;
    return out;
}

double laguerre(int n, double alpha, double x) {
    return laguerre_eval(n, alpha, x).value.value();
}

std::uint64_t binomial(int n, int k) {
    if (k < 0 || n < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    std::uint64_t acc = 1;
    for (int i = 1; i <= k; ++i) {
        // acc = acc * (n - k + i) / i, exact at every step since
        // acc holds C(n-k+i-1, i-1) and the product is divisible by i.
        const std::uint64_t num = static_cast<std::uint64_t>(n - k + i);
        std::uint64_t g = std::gcd(acc, static_cast<std::uint64_t>(i));
        std::uint64_t a = acc / g;
        std::uint64_t d = static_cast<std::uint64_t>(i) / g;
        const std::uint64_t nd = num / d;  // divisible: see above
        if (a > std::numeric_limits<std::uint64_t>::max() / nd)
            throw std::overflow_error("binomial: result exceeds 64 bits");
        acc = a * nd;
    }
    return acc;
}

std::uint64_t stars_and_bars(int N, int n) {
    if (N < 1 || n < 0)
        throw std::invalid_argument("stars_and_bars: need N >= 1, n >= 0");
    return binomial(n + N - 1, N - 1);
}

}  // namespace superint::specfun

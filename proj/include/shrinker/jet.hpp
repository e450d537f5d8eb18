#pragma once

#include <array>
#include <cmath>

namespace shrinker::numeric {

// Truncated Taylor series a_0 + a_1 e + ... + a_K e^K in one variable.
template <int K>
struct JetT {
    std::array<double, K + 1> c{};

    JetT() = default;
    JetT(double v) { c[0] = v; }
    static JetT variable(double at) {
        JetT j(at);
        if constexpr (K >= 1) j.c[1] = 1;
        return j;
    }
    double value() const { return c[0]; }
    // n-th derivative at the expansion point
    double derivative(int n) const {
        double f = 1;
        for (int i = 2; i <= n; ++i) f *= i;
        return c[n] * f;
    }

    JetT& operator+=(const JetT& o) {
        for (int i = 0; i <= K; ++i) c[i] += o.c[i];
        return *this;
    }
    JetT& operator-=(const JetT& o) {
        for (int i = 0; i <= K; ++i) c[i] -= o.c[i];
        return *this;
    }
    JetT& operator*=(double s) {
        for (auto& x : c) x *= s;
        return *this;
    }
    friend JetT operator+(JetT a, const JetT& b) { return a += b; }
    friend JetT operator-(JetT a, const JetT& b) { return a -= b; }
    friend JetT operator-(JetT a) { return a *= -1.0; }
    friend JetT operator*(JetT a, double s) { return a *= s; }
    friend JetT operator*(double s, JetT a) { return a *= s; }
    friend JetT operator*(const JetT& a, const JetT& b) {
        JetT out;
        for (int i = 0; i <= K; ++i)
            for (int j = 0; i + j <= K; ++j) out.c[i + j] += a.c[i] * b.c[j];
        return out;
    }
    JetT& operator*=(const JetT& o) { return *this = *this * o; }
    friend JetT operator/(const JetT& a, const JetT& b) {
        JetT q;
        for (int n = 0; n <= K; ++n) {
            double t = a.c[n];
            for (int k = 1; k <= n; ++k) t -= b.c[k] * q.c[n - k];
            q.c[n] = t / b.c[0];
        }
        return q;
    }
    friend JetT operator/(JetT a, double s) { return a *= 1.0 / s; }
    JetT& operator/=(const JetT& o) { return *this = *this / o; }

    friend JetT sqrt(const JetT& a) {
        JetT s;
        s.c[0] = std::sqrt(a.c[0]);
        for (int n = 1; n <= K; ++n) {
            double t = a.c[n];
            for (int k = 1; k < n; ++k) t -= s.c[k] * s.c[n - k];
            s.c[n] = t / (2 * s.c[0]);
        }
        return s;
    }
    friend JetT exp(const JetT& a) {
        JetT e;
        e.c[0] = std::exp(a.c[0]);
        for (int n = 1; n <= K; ++n) {
            double t = 0;
            for (int k = 1; k <= n; ++k) t += k * a.c[k] * e.c[n - k];
            e.c[n] = t / n;
        }
        return e;
    }
};

inline double value_of(double x) { return x; }
template <int K>
double value_of(const JetT<K>& j) {
    return j.value();
}

}  // namespace shrinker::numeric

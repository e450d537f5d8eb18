#include "shrinker/rational.hpp"

#include <cmath>
#include <stdexcept>

namespace shrinker {

BigRat parse_rational(std::string_view text) {
    std::string s(text);
    auto issue = [&] { return std::invalid_argument("malformed rational '" + s + "'"); };
    if (s.empty()) throw issue();
    std::size_t slash = s.find('/');
    auto valid_int = [](const std::string& t, bool allow_sign) {
        std::size_t i = 0;
        if (allow_sign && !t.empty() && (t[0] == '-' || t[0] == '+')) i = 1;
        if (i == t.size()) return false;
        for (; i < t.size(); ++i)
            if (t[i] < '0' || t[i] > '9') return false;
        return true;
    };
    std::string num = s.substr(0, slash);
    std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
    if (!valid_int(num, true) || !valid_int(den, false)) throw issue();
    if (num[0] == '+') num.erase(0, 1);
    BigInt n(num, 10), d(den, 10);
    if (d == 0) throw std::invalid_argument("zero denominator in '" + s + "'");
    BigRat q(n, d);
    q.canonicalize();
    return q;
}

std::string to_string(const BigRat& q) { return q.get_str(); }

BigRat pow(const BigRat& q, unsigned e) {
    BigRat out;
    mpz_pow_ui(out.get_num_mpz_t(), q.get_num_mpz_t(), e);
    mpz_pow_ui(out.get_den_mpz_t(), q.get_den_mpz_t(), e);
    return out;
}

BigInt double_factorial(long n) {
    BigInt out = 1;
    for (long i = n; i > 1; i -= 2) out *= i;
    return out;
}

BigRat snap_to_rational(double x, long max_den) {
    if (!std::isfinite(x)) throw std::invalid_argument("snap_to_rational: non-finite input");
    // Convergents p/q of x, stop before the denominator bound is exceeded.
    BigInt p0 = 0, q0 = 1, p1 = 1, q1 = 0;
    BigRat rest(x);
    for (int iter = 0; iter < 64; ++iter) {
        BigInt a = rest.get_num() / rest.get_den();
        if (rest < 0 && a * rest.get_den() != rest.get_num()) a -= 1;
        BigInt p2 = a * p1 + p0, q2 = a * q1 + q0;
        if (q2 > max_den) break;
        p0 = p1; q0 = q1; p1 = p2; q1 = q2;
        BigRat frac = rest - BigRat(a);
        if (frac == 0) break;
        rest = 1 / frac;
    }
    BigRat out(p1, q1);
    out.canonicalize();
    return out;
}

}  // namespace shrinker

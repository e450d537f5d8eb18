#include "shrinker/sphere_poly.hpp"
#include "shrinker/moments.hpp"
#include "shrinker/polytext.hpp"

#include <cmath>
#include <stdexcept>

namespace shrinker {

SpherePoly::SpherePoly(int k1, int k2) : f_(&RadicalField::get(k1, k2)) {
    if (nvars() > kMaxVars) throw std::invalid_argument("SpherePoly: too many variables");
}

SpherePoly::SpherePoly(const RadicalField& f, const RadicalScalar& c) : f_(&f) {
    add_term(Mono{}, c);
}

SpherePoly SpherePoly::coord(const RadicalField& f, int factor, int i) {
    SpherePoly p(f);
    int n = factor == 1 ? f.k1 + 1 : f.k2 + 1;
    if (i < 0 || i >= n) throw std::out_of_range("SpherePoly::coord: index out of range");
    Mono m{};
    m[p.var_begin(factor) + i] = 1;
    p.add_term(m, RadicalScalar(f, 1));
    return p;
}

void SpherePoly::add_term(const Mono& m, const RadicalScalar& c) {
    if (c.is_zero()) return;
    auto [it, fresh] = terms_.try_emplace(m, c);
    if (!fresh) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

SpherePoly& SpherePoly::operator+=(const SpherePoly& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
}

SpherePoly& SpherePoly::operator-=(const SpherePoly& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
}

SpherePoly& SpherePoly::operator*=(const RadicalScalar& c) {
    if (c.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [m, v] : terms_) v *= c;
    return *this;
}

SpherePoly& SpherePoly::operator*=(const BigRat& c) {
    if (c == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [m, v] : terms_) v *= c;
    return *this;
}

SpherePoly operator*(const SpherePoly& a, const SpherePoly& b) {
    SpherePoly out(*a.f_);
    const int n = a.nvars();
    for (const auto& [ma, ca] : a.terms_) {
        for (const auto& [mb, cb] : b.terms_) {
            Mono m{};
            for (int i = 0; i < n; ++i) m[i] = static_cast<std::uint8_t>(ma[i] + mb[i]);
            out.add_term(m, ca * cb);
        }
    }
    return out;
}

SpherePoly SpherePoly::normal_form() const {
    const int last[2] = {var_end(1) - 1, var_end(2) - 1};
    const BigRat* rsq[2] = {&f_->two_k1, &f_->two_k2};
    SpherePoly out(*f_);
    std::vector<std::pair<Mono, RadicalScalar>> work(terms_.begin(), terms_.end());
    while (!work.empty()) {
        auto [m, c] = std::move(work.back());
        work.pop_back();
        int b = m[last[0]] >= 2 ? 0 : m[last[1]] >= 2 ? 1 : -1;
        if (b < 0) {
            out.add_term(m, c);
            continue;
        }
        // x_last^2 = r^2 - sum_{i < last} x_i^2
        Mono base = m;
        base[last[b]] -= 2;
        work.emplace_back(base, c * *rsq[b]);
        for (int i = var_begin(b + 1); i < last[b]; ++i) {
            Mono t = base;
            t[i] += 2;
            work.emplace_back(t, -c);
        }
    }
    return out;
}

SpherePoly SpherePoly::partial(int var) const {
    SpherePoly out(*f_);
    for (const auto& [m, c] : terms_) {
        if (!m[var]) continue;
        Mono d = m;
        d[var] -= 1;
        out.add_term(d, c * BigRat(m[var]));
    }
    return out;
}

SpherePoly SpherePoly::euler(int factor) const {
    SpherePoly out(*f_);
    for (const auto& [m, c] : terms_) {
        int deg = 0;
        for (int i = var_begin(factor); i < var_end(factor); ++i) deg += m[i];
        if (deg) out.add_term(m, c * BigRat(deg));
    }
    return out;
}

int SpherePoly::max_degree() const {
    int best = -1;
    for (const auto& [m, c] : terms_) {
        int d = 0;
        for (int i = 0; i < nvars(); ++i) d += m[i];
        best = std::max(best, d);
    }
    return best;
}

RadicalScalar SpherePoly::integrate() const {
    RadicalScalar acc(*f_);
    MonomialExp e;
    e.b1.resize(f_->k1 + 1);
    e.b2.resize(f_->k2 + 1);
    for (const auto& [m, c] : terms_) {
        bool odd = false;
        for (int i = 0; i < nvars() && !odd; ++i) odd = m[i] & 1;
        if (odd) continue;
        for (int i = 0; i <= f_->k1; ++i) e.b1[i] = m[i];
        for (int j = 0; j <= f_->k2; ++j) e.b2[j] = m[f_->k1 + 1 + j];
        acc += c * product_moment_value(e, f_->k1, f_->k2);
    }
    return acc;
}

double SpherePoly::evaluate(const std::vector<double>& point) const {
    double out = 0;
    for (const auto& [m, c] : terms_) {
        double t = c.to_double();
        for (int i = 0; i < nvars(); ++i)
            for (int p = 0; p < m[i]; ++p) t *= point[i];
        out += t;
    }
    return out;
}

std::string SpherePoly::to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        std::string mono;
        for (int i = 0; i < nvars(); ++i) {
            if (!m[i]) continue;
            if (!mono.empty()) mono += " * ";
            mono += i <= f_->k1 ? "x" + std::to_string(i + 1) : "y" + std::to_string(i - f_->k1);
            if (m[i] > 1) mono += "^" + std::to_string(m[i]);
        }
        std::string coef = c.to_string();
        bool compound = !c.is_rational() && (c.c00() != 0 || (c.c10() != 0) + (c.c01() != 0) + (c.c11() != 0) > 1);
        if (compound) {
            out += (first ? "(" : " + (") + coef + ")";
            if (!mono.empty()) out += " * " + mono;
        } else {
            bool neg = coef[0] == '-';
            if (neg) coef.erase(0, 1);
            out += first ? (neg ? "-" : "") : (neg ? " - " : " + ");
            if (coef == "1" && !mono.empty()) out += mono;
            else out += mono.empty() ? coef : coef + " * " + mono;
        }
        first = false;
    }
    return out;
}

SpherePoly SpherePoly::parse(const RadicalField& f, std::string_view text) {
    PolyReader<SpherePoly> reader(
        text,
        [&f](std::string_view name) -> std::optional<SpherePoly> {
            if (name == "r1") return SpherePoly(f, RadicalScalar::r1(f));
            if (name == "r2") return SpherePoly(f, RadicalScalar::r2(f));
            if (name.size() >= 2 && (name[0] == 'x' || name[0] == 'y')) {
                int idx = 0;
                for (char ch : name.substr(1)) {
                    if (ch < '0' || ch > '9') return std::nullopt;
                    idx = idx * 10 + (ch - '0');
                }
                int factor = name[0] == 'x' ? 1 : 2;
                int n = factor == 1 ? f.k1 + 1 : f.k2 + 1;
                if (idx < 1 || idx > n) return std::nullopt;
                return SpherePoly::coord(f, factor, idx - 1);
            }
            return std::nullopt;
        },
        [&f](const BigRat& q) { return SpherePoly::constant(f, q); });
    return reader.parse();
}

bool NormalField::has_flat_part() const {
    for (const auto& p : z)
        if (!p.is_zero()) return true;
    return false;
}

bool NormalField::is_zero() const { return u1.is_zero() && u2.is_zero() && !has_flat_part(); }

NormalField& NormalField::operator+=(const NormalField& o) {
    u1 += o.u1;
    u2 += o.u2;
    if (z.size() < o.z.size()) z.resize(o.z.size(), SpherePoly(field()));
    for (std::size_t i = 0; i < o.z.size(); ++i) z[i] += o.z[i];
    return *this;
}

NormalField& NormalField::operator-=(const NormalField& o) {
    u1 -= o.u1;
    u2 -= o.u2;
    if (z.size() < o.z.size()) z.resize(o.z.size(), SpherePoly(field()));
    for (std::size_t i = 0; i < o.z.size(); ++i) z[i] -= o.z[i];
    return *this;
}

NormalField& NormalField::operator*=(const RadicalScalar& c) {
    u1 *= c;
    u2 *= c;
    for (auto& p : z) p *= c;
    return *this;
}

}  // namespace shrinker

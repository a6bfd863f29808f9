#include "optdeg/formulary.hpp"

#include <string>

#include <gmpxx.h>

#include "optdeg/error.hpp"

namespace optdeg {
namespace {

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_add_overflow(a, b, &r)) throw Error(Errc::invalid_argument, "integer overflow in formula");
    return r;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_mul_overflow(a, b, &r)) throw Error(Errc::invalid_argument, "integer overflow in formula");
    return r;
}

std::int64_t ipow(std::int64_t base, int e) {
    std::int64_t r = 1;
    for (int i = 0; i < e; ++i) r = checked_mul(r, base);
    return r;
}

std::int64_t binomial(std::int64_t n, std::int64_t k) {
    if (k < 0 || n < 0 || k > n) return 0;
    std::int64_t r = 1;
    for (std::int64_t i = 1; i <= k; ++i) r = checked_mul(r, n - k + i) / i;
    return r;
}

std::int64_t to_int64(const mpz_class& v) {
    if (!v.fits_slong_p()) throw Error(Errc::invalid_argument, "integer overflow in formula");
    return v.get_si();
}

void require_p(std::int64_t p) {
    if (p < 1) throw Error(Errc::invalid_argument, "p must be at least 1");
}

}  // namespace

int SegreVeroneseSpec::dim() const {
    int N = 0;
    for (auto [n, w] : factors) N += n - 1;
    return N;
}

std::int64_t polar_formula(std::int64_t p, const std::vector<std::int64_t>& delta, int n) {
    require_p(p);
    if (n < 2 || static_cast<int>(delta.size()) != n - 1)
        throw Error(Errc::length_mismatch, "expected " + std::to_string(n - 1) + " polar classes, got " +
                                               std::to_string(delta.size()));
    std::int64_t total = 0;
    for (int j = 0; j <= n - 2; ++j) total = checked_add(total, checked_mul(ipow(p - 1, n - 1 - j), delta[n - 2 - j]));
    return total;
}

std::int64_t chern_formula(std::int64_t p, const ChernDegrees& c) {
    require_p(p);
    const int m = c.dim();
    std::int64_t total = 0;
    for (int k = 0; k <= m; ++k) {
        auto term = checked_mul(c.degs[k], ipow(p, m + 1 - k) - 1);
        total = checked_add(total, k % 2 ? -term : term);
    }
    return total;
}

std::vector<std::int64_t> polar_from_chern(const ChernDegrees& c, int n) {
    const int m = c.dim();
    std::vector<std::int64_t> delta(n > 1 ? n - 1 : 0, 0);
    for (int i = 0; i <= n - 2 && i <= m; ++i) {
        std::int64_t s = 0;
        for (int k = i; k <= m; ++k) {
            auto term = checked_mul(binomial(k + 1, i + 1), c.degs[m - k]);
            s = checked_add(s, (m - k) % 2 ? -term : term);
        }
        delta[i] = s;
    }
    return delta;
}

std::int64_t hypersurface_formula(std::int64_t d, int n, std::int64_t p) {
    require_p(p);
    if (d < 1 || n < 2) throw Error(Errc::invalid_argument, "hypersurface formula needs d >= 1 and n >= 2");
    std::int64_t s = 0;
    for (int i = 0; i <= n - 2; ++i) s = checked_add(s, checked_mul(ipow(d - 1, i), ipow(p - 1, n - 2 - i)));
    return checked_mul(checked_mul(d, p - 1), s);
}

ChernDegrees hypersurface_chern(std::int64_t d, int n) {
    ChernDegrees c;
    for (int k = 0; k <= n - 2; ++k) {
        std::int64_t s = 0;
        for (int i = 0; i <= k; ++i) s = checked_add(s, checked_mul(binomial(n, i), ipow(-d, k - i)));
        c.degs.push_back(checked_mul(d, s));
    }
    return c;
}

std::int64_t ci_bound(const std::vector<std::int64_t>& degrees, int n, std::int64_t p) {
    require_p(p);
    const int c = static_cast<int>(degrees.size());
    if (c < 1 || c > n) throw Error(Errc::invalid_argument, "complete intersection bound needs 1 <= c <= n");
    std::vector<std::int64_t> bases{p - 1};
    std::int64_t product = 1;
    for (auto d : degrees) {
        if (d < 1) throw Error(Errc::invalid_argument, "degrees must be positive");
        bases.push_back(d - 1);
        product = checked_mul(product, d);
    }
    // Sum over compositions i_0 + ... + i_c = n - c.
    auto sum = [&](auto&& self, std::size_t slot, int remaining) -> std::int64_t {
        if (slot + 1 == bases.size()) return ipow(bases[slot], remaining);
        std::int64_t s = 0;
        for (int i = 0; i <= remaining; ++i)
            s = checked_add(s, checked_mul(ipow(bases[slot], i), self(self, slot + 1, remaining - i)));
        return s;
    };
    return checked_mul(product, sum(sum, 0, n - c));
}

std::int64_t toric_formula(std::int64_t p, const ToricVolumes& v) {
    require_p(p);
    if (v.volumes.empty() || v.volumes.back() <= 0)
        throw Error(Errc::invalid_argument, "toric volumes need V_m > 0");
    const int m = static_cast<int>(v.volumes.size()) - 1;
    std::int64_t total = 0;
    for (int k = 0; k <= m; ++k) {
        auto term = checked_mul(ipow(p, m + 1 - k) - 1, v.volumes[m - k]);
        total = checked_add(total, k % 2 ? -term : term);
    }
    return total;
}

ChernDegrees segre_veronese_chern(const SegreVeroneseSpec& spec) {
    for (auto [n, w] : spec.factors)
        if (n < 1 || w < 1) throw Error(Errc::invalid_argument, "Segre-Veronese factors need n >= 1 and omega >= 1");
    const int N = spec.dim();
    const std::size_t k = spec.factors.size();
    auto factorial = [](int v) {
        mpz_class r;
        mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(v));
        return r;
    };
    ChernDegrees c;
    for (int j = 0; j <= N; ++j) {
        mpq_class bracket = 0;
        std::vector<int> idx(k, 0);
        auto visit = [&](auto&& self, std::size_t l, int remaining) -> void {
            if (l == k) {
                if (remaining != 0) return;
                mpq_class prod = 1;
                for (std::size_t t = 0; t < k; ++t) {
                    auto [n, w] = spec.factors[t];
                    const int e = n - idx[t] - 1;
                    if (e < 0) return;
                    mpz_class num;
                    mpz_bin_uiui(num.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(idx[t]));
                    mpz_class wp;
                    mpz_ui_pow_ui(wp.get_mpz_t(), static_cast<unsigned long>(w), static_cast<unsigned long>(e));
                    prod *= mpq_class(num * wp, factorial(e));
                }
                bracket += prod;
                return;
            }
            for (int i = 0; i <= remaining; ++i) {
                idx[l] = i;
                self(self, l + 1, remaining - i);
            }
        };
        visit(visit, 0, j);
        mpq_class value = bracket * factorial(N - j);
        value.canonicalize();
        if (value.get_den() != 1) throw Error(Errc::invalid_argument, "non-integral Chern degree");
        c.degs.push_back(to_int64(value.get_num()));
    }
    return c;
}

std::int64_t segre_veronese_formula(std::int64_t p, const SegreVeroneseSpec& spec) {
    return chern_formula(p, segre_veronese_chern(spec));
}

std::int64_t veronese_formula(int n, std::int64_t omega, std::int64_t p) {
    require_p(p);
    if (n < 1 || omega < 1) throw Error(Errc::invalid_argument, "Veronese formula needs n >= 1 and omega >= 1");
    auto num = checked_add(ipow(checked_mul(omega, p) - 1, n), -ipow(omega - 1, n));
    return num / omega;
}

std::int64_t segre_p1_formula(int n, std::int64_t p) {
    require_p(p);
    return checked_mul(ipow(p - 1, n - 1), checked_add(checked_mul(n, checked_mul(p, p)), 2 - 2 * p));
}

std::int64_t curve_formula(std::int64_t d, std::int64_t genus, std::int64_t p) {
    require_p(p);
    return checked_mul(p - 1, checked_add(checked_mul(p + 1, d), 2 * genus - 2));
}

std::int64_t plane_curve_affine_formula(std::int64_t d, std::int64_t p) {
    require_p(p);
    return checked_mul(d, d + p - 2);
}

std::int64_t euler_formula(EulerMode mode, std::int64_t p, int m, std::int64_t chi) {
    const std::int64_t sign = m % 2 ? -1 : 1;
    if (mode == EulerMode::affine) return sign * chi;
    require_p(p);
    return checked_mul(sign * (p - 1), chi);
}

std::int64_t plane_curve_chi(std::int64_t d, std::int64_t p) { return d * (3 - d) - d * (p + 1); }

std::int64_t rational_normal_curve_chi(std::int64_t d, std::int64_t p) { return 2 - d * (p + 1); }

}  // namespace optdeg

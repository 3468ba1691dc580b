#include "hkface/limits.hpp"

namespace hkface {

Rational PowerTable::ehk_at(int n) const {
    if (n <= 0) return Rational(0);
    auto it = ehk.find(n);
    if (it == ehk.end())
        throw std::invalid_argument("power table has no e_HK(I^" + std::to_string(n) + ")");
    return it->second;
}

void PowerTable::validate() const {
    if (d < 1) throw std::invalid_argument("power table: dimension d must be >= 1");
    if (r < 0) throw std::invalid_argument("power table: reduction number r must be >= 0");
    for (int n = 1; n <= r; ++n) {
        auto it = ehk.find(n);
        if (it == ehk.end())
            throw std::invalid_argument("power table: missing e_HK(I^" + std::to_string(n) + ")");
        if (it->second <= 0)
            throw std::invalid_argument("power table: e_HK(I^" + std::to_string(n) + ") must be positive");
    }
}

Rational delta_d(const std::function<Rational(int)>& H, int d, int m) {
    if (d < 1) throw std::invalid_argument("delta_d: d must be positive");
    Rational acc(0);
    for (int j = 0; j <= d; ++j) {
        if (m - j <= 0) continue;  // H vanishes on non-positive arguments
        Rational term = Rational(binomial(static_cast<long>(d), static_cast<unsigned long>(j))) * H(m - j);
        acc += (j % 2 == 0) ? term : -term;
    }
    return acc;
}

namespace {

// e0 - sum_{j=0}^{d} (-1)^j C(d,j) ehk(n-j); the bracketed factor of the
// L_i sum.
Rational bracket(const PowerTable& t, int n) {
    Rational acc = t.e0;
    for (int j = 0; j <= t.d; ++j) {
        Rational term = Rational(binomial(static_cast<long>(t.d), static_cast<unsigned long>(j))) * t.ehk_at(n - j);
        acc -= (j % 2 == 0) ? term : -term;
    }
    return acc;
}

}  // namespace

Rational limit_L_i(const PowerTable& t, int i) {
    t.validate();
    if (i < 1 || i > t.d) throw std::invalid_argument("limit_L_i: i must lie in 1..d");
    Rational acc(0);
    for (int n = i; n <= t.r; ++n)
        acc += Rational(binomial(static_cast<long>(n - 1), static_cast<unsigned long>(i - 1))) * bracket(t, n);
    return acc;
}

Rational predicted_ehk(const PowerTable& t, const std::vector<Rational>& L, long n) {
    t.validate();
    if (static_cast<int>(L.size()) != t.d + 1)
        throw std::invalid_argument("predicted_ehk: expected d+1 limits");
    if (n < t.r - t.d + 1)
        throw std::invalid_argument("predicted_ehk: n below validity range (need n >= r-d+1 = " +
                                    std::to_string(t.r - t.d + 1) + ")");
    Rational acc(0);
    for (int i = 0; i <= t.d; ++i) {
        Rational term = L[static_cast<size_t>(i)] *
                        Rational(binomial(n + t.d - 1 - i, static_cast<unsigned long>(t.d - i)));
        acc += (i % 2 == 0) ? term : -term;
    }
    return acc;
}

std::pair<Rational, Rational> dim2_closed_forms(const PowerTable& t) {
    t.validate();
    if (t.d != 2) throw std::invalid_argument("dim2_closed_forms: table dimension must be 2");
    const Rational ehk_r = t.ehk_at(t.r);
    const Rational ehk_r1 = t.ehk_at(t.r - 1);
    Rational L1 = Rational(t.r) * t.e0 - ehk_r + ehk_r1;
    Rational L2 = Rational(binomial(static_cast<long>(t.r), 2)) * t.e0 - Rational(t.r - 1) * ehk_r +
                  Rational(t.r) * ehk_r1;
    return {L1, L2};
}

Dim1Check dim1_check(const PowerTable& t) {
    t.validate();
    if (t.d != 1) throw std::invalid_argument("dim1_check: table dimension must be 1");
    Rational disc = Rational(t.r) * t.e0 - t.ehk_at(t.r);
    return {disc, disc == 0};
}

}  // namespace hkface

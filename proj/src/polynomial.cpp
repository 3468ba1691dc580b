#include "hkface/polynomial.hpp"

#include <sstream>
#include <stdexcept>

namespace hkface {

UnivariatePolynomial::UnivariatePolynomial(Var v, std::vector<Rational> coeffs)
    : var_(v), coeffs_(std::move(coeffs)) {
    trim();
}

UnivariatePolynomial UnivariatePolynomial::constant(Var v, const Rational& c) {
    return UnivariatePolynomial(v, {c});
}

UnivariatePolynomial UnivariatePolynomial::monomial(Var v, int degree, const Rational& c) {
    if (degree < 0) throw std::invalid_argument("monomial: negative degree");
    std::vector<Rational> coeffs(static_cast<size_t>(degree) + 1, Rational(0));
    coeffs.back() = c;
    return UnivariatePolynomial(v, std::move(coeffs));
}

void UnivariatePolynomial::trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Rational UnivariatePolynomial::coeff(int i) const {
    if (i < 0 || static_cast<size_t>(i) >= coeffs_.size()) return Rational(0);
    return coeffs_[static_cast<size_t>(i)];
}

Rational UnivariatePolynomial::evaluate(const Rational& x) const {
    Rational acc(0);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

UnivariatePolynomial UnivariatePolynomial::operator-() const {
    UnivariatePolynomial r(*this);
    for (auto& c : r.coeffs_) c = -c;
    return r;
}

namespace {
void check_same_var(Var a, Var b) {
    if (a != b) throw std::invalid_argument("polynomial arithmetic across different variables");
}
}  // namespace

UnivariatePolynomial& UnivariatePolynomial::operator+=(const UnivariatePolynomial& o) {
    if (!o.is_zero() && !is_zero()) check_same_var(var_, o.var_);
    if (is_zero()) var_ = o.var_;
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), Rational(0));
    for (size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
    trim();
    return *this;
}

UnivariatePolynomial& UnivariatePolynomial::operator-=(const UnivariatePolynomial& o) {
    return *this += -o;
}

UnivariatePolynomial& UnivariatePolynomial::operator*=(const UnivariatePolynomial& o) {
    if (!o.is_zero() && !is_zero()) check_same_var(var_, o.var_);
    if (is_zero() || o.is_zero()) {
        coeffs_.clear();
        return *this;
    }
    std::vector<Rational> out(coeffs_.size() + o.coeffs_.size() - 1, Rational(0));
    for (size_t i = 0; i < coeffs_.size(); ++i)
        for (size_t j = 0; j < o.coeffs_.size(); ++j) out[i + j] += coeffs_[i] * o.coeffs_[j];
    coeffs_ = std::move(out);
    trim();
    return *this;
}

UnivariatePolynomial& UnivariatePolynomial::operator*=(const Rational& c) {
    if (c == 0) {
        coeffs_.clear();
        return *this;
    }
    for (auto& x : coeffs_) x *= c;
    return *this;
}

namespace {

// Shared term renderer: prints "coeff*part1*part2" with unit coefficients
// elided unless the term is constant.
std::string render_term(const Rational& coeff, const std::vector<std::string>& parts, bool first) {
    std::ostringstream os;
    Rational a = coeff > 0 ? coeff : Rational(-coeff);
    if (first) {
        if (coeff < 0) os << "-";
    } else {
        os << (coeff < 0 ? " - " : " + ");
    }
    if (parts.empty()) {
        os << a.get_str();
    } else {
        bool wrote = false;
        if (a != 1) {
            os << a.get_str();
            wrote = true;
        }
        for (const auto& p : parts) {
            if (wrote) os << "*";
            os << p;
            wrote = true;
        }
    }
    return os.str();
}

std::string power_part(const char* name, int deg) {
    if (deg == 1) return name;
    return std::string(name) + "^" + std::to_string(deg);
}

}  // namespace

std::string UnivariatePolynomial::str() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int i = degree(); i >= 0; --i) {
        const Rational& c = coeffs_[static_cast<size_t>(i)];
        if (c == 0) continue;
        std::vector<std::string> parts;
        if (i > 0) parts.push_back(power_part(var_name(var_), i));
        os << render_term(c, parts, first);
        first = false;
    }
    return os.str();
}

UnivariatePolynomial binomial_basis_poly(Var v, int b) {
    if (b < 0) throw std::invalid_argument("binomial_basis_poly: negative index");
    UnivariatePolynomial p = UnivariatePolynomial::constant(v, Rational(1));
    for (int j = 0; j < b; ++j) {
        // multiply by (x + j)
        UnivariatePolynomial factor(v, {Rational(j), Rational(1)});
        p *= factor;
    }
    p *= make_rational(1, factorial(static_cast<unsigned long>(b)));
    return p;
}

BivariatePolynomial BivariatePolynomial::constant(const Rational& c) { return monomial(0, 0, c); }

BivariatePolynomial BivariatePolynomial::monomial(int q_deg, int k_deg, const Rational& c) {
    BivariatePolynomial p;
    p.add_term(q_deg, k_deg, c);
    return p;
}

void BivariatePolynomial::add_term(int q_deg, int k_deg, const Rational& c) {
    if (q_deg < 0 || k_deg < 0) throw std::invalid_argument("bivariate term with negative degree");
    if (c == 0) return;
    auto key = Key{q_deg, k_deg};
    auto it = terms_.find(key);
    if (it == terms_.end()) {
        terms_.emplace(key, c);
    } else {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

int BivariatePolynomial::degree_q() const {
    int d = -1;
    for (const auto& [key, c] : terms_) d = std::max(d, key.first);
    return d;
}

int BivariatePolynomial::degree_k() const {
    int d = -1;
    for (const auto& [key, c] : terms_) d = std::max(d, key.second);
    return d;
}

Rational BivariatePolynomial::coeff(int q_deg, int k_deg) const {
    auto it = terms_.find(Key{q_deg, k_deg});
    return it == terms_.end() ? Rational(0) : it->second;
}

Rational BivariatePolynomial::evaluate(const Rational& q0, const Rational& k0) const {
    // Powers built incrementally; map iteration is degree-sorted.
    Rational acc(0);
    for (const auto& [key, c] : terms_) {
        Rational term = c;
        for (int i = 0; i < key.first; ++i) term *= q0;
        for (int i = 0; i < key.second; ++i) term *= k0;
        acc += term;
    }
    return acc;
}

UnivariatePolynomial BivariatePolynomial::coefficient_of_q_power(int a) const {
    UnivariatePolynomial p(Var::k);
    for (const auto& [key, c] : terms_)
        if (key.first == a) p += UnivariatePolynomial::monomial(Var::k, key.second, c);
    return p;
}

UnivariatePolynomial BivariatePolynomial::coefficient_of_k_power(int b) const {
    UnivariatePolynomial p(Var::q);
    for (const auto& [key, c] : terms_)
        if (key.second == b) p += UnivariatePolynomial::monomial(Var::q, key.first, c);
    return p;
}

BivariatePolynomial BivariatePolynomial::operator-() const {
    BivariatePolynomial r(*this);
    for (auto& [key, c] : r.terms_) c = -c;
    return r;
}

BivariatePolynomial& BivariatePolynomial::operator+=(const BivariatePolynomial& o) {
    for (const auto& [key, c] : o.terms_) add_term(key.first, key.second, c);
    return *this;
}

BivariatePolynomial& BivariatePolynomial::operator-=(const BivariatePolynomial& o) {
    for (const auto& [key, c] : o.terms_) add_term(key.first, key.second, -c);
    return *this;
}

BivariatePolynomial& BivariatePolynomial::operator*=(const BivariatePolynomial& o) {
    BivariatePolynomial out;
    for (const auto& [ka, ca] : terms_)
        for (const auto& [kb, cb] : o.terms_) out.add_term(ka.first + kb.first, ka.second + kb.second, ca * cb);
    *this = std::move(out);
    return *this;
}

BivariatePolynomial& BivariatePolynomial::operator*=(const Rational& c) {
    if (c == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [key, x] : terms_) x *= c;
    return *this;
}

BivariatePolynomial to_bivariate(const UnivariatePolynomial& p) {
    BivariatePolynomial out;
    for (int i = 0; i <= p.degree(); ++i) {
        if (p.var() == Var::q)
            out.add_term(i, 0, p.coeff(i));
        else
            out.add_term(0, i, p.coeff(i));
    }
    return out;
}

namespace {

// Terms in canonical order: q-degree descending, then k-degree descending.
template <typename F>
void for_each_canonical(const std::map<BivariatePolynomial::Key, Rational>& terms, F&& fn) {
    for (auto it = terms.rbegin(); it != terms.rend(); ++it) fn(it->first, it->second);
}

}  // namespace

std::string BivariatePolynomial::str_expanded() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for_each_canonical(terms_, [&](const Key& key, const Rational& c) {
        std::vector<std::string> parts;
        if (key.first > 0) parts.push_back(power_part("q", key.first));
        if (key.second > 0) parts.push_back(power_part("k", key.second));
        os << render_term(c, parts, first);
        first = false;
    });
    return os.str();
}

std::map<BivariatePolynomial::Key, Rational> BivariatePolynomial::binomial_basis_terms() const {
    // Per q-slice, peel the k-polynomial from the top against C(k+b-1, b),
    // whose leading coefficient is 1/b!.
    std::map<Key, Rational> out;
    int dq = degree_q();
    for (int a = 0; a <= dq; ++a) {
        UnivariatePolynomial slice = coefficient_of_q_power(a);
        while (!slice.is_zero()) {
            int b = slice.degree();
            Rational c = slice.coeff(b) * Rational(factorial(static_cast<unsigned long>(b)));
            out[Key{a, b}] = c;
            slice -= c * binom_in_k(b);
        }
    }
    return out;
}

std::string BivariatePolynomial::str_binomial_basis() const {
    auto basis = binomial_basis_terms();
    if (basis.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for_each_canonical(basis, [&](const Key& key, const Rational& c) {
        std::vector<std::string> parts;
        if (key.first > 0) parts.push_back(power_part("q", key.first));
        if (key.second == 1) {
            parts.push_back("k");
        } else if (key.second >= 2) {
            parts.push_back("C(k+" + std::to_string(key.second - 1) + "," + std::to_string(key.second) + ")");
        }
        os << render_term(c, parts, first);
        first = false;
    });
    return os.str();
}

std::vector<UnivariatePolynomial> binomial_basis_decompose(const BivariatePolynomial& P, int d) {
    if (d < 0) throw std::invalid_argument("binomial_basis_decompose: negative dimension");
    if (P.degree_k() > d)
        throw std::invalid_argument("binomial_basis_decompose: degree in k exceeds dimension " + std::to_string(d));

    std::vector<UnivariatePolynomial> c(static_cast<size_t>(d) + 1, UnivariatePolynomial(Var::q));
    BivariatePolynomial rem = P;
    for (int i = 0; i <= d; ++i) {
        int b = d - i;
        // coefficient of k^b in rem, a polynomial in q
        UnivariatePolynomial lead = rem.coefficient_of_k_power(b);
        Rational sign((i % 2 == 0) ? 1 : -1);
        UnivariatePolynomial ci = lead * (sign * Rational(factorial(static_cast<unsigned long>(b))));
        c[static_cast<size_t>(i)] = ci;
        rem -= to_bivariate(ci) * to_bivariate(binom_in_k(b)) * sign;
    }
    if (!rem.is_zero()) throw std::logic_error("binomial_basis_decompose: nonzero remainder");
    return c;
}

BivariatePolynomial binomial_basis_recompose(const std::vector<UnivariatePolynomial>& c) {
    BivariatePolynomial out;
    int d = static_cast<int>(c.size()) - 1;
    for (int i = 0; i <= d; ++i) {
        Rational sign((i % 2 == 0) ? 1 : -1);
        out += to_bivariate(c[static_cast<size_t>(i)]) * to_bivariate(binom_in_k(d - i)) * sign;
    }
    return out;
}

}  // namespace hkface

#include "bicyclic/polynomial.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace bicyclic {

IntPolynomial::IntPolynomial(std::initializer_list<long> ascending)
{
    for (long v : ascending)
        c_.emplace_back(v);
    trim();
}

IntPolynomial::IntPolynomial(std::vector<mpz_class> ascending) : c_(std::move(ascending))
{
    trim();
}

IntPolynomial IntPolynomial::constant(const mpz_class & c)
{
    return IntPolynomial(std::vector<mpz_class>{c});
}

IntPolynomial IntPolynomial::monomial(int degree, const mpz_class & c)
{
    std::vector<mpz_class> v(degree + 1);
    v[degree] = c;
    return IntPolynomial(std::move(v));
}

IntPolynomial IntPolynomial::linear(long root)
{
    return IntPolynomial{-root, 1};
}

void IntPolynomial::trim()
{
    while (!c_.empty() && c_.back() == 0)
        c_.pop_back();
}

mpz_class IntPolynomial::coefficient(int k) const
{
    if (k < 0 || k > degree())
        return 0;
    return c_[k];
}

IntPolynomial & IntPolynomial::operator+=(const IntPolynomial & o)
{
    if (o.c_.size() > c_.size())
        c_.resize(o.c_.size());
    for (std::size_t i = 0; i < o.c_.size(); ++i)
        c_[i] += o.c_[i];
    trim();
    return *this;
}

IntPolynomial & IntPolynomial::operator-=(const IntPolynomial & o)
{
    if (o.c_.size() > c_.size())
        c_.resize(o.c_.size());
    for (std::size_t i = 0; i < o.c_.size(); ++i)
        c_[i] -= o.c_[i];
    trim();
    return *this;
}

IntPolynomial & IntPolynomial::operator*=(const IntPolynomial & o)
{
    if (c_.empty() || o.c_.empty()) {
        c_.clear();
        return *this;
    }
    std::vector<mpz_class> r(c_.size() + o.c_.size() - 1);
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0)
            continue;
        for (std::size_t j = 0; j < o.c_.size(); ++j)
            r[i + j] += c_[i] * o.c_[j];
    }
    c_ = std::move(r);
    trim();
    return *this;
}

IntPolynomial & IntPolynomial::operator*=(const mpz_class & k)
{
    for (auto & v : c_)
        v *= k;
    trim();
    return *this;
}

IntPolynomial IntPolynomial::operator-() const
{
    IntPolynomial r = *this;
    for (auto & v : r.c_)
        v = -v;
    return r;
}

IntPolynomial IntPolynomial::pow(int e) const
{
    if (e < 0)
        throw std::domain_error("negative polynomial power");
    IntPolynomial result = constant(1), base = *this;
    while (e > 0) {
        if (e & 1)
            result *= base;
        e >>= 1;
        if (e)
            base *= base;
    }
    return result;
}

IntPolynomial IntPolynomial::derivative() const
{
    if (c_.size() <= 1)
        return {};
    std::vector<mpz_class> d(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i)
        d[i - 1] = c_[i] * static_cast<unsigned long>(i);
    return IntPolynomial(std::move(d));
}

IntPolynomial IntPolynomial::reflected() const
{
    IntPolynomial r = *this;
    for (std::size_t i = 1; i < r.c_.size(); i += 2)
        r.c_[i] = -r.c_[i];
    return r;
}

mpz_class IntPolynomial::content() const
{
    mpz_class g = 0;
    for (const auto & v : c_)
        g = gcd(g, v);
    return g;
}

IntPolynomial IntPolynomial::primitive() const
{
    if (c_.empty())
        return {};
    mpz_class g = content();
    if (c_.back() < 0)
        g = -g;
    IntPolynomial r = *this;
    for (auto & v : r.c_)
        mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), g.get_mpz_t());
    return r;
}

IntPolynomial IntPolynomial::exact_div(const IntPolynomial & d) const
{
    if (d.is_zero())
        throw std::domain_error("division by the zero polynomial");
    if (is_zero())
        return {};
    if (degree() < d.degree())
        throw std::domain_error("inexact polynomial division");
    std::vector<mpz_class> rem = c_;
    std::vector<mpz_class> q(degree() - d.degree() + 1);
    const mpz_class & lead = d.c_.back();
    for (int k = degree() - d.degree(); k >= 0; --k) {
        mpz_class & top = rem[k + d.degree()];
        if (top == 0)
            continue;
        if (!mpz_divisible_p(top.get_mpz_t(), lead.get_mpz_t()))
            throw std::domain_error("inexact polynomial division");
        mpz_class factor = top / lead;
        q[k] = factor;
        for (int j = 0; j <= d.degree(); ++j)
            rem[k + j] -= factor * d.c_[j];
    }
    if (std::any_of(rem.begin(), rem.end(), [](const mpz_class & v) { return v != 0; }))
        throw std::domain_error("inexact polynomial division");
    return IntPolynomial(std::move(q));
}

IntPolynomial IntPolynomial::pseudo_remainder(const IntPolynomial & d) const
{
    if (d.is_zero())
        throw std::domain_error("pseudo-remainder by the zero polynomial");
    std::vector<mpz_class> r = c_;
    const int dd = d.degree();
    const mpz_class & lead = d.c_.back();
    int steps = 0;
    const int expected = std::max(0, degree() - dd + 1);
    while (static_cast<int>(r.size()) - 1 >= dd && !r.empty()) {
        int top = static_cast<int>(r.size()) - 1;
        mpz_class t = r[top];
        for (auto & v : r)
            v *= lead;
        for (int j = 0; j <= dd; ++j)
            r[top - dd + j] -= t * d.c_[j];
        ++steps;
        while (!r.empty() && r.back() == 0)
            r.pop_back();
    }
    for (; steps < expected; ++steps)
        for (auto & v : r)
            v *= lead;
    return IntPolynomial(std::move(r));
}

mpz_class IntPolynomial::evaluate(const mpz_class & x) const
{
    mpz_class acc = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it)
        acc = acc * x + *it;
    return acc;
}

mpq_class IntPolynomial::evaluate(const mpq_class & x) const
{
    mpq_class acc = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it)
        acc = acc * x + mpq_class(*it);
    return acc;
}

int IntPolynomial::sign_at(const mpq_class & x) const
{
    // b^d p(a/b) = sum c_i a^i b^(d-i) has the sign of p(a/b) since b > 0.
    const mpz_class & a = x.get_num();
    const mpz_class & b = x.get_den();
    mpz_class acc = 0, bpow = 1;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
        acc = acc * a + *it * bpow;
        bpow *= b;
    }
    return sgn(acc);
}

IntPolynomial IntPolynomial::shifted(const mpq_class & x) const
{
    if (c_.empty())
        return {};
    const int d = degree();
    const mpz_class & a = x.get_num();
    const mpz_class & b = x.get_den();
    // r(z) = b^d p(z / b), then Taylor shift z = a + t.
    std::vector<mpz_class> r(c_.size());
    mpz_class bpow = 1;
    for (int i = d; i >= 0; --i) {
        r[i] = c_[i] * bpow;
        bpow *= b;
    }
    for (int i = 0; i < d; ++i)
        for (int j = d - 1; j >= i; --j)
            r[j] += a * r[j + 1];
    return IntPolynomial(std::move(r));
}

std::string IntPolynomial::coeff_string() const
{
    if (c_.empty())
        return "0";
    std::ostringstream os;
    for (std::size_t i = 0; i < c_.size(); ++i)
        os << (i ? " " : "") << c_[i].get_str();
    return os.str();
}

std::string IntPolynomial::to_string(const char * var) const
{
    if (c_.empty())
        return "0";
    std::ostringstream os;
    bool first = true;
    for (int i = degree(); i >= 0; --i) {
        const mpz_class & v = c_[i];
        if (v == 0)
            continue;
        mpz_class mag = abs(v);
        os << (v < 0 ? (first ? "-" : " - ") : (first ? "" : " + "));
        if (mag != 1 || i == 0)
            os << mag.get_str();
        if (i > 0)
            os << var;
        if (i > 1)
            os << '^' << i;
        first = false;
    }
    return os.str();
}

IntPolynomial gcd(IntPolynomial a, IntPolynomial b)
{
    if (a.is_zero())
        return b.primitive();
    if (b.is_zero())
        return a.primitive();
    a = a.primitive();
    b = b.primitive();
    if (a.degree() < b.degree())
        std::swap(a, b);
    while (!b.is_zero()) {
        IntPolynomial r = a.pseudo_remainder(b);
        a = std::move(b);
        b = r.is_zero() ? r : r.primitive();
    }
    return a.primitive();
}

IntPolynomial square_free_part(const IntPolynomial & p)
{
    if (p.degree() <= 0)
        return p;
    IntPolynomial g = gcd(p, p.derivative());
    return p.exact_div(g).primitive();
}

int sign_variations(const std::vector<mpz_class> & coeffs)
{
    int changes = 0, last = 0;
    for (const auto & v : coeffs) {
        int s = sgn(v);
        if (s == 0)
            continue;
        if (last != 0 && s != last)
            ++changes;
        last = s;
    }
    return changes;
}

}  // namespace bicyclic

#include "sbrep/scalar.hpp"

#include <cstddef>

namespace sbrep {

Rational rational_from_strings(const std::string& num, const std::string& den) {
    mpz_class n, d;
    if (n.set_str(num, 10) != 0) fail(Errc::parse_error, "bad numerator '" + num + "'");
    if (d.set_str(den, 10) != 0) fail(Errc::parse_error, "bad denominator '" + den + "'");
    if (d == 0) fail(Errc::division_by_zero, "rational with zero denominator");
    Rational q(n, d);
    q.canonicalize();
    return q;
}

Rational rational_from_literal(const std::string& text) {
    std::string s = text;
    if (!s.empty() && s[0] == '+') s = s.substr(1);
    auto slash = s.find('/');
    if (slash == std::string::npos) return rational_from_strings(s, "1");
    return rational_from_strings(s.substr(0, slash), s.substr(slash + 1));
}

std::optional<Rational> rational_sqrt(const Rational& q) {
    if (q < 0) return std::nullopt;
    const mpz_class& num = q.get_num();
    const mpz_class& den = q.get_den();
    if (mpz_perfect_square_p(num.get_mpz_t()) == 0) return std::nullopt;
    if (mpz_perfect_square_p(den.get_mpz_t()) == 0) return std::nullopt;
    mpz_class rn, rd;
    mpz_sqrt(rn.get_mpz_t(), num.get_mpz_t());
    mpz_sqrt(rd.get_mpz_t(), den.get_mpz_t());
    Rational r(rn, rd);
    r.canonicalize();
    return r;
}

GaussianRational GaussianRational::inverse() const {
    Rational n = norm();
    if (n == 0) fail(Errc::division_by_zero, "inverse of 0 in Q(i)");
    return {Rational(re_ / n), Rational(-im_ / n)};
}

GaussianRational GaussianRational::pow(long e) const {
    if (e < 0) return inverse().pow(-e);
    GaussianRational acc(1), base = *this;
    while (e > 0) {
        if (e & 1) acc *= base;
        base *= base;
        e >>= 1;
    }
    return acc;
}

std::string GaussianRational::str() const {
    if (im_ == 0) return re_.get_str();
    std::string im_part = (im_ == 1) ? "i" : (im_ == -1) ? "-i" : im_.get_str() + "i";
    if (re_ == 0) return im_part;
    if (im_ > 0) return re_.get_str() + "+" + im_part;
    return re_.get_str() + im_part;
}

std::optional<GaussianRational> gaussian_sqrt(const GaussianRational& z) {
    if (z.is_zero()) return GaussianRational(0);
    const Rational& x = z.re();
    const Rational& y = z.im();
    if (y == 0) {
        if (x > 0) {
            auto r = rational_sqrt(x);
            if (!r) return std::nullopt;
            return GaussianRational(*r);
        }
        auto r = rational_sqrt(Rational(-x));
        if (!r) return std::nullopt;
        return GaussianRational(Rational(0), *r);
    }
    // sqrt(x + yi) = u + vi with u^2 = (x + |z|)/2, v = y/(2u).
    auto s = rational_sqrt(z.norm());
    if (!s) return std::nullopt;
    Rational u2 = (x + *s) / 2;
    auto u = rational_sqrt(u2);
    if (!u || *u == 0) return std::nullopt;
    Rational v = y / (2 * (*u));
    GaussianRational root(*u, v);
    if (root * root != z) return std::nullopt;
    return root;
}

namespace {

// Splits "1+i"-style text at the sign separating real and imaginary parts.
GaussianRational parse_compact(const std::string& s) {
    if (s.empty()) fail(Errc::parse_error, "empty scalar literal");
    // pure imaginary forms
    if (s == "i") return GaussianRational::i();
    if (s == "-i") return -GaussianRational::i();
    if (s.back() == 'i') {
        std::string body = s.substr(0, s.size() - 1);
        // find a +/- separating two parts (not at position 0, not after '/')
        for (std::size_t p = 1; p < body.size(); ++p) {
            if ((body[p] == '+' || body[p] == '-') && body[p - 1] != '/') {
                std::string rp = body.substr(0, p);
                std::string ip = body.substr(p);
                if (ip == "+") ip = "1";
                else if (ip == "-") ip = "-1";
                return {rational_from_literal(rp), rational_from_literal(ip)};
            }
        }
        return {Rational(0), rational_from_literal(body)};
    }
    return {rational_from_literal(s), Rational(0)};
}

}  // namespace

GaussianRational gaussian_from_literal(const std::string& text) {
    std::string s;
    for (char c : text)
        if (c != ' ') s.push_back(c);
    return parse_compact(s);
}

}  // namespace sbrep

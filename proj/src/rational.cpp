#include "parametrix/rational.hpp"

#include <ostream>
#include <stdexcept>

namespace parametrix {

Rational::Rational(long n, long d) : v_(n, d) {
    if (d == 0) throw std::invalid_argument("rational: zero denominator");
    v_.canonicalize();
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) throw std::invalid_argument("rational: division by zero");
    v_ /= o.v_;
    return *this;
}

Rational Rational::parse(const std::string& text) {
    if (text.empty()) throw std::invalid_argument("rational: empty literal");
    mpq_class v;
    if (v.set_str(text, 10) != 0)
        throw std::invalid_argument("rational: bad literal '" + text + "'");
    if (v.get_den() == 0) throw std::invalid_argument("rational: zero denominator");
    v.canonicalize();
    return Rational(std::move(v));
}

Rational Rational::pow(unsigned e) const {
    mpq_class out(1);
    mpq_class base = v_;
    while (e) {
        if (e & 1) out *= base;
        base *= base;
        e >>= 1;
    }
    return Rational(std::move(out));
}

std::string Rational::str() const { return v_.get_str(); }

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

}  // namespace parametrix

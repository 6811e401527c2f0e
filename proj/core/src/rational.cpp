#include "contextkit/rational.hpp"

#include <ostream>
#include <stdexcept>

namespace contextkit {

Rational::Rational(long num, long den) {
    if (den == 0) throw std::invalid_argument("Rational: zero denominator");
    q_ = mpq_class(num, den);
    q_.canonicalize();
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) throw std::invalid_argument("Rational: division by zero");
    q_ /= o.q_;
    return *this;
}

Rational Rational::parse(const std::string& text) {
    if (text.empty()) throw std::invalid_argument("Rational: empty string");
    Rational r;
    try {
        r.q_ = mpq_class(text);
    } catch (const std::invalid_argument&) {
        throw std::invalid_argument("Rational: cannot parse '" + text + "'");
    }
    if (r.q_.get_den() == 0) throw std::invalid_argument("Rational: zero denominator in '" + text + "'");
    r.q_.canonicalize();
    return r;
}

std::string Rational::str() const {
    std::string s = q_.get_num().get_str();
    if (q_.get_den() != 1) s += "/" + q_.get_den().get_str();
    return s;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

}  // namespace contextkit

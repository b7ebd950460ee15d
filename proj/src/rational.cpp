#include "sigma_lab/rational.hpp"

#include <stdexcept>

namespace sigmalab {

Rational::Rational(long long num, long long den) {
    if (den == 0) throw std::invalid_argument("Rational: zero denominator");
    v_ = mpq_class(static_cast<long>(num), static_cast<long>(den));
    v_.canonicalize();
}

Rational Rational::from_string(const std::string& text) {
    const auto slash = text.find('/');
    try {
        if (slash == std::string::npos) {
            return Rational(mpq_class(mpz_class(text)));
        }
        mpz_class num(text.substr(0, slash));
        mpz_class den(text.substr(slash + 1));
        if (den == 0) throw std::invalid_argument("zero denominator");
        mpq_class q(num, den);
        q.canonicalize();
        return Rational(std::move(q));
    } catch (const std::invalid_argument&) {
        throw std::invalid_argument("Rational: cannot parse '" + text + "'");
    }
}

Rational operator/(const Rational& a, const Rational& b) {
    if (b.is_zero()) throw std::invalid_argument("Rational: division by zero");
    return Rational(mpq_class(a.v_ / b.v_));
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) throw std::invalid_argument("Rational: division by zero");
    v_ /= o.v_;
    return *this;
}

std::string Rational::str() const {
    if (is_integer()) return v_.get_num().get_str();
    return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

}  // namespace sigmalab

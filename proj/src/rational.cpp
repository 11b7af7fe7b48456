#include "qring/rational.hpp"

#include "qring/errors.hpp"

namespace qring {

Rational make_rational(const Integer& num, const Integer& den) {
    if (den == 0) throw RangeError("rational with zero denominator");
    Rational q(num, den);
    q.canonicalize();
    return q;
}

Rational make_rational(long num, long den) {
    return make_rational(Integer(num), Integer(den));
}

bool fits_long(const Integer& z) { return z.fits_slong_p(); }

std::string to_string(const Rational& q) {
    if (is_integer(q)) return q.get_num().get_str();
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

Rational parse_rational(const std::string& s) {
    Rational q;
    if (q.set_str(s, 10) != 0) throw RangeError("bad rational literal: " + s);
    if (q.get_den() == 0) throw RangeError("rational with zero denominator: " + s);
    q.canonicalize();
    return q;
}

}  // namespace qring

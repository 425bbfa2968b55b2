#include "octobil/rational.hpp"

#include <cctype>
#include <ostream>

namespace octobil {

Rational Rational::parse(const std::string& s) {
    if (s.empty()) throw std::invalid_argument("Rational::parse: empty string");
    for (size_t i = 0; i < s.size(); ++i) {
        char c = s[i];
        bool ok = std::isdigit(static_cast<unsigned char>(c)) || c == '/' ||
                  ((c == '-' || c == '+') && (i == 0 || s[i - 1] == '/'));
        if (!ok) throw std::invalid_argument("Rational::parse: bad character in '" + s + "'");
    }
    mpq_class v;
    if (v.set_str(s, 10) != 0)
        throw std::invalid_argument("Rational::parse: cannot parse '" + s + "'");
    if (v.get_den() == 0)
        throw std::invalid_argument("Rational::parse: zero denominator in '" + s + "'");
    v.canonicalize();
    return Rational(std::move(v));
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.v_; }

}  // namespace octobil

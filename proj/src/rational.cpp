#include "concyclic/rational.hpp"

#include "concyclic/error.hpp"

#include <cctype>

namespace concyclic {

Rational parse_rational(const std::string& text) {
    auto slash = text.find('/');
    try {
        if (slash == std::string::npos) {
            return Rational(BigInt(text));
        }
        BigInt num(text.substr(0, slash));
        BigInt den(text.substr(slash + 1));
        if (den <= 0) {
            raise(errc::parse_error, "rational denominator must be positive: " + text);
        }
        return Rational(num, den);
    } catch (const Error&) {
        throw;
    } catch (const std::exception&) {
        raise(errc::parse_error, "malformed rational: " + text);
    }
}

std::string format_rational(const Rational& value) {
    return numerator(value).str() + "/" + denominator(value).str();
}

} // namespace concyclic

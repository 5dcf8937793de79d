#include "cdga/rational.hpp"

#include "cdga/errors.hpp"

#include <cctype>

namespace cdga {

std::string fraction_string(const Rational& r) {
    return numerator(r).str() + "/" + denominator(r).str();
}

std::string rational_string(const Rational& r) {
    if (denominator(r) == 1) return numerator(r).str();
    return fraction_string(r);
}

Rational parse_rational(std::string_view text) {
    auto fail = [&] { throw InputError("not a rational number: '" + std::string(text) + "'"); };
    if (text.empty()) fail();
    std::size_t i = 0;
    if (text[i] == '+' || text[i] == '-') ++i;
    bool digits = false, slash = false;
    for (; i < text.size(); ++i) {
        if (std::isdigit(static_cast<unsigned char>(text[i]))) {
            digits = true;
        } else if (text[i] == '/' && !slash && digits) {
            slash = true;
            digits = false; // require digits after the slash too
        } else {
            fail();
        }
    }
    if (!digits) fail();
    try {
        Rational r{std::string(text)};
        return r;
    } catch (const std::exception&) {
        fail();
    }
    return {}; // unreachable
}

} // namespace cdga

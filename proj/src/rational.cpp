#include "motdens/rational.hpp"

#include "motdens/errors.hpp"

#include <cctype>

namespace motdens {

namespace {

bool is_signed_digits(const std::string& s) {
    std::size_t i = (!s.empty() && s[0] == '-') ? 1 : 0;
    if (i >= s.size()) return false;
    for (; i < s.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    return true;
}

}  // namespace

std::optional<Rat> parse_rational(const std::string& text) {
    const auto slash = text.find('/');
    if (slash == std::string::npos) {
        if (!is_signed_digits(text)) return std::nullopt;
        return Rat(Int(text));
    }
    const std::string p = text.substr(0, slash);
    const std::string r = text.substr(slash + 1);
    if (!is_signed_digits(p) || !is_signed_digits(r)) return std::nullopt;
    Int den(r);
    if (den == 0) return std::nullopt;
    return Rat(Int(p), den);
}

std::string format_rational(const Rat& value) {
    if (denominator(value) == 1) return numerator(value).str();
    return numerator(value).str() + "/" + denominator(value).str();
}

bool is_integral(const Rat& value) {
    return denominator(value) == 1;
}

long long to_ll(const Rat& value) {
    if (!is_integral(value))
        throw Error("expected an integral rational, got " + format_rational(value));
    return numerator(value).convert_to<long long>();
}

}  // namespace motdens

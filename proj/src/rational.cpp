#include "linlab/rational.hpp"

#include <charconv>
#include <ostream>

namespace linlab {

namespace {

std::int64_t parse_int(const std::string& text, std::size_t begin, std::size_t end) {
    std::int64_t value = 0;
    auto [ptr, ec] = std::from_chars(text.data() + begin, text.data() + end, value);
    if (ec != std::errc() || ptr != text.data() + end)
        throw std::invalid_argument("Rational: cannot parse '" + text + "'");
    return value;
}

}  // namespace

Rational Rational::parse(const std::string& text) {
    std::size_t slash = text.find('/');
    if (slash == std::string::npos) return Rational(parse_int(text, 0, text.size()));
    return Rational(parse_int(text, 0, slash), parse_int(text, slash + 1, text.size()));
}

std::string Rational::str() const {
    if (den_ == 1) return std::to_string(num_);
    return std::to_string(num_) + "/" + std::to_string(den_);
}

std::string Rational::fraction_str() const {
    return std::to_string(num_) + "/" + std::to_string(den_);
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

}  // namespace linlab

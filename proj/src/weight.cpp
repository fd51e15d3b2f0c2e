#include "edgemon/weight.hpp"

#include <charconv>

#include "edgemon/errors.hpp"

namespace edgemon {

std::string format_weight(const Weight& w) {
    std::string out = std::to_string(w.numerator());
    if (w.denominator() != 1) {
        out += '/';
        out += std::to_string(w.denominator());
    }
    return out;
}

namespace {

std::int64_t parse_int(std::string_view text) {
    std::int64_t value = 0;
    const char* first = text.data();
    const char* last = text.data() + text.size();
    if (!text.empty() && text.front() == '+') ++first;
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc{} || ptr != last || first == last) {
        throw InputError("malformed number '" + std::string(text) + "'");
    }
    return value;
}

}  // namespace

Weight parse_weight(std::string_view text) {
    const auto slash = text.find('/');
    if (slash == std::string_view::npos) return Weight(parse_int(text));
    const std::int64_t num = parse_int(text.substr(0, slash));
    const std::int64_t den = parse_int(text.substr(slash + 1));
    if (den == 0) throw InputError("zero denominator in '" + std::string(text) + "'");
    return Weight(num, den);
}

}  // namespace edgemon

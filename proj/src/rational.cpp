#include "hyperarr/rational.hpp"

#include <cctype>

#include "hyperarr/errors.hpp"

namespace hyperarr {

namespace {

bool all_digits(std::string_view s) {
    if (s.empty()) return false;
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
}

}  // namespace

Rational parse_rational(std::string_view text) {
    std::string_view body = text;
    bool negative = false;
    if (!body.empty() && (body.front() == '-' || body.front() == '+')) {
        negative = body.front() == '-';
        body.remove_prefix(1);
    }
    const auto slash = body.find('/');
    const std::string_view num = body.substr(0, slash);
    const std::string_view den =
        slash == std::string_view::npos ? std::string_view{"1"} : body.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den))
        throw Error(ErrorKind::MalformedRational, "'" + std::string(text) + "'");

    BigInt p(std::string(num), 10);
    BigInt q(std::string(den), 10);
    if (q == 0) throw Error(ErrorKind::MalformedRational, "zero denominator in '" + std::string(text) + "'");
    if (negative) p = -p;
    Rational r(p, q);
    r.canonicalize();
    return r;
}

std::string format_rational(const Rational& q) {
    if (q.get_den() == 1) return q.get_num().get_str();
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

}  // namespace hyperarr

#include "loopkit/rational.hpp"

#include <cctype>

#include "loopkit/errors.hpp"

namespace loopkit {

namespace {

bool is_integer_literal(std::string_view s, bool allow_sign)
{
    if (allow_sign && !s.empty() && (s.front() == '-' || s.front() == '+'))
        s.remove_prefix(1);
    if (s.empty())
        return false;
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c)))
            return false;
    return true;
}

} // namespace

Rational parse_rational(std::string_view text)
{
    const auto slash = text.find('/');
    const auto num = text.substr(0, slash);
    if (!is_integer_literal(num, true))
        throw ParseError("malformed rational \"" + std::string(text) + "\"");
    const std::string num_str(num.front() == '+' ? num.substr(1) : num);

    if (slash == std::string_view::npos)
        return Rational(Integer(num_str));

    const auto den = text.substr(slash + 1);
    if (!is_integer_literal(den, false))
        throw ParseError("malformed rational \"" + std::string(text) + "\"");
    Integer d(std::string{den});
    if (d == 0)
        throw ParseError("malformed rational \"" + std::string(text) + "\": zero denominator");
    Rational q(Integer(num_str), d);
    q.canonicalize();
    return q;
}

std::string to_string(const Rational &x)
{
    if (x.get_den() == 1)
        return x.get_num().get_str();
    return x.get_num().get_str() + "/" + x.get_den().get_str();
}

bool is_integer(const Rational &x) { return x.get_den() == 1; }

std::string to_decimal(const Rational &x, int digits)
{
    Integer scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(digits));
    Integer scaled = x.get_num() * scale;
    mpz_tdiv_q(scaled.get_mpz_t(), scaled.get_mpz_t(), x.get_den().get_mpz_t());
    const bool negative = scaled < 0;
    if (negative)
        scaled = -scaled;
    std::string s = scaled.get_str();
    if (s.size() <= static_cast<std::size_t>(digits))
        s.insert(0, static_cast<std::size_t>(digits) + 1 - s.size(), '0');
    if (digits > 0)
        s.insert(s.size() - static_cast<std::size_t>(digits), ".");
    return negative ? "-" + s : s;
}

} // namespace loopkit

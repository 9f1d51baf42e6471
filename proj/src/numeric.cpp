#include "pascalrank/numeric.hpp"

#include <cctype>
#include <stdexcept>

namespace pascalrank {

namespace {

bool all_digits(std::string_view s) {
    if (s.empty()) return false;
    for (char ch : s) {
        if (!std::isdigit(static_cast<unsigned char>(ch))) return false;
    }
    return true;
}

[[noreturn]] void bad_rational(std::string_view text) {
    throw std::invalid_argument("invalid rational literal '" + std::string(text) +
                                "': expected an integer, a fraction p/q, or a decimal");
}

Integer parse_digits(std::string_view digits) {
    // mpz_set_str silently skips whitespace, so the charset is checked first.
    return Integer(std::string(digits), 10);
}

Integer pow10(std::size_t k) {
    Integer result;
    mpz_ui_pow_ui(result.get_mpz_t(), 10, k);
    return result;
}

} // namespace

Integer factorial(std::uint64_t n) {
    Integer result = 1;
    for (std::uint64_t i = 2; i <= n; ++i) {
        result *= i;
    }
    return result;
}

Integer falling_factorial(std::uint64_t x, std::uint64_t k) {
    if (k > x) return 0;
    Integer result = 1;
    for (std::uint64_t i = 0; i < k; ++i) {
        result *= Integer(x - i);
    }
    return result;
}

Rational parse_rational(std::string_view text) {
    std::string_view s = text;
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    if (s.empty()) bad_rational(text);

    bool negative = false;
    if (s.front() == '+' || s.front() == '-') {
        negative = s.front() == '-';
        s.remove_prefix(1);
    }
    if (s.empty()) bad_rational(text);

    Rational value;
    if (auto slash = s.find('/'); slash != std::string_view::npos) {
        std::string_view num = s.substr(0, slash);
        std::string_view den = s.substr(slash + 1);
        if (!all_digits(num) || !all_digits(den)) bad_rational(text);
        Integer d = parse_digits(den);
        if (d == 0) throw std::invalid_argument("invalid rational literal '" + std::string(text) +
                                                "': zero denominator");
        value = Rational(parse_digits(num), d);
    } else if (auto dot = s.find('.'); dot != std::string_view::npos) {
        std::string_view ipart = s.substr(0, dot);
        std::string_view fpart = s.substr(dot + 1);
        if (ipart.empty() && fpart.empty()) bad_rational(text);
        if (!ipart.empty() && !all_digits(ipart)) bad_rational(text);
        if (!fpart.empty() && !all_digits(fpart)) bad_rational(text);
        Integer scale = pow10(fpart.size());
        Integer num = ipart.empty() ? Integer(0) : parse_digits(ipart);
        if (!fpart.empty()) num = num * scale + parse_digits(fpart);
        value = Rational(num, scale);
    } else {
        if (!all_digits(s)) bad_rational(text);
        value = Rational(parse_digits(s));
    }
    value.canonicalize();
    if (negative) value = -value;
    return value;
}

std::string format_decimal(const Rational& value, unsigned places) {
    Rational canon = value;
    canon.canonicalize();
    Integer num = canon.get_num();
    Integer den = canon.get_den(); // canonical: den > 0
    bool negative = num < 0;
    if (negative) num = -num;

    Integer scale = pow10(places);
    Integer shifted = num * scale;
    Integer q, rem;
    mpz_fdiv_qr(q.get_mpz_t(), rem.get_mpz_t(), shifted.get_mpz_t(), den.get_mpz_t());

    // round half to even on the dropped remainder
    Integer twice = 2 * rem;
    int cmp = ::cmp(twice, den);
    if (cmp > 0 || (cmp == 0 && mpz_odd_p(q.get_mpz_t()))) {
        ++q;
    }

    if (q == 0) negative = false;
    Integer whole = q / scale;
    Integer frac = q % scale;
    std::string out = negative ? "-" : "";
    out += whole.get_str();
    if (places > 0) {
        std::string digits = frac.get_str();
        out += '.';
        out.append(places - digits.size(), '0');
        out += digits;
    }
    return out;
}

std::string fraction_string(const Rational& value) {
    Rational canon = value;
    canon.canonicalize();
    std::string out = canon.get_num().get_str();
    if (canon.get_den() != 1) {
        out += '/';
        out += canon.get_den().get_str();
    }
    return out;
}

} // namespace pascalrank

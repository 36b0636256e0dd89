#include "endoscope/rational.hpp"

#include <cctype>

#include "endoscope/error.hpp"

namespace endoscope {

const char* to_string(ErrorKind kind) noexcept
{
    switch (kind) {
        case ErrorKind::validation: return "validation";
        case ErrorKind::division_by_zero: return "division_by_zero";
        case ErrorKind::parent_mismatch: return "parent_mismatch";
        case ErrorKind::degree_cap: return "degree_cap";
        case ErrorKind::not_squarefree: return "not_squarefree";
        case ErrorKind::precision_exhausted: return "precision_exhausted";
        case ErrorKind::not_simple_albert_type: return "not_simple_albert_type";
        case ErrorKind::divisibility_violation: return "divisibility_violation";
        case ErrorKind::non_integral_element: return "non_integral_element";
        case ErrorKind::wrong_albert_type: return "wrong_albert_type";
        case ErrorKind::internal: return "internal";
    }
    return "unknown";
}

Rational make_rational(const Integer& num, const Integer& den)
{
    if (den == 0) fail(ErrorKind::division_by_zero, "rational with zero denominator");
    Rational q(num, den);
    q.canonicalize();
    return q;
}

namespace {

std::string_view trim(std::string_view s)
{
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

Integer parse_integer(std::string_view s, std::string_view whole)
{
    s = trim(s);
    std::string digits(s);
    if (!digits.empty() && digits.front() == '+') digits.erase(0, 1);
    bool ok = !digits.empty();
    for (std::size_t i = 0; i < digits.size() && ok; ++i) {
        char c = digits[i];
        if (!(std::isdigit(static_cast<unsigned char>(c)) || (i == 0 && c == '-' && digits.size() > 1))) ok = false;
    }
    if (!ok) fail(ErrorKind::validation, "malformed rational '" + std::string(whole) + "'");
    return Integer(digits, 10);
}

}  // namespace

Rational parse_rational(std::string_view text)
{
    auto slash = text.find('/');
    if (slash == std::string_view::npos) return Rational(parse_integer(text, text));
    Integer num = parse_integer(text.substr(0, slash), text);
    Integer den = parse_integer(text.substr(slash + 1), text);
    if (den == 0) fail(ErrorKind::validation, "zero denominator in '" + std::string(text) + "'");
    return make_rational(num, den);
}

std::string to_fraction_string(const Rational& q)
{
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

std::string to_display_string(const Rational& q)
{
    if (q.get_den() == 1) return q.get_num().get_str();
    return to_fraction_string(q);
}

bool is_integer(const Rational& q) { return q.get_den() == 1; }

Integer pow(const Integer& base, unsigned long exp)
{
    Integer r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exp);
    return r;
}

Rational pow(const Rational& base, long exp)
{
    if (exp < 0) {
        if (base == 0) fail(ErrorKind::division_by_zero, "negative power of zero");
        return pow(Rational(1) / base, -exp);
    }
    auto e = static_cast<unsigned long>(exp);
    return make_rational(pow(base.get_num(), e), pow(base.get_den(), e));
}

Integer lcm(const Integer& a, const Integer& b)
{
    Integer r;
    mpz_lcm(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

Integer gcd(const Integer& a, const Integer& b)
{
    Integer r;
    mpz_gcd(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

bool perfect_square(const Integer& n, Integer* root)
{
    if (n < 0) return false;
    if (!mpz_perfect_square_p(n.get_mpz_t())) return false;
    if (root) mpz_sqrt(root->get_mpz_t(), n.get_mpz_t());
    return true;
}

bool perfect_square(const Rational& q, Rational* root)
{
    Integer rn, rd;
    if (!perfect_square(q.get_num(), &rn) || !perfect_square(q.get_den(), &rd)) return false;
    if (root) *root = make_rational(rn, rd);
    return true;
}

}  // namespace endoscope

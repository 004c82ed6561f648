#include "dba/money.hpp"

#include "dba/error.hpp"

#include <cctype>
#include <cstdlib>

namespace dba {

namespace {

// Parses "<int>[.<frac>]" into integer units of 10^-frac_digits, then
// rescales to the requested number of fractional digits.
std::int64_t parse_decimal_units(std::string_view text, int frac_digits) {
    std::string s(text);
    if (s.empty()) throw DomainError("empty decimal string");
    bool negative = false;
    std::size_t i = 0;
    if (s[0] == '-') {
        negative = true;
        i = 1;
    } else if (s[0] == '+') {
        i = 1;
    }
    std::int64_t int_part = 0;
    bool saw_digit = false;
    for (; i < s.size() && std::isdigit(static_cast<unsigned char>(s[i])); ++i) {
        int_part = int_part * 10 + (s[i] - '0');
        saw_digit = true;
    }
    std::int64_t frac_part = 0;
    int frac_len = 0;
    if (i < s.size() && s[i] == '.') {
        ++i;
        for (; i < s.size() && std::isdigit(static_cast<unsigned char>(s[i])); ++i) {
            if (frac_len < frac_digits) {
                frac_part = frac_part * 10 + (s[i] - '0');
                ++frac_len;
            } else if (s[i] != '0') {
                throw DomainError("decimal '" + s + "' exceeds " +
                                  std::to_string(frac_digits) + " fractional digits");
            }
            saw_digit = true;
        }
    }
    if (i != s.size() || !saw_digit) {
        throw DomainError("malformed decimal string '" + s + "'");
    }
    for (int k = frac_len; k < frac_digits; ++k) frac_part *= 10;
    std::int64_t scale = 1;
    for (int k = 0; k < frac_digits; ++k) scale *= 10;
    const std::int64_t units = int_part * scale + frac_part;
    return negative ? -units : units;
}

std::string render_decimal(std::int64_t units, int frac_digits) {
    const bool negative = units < 0;
    unsigned long long mag = negative ? static_cast<unsigned long long>(-(units + 1)) + 1
                                      : static_cast<unsigned long long>(units);
    unsigned long long scale = 1;
    for (int k = 0; k < frac_digits; ++k) scale *= 10;
    const unsigned long long int_part = mag / scale;
    unsigned long long frac_part = mag % scale;
    std::string out = (negative ? "-" : "") + std::to_string(int_part);
    if (frac_part != 0) {
        std::string frac = std::to_string(frac_part);
        frac.insert(frac.begin(), static_cast<std::size_t>(frac_digits) - frac.size(), '0');
        while (!frac.empty() && frac.back() == '0') frac.pop_back();
        out += "." + frac;
    }
    return out;
}

} // namespace

Usd Usd::from_decimal(std::string_view text) {
    return from_raw(parse_decimal_units(text, 13));
}

std::string Usd::to_string() const { return render_decimal(units_, 13); }

DecimalFraction DecimalFraction::from_decimal(std::string_view text) {
    const std::int64_t v = parse_decimal_units(text, 4);
    if (v < 0 || v > 10000) {
        throw DomainError("fraction '" + std::string(text) + "' outside [0, 1]");
    }
    return from_basis(v);
}

std::string DecimalFraction::to_string() const { return render_decimal(per_e4_, 4); }

} // namespace dba

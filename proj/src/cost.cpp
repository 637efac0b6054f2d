#include "navtest/cost.hpp"

#include "navtest/errors.hpp"

#include <cctype>
#include <cstdlib>

namespace navtest {

namespace {

bool all_digits(const std::string& s) {
    if (s.empty()) return false;
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
}

} // namespace

Cost parse_cost(const std::string& text) {
    std::string s = text;
    bool negative = false;
    if (!s.empty() && (s[0] == '-' || s[0] == '+')) {
        negative = s[0] == '-';
        s.erase(0, 1);
    }
    if (s.empty()) throw Error(Errc::fixture_syntax, "empty cost literal");

    auto slash = s.find('/');
    auto dot = s.find('.');
    Cost value;
    if (slash != std::string::npos) {
        std::string num = s.substr(0, slash), den = s.substr(slash + 1);
        if (!all_digits(num) || !all_digits(den) || den == "0")
            throw Error(Errc::fixture_syntax, "bad rational literal '" + text + "'");
        value = Cost(std::strtoll(num.c_str(), nullptr, 10), std::strtoll(den.c_str(), nullptr, 10));
    } else if (dot != std::string::npos) {
        std::string whole = s.substr(0, dot), frac = s.substr(dot + 1);
        if (whole.empty()) whole = "0";
        if (!all_digits(whole) || (!frac.empty() && !all_digits(frac)) || frac.size() > 9)
            throw Error(Errc::fixture_syntax, "bad decimal literal '" + text + "'");
        std::int64_t den = 1;
        for (std::size_t i = 0; i < frac.size(); ++i) den *= 10;
        std::int64_t num = std::strtoll(whole.c_str(), nullptr, 10) * den +
                           (frac.empty() ? 0 : std::strtoll(frac.c_str(), nullptr, 10));
        value = Cost(num, den);
    } else {
        if (!all_digits(s)) throw Error(Errc::fixture_syntax, "bad cost literal '" + text + "'");
        value = Cost(std::strtoll(s.c_str(), nullptr, 10));
    }
    return negative ? -value : value;
}

std::string cost_to_string(const Cost& c) {
    if (c.denominator() == 1) return std::to_string(c.numerator());
    return std::to_string(c.numerator()) + "/" + std::to_string(c.denominator());
}

std::string cost_to_decimal(const Cost& c) {
    if (c.denominator() == 1) return std::to_string(c.numerator());
    // try to scale the denominator to a power of ten
    std::int64_t den = c.denominator(), scale = 1;
    for (int digits = 1; digits <= 6; ++digits) {
        scale *= 10;
        if (scale % den == 0) {
            std::int64_t units = c.numerator() * (scale / den);
            bool neg = units < 0;
            if (neg) units = -units;
            std::string frac = std::to_string(units % scale);
            frac.insert(0, static_cast<std::size_t>(digits) - frac.size(), '0');
            while (frac.size() > 1 && frac.back() == '0') frac.pop_back();
            return (neg ? "-" : "") + std::to_string(units / scale) + "." + frac;
        }
    }
    return cost_to_string(c);
}

} // namespace navtest

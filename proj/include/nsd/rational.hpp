#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace nsd {

// Exact nonnegative rational. All parameter comparisons in the library are done
// by cross-multiplication so no floating point enters any decision.
struct Ratio {
    long long num = 0;
    long long den = 1;

    constexpr Ratio() = default;
    constexpr Ratio(long long n, long long d) : num(n), den(d) {}

    double approx() const { return static_cast<double>(num) / static_cast<double>(den); }
};

// Accepts "a/b", an integer, or a plain decimal such as "0.45" (converted exactly).
inline Ratio parse_ratio(const std::string& text) {
    auto bad = [&] { throw std::invalid_argument("bad rational: '" + text + "'"); };
    if (text.empty()) bad();
    auto slash = text.find('/');
    try {
        if (slash != std::string::npos) {
            long long n = std::stoll(text.substr(0, slash));
            long long d = std::stoll(text.substr(slash + 1));
            if (d <= 0 || n < 0) bad();
            return {n, d};
        }
        auto dot = text.find('.');
        if (dot == std::string::npos) {
            long long n = std::stoll(text);
            if (n < 0) bad();
            return {n, 1};
        }
        std::string digits = text.substr(0, dot) + text.substr(dot + 1);
        size_t frac_len = text.size() - dot - 1;
        if (frac_len == 0 || frac_len > 17) bad();
        long long n = std::stoll(digits);
        if (n < 0) bad();
        long long d = 1;
        for (size_t i = 0; i < frac_len; ++i) d *= 10;
        return {n, d};
    } catch (const std::invalid_argument&) {
        bad();
    } catch (const std::out_of_range&) {
        bad();
    }
    return {};
}

inline std::string to_string(const Ratio& r) {
    return std::to_string(r.num) + "/" + std::to_string(r.den);
}

} // namespace nsd

#include "bfamily/scalar.hpp"

#include <charconv>
#include <cstdlib>
#include <ios>

#include <quadmath.h>

#include "bfamily/error.hpp"

namespace bfamily {

namespace {

std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
    return s;
}

}  // namespace

template <>
double parse_real<double>(std::string_view text) {
    text = trim(text);
    if (!text.empty() && text.front() == '+') text.remove_prefix(1);
    double value = 0;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc() || ptr != text.data() + text.size() || text.empty()) {
        throw Error(ErrorCode::InvalidConfig, "not a real number: '" + std::string(text) + "'");
    }
    return value;
}

template <>
Quad parse_real<Quad>(std::string_view text) {
    text = trim(text);
    const std::string owned(text);
    char* end = nullptr;
    __float128 value = strtoflt128(owned.c_str(), &end);
    if (owned.empty() || end != owned.c_str() + owned.size()) {
        throw Error(ErrorCode::InvalidConfig, "not a real number: '" + owned + "'");
    }
    return Quad(value);
}

template <>
std::string format_real<double>(const double& value) {
    char buf[64];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, value);
    return std::string(buf, ptr);
}

template <>
std::string format_real<Quad>(const Quad& value) {
    return value.str(std::numeric_limits<Quad>::max_digits10, std::ios_base::scientific);
}

}  // namespace bfamily

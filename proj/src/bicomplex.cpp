#include "bcpell/bicomplex.hpp"

#include <cmath>
#include <stdexcept>

#include <json.hpp>

namespace bcpell {

BigInt parse_decimal(const std::string& text)
{
    std::size_t pos = 0;
    if (pos < text.size() && (text[pos] == '-' || text[pos] == '+'))
        ++pos;
    if (pos == text.size())
        throw std::invalid_argument("not a decimal integer: '" + text + "'");
    for (std::size_t k = pos; k < text.size(); ++k)
        if (text[k] < '0' || text[k] > '9')
            throw std::invalid_argument("not a decimal integer: '" + text + "'");
    BigInt magnitude(text.substr(pos));
    return text[0] == '-' ? BigInt(-magnitude) : magnitude;
}

namespace {

std::optional<double> to_finite_double(const BigInt& x)
{
    const double d = x.convert_to<double>();
    if (!std::isfinite(d))
        return std::nullopt;
    return d;
}

} // namespace

NormResult bc_norm(ConjugationKind kind, const BicomplexZ& x)
{
    NormResult result;
    result.exact_product = x * bc_conj(kind, x);
    result.plane_pair = plane_pair(kind, result.exact_product);

    const auto u = to_finite_double(result.plane_pair.first);
    const auto v = to_finite_double(result.plane_pair.second);
    if (u && v) {
        // hypot avoids overflow in u^2 + v^2 when u, v themselves fit.
        const double modulus = std::hypot(*u, *v);
        if (std::isfinite(modulus))
            result.magnitude = std::sqrt(modulus);
    }
    return result;
}

std::string to_json_text(const BicomplexZ& x)
{
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& c : x.components())
        arr.push_back(to_decimal(c));
    return arr.dump();
}

BicomplexZ bicomplex_from_json_text(const std::string& text)
{
    const auto arr = nlohmann::json::parse(text);
    if (!arr.is_array() || arr.size() != 4)
        throw std::invalid_argument("bicomplex JSON must be a 4-element array");
    std::array<BigInt, 4> c;
    for (std::size_t k = 0; k < 4; ++k) {
        if (!arr[k].is_string())
            throw std::invalid_argument("bicomplex components must be decimal strings");
        c[k] = parse_decimal(arr[k].get<std::string>());
    }
    return {c[0], c[1], c[2], c[3]};
}

} // namespace bcpell

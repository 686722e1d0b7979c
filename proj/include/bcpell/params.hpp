#pragma once

#include <array>
#include <cstddef>
#include <ostream>
#include <stdexcept>
#include <string>

#include "bcpell/ring.hpp"

namespace bcpell {

/// A point of an identity's parameter domain: up to three named integers
/// drawn from {n, m, r}.
class Params {
public:
    static constexpr std::size_t max_arity = 3;

    Params() = default;

    Params& set(char name, Index value)
    {
        for (std::size_t k = 0; k < arity_; ++k) {
            if (names_[k] == name) {
                values_[k] = value;
                return *this;
            }
        }
        if (arity_ == max_arity)
            throw std::length_error("Params: at most three parameters");
        names_[arity_] = name;
        values_[arity_] = value;
        ++arity_;
        return *this;
    }

    Index at(char name) const
    {
        for (std::size_t k = 0; k < arity_; ++k)
            if (names_[k] == name)
                return values_[k];
        throw std::out_of_range(std::string("missing parameter '") + name + "'");
    }

    Index n() const { return at('n'); }
    Index m() const { return at('m'); }
    Index r() const { return at('r'); }

    std::size_t arity() const { return arity_; }
    char name(std::size_t k) const { return names_.at(k); }
    Index value(std::size_t k) const { return values_.at(k); }

    friend bool operator==(const Params&, const Params&) = default;

    friend std::ostream& operator<<(std::ostream& os, const Params& p)
    {
        os << '(';
        for (std::size_t k = 0; k < p.arity_; ++k)
            os << (k ? ", " : "") << p.names_[k] << '=' << p.values_[k];
        return os << ')';
    }

private:
    std::array<char, max_arity> names_{};
    std::array<Index, max_arity> values_{};
    std::size_t arity_ = 0;
};

inline Params params_n(Index n) { return Params{}.set('n', n); }
inline Params params_mn(Index m, Index n) { return Params{}.set('m', m).set('n', n); }
inline Params params_rn(Index r, Index n) { return Params{}.set('r', r).set('n', n); }

} // namespace bcpell

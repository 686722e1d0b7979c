#pragma once

// Pell, Pell-Lucas and modified Pell numbers at any integer index.
//
// All three share x_n = 2 x_{n-1} + x_{n-2}. Index 0 and negative indices come
// from running the recurrence backward: x_{n-2} = x_n - 2 x_{n-1}.

#include <string_view>

#include "bcpell/ring.hpp"

namespace bcpell {

enum class SequenceKind { pell, pell_lucas, modified_pell };

/// Values at indices 1 and 2.
struct SeedPair {
    BigInt first;
    BigInt second;
};

SeedPair seeds(SequenceKind kind);

/// Memoized; safe to call from many threads.
BigInt seq(SequenceKind kind, Index n);

inline BigInt pell(Index n) { return seq(SequenceKind::pell, n); }
inline BigInt pell_lucas(Index n) { return seq(SequenceKind::pell_lucas, n); }
inline BigInt modified_pell(Index n) { return seq(SequenceKind::modified_pell, n); }

/// Second coordinate of (1 + sqrt 2)^n; equals pell(n). Requires n >= 0.
BigInt binet_pell(Index n);

/// Twice the rational part of (1 + sqrt 2)^n; equals pell_lucas(n). Requires n >= 0.
BigInt binet_pell_lucas(Index n);

std::string_view to_string(SequenceKind kind);

/// Accepts "pell", "pell-lucas", "modified"; throws std::invalid_argument otherwise.
SequenceKind parse_sequence_kind(std::string_view name);

} // namespace bcpell

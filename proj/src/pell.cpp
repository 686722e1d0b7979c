#include "bcpell/pell.hpp"

#include <array>
#include <mutex>
#include <shared_mutex>
#include <stdexcept>
#include <string>
#include <vector>

namespace bcpell {

namespace {

// Grows monotonically in both directions; never evicts.
class SequenceCache {
public:
    explicit SequenceCache(const SeedPair& s)
    {
        // x_0 = x_2 - 2 x_1
        forward_ = {s.second - 2 * s.first, s.first, s.second};
        backward_ = {forward_[0]};
    }

    BigInt at(Index n)
    {
        {
            std::shared_lock lock(mutex_);
            if (auto* hit = find(n))
                return *hit;
        }
        std::unique_lock lock(mutex_);
        if (n >= 0) {
            const auto want = static_cast<std::size_t>(n);
            while (forward_.size() <= want) {
                const auto k = forward_.size();
                forward_.push_back(2 * forward_[k - 1] + forward_[k - 2]);
            }
            return forward_[want];
        }
        const auto want = static_cast<std::size_t>(-n);
        while (backward_.size() <= want) {
            // backward_[k] = x_{-k}; x_{-k} = x_{-k+2} - 2 x_{-k+1}
            const auto k = backward_.size();
            const BigInt& up2 = k == 1 ? forward_[1] : backward_[k - 2];
            BigInt next = up2 - 2 * backward_[k - 1];
            backward_.push_back(std::move(next));
        }
        return backward_[want];
    }

private:
    const BigInt* find(Index n) const
    {
        if (n >= 0) {
            const auto k = static_cast<std::size_t>(n);
            return k < forward_.size() ? &forward_[k] : nullptr;
        }
        const auto k = static_cast<std::size_t>(-n);
        return k < backward_.size() ? &backward_[k] : nullptr;
    }

    std::shared_mutex mutex_;
    std::vector<BigInt> forward_;
    std::vector<BigInt> backward_;
};

SequenceCache& cache_for(SequenceKind kind)
{
    static std::array<SequenceCache, 3> caches{
        SequenceCache{seeds(SequenceKind::pell)},
        SequenceCache{seeds(SequenceKind::pell_lucas)},
        SequenceCache{seeds(SequenceKind::modified_pell)},
    };
    return caches[static_cast<std::size_t>(kind)];
}

void require_non_negative(Index n, const char* what)
{
    if (n < 0)
        throw std::invalid_argument(std::string(what) + ": index must be non-negative, got " + std::to_string(n));
}

} // namespace

SeedPair seeds(SequenceKind kind)
{
    switch (kind) {
    case SequenceKind::pell: return {1, 2};
    case SequenceKind::pell_lucas: return {2, 6};
    case SequenceKind::modified_pell: return {1, 3};
    }
    throw std::invalid_argument("unknown sequence kind");
}

BigInt seq(SequenceKind kind, Index n) { return cache_for(kind).at(n); }

BigInt binet_pell(Index n)
{
    require_non_negative(n, "binet_pell");
    return zs_pow(silver_alpha(), n).b;
}

BigInt binet_pell_lucas(Index n)
{
    require_non_negative(n, "binet_pell_lucas");
    return 2 * zs_pow(silver_alpha(), n).a;
}

std::string_view to_string(SequenceKind kind)
{
    switch (kind) {
    case SequenceKind::pell: return "pell";
    case SequenceKind::pell_lucas: return "pell-lucas";
    case SequenceKind::modified_pell: return "modified";
    }
    return "?";
}

SequenceKind parse_sequence_kind(std::string_view name)
{
    if (name == "pell")
        return SequenceKind::pell;
    if (name == "pell-lucas")
        return SequenceKind::pell_lucas;
    if (name == "modified")
        return SequenceKind::modified_pell;
    throw std::invalid_argument("unknown sequence '" + std::string(name) + "' (expected pell, pell-lucas or modified)");
}

} // namespace bcpell

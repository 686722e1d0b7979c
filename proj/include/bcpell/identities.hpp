#pragma once

/**
 * @file identities.hpp
 * @brief Registry of published identities and an exact verification harness.
 *
 * Each IdentitySpec pairs a left-hand side computed from definitions only
 * (sequence values, bp/bpl, bicomplex products and conjugations) with a
 * right-hand side taken from the published closed form. The harness
 * evaluates both sides exactly at every point of a finite parameter domain.
 * No tolerances are involved anywhere: a residual is an exact integer or an
 * exact integer 4-tuple.
 */

#include <cstddef>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "bcpell/bicomplex.hpp"
#include "bcpell/params.hpp"

namespace bcpell {

using Value = std::variant<BigInt, BicomplexZ>;

enum class Codomain { scalar, bicomplex };

Value residual(const Value& lhs, const Value& rhs);
bool is_zero(const Value& v);

/// Inclusive range for one parameter. With `relative_to` set the bounds are
/// offsets from that (earlier) parameter's current value, which is how
/// constraints such as r <= n <= r + 30 are expressed.
struct ParamRange {
    char name;
    Index lo;
    Index hi;
    std::optional<char> relative_to;
};

class Domain {
public:
    Domain() = default;
    explicit Domain(std::vector<ParamRange> ranges);

    const std::vector<ParamRange>& ranges() const { return ranges_; }
    std::size_t arity() const { return ranges_.size(); }

    /// Number of points; enumerates, so keep domains desk-sized.
    std::size_t size() const;

    /// Visits points in lexicographic order of the declared parameters.
    /// Stops early if `visit` returns false.
    void for_each(const std::function<bool(const Params&)>& visit) const;

    /// Same shape with the upper bound (or upper offset) of `n` and `m`
    /// replaced by `ceiling`.
    Domain with_ceiling(Index ceiling) const;

    /// e.g. "r in [1, 5], n in [r+0, r+30]"
    std::string describe() const;

private:
    std::vector<ParamRange> ranges_;
};

Domain range_n(Index lo, Index hi);
Domain range_mn(Index lo, Index hi);

using Evaluator = std::function<Value(const Params&)>;

struct IdentitySpec {
    std::string id;
    std::string paper_ref;
    Codomain codomain = Codomain::bicomplex;
    Domain domain;
    Evaluator lhs;
    Evaluator rhs;
    /// Multiplies the left side. The right evaluator already returns the
    /// correspondingly scaled closed form, so fractional coefficients never
    /// leave the integers.
    int scale = 1;

    std::size_t arity() const { return domain.arity(); }
};

/// Rejects duplicate ids, empty domains, missing evaluators, non-positive scales.
void validate_registry(const std::vector<IdentitySpec>& specs);

/// Every identity with its default domain, sorted by id.
std::vector<IdentitySpec> register_all();

/// n_max, when set, goes through Domain::with_ceiling for every spec.
struct DomainOverride {
    std::optional<Index> n_max;
};

std::vector<IdentitySpec> apply_override(std::vector<IdentitySpec> specs, const DomainOverride& override_);

/// Returns nullptr when absent.
const IdentitySpec* find_identity(const std::vector<IdentitySpec>& specs, const std::string& id);

enum class Status { holds, fails };

const char* to_string(Status s);

struct Counterexample {
    Params params;
    Value lhs;
    Value rhs;
    Value residual;
};

struct EvalOutcome {
    std::string id;
    std::string paper_ref;
    Status status = Status::holds;
    std::size_t checked_points = 0;
    std::optional<Counterexample> first_counterexample;
    /// Only filled when VerifyOptions::collect_all is set.
    std::vector<Counterexample> all_counterexamples;
};

struct VerifyOptions {
    bool collect_all = false;
};

/// An evaluator threw while computing a side of an identity.
class IdentityEvaluationError : public std::runtime_error {
public:
    IdentityEvaluationError(std::string id, Params params, const std::string& what);

    const std::string& id() const { return id_; }
    const Params& params() const { return params_; }

private:
    std::string id_;
    Params params_;
};

EvalOutcome verify(const IdentitySpec& spec, const VerifyOptions& options = {});

struct Summary {
    std::size_t holds = 0;
    std::size_t fails = 0;
};

struct VerificationReport {
    std::string artifact_version;
    std::vector<EvalOutcome> outcomes;  // sorted by id
    Summary summary;
};

/// Verifies specs on up to `parallelism` threads. The result does not depend
/// on `parallelism`.
VerificationReport run_all(const std::vector<IdentitySpec>& specs, std::size_t parallelism,
                           const VerifyOptions& options = {});

std::string artifact_version();

/// Deterministic JSON rendering of a report (two-space indent, trailing newline).
std::string report_to_json(const VerificationReport& report);

std::string value_to_text(const Value& v);

} // namespace bcpell

#include "bcpell/identities.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <set>
#include <sstream>
#include <thread>

#include "bcpell/bpell.hpp"

#ifndef BCPELL_VERSION
#define BCPELL_VERSION "0.0.0"
#endif

namespace bcpell {

std::string artifact_version() { return BCPELL_VERSION; }

Value residual(const Value& lhs, const Value& rhs)
{
    if (lhs.index() != rhs.index())
        throw InternalConsistencyError("residual: left and right sides have different codomains");
    if (const auto* a = std::get_if<BigInt>(&lhs))
        return BigInt(*a - std::get<BigInt>(rhs));
    return std::get<BicomplexZ>(lhs) - std::get<BicomplexZ>(rhs);
}

bool is_zero(const Value& v)
{
    if (const auto* a = std::get_if<BigInt>(&v))
        return a->is_zero();
    return std::get<BicomplexZ>(v) == BicomplexZ::zero();
}

std::string value_to_text(const Value& v)
{
    if (const auto* a = std::get_if<BigInt>(&v))
        return to_decimal(*a);
    std::ostringstream os;
    os << std::get<BicomplexZ>(v);
    return os.str();
}

// ---------------------------------------------------------------------------
// Domain

Domain::Domain(std::vector<ParamRange> ranges) : ranges_(std::move(ranges))
{
    for (std::size_t k = 0; k < ranges_.size(); ++k) {
        const auto& r = ranges_[k];
        if (r.lo > r.hi)
            throw std::invalid_argument(std::string("empty range for parameter '") + r.name + "'");
        if (r.relative_to) {
            const bool earlier = std::any_of(ranges_.begin(), ranges_.begin() + static_cast<std::ptrdiff_t>(k),
                                             [&](const ParamRange& p) { return p.name == *r.relative_to; });
            if (!earlier)
                throw std::invalid_argument(std::string("parameter '") + r.name +
                                            "' is relative to an undeclared or later parameter");
        }
    }
    if (ranges_.size() > Params::max_arity)
        throw std::invalid_argument("domain arity exceeds three");
}

namespace {

void enumerate(const std::vector<ParamRange>& ranges, std::size_t depth, Params& point, bool& keep_going,
               const std::function<bool(const Params&)>& visit)
{
    if (depth == ranges.size()) {
        keep_going = visit(point);
        return;
    }
    const auto& r = ranges[depth];
    const Index base = r.relative_to ? point.at(*r.relative_to) : 0;
    for (Index v = base + r.lo; v <= base + r.hi && keep_going; ++v) {
        point.set(r.name, v);
        enumerate(ranges, depth + 1, point, keep_going, visit);
    }
}

} // namespace

void Domain::for_each(const std::function<bool(const Params&)>& visit) const
{
    Params point;
    // Fix the parameter order up front so Params reports names in declared order.
    for (const auto& r : ranges_)
        point.set(r.name, 0);
    bool keep_going = true;
    enumerate(ranges_, 0, point, keep_going, visit);
}

std::size_t Domain::size() const
{
    std::size_t count = 0;
    for_each([&](const Params&) {
        ++count;
        return true;
    });
    return count;
}

Domain Domain::with_ceiling(Index ceiling) const
{
    auto ranges = ranges_;
    for (auto& r : ranges)
        if (r.name == 'n' || r.name == 'm')
            r.hi = ceiling;
    return Domain(std::move(ranges));
}

std::string Domain::describe() const
{
    std::ostringstream os;
    for (std::size_t k = 0; k < ranges_.size(); ++k) {
        const auto& r = ranges_[k];
        os << (k ? ", " : "") << r.name << " in [";
        if (r.relative_to)
            os << *r.relative_to << (r.lo < 0 ? "" : "+") << r.lo << ", " << *r.relative_to
               << (r.hi < 0 ? "" : "+") << r.hi << ']';
        else
            os << r.lo << ", " << r.hi << ']';
    }
    return os.str();
}

Domain range_n(Index lo, Index hi) { return Domain({{'n', lo, hi, std::nullopt}}); }

Domain range_mn(Index lo, Index hi)
{
    return Domain({{'m', lo, hi, std::nullopt}, {'n', lo, hi, std::nullopt}});
}

// ---------------------------------------------------------------------------
// Registry helpers

void validate_registry(const std::vector<IdentitySpec>& specs)
{
    std::set<std::string> seen;
    for (const auto& s : specs) {
        if (s.id.empty())
            throw std::logic_error("identity with empty id");
        if (!seen.insert(s.id).second)
            throw std::logic_error("duplicate identity id '" + s.id + "'");
        if (!s.lhs || !s.rhs)
            throw std::logic_error("identity '" + s.id + "' is missing an evaluator");
        if (s.scale <= 0)
            throw std::logic_error("identity '" + s.id + "' has non-positive scale");
        if (s.domain.arity() == 0 || s.domain.size() == 0)
            throw std::logic_error("identity '" + s.id + "' has an empty domain");
    }
}

std::vector<IdentitySpec> apply_override(std::vector<IdentitySpec> specs, const DomainOverride& override_)
{
    if (override_.n_max) {
        for (auto& s : specs) {
            try {
                s.domain = s.domain.with_ceiling(*override_.n_max);
            } catch (const std::invalid_argument& e) {
                throw std::invalid_argument("n-max " + std::to_string(*override_.n_max) + " empties the domain of " +
                                            s.id + ": " + e.what());
            }
        }
    }
    return specs;
}

const IdentitySpec* find_identity(const std::vector<IdentitySpec>& specs, const std::string& id)
{
    const auto it = std::find_if(specs.begin(), specs.end(), [&](const IdentitySpec& s) { return s.id == id; });
    return it == specs.end() ? nullptr : &*it;
}

const char* to_string(Status s) { return s == Status::holds ? "HOLDS" : "FAILS"; }

// ---------------------------------------------------------------------------
// Verification

namespace {

std::string params_text(const Params& p)
{
    std::ostringstream os;
    os << p;
    return os.str();
}

Value scaled(const Value& v, int scale)
{
    if (scale == 1)
        return v;
    if (const auto* a = std::get_if<BigInt>(&v))
        return BigInt(scale * *a);
    return BigInt(scale) * std::get<BicomplexZ>(v);
}

void check_codomain(const IdentitySpec& spec, const Value& v, const char* side)
{
    const bool scalar = std::holds_alternative<BigInt>(v);
    if (scalar != (spec.codomain == Codomain::scalar))
        throw InternalConsistencyError(std::string(side) + " evaluator returned the wrong codomain");
}

} // namespace

IdentityEvaluationError::IdentityEvaluationError(std::string id, Params params, const std::string& what)
    : std::runtime_error(id + " at " + params_text(params) + ": " + what), id_(std::move(id)),
      params_(params)
{
}

EvalOutcome verify(const IdentitySpec& spec, const VerifyOptions& options)
{
    EvalOutcome out;
    out.id = spec.id;
    out.paper_ref = spec.paper_ref;

    spec.domain.for_each([&](const Params& p) {
        Value lhs, rhs;
        try {
            lhs = scaled(spec.lhs(p), spec.scale);
            rhs = spec.rhs(p);
            check_codomain(spec, lhs, "left");
            check_codomain(spec, rhs, "right");
        } catch (const std::exception& e) {
            throw IdentityEvaluationError(spec.id, p, e.what());
        }
        ++out.checked_points;
        Value diff = residual(lhs, rhs);
        if (!is_zero(diff)) {
            out.status = Status::fails;
            Counterexample cx{p, std::move(lhs), std::move(rhs), std::move(diff)};
            if (options.collect_all)
                out.all_counterexamples.push_back(cx);
            if (!out.first_counterexample)
                out.first_counterexample = std::move(cx);
        }
        return true;
    });
    return out;
}

VerificationReport run_all(const std::vector<IdentitySpec>& specs, std::size_t parallelism,
                           const VerifyOptions& options)
{
    std::vector<const IdentitySpec*> order;
    order.reserve(specs.size());
    for (const auto& s : specs)
        order.push_back(&s);
    std::sort(order.begin(), order.end(), [](const auto* a, const auto* b) { return a->id < b->id; });

    std::vector<EvalOutcome> outcomes(order.size());
    std::vector<std::exception_ptr> errors(order.size());
    std::atomic<std::size_t> next{0};

    auto worker = [&] {
        for (std::size_t k = next++; k < order.size(); k = next++) {
            try {
                outcomes[k] = verify(*order[k], options);
            } catch (...) {
                errors[k] = std::current_exception();
            }
        }
    };

    const std::size_t workers = std::max<std::size_t>(1, std::min(parallelism, order.size()));
    if (workers == 1) {
        worker();
    } else {
        std::vector<std::jthread> pool;
        pool.reserve(workers);
        for (std::size_t t = 0; t < workers; ++t)
            pool.emplace_back(worker);
    }

    for (const auto& e : errors)
        if (e)
            std::rethrow_exception(e);

    VerificationReport report;
    report.artifact_version = artifact_version();
    report.outcomes = std::move(outcomes);
    for (const auto& o : report.outcomes)
        (o.status == Status::holds ? report.summary.holds : report.summary.fails)++;
    return report;
}

} // namespace bcpell

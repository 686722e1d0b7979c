#pragma once

#include <string>
#include <vector>

#include "bcpell/identities.hpp"
#include "bcpell/pell.hpp"

namespace bcpell {

/// A printed run of sequence terms starting at index 1.
struct PublishedListing {
    std::string label;
    SequenceKind kind;
    std::vector<BigInt> values;
};

/// The three sequence listings as published, typos included.
std::vector<PublishedListing> published_listings();

struct ListingDiscrepancy {
    std::string label;
    SequenceKind kind;
    Index position;
    BigInt printed;
    BigInt computed;
};

std::vector<ListingDiscrepancy> listing_discrepancies(const std::vector<PublishedListing>& listings);

/// stmt/proof pairs ("EqX-stmt", "EqX-proof") whose verdicts differ.
std::vector<std::pair<std::string, std::string>> split_verdicts(const VerificationReport& report);

/// Human-readable errata: every FAILS outcome with its exact first residual,
/// split stmt/proof verdicts, and listing discrepancies. Prints
/// "no discrepancies" when there is nothing to report.
std::string render_errata(const VerificationReport& report, const std::vector<ListingDiscrepancy>& listings);

} // namespace bcpell

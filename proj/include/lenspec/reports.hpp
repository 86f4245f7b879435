#pragma once

#include "lenspec/isospec.hpp"
#include "lenspec/serialize.hpp"

#include <set>
#include <string>
#include <vector>

namespace lenspec {

/// One row of the range summary: which I-isospectral families showed up
/// among lens spaces and among lens orbifolds, or why none can exist.
/// Tags: "exists", "hole" (shared-string obstruction), "chain-rigidity"
/// (I = {0..n-2}), "corank2-rigidity" (|I| = n-2, I != {0..n-3}),
/// "unexplained".  Orbifold rigidity tags carry a "(conj)" suffix: for
/// singular quotients they are supported by the scans, not proved.
struct SummaryRow {
    std::set<int> I;
    std::string spaces;
    std::string orbifolds;
};

struct RangeSummary {
    unsigned q_lo = 1, q_hi = 1;
    unsigned n = 0;
    std::vector<SummaryRow> rows;
};

/// Classify every q in [q_lo, q_hi] in both modes and fold the observed
/// family isets into the summary table.
RangeSummary summarize_range(unsigned q_lo, unsigned q_hi, unsigned n,
                             const ClassifyOptions& opts = {});

std::string iset_to_string(const std::set<int>& I);

std::string family_report_to_csv(const FamilyReport& r);
ordered_json range_summary_to_json(const RangeSummary& s);
std::string range_summary_to_csv(const RangeSummary& s);

/// Listing emitted by the enumerate subcommand.
struct ClassListing {
    unsigned q = 1;
    unsigned n = 0;
    bool spaces_only = false;
    std::vector<CanonicalLens> classes;
};

ordered_json class_listing_to_json(const ClassListing& l);
std::string class_listing_to_csv(const ClassListing& l);

} // namespace lenspec

#pragma once

#include "lenspec/spectra.hpp"

#include <functional>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace lenspec {

/// The largest set of form degrees on which a pair agrees spectrally.
struct IsospecSet {
    CanonicalLens a, b;
    std::set<int> iset;
};

bool p_isospectral(const LensParams& a, const LensParams& b, int p);
IsospecSet isospec_set(const LensParams& a, const LensParams& b);

/// True when I contains a "simple hole": some p outside I whose neighbors
/// force p-isospectrality (p+1 in I together with p-1 in I or p = 0).
bool iset_has_hole(const std::set<int>& I, unsigned n);

struct Family {
    std::vector<CanonicalLens> members; // sorted
    std::set<int> iset;                 // the exact maximal I of the family
};

struct FamilyReport {
    unsigned q = 1;
    unsigned n = 0;
    bool spaces_only = false;
    std::vector<Family> families; // deterministic order
};

/// Optional memo for the expensive per-class profiles; both callbacks may
/// be empty.  Used by the CLI cache.
struct ProfileSource {
    std::function<std::optional<PhiProfile>(const CanonicalLens&)> load;
    std::function<void(const CanonicalLens&, const PhiProfile&)> store;
};

struct ClassifyOptions {
    unsigned workers = 1;
    ProfileSource profiles;
    /// Restrict to these classes instead of full enumeration.
    std::optional<std::vector<CanonicalLens>> members;
};

/// All maximal I-isospectral families (nonempty I) among the isometry
/// classes for (q, n).  A family is the full equivalence class of members
/// agreeing on every degree required by I, reported under the exact I
/// realized; nested families with larger I are reported separately.
FamilyReport classify_families(unsigned q, unsigned n, bool spaces_only,
                               const ClassifyOptions& opts = {});

/// Per-class spectral data for scanners that need pairwise sets without the
/// family extraction.
struct SpectralClass {
    CanonicalLens lens;
    bool space = false;
    std::vector<IntPoly> fingerprint; // comparison keys, rows 1..n
};

std::vector<SpectralClass>
spectral_classes(unsigned q, unsigned n, bool spaces_only,
                 const ClassifyOptions& opts = {});

/// Pairwise iset from precomputed fingerprints (bitmask over p = 0..n-1).
unsigned pair_iset_mask(const SpectralClass& x, const SpectralClass& y);

/// Largest level p0 with L in the p0-th Ikeda filtration class: requires q
/// an odd prime with q - 1 = 2n + 4 and L a lens space with pairwise
/// distinct parameters mod +-1.
int ikeda_filtration_level(const LensParams& L);

/// Hole-obstruction audit: every family I and every recomputed pairwise
/// iset among family members must be hole-free.  Returns human-readable
/// violations (empty = clean).
std::vector<std::string> verify_hole(const FamilyReport& report);

/// Covering descent: for a 0-isospectral pair of lens spaces, every
/// divisor cover must again be 0-isospectral.  Throws not_lens_space on
/// orbifold input; returns violations.
std::vector<std::string> verify_covering(const LensParams& a,
                                         const LensParams& b);

struct PaddingCheck {
    bool base_zero_isosp = false;
    bool padded_zero_isosp = false;
    bool biconditional_ok = false;
    std::set<int> base_iset, padded_iset;
};

/// Zero-padding both parameter vectors by m zeros preserves exactly
/// 0-isospectrality; reports both isets so callers can observe the p > 0
/// failures.
PaddingCheck verify_padding(const LensParams& a, const LensParams& b,
                            unsigned m);

/// Determinants of the n square matrices obtained by deleting one row of
/// the A-polynomial matrix (rows p = 1..n, columns l = 0..n-2), computed by
/// fraction-free elimination.  Pairs (deleted row, determinant).
std::vector<std::pair<unsigned, IntPoly>> a_matrix_minors(unsigned n);

struct ConjectureReport {
    unsigned q_lo = 1, q_hi = 1;
    unsigned n = 0;
    // Families matching / violating the scanned patterns, formatted.
    std::vector<std::string> confirmations;
    std::vector<std::string> counterexamples;
    bool clean() const { return counterexamples.empty(); }
};

/// Scans classified families for the conjectured patterns: in dimension 5
/// the exact shape of {2}-families, in dimension 7 the divisibility of q
/// for {2}- and {3}-families, and in every dimension the absence of
/// space/orbifold mixtures inside a family with nonempty I.
ConjectureReport scan_conjectures(unsigned q_lo, unsigned q_hi, unsigned n,
                                  const ClassifyOptions& opts = {});

} // namespace lenspec

#pragma once

#include "lenspec/errors.hpp"

#include <compare>
#include <string>
#include <vector>

namespace lenspec {

/// Parameters (q; s_1, ..., s_n) of a lens orbifold.  Entries are stored
/// folded into [0, q/2]: the sign choices of the isometry group act as
/// s_j -> q - s_j, so folding costs nothing and halves every search.
/// Inputs with gcd(q, s_1, ..., s_n) > 1 are rejected: q is the order of
/// the generating isometry and silently dividing out the common factor
/// would mislabel every downstream report.
class LensParams {
public:
    LensParams(unsigned q, const std::vector<long>& raw);

    unsigned q() const { return q_; }
    unsigned n() const { return static_cast<unsigned>(s_.size()); }
    const std::vector<unsigned>& s() const { return s_; }

    bool operator==(const LensParams& o) const = default;

private:
    unsigned q_;
    std::vector<unsigned> s_;
};

/// Lexicographically least folded-and-sorted representative of the isometry
/// class; equality of canonical forms decides isometry.
struct CanonicalLens {
    unsigned q = 1;
    std::vector<unsigned> s; // nondecreasing, entries in [0, q/2]

    unsigned n() const { return static_cast<unsigned>(s.size()); }
    LensParams params() const;

    auto operator<=>(const CanonicalLens& o) const = default;
    std::string to_string() const;
};

CanonicalLens canonical_form(const LensParams& L);

/// Throws order_mismatch / dimension_mismatch when q or n differ.
bool is_isometric(const LensParams& a, const LensParams& b);

/// All isometry classes with parameter q in dimension 2n-1; spaces_only
/// restricts to free actions (gcd(q, s_j) = 1 for every j).  Output sorted
/// lexicographically.
std::vector<CanonicalLens> enumerate_classes(unsigned q, unsigned n,
                                             bool spaces_only);

/// Multiset {{gcd(q, s_j)}} as a sorted vector; determines the isotropy
/// types of the singular points.
std::vector<unsigned> isotropy_profile(const LensParams& L);

bool is_lens_space(const LensParams& L);

/// The q/q1-fold cover L(q1; s mod q1), re-canonicalized.  q1 must divide q.
LensParams cover(const LensParams& L, unsigned q1);

/// Text form "L(q;s1,...,sn)".
std::string format_lens(const LensParams& L);
LensParams parse_lens(const std::string& text);

} // namespace lenspec

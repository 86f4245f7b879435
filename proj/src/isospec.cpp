#include "lenspec/isospec.hpp"

#include <algorithm>
#include <atomic>
#include <map>
#include <numeric>
#include <sstream>
#include <thread>

namespace lenspec {

namespace {

void require_comparable(const LensParams& a, const LensParams& b)
{
    if (a.q() != b.q())
        throw order_mismatch("fundamental group orders differ");
    if (a.n() != b.n())
        throw dimension_mismatch("dimensions differ");
}

std::vector<IntPoly> fingerprint_of(const LensParams& L)
{
    PhiProfile P = phi_profile(L);
    APolyTable table(L.n());
    return spectral_fingerprint(P, table);
}

// iset from fingerprint rows: p is in the set iff rows p and p+1 agree
// (row p carries F^(p-1); row 0 would carry F^(-1), equal by convention).
unsigned iset_mask_from(const std::vector<IntPoly>& gx,
                        const std::vector<IntPoly>& gy)
{
    const unsigned n = static_cast<unsigned>(gx.size());
    std::vector<bool> row_eq(n + 1, true);
    for (unsigned r = 1; r <= n; ++r)
        row_eq[r] = (gx[r - 1] == gy[r - 1]);
    unsigned mask = 0;
    for (unsigned p = 0; p < n; ++p)
        if ((p == 0 || row_eq[p]) && row_eq[p + 1])
            mask |= 1u << p;
    return mask;
}

std::set<int> mask_to_set(unsigned mask, unsigned n)
{
    std::set<int> s;
    for (unsigned p = 0; p < n; ++p)
        if (mask & (1u << p))
            s.insert(static_cast<int>(p));
    return s;
}

} // namespace

bool p_isospectral(const LensParams& a, const LensParams& b, int p)
{
    require_comparable(a, b);
    if (p < 0 || p >= static_cast<int>(a.n()))
        throw input_error("p_isospectral: p out of range");
    auto gx = fingerprint_of(a);
    auto gy = fingerprint_of(b);
    return (iset_mask_from(gx, gy) >> p) & 1u;
}

IsospecSet isospec_set(const LensParams& a, const LensParams& b)
{
    require_comparable(a, b);
    auto gx = fingerprint_of(a);
    auto gy = fingerprint_of(b);
    return {canonical_form(a), canonical_form(b),
            mask_to_set(iset_mask_from(gx, gy), a.n())};
}

bool iset_has_hole(const std::set<int>& I, unsigned n)
{
    for (unsigned p = 0; p < n; ++p) {
        if (I.count(static_cast<int>(p)))
            continue;
        bool below = (p == 0) || I.count(static_cast<int>(p) - 1);
        bool above = I.count(static_cast<int>(p) + 1);
        if (below && above)
            return true;
    }
    return false;
}

std::vector<SpectralClass>
spectral_classes(unsigned q, unsigned n, bool spaces_only,
                 const ClassifyOptions& opts)
{
    std::vector<CanonicalLens> classes;
    if (opts.members) {
        classes = *opts.members;
        std::sort(classes.begin(), classes.end());
        classes.erase(std::unique(classes.begin(), classes.end()),
                      classes.end());
        for (const auto& c : classes)
            if (c.q != q || c.n() != n)
                throw input_error("spectral_classes: member " +
                                  c.to_string() + " does not match (q, n)");
    } else {
        classes = enumerate_classes(q, n, spaces_only);
    }

    std::vector<SpectralClass> out(classes.size());
    APolyTable table(n);
    std::atomic<size_t> next{0};
    auto work = [&]() {
        while (true) {
            size_t i = next.fetch_add(1);
            if (i >= classes.size())
                break;
            const CanonicalLens& c = classes[i];
            LensParams L = c.params();
            PhiProfile P;
            bool loaded = false;
            if (opts.profiles.load) {
                if (auto hit = opts.profiles.load(c)) {
                    P = std::move(*hit);
                    loaded = true;
                }
            }
            if (!loaded) {
                P = phi_profile(L);
                if (opts.profiles.store)
                    opts.profiles.store(c, P);
            }
            out[i] = SpectralClass{c, is_lens_space(L),
                                   spectral_fingerprint(P, table)};
        }
    };
    unsigned workers = std::max(1u, opts.workers);
    if (workers == 1 || classes.size() < 2) {
        work();
    } else {
        std::vector<std::thread> pool;
        for (unsigned w = 0; w < workers; ++w)
            pool.emplace_back(work);
        for (auto& t : pool)
            t.join();
    }
    return out;
}

unsigned pair_iset_mask(const SpectralClass& x, const SpectralClass& y)
{
    return iset_mask_from(x.fingerprint, y.fingerprint);
}

FamilyReport classify_families(unsigned q, unsigned n, bool spaces_only,
                               const ClassifyOptions& opts)
{
    std::vector<SpectralClass> cls = spectral_classes(q, n, spaces_only, opts);
    FamilyReport report;
    report.q = q;
    report.n = n;
    report.spaces_only = spaces_only;
    const size_t N = cls.size();
    if (N < 2)
        return report;

    // Group id per fingerprint row: two classes share gid[r] exactly when
    // their F^(r-1) agree.
    std::vector<std::vector<unsigned>> gid(N, std::vector<unsigned>(n + 1, 0));
    for (unsigned r = 1; r <= n; ++r) {
        std::map<IntPoly, unsigned> ids;
        for (size_t i = 0; i < N; ++i) {
            auto [it, fresh] = ids.try_emplace(cls[i].fingerprint[r - 1],
                                               static_cast<unsigned>(ids.size()));
            gid[i][r] = it->second;
        }
    }

    auto iset_mask_of_group = [&](const std::vector<size_t>& members) {
        unsigned mask = 0;
        for (unsigned p = 0; p < n; ++p) {
            bool ok = true;
            for (size_t i = 1; i < members.size() && ok; ++i) {
                if (p > 0 && gid[members[i]][p] != gid[members[0]][p])
                    ok = false;
                if (gid[members[i]][p + 1] != gid[members[0]][p + 1])
                    ok = false;
            }
            if (ok)
                mask |= 1u << p;
        }
        return mask;
    };

    // For each candidate I: members agreeing on every row required by I
    // form equivalence classes; report each class whose exact maximal I is
    // the candidate itself.  "iset contains I" is a conjunction of row
    // equalities, so maximal cliques are plain partitions.
    for (unsigned I = 1; I < (1u << n); ++I) {
        unsigned rows = 0; // rows r whose equality I requires
        for (unsigned p = 0; p < n; ++p)
            if (I & (1u << p)) {
                if (p > 0)
                    rows |= 1u << p;
                rows |= 1u << (p + 1);
            }
        std::map<std::vector<unsigned>, std::vector<size_t>> parts;
        for (size_t i = 0; i < N; ++i) {
            std::vector<unsigned> key;
            for (unsigned r = 1; r <= n; ++r)
                if (rows & (1u << r))
                    key.push_back(gid[i][r]);
            parts[std::move(key)].push_back(i);
        }
        for (auto& [key, members] : parts) {
            if (members.size() < 2)
                continue;
            if (iset_mask_of_group(members) != I)
                continue;
            Family fam;
            fam.iset = mask_to_set(I, n);
            for (size_t i : members)
                fam.members.push_back(cls[i].lens);
            std::sort(fam.members.begin(), fam.members.end());
            report.families.push_back(std::move(fam));
        }
    }

    std::sort(report.families.begin(), report.families.end(),
              [](const Family& a, const Family& b) {
                  if (a.members != b.members)
                      return a.members < b.members;
                  return a.iset < b.iset;
              });

    // Shared-string audit (build-stopping by contract): pairwise isets of
    // classes in the same report must be hole-free.
    for (size_t i = 0; i < N; ++i)
        for (size_t j = i + 1; j < N; ++j) {
            unsigned mask = 0;
            for (unsigned p = 0; p < n; ++p)
                if ((p == 0 || gid[i][p] == gid[j][p]) &&
                    gid[i][p + 1] == gid[j][p + 1])
                    mask |= 1u << p;
            if (iset_has_hole(mask_to_set(mask, n), n))
                throw error("hole obstruction violated by " +
                            cls[i].lens.to_string() + " / " +
                            cls[j].lens.to_string());
        }
    return report;
}

int ikeda_filtration_level(const LensParams& L)
{
    const unsigned q = L.q();
    const unsigned n = L.n();
    if (!is_prime_u(q) || q % 2 == 0)
        throw not_applicable("ikeda_filtration_level: q must be an odd prime");
    if (q != 2 * n + 5)
        throw not_applicable(
            "ikeda_filtration_level: need q - 1 = 2n + 4 so the complement "
            "has two parameters");
    if (!is_lens_space(L))
        throw not_applicable("ikeda_filtration_level: not a lens space");
    std::set<unsigned> seen(L.s().begin(), L.s().end());
    if (seen.size() != n || seen.count(0))
        throw not_applicable(
            "ikeda_filtration_level: parameters must be distinct mod +-1");

    // Complement parameters: the two smallest positive folded residues not
    // hit by +-s.  Any valid re-choice permutes the tested sums, so the
    // level is choice-independent.
    std::vector<unsigned> sbar;
    for (unsigned v = 1; v <= (q - 1) / 2 && sbar.size() < 2; ++v)
        if (!seen.count(v))
            sbar.push_back(v);
    if (sbar.size() != 2)
        throw not_applicable("ikeda_filtration_level: no complement found");

    // Smallest |a1| + |a2| > 0 with a1 sbar1 + a2 sbar2 = 0 (mod q); the
    // level is that minimum minus 3.
    const long bound = static_cast<long>(q);
    long best = 2 * bound;
    for (long a1 = -bound; a1 <= bound; ++a1)
        for (long a2 = -bound; a2 <= bound; ++a2) {
            if (a1 == 0 && a2 == 0)
                continue;
            long norm = std::abs(a1) + std::abs(a2);
            if (norm >= best)
                continue;
            long v = (a1 * static_cast<long>(sbar[0]) +
                      a2 * static_cast<long>(sbar[1])) %
                     static_cast<long>(q);
            if (v == 0)
                best = norm;
        }
    return static_cast<int>(best - 3);
}

std::vector<std::string> verify_hole(const FamilyReport& report)
{
    std::vector<std::string> violations;
    std::map<CanonicalLens, std::vector<IntPoly>> cache;
    auto fp = [&](const CanonicalLens& c) -> const std::vector<IntPoly>& {
        auto it = cache.find(c);
        if (it == cache.end())
            it = cache.emplace(c, fingerprint_of(c.params())).first;
        return it->second;
    };
    for (const Family& fam : report.families) {
        if (iset_has_hole(fam.iset, report.n))
            violations.push_back("family I has a hole: " +
                                 [&] {
                                     std::ostringstream os;
                                     for (int p : fam.iset)
                                         os << p << " ";
                                     return os.str();
                                 }());
        for (size_t i = 0; i < fam.members.size(); ++i)
            for (size_t j = i + 1; j < fam.members.size(); ++j) {
                unsigned mask = iset_mask_from(fp(fam.members[i]),
                                               fp(fam.members[j]));
                if (iset_has_hole(mask_to_set(mask, report.n), report.n))
                    violations.push_back("pair iset has a hole: " +
                                         fam.members[i].to_string() + " / " +
                                         fam.members[j].to_string());
            }
    }
    return violations;
}

std::vector<std::string> verify_covering(const LensParams& a,
                                         const LensParams& b)
{
    require_comparable(a, b);
    if (!is_lens_space(a) || !is_lens_space(b))
        throw not_lens_space(
            "verify_covering: descent is only asserted for lens spaces");
    std::vector<std::string> violations;
    RationalFunction fa = ftilde0(a);
    RationalFunction fb = ftilde0(b);
    if (!rat_equal(fa, fb)) {
        violations.push_back("input pair is not 0-isospectral");
        return violations;
    }
    for (unsigned q1 = 1; q1 <= a.q(); ++q1) {
        if (a.q() % q1 != 0)
            continue;
        LensParams ca = cover(a, q1);
        LensParams cb = cover(b, q1);
        if (!rat_equal(ftilde0(ca), ftilde0(cb)))
            violations.push_back("cover to q1=" + std::to_string(q1) +
                                 " is not 0-isospectral: " + format_lens(ca) +
                                 " / " + format_lens(cb));
    }
    return violations;
}

PaddingCheck verify_padding(const LensParams& a, const LensParams& b,
                            unsigned m)
{
    require_comparable(a, b);
    PaddingCheck out;
    std::vector<long> ra(a.s().begin(), a.s().end());
    std::vector<long> rb(b.s().begin(), b.s().end());
    for (unsigned i = 0; i < m; ++i) {
        ra.push_back(0);
        rb.push_back(0);
    }
    LensParams pa(a.q(), ra), pb(b.q(), rb);

    out.base_iset = isospec_set(a, b).iset;
    out.padded_iset = isospec_set(pa, pb).iset;
    out.base_zero_isosp = out.base_iset.count(0) > 0;
    out.padded_zero_isosp = out.padded_iset.count(0) > 0;
    out.biconditional_ok = (out.base_zero_isosp == out.padded_zero_isosp);
    return out;
}

std::vector<std::pair<unsigned, IntPoly>> a_matrix_minors(unsigned n)
{
    if (n < 2)
        throw input_error("a_matrix_minors: need n >= 2");
    APolyTable table(n);
    std::vector<std::pair<unsigned, IntPoly>> out;
    const unsigned m = n - 1; // minors are (n-1) x (n-1)
    for (unsigned deleted = 1; deleted <= n; ++deleted) {
        std::vector<std::vector<IntPoly>> M;
        for (unsigned p = 1; p <= n; ++p) {
            if (p == deleted)
                continue;
            std::vector<IntPoly> row;
            for (unsigned l = 0; l + 2 <= n; ++l)
                row.push_back(table.at(p, l));
            M.push_back(std::move(row));
        }
        // Bareiss fraction-free elimination over Z[z].
        int sign = 1;
        IntPoly prev = IntPoly::one();
        bool singular = false;
        for (unsigned k = 0; k < m && !singular; ++k) {
            if (M[k][k].is_zero()) {
                unsigned swap_row = k + 1;
                while (swap_row < m && M[swap_row][k].is_zero())
                    ++swap_row;
                if (swap_row == m) {
                    singular = true;
                    break;
                }
                std::swap(M[k], M[swap_row]);
                sign = -sign;
            }
            for (unsigned i = k + 1; i < m; ++i)
                for (unsigned j = k + 1; j < m; ++j) {
                    IntPoly numer = M[k][k] * M[i][j] - M[i][k] * M[k][j];
                    IntPoly quot;
                    if (!IntPoly::div_exact(numer, prev, quot))
                        throw error("a_matrix_minors: fraction-free division "
                                    "failed (bug)");
                    M[i][j] = std::move(quot);
                }
            prev = M[k][k];
        }
        IntPoly det = singular ? IntPoly() : M[m - 1][m - 1];
        if (sign < 0)
            det = -det;
        out.emplace_back(deleted, std::move(det));
    }
    return out;
}

ConjectureReport scan_conjectures(unsigned q_lo, unsigned q_hi, unsigned n,
                                  const ClassifyOptions& opts)
{
    ConjectureReport rep;
    rep.q_lo = q_lo;
    rep.q_hi = q_hi;
    rep.n = n;

    auto format_family = [](unsigned q, const Family& f) {
        std::ostringstream os;
        os << "q=" << q << " I={";
        bool first = true;
        for (int p : f.iset) {
            os << (first ? "" : ",") << p;
            first = false;
        }
        os << "} {";
        for (size_t i = 0; i < f.members.size(); ++i)
            os << (i ? ", " : "") << f.members[i].to_string();
        os << "}";
        return os.str();
    };

    for (unsigned q = q_lo; q <= q_hi; ++q) {
        FamilyReport fr = classify_families(q, n, false, opts);
        for (const Family& fam : fr.families) {
            // Mixture scan: a family with nonempty I must not mix a lens
            // space with a singular orbifold.
            bool has_space = false, has_orbifold = false;
            for (const auto& mem : fam.members) {
                if (is_lens_space(mem.params()))
                    has_space = true;
                else
                    has_orbifold = true;
            }
            if (has_space && has_orbifold) {
                rep.counterexamples.push_back(
                    "space/orbifold mixture: " + format_family(q, fam));
                continue;
            }

            if (n == 3 && fam.iset == std::set<int>{2}) {
                // Expected shape: q = 8t with t odd, members
                // {L(8t;4,t,3t), L(8t;8,t,3t)}.
                bool shape_ok = false;
                if (q % 8 == 0 && (q / 8) % 2 == 1 &&
                    fam.members.size() == 2) {
                    long t = static_cast<long>(q / 8);
                    CanonicalLens m1 = canonical_form(
                        LensParams(q, {4, t, 3 * t}));
                    CanonicalLens m2 = canonical_form(
                        LensParams(q, {8, t, 3 * t}));
                    std::vector<CanonicalLens> want{m1, m2};
                    std::sort(want.begin(), want.end());
                    shape_ok = (fam.members == want);
                }
                (shape_ok ? rep.confirmations : rep.counterexamples)
                    .push_back((shape_ok ? "dim-5 {2} pair matches L(8t;4,t,3t)/L(8t;8,t,3t): "
                                         : "dim-5 {2} family off-pattern: ") +
                               format_family(q, fam));
            }
            if (n == 4 && fam.iset == std::set<int>{2}) {
                bool ok = (q % 3 == 0);
                (ok ? rep.confirmations : rep.counterexamples)
                    .push_back((ok ? "dim-7 {2} family has 3 | q: "
                                   : "dim-7 {2} family without 3 | q: ") +
                               format_family(q, fam));
            }
            if (n == 4 && fam.iset == std::set<int>{3}) {
                bool ok = (q % 5 == 0);
                (ok ? rep.confirmations : rep.counterexamples)
                    .push_back((ok ? "dim-7 {3} family has 5 | q: "
                                   : "dim-7 {3} family without 5 | q: ") +
                               format_family(q, fam));
            }
        }
    }
    return rep;
}

} // namespace lenspec

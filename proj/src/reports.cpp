#include "lenspec/reports.hpp"

#include <algorithm>
#include <sstream>

namespace lenspec {

std::string iset_to_string(const std::set<int>& I)
{
    std::ostringstream os;
    os << "{";
    bool first = true;
    for (int p : I) {
        os << (first ? "" : ",") << p;
        first = false;
    }
    os << "}";
    return os.str();
}

namespace {

std::vector<std::set<int>> all_subsets(unsigned n)
{
    std::vector<std::set<int>> out;
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
        std::set<int> s;
        for (unsigned p = 0; p < n; ++p)
            if (mask & (1u << p))
                s.insert(static_cast<int>(p));
        out.push_back(std::move(s));
    }
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
        if (a.size() != b.size())
            return a.size() < b.size();
        return a < b;
    });
    return out;
}

bool is_chain_rigidity(const std::set<int>& I, unsigned n)
{
    if (I.size() != n - 1)
        return false;
    for (unsigned p = 0; p + 1 < n; ++p)
        if (!I.count(static_cast<int>(p)))
            return false;
    return true; // I = {0..n-2}
}

bool is_corank2_rigidity(const std::set<int>& I, unsigned n)
{
    if (n < 2 || I.size() != n - 2)
        return false;
    // Exclude {0..n-3}.
    bool prefix = true;
    for (unsigned p = 0; p + 2 < n; ++p)
        if (!I.count(static_cast<int>(p)))
            prefix = false;
    return !prefix;
}

} // namespace

RangeSummary summarize_range(unsigned q_lo, unsigned q_hi, unsigned n,
                             const ClassifyOptions& opts)
{
    std::set<std::set<int>> space_isets, orbifold_isets;
    for (unsigned q = q_lo; q <= q_hi; ++q) {
        FamilyReport spaces = classify_families(q, n, true, opts);
        for (const Family& f : spaces.families)
            space_isets.insert(f.iset);
        FamilyReport all = classify_families(q, n, false, opts);
        for (const Family& f : all.families) {
            bool pure_spaces = true;
            for (const auto& m : f.members)
                if (!is_lens_space(m.params()))
                    pure_spaces = false;
            if (!pure_spaces)
                orbifold_isets.insert(f.iset);
        }
    }
    // A space family is in particular an orbifold family.
    for (const auto& I : space_isets)
        orbifold_isets.insert(I);

    RangeSummary out;
    out.q_lo = q_lo;
    out.q_hi = q_hi;
    out.n = n;
    for (const auto& I : all_subsets(n)) {
        if (I.empty())
            continue;
        SummaryRow row;
        row.I = I;
        auto tag = [&](bool exists, bool orbifold_column) -> std::string {
            if (exists)
                return "exists";
            if (iset_has_hole(I, n))
                return "hole";
            if (is_chain_rigidity(I, n))
                return orbifold_column ? "chain-rigidity(conj)"
                                       : "chain-rigidity";
            if (is_corank2_rigidity(I, n)) {
                if (!orbifold_column)
                    return "corank2-rigidity";
                if (I.count(0))
                    return "corank2-rigidity(conj)";
                return "unexplained";
            }
            return "unexplained";
        };
        row.spaces = tag(space_isets.count(I) > 0, false);
        row.orbifolds = tag(orbifold_isets.count(I) > 0, true);
        out.rows.push_back(std::move(row));
    }
    return out;
}

std::string family_report_to_csv(const FamilyReport& r)
{
    std::ostringstream os;
    os << "q,n,I,members\n";
    for (const Family& f : r.families) {
        os << r.q << "," << r.n << ",\"" << iset_to_string(f.iset) << "\",\"";
        for (size_t i = 0; i < f.members.size(); ++i)
            os << (i ? " " : "") << f.members[i].to_string();
        os << "\"\n";
    }
    return os.str();
}

ordered_json range_summary_to_json(const RangeSummary& s)
{
    ordered_json j;
    j["q_lo"] = s.q_lo;
    j["q_hi"] = s.q_hi;
    j["n"] = s.n;
    ordered_json rows = ordered_json::array();
    for (const SummaryRow& r : s.rows) {
        ordered_json row;
        row["I"] = r.I;
        row["spaces"] = r.spaces;
        row["orbifolds"] = r.orbifolds;
        rows.push_back(std::move(row));
    }
    j["rows"] = std::move(rows);
    return j;
}

std::string range_summary_to_csv(const RangeSummary& s)
{
    std::ostringstream os;
    os << "I,lens_spaces,lens_orbifolds\n";
    for (const SummaryRow& r : s.rows)
        os << "\"" << iset_to_string(r.I) << "\"," << r.spaces << ","
           << r.orbifolds << "\n";
    return os.str();
}

ordered_json class_listing_to_json(const ClassListing& l)
{
    ordered_json j;
    j["q"] = l.q;
    j["n"] = l.n;
    j["spaces_only"] = l.spaces_only;
    ordered_json arr = ordered_json::array();
    for (const auto& c : l.classes) {
        ordered_json e;
        e["lens"] = c.to_string();
        e["s"] = c.s;
        e["isotropy"] = isotropy_profile(c.params());
        arr.push_back(std::move(e));
    }
    j["classes"] = std::move(arr);
    return j;
}

std::string class_listing_to_csv(const ClassListing& l)
{
    std::ostringstream os;
    os << "lens,isotropy\n";
    for (const auto& c : l.classes) {
        os << "\"" << c.to_string() << "\",\"{";
        auto iso = isotropy_profile(c.params());
        for (size_t i = 0; i < iso.size(); ++i)
            os << (i ? "," : "") << iso[i];
        os << "}\"\n";
    }
    return os.str();
}

} // namespace lenspec

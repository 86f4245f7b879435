#include "lenspec/lens.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

namespace lenspec {

namespace {

unsigned fold(unsigned q, long v)
{
    long m = v % static_cast<long>(q);
    if (m < 0)
        m += q;
    auto u = static_cast<unsigned>(m);
    return std::min(u, q - u);
}

std::vector<unsigned> units_mod(unsigned q)
{
    if (q == 1)
        return {1};
    std::vector<unsigned> t;
    for (unsigned u = 1; u < q; ++u)
        if (std::gcd(u, q) == 1)
            t.push_back(u);
    return t;
}

} // namespace

LensParams::LensParams(unsigned q, const std::vector<long>& raw) : q_(q)
{
    if (q == 0)
        throw input_error("lens parameters: q must be positive");
    if (raw.size() < 2)
        throw input_error("lens parameters: need n >= 2 (dimension >= 3)");
    s_.reserve(raw.size());
    for (long v : raw)
        s_.push_back(fold(q, v));
    unsigned g = q;
    for (unsigned v : s_)
        g = std::gcd(g, v);
    if (g != 1)
        throw input_error("lens parameters: gcd(q, s_1, ..., s_n) = " +
                          std::to_string(g) + ", generator order is not q");
}

LensParams CanonicalLens::params() const
{
    std::vector<long> raw(s.begin(), s.end());
    return LensParams(q, raw);
}

std::string CanonicalLens::to_string() const
{
    std::ostringstream os;
    os << "L(" << q << ";";
    for (size_t i = 0; i < s.size(); ++i)
        os << (i ? "," : "") << s[i];
    os << ")";
    return os.str();
}

CanonicalLens canonical_form(const LensParams& L)
{
    unsigned q = L.q();
    std::vector<unsigned> best;
    std::vector<unsigned> cand(L.n());
    for (unsigned t : units_mod(q)) {
        for (size_t j = 0; j < cand.size(); ++j)
            cand[j] =
                fold(q, static_cast<long>(t) * static_cast<long>(L.s()[j]));
        std::sort(cand.begin(), cand.end());
        if (best.empty() || cand < best)
            best = cand;
    }
    return CanonicalLens{q, std::move(best)};
}

bool is_isometric(const LensParams& a, const LensParams& b)
{
    if (a.q() != b.q())
        throw order_mismatch("is_isometric: fundamental group orders differ");
    if (a.n() != b.n())
        throw dimension_mismatch("is_isometric: dimensions differ");
    return canonical_form(a) == canonical_form(b);
}

std::vector<CanonicalLens> enumerate_classes(unsigned q, unsigned n,
                                             bool spaces_only)
{
    if (q == 0)
        throw input_error("enumerate_classes: q must be positive");
    if (n < 2)
        throw input_error("enumerate_classes: need n >= 2");
    unsigned half = q / 2;
    std::set<CanonicalLens> classes;
    // Nondecreasing s-vectors over [0, half]^n.
    std::vector<unsigned> s(n, 0);
    while (true) {
        bool ok = true;
        if (spaces_only) {
            for (unsigned v : s)
                if (std::gcd(q, v) != 1) {
                    ok = false;
                    break;
                }
        } else {
            unsigned g = q;
            for (unsigned v : s)
                g = std::gcd(g, v);
            ok = (g == 1);
        }
        if (ok) {
            std::vector<long> raw(s.begin(), s.end());
            classes.insert(canonical_form(LensParams(q, raw)));
        }
        // next nondecreasing vector
        int j = static_cast<int>(n) - 1;
        while (j >= 0 && s[j] == half)
            --j;
        if (j < 0)
            break;
        unsigned v = s[j] + 1;
        for (size_t i = j; i < n; ++i)
            s[i] = v;
    }
    return {classes.begin(), classes.end()};
}

std::vector<unsigned> isotropy_profile(const LensParams& L)
{
    std::vector<unsigned> g;
    g.reserve(L.n());
    for (unsigned v : L.s())
        g.push_back(std::gcd(L.q(), v));
    std::sort(g.begin(), g.end());
    return g;
}

bool is_lens_space(const LensParams& L)
{
    for (unsigned v : L.s())
        if (std::gcd(L.q(), v) != 1)
            return false;
    return true;
}

LensParams cover(const LensParams& L, unsigned q1)
{
    if (q1 == 0 || L.q() % q1 != 0)
        throw not_a_divisor("cover: " + std::to_string(q1) +
                            " does not divide " + std::to_string(L.q()));
    std::vector<long> raw(L.s().begin(), L.s().end());
    return LensParams(q1, raw);
}

std::string format_lens(const LensParams& L)
{
    return canonical_form(L).to_string();
}

LensParams parse_lens(const std::string& text)
{
    // "L(q;s1,...,sn)", whitespace tolerated.
    std::string t;
    for (char c : text)
        if (!isspace(static_cast<unsigned char>(c)))
            t += c;
    if (t.size() < 6 || (t[0] != 'L' && t[0] != 'l') || t[1] != '(' ||
        t.back() != ')')
        throw input_error("cannot parse lens parameters from '" + text + "'");
    std::string body = t.substr(2, t.size() - 3);
    auto semi = body.find(';');
    if (semi == std::string::npos)
        throw input_error("cannot parse lens parameters from '" + text + "'");
    unsigned q = 0;
    std::vector<long> s;
    try {
        q = static_cast<unsigned>(std::stoul(body.substr(0, semi)));
        std::stringstream ss(body.substr(semi + 1));
        std::string item;
        while (std::getline(ss, item, ','))
            s.push_back(std::stol(item));
    } catch (const std::exception&) {
        throw input_error("cannot parse lens parameters from '" + text + "'");
    }
    return LensParams(q, s);
}

} // namespace lenspec

#include "lenspec/cache.hpp"

#include "lenspec/serialize.hpp"

#include <atomic>
#include <fstream>
#include <sstream>
#include <thread>

namespace lenspec {

namespace fs = std::filesystem;

ordered_json poly_to_json(const IntPoly& p)
{
    ordered_json arr = ordered_json::array();
    for (const Int& c : p.coeffs())
        arr.push_back(c.get_str());
    return arr;
}

IntPoly poly_from_json(const nlohmann::json& j)
{
    if (!j.is_array())
        throw input_error("polynomial JSON must be an array of strings");
    std::vector<Int> c;
    c.reserve(j.size());
    for (const auto& v : j)
        c.emplace_back(v.get<std::string>());
    return IntPoly(std::move(c));
}

ordered_json rational_to_json(const RationalFunction& f)
{
    ordered_json j;
    j["num"] = poly_to_json(f.num());
    j["den"] = poly_to_json(f.den());
    j["zpow"] = f.zpow();
    return j;
}

RationalFunction rational_from_json(const nlohmann::json& j)
{
    return RationalFunction(poly_from_json(j.at("num")),
                            poly_from_json(j.at("den")),
                            j.at("zpow").get<long>());
}

ordered_json phi_profile_to_json(const PhiProfile& P)
{
    ordered_json j;
    j["schema"] = 1;
    j["q"] = P.q;
    j["n"] = P.n;
    ordered_json phis = ordered_json::array();
    for (const IntPoly& p : P.phi)
        phis.push_back(poly_to_json(p));
    j["phi"] = std::move(phis);
    return j;
}

PhiProfile phi_profile_from_json(const nlohmann::json& j)
{
    if (j.at("schema").get<int>() != 1)
        throw input_error("phi profile: unknown schema version");
    PhiProfile P;
    P.q = j.at("q").get<unsigned>();
    P.n = j.at("n").get<unsigned>();
    for (const auto& arr : j.at("phi"))
        P.phi.push_back(poly_from_json(arr));
    if (P.phi.size() != P.n + 1)
        throw input_error("phi profile: wrong stratum count");
    return P;
}

ordered_json lens_to_json(const LensParams& L)
{
    ordered_json j;
    j["q"] = L.q();
    j["s"] = L.s();
    return j;
}

LensParams lens_from_json(const nlohmann::json& j)
{
    std::vector<long> s;
    for (const auto& v : j.at("s"))
        s.push_back(v.get<long>());
    return LensParams(j.at("q").get<unsigned>(), s);
}

ordered_json family_report_to_json(const FamilyReport& r)
{
    ordered_json j;
    j["q"] = r.q;
    j["n"] = r.n;
    j["spaces_only"] = r.spaces_only;
    ordered_json fams = ordered_json::array();
    for (const Family& f : r.families) {
        ordered_json fj;
        ordered_json members = ordered_json::array();
        for (const auto& m : f.members)
            members.push_back(m.to_string());
        fj["members"] = std::move(members);
        fj["I"] = f.iset;
        fams.push_back(std::move(fj));
    }
    j["families"] = std::move(fams);
    return j;
}

ProfileCache::ProfileCache(fs::path dir) : dir_(std::move(dir))
{
    fs::create_directories(dir_);
}

fs::path ProfileCache::record_path(const CanonicalLens& key) const
{
    std::ostringstream name;
    name << "phi_q" << key.q << "_n" << key.n();
    for (unsigned v : key.s)
        name << "_" << v;
    name << ".json";
    return dir_ / name.str();
}

std::optional<PhiProfile> ProfileCache::load(const CanonicalLens& key) const
{
    std::ifstream in(record_path(key));
    if (!in)
        return std::nullopt;
    try {
        nlohmann::json j;
        in >> j;
        PhiProfile P = phi_profile_from_json(j);
        if (P.q != key.q || P.n != key.n())
            return std::nullopt;
        return P;
    } catch (const std::exception&) {
        return std::nullopt; // torn or stale record: recompute
    }
}

void ProfileCache::store(const CanonicalLens& key, const PhiProfile& value) const
{
    static std::atomic<unsigned long> seq{0};
    fs::path final_path = record_path(key);
    fs::path tmp = final_path;
    tmp += ".tmp." + std::to_string(seq.fetch_add(1)) + "." +
           std::to_string(
               std::hash<std::thread::id>{}(std::this_thread::get_id()));
    {
        std::ofstream out(tmp);
        out << phi_profile_to_json(value).dump();
    }
    std::error_code ec;
    fs::rename(tmp, final_path, ec);
    if (ec)
        fs::remove(tmp, ec);
}

ProfileSource ProfileCache::source() const
{
    ProfileSource s;
    s.load = [this](const CanonicalLens& key) { return load(key); };
    s.store = [this](const CanonicalLens& key, const PhiProfile& value) {
        store(key, value);
    };
    return s;
}

} // namespace lenspec

#pragma once

#include "lenspec/isospec.hpp"

#include <filesystem>
#include <string>

namespace lenspec {

/// File-backed memo of PhiProfiles, keyed by the canonical parameters.
/// Exact arithmetic makes a hit byte-identical to recomputation, so the
/// cache is a pure memo.  Writes go to a temporary file followed by an
/// atomic rename; concurrent workers never observe partial records.
class ProfileCache {
public:
    explicit ProfileCache(std::filesystem::path dir);

    std::optional<PhiProfile> load(const CanonicalLens& key) const;
    void store(const CanonicalLens& key, const PhiProfile& value) const;

    /// Callbacks for ClassifyOptions.  Load failures (missing, stale
    /// schema, torn record) fall through to recomputation.
    ProfileSource source() const;

    const std::filesystem::path& dir() const { return dir_; }

private:
    std::filesystem::path record_path(const CanonicalLens& key) const;
    std::filesystem::path dir_;
};

} // namespace lenspec

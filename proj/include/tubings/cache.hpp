#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "tubings/solver.hpp"

namespace tubings {

// On-disk coefficient cache: one b-file per (variant, spec, order) with a
// checksum footer, so n ~ 1000 runs are solved once. Entries are
// human-readable and diffable; a stored order N' serves any request <= N'
// by prefix. Writes are write-temp-then-rename, so concurrent CLI runs
// cannot corrupt an entry.
class CoefficientCache {
public:
    explicit CoefficientCache(std::filesystem::path dir);

    // $TUBINGS_CACHE_DIR, else $XDG_DATA_HOME/tubings, else
    // ~/.local/share/tubings.
    static std::filesystem::path default_dir();

    static std::string key(Variant v, const AlphabetSpec& spec, int order);

    // Coefficients 0..order (index 0 is always 0). Corrupt entries count
    // as misses. Throws CacheIoError only on real I/O failures.
    std::optional<std::vector<Int>> lookup(Variant v, const AlphabetSpec& spec, int order) const;

    void store(Variant v, const AlphabetSpec& spec, const std::vector<Int>& coeffs) const;

    // Cached front door for the solver's gamma coefficients.
    std::vector<Int> gamma_coefficients(Variant v, const AlphabetSpec& spec, int order) const;

    const std::filesystem::path& dir() const { return dir_; }

private:
    std::filesystem::path dir_;
};

// Payload encoding, shared with tests: b-file lines plus checksum footer.
std::string encode_cache_payload(const std::vector<Int>& coeffs);
std::optional<std::vector<Int>> decode_cache_payload(const std::string& text);

} // namespace tubings

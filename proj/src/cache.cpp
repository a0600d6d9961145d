#include "tubings/cache.hpp"

#include <unistd.h>

#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "tubings/errors.hpp"

namespace tubings {

namespace {

std::uint64_t fnv1a(const std::string& data) {
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char c : data) {
        h ^= c;
        h *= 1099511628211ull;
    }
    return h;
}

std::string hex64(std::uint64_t v) {
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(v));
    return buf;
}

} // namespace

std::string encode_cache_payload(const std::vector<Int>& coeffs) {
    std::string body;
    for (std::size_t n = 1; n < coeffs.size(); ++n) {
        body += std::to_string(n);
        body += ' ';
        body += coeffs[n].get_str();
        body += '\n';
    }
    return body + "# checksum fnv1a " + hex64(fnv1a(body)) + "\n";
}

std::optional<std::vector<Int>> decode_cache_payload(const std::string& text) {
    auto footer_pos = text.rfind("# checksum fnv1a ");
    if (footer_pos == std::string::npos) return std::nullopt;
    std::string body = text.substr(0, footer_pos);
    std::string footer = text.substr(footer_pos);
    if (footer.size() < 17 + 16 + 1) return std::nullopt;
    if (hex64(fnv1a(body)) != footer.substr(17, 16)) return std::nullopt;

    std::vector<Int> coeffs{Int(0)};
    std::istringstream in(body);
    std::string line;
    std::size_t expect = 1;
    while (std::getline(in, line)) {
        auto sp = line.find(' ');
        if (sp == std::string::npos) return std::nullopt;
        if (line.substr(0, sp) != std::to_string(expect)) return std::nullopt;
        Int v;
        if (v.set_str(line.substr(sp + 1), 10) != 0) return std::nullopt;
        coeffs.push_back(std::move(v));
        ++expect;
    }
    if (coeffs.size() < 2) return std::nullopt;
    return coeffs;
}

CoefficientCache::CoefficientCache(std::filesystem::path dir) : dir_(std::move(dir)) {
    std::error_code ec;
    std::filesystem::create_directories(dir_, ec);
    if (ec) throw CacheIoError("cannot create cache directory " + dir_.string() + ": " + ec.message());
}

std::filesystem::path CoefficientCache::default_dir() {
    if (const char* p = std::getenv("TUBINGS_CACHE_DIR")) return p;
    if (const char* x = std::getenv("XDG_DATA_HOME")) return std::filesystem::path(x) / "tubings";
    if (const char* h = std::getenv("HOME")) return std::filesystem::path(h) / ".local/share/tubings";
    return std::filesystem::path(".tubings-cache");
}

std::string CoefficientCache::key(Variant v, const AlphabetSpec& spec, int order) {
    return std::string(variant_name(v)) + "_" + spec.key_fragment() + "_" + std::to_string(order);
}

std::optional<std::vector<Int>> CoefficientCache::lookup(Variant v, const AlphabetSpec& spec,
                                                         int order) const {
    const std::string prefix = std::string(variant_name(v)) + "_" + spec.key_fragment() + "_";
    int best = -1;
    std::filesystem::path best_path;
    std::error_code ec;
    for (const auto& entry : std::filesystem::directory_iterator(dir_, ec)) {
        const std::string name = entry.path().filename().string();
        if (!name.starts_with(prefix) || !name.ends_with(".bfile")) continue;
        std::string tail = name.substr(prefix.size(), name.size() - prefix.size() - 6);
        char* end = nullptr;
        long stored = std::strtol(tail.c_str(), &end, 10);
        if (end == tail.c_str() || *end != '\0') continue;
        if (stored >= order && stored > best) {
            best = static_cast<int>(stored);
            best_path = entry.path();
        }
    }
    if (best < 0) return std::nullopt;
    std::ifstream in(best_path);
    if (!in) return std::nullopt;
    std::stringstream ss;
    ss << in.rdbuf();
    auto coeffs = decode_cache_payload(ss.str());
    if (!coeffs || static_cast<int>(coeffs->size()) - 1 < order) return std::nullopt;
    coeffs->resize(static_cast<std::size_t>(order) + 1); // serve the prefix
    return coeffs;
}

void CoefficientCache::store(Variant v, const AlphabetSpec& spec,
                             const std::vector<Int>& coeffs) const {
    const int order = static_cast<int>(coeffs.size()) - 1;
    const auto target = dir_ / (key(v, spec, order) + ".bfile");
    const auto tmp = dir_ / (key(v, spec, order) + ".tmp" + std::to_string(::getpid()));
    {
        std::ofstream out(tmp);
        if (!out) throw CacheIoError("cannot write " + tmp.string());
        out << encode_cache_payload(coeffs);
        if (!out) throw CacheIoError("write failed for " + tmp.string());
    }
    std::error_code ec;
    std::filesystem::rename(tmp, target, ec);
    if (ec) throw CacheIoError("cannot move cache entry into place: " + ec.message());
}

std::vector<Int> CoefficientCache::gamma_coefficients(Variant v, const AlphabetSpec& spec,
                                                      int order) const {
    if (auto hit = lookup(v, spec, order)) return *hit;
    SolverResult res = solve(spec, order, v);
    store(v, spec, res.gamma.coeffs());
    return res.gamma.coeffs();
}

} // namespace tubings

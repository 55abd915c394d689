#include "gammaflow/rn_table.hpp"

#include <json.hpp>

#include <cstdint>
#include <fstream>
#include <sstream>
#include <thread>
#include <vector>

#include "gammaflow/operators.hpp"
#include "gammaflow/poly_io.hpp"

namespace gammaflow {

namespace {

constexpr int kFormatVersion = 1;

std::string read_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw CacheError("cannot read cache file " + path.string());
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

/* Write-then-rename so readers never observe a half written file. */
void write_file_atomic(const std::filesystem::path& path, const std::string& bytes) {
    std::filesystem::path tmp = path;
    tmp += ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw CacheError("cannot write cache file " + tmp.string());
        out << bytes;
        out.flush();
        if (!out) throw CacheError("short write to " + tmp.string());
    }
    std::filesystem::rename(tmp, path);
}

std::filesystem::path entry_path(const std::filesystem::path& dir, int n) {
    return dir / ("R" + std::to_string(n) + ".json");
}

Poly apply_flow_chunk(const std::vector<std::pair<const Partition*, const BigInt*>>& terms,
                      std::size_t begin, std::size_t end) {
    Poly chunk;
    for (std::size_t i = begin; i < end; ++i) {
        chunk.add_term(*terms[i].first, *terms[i].second);
    }
    return op_L(chunk) + op_H(chunk);
}

}

std::string fnv1a64_hex(const std::string& bytes) {
    std::uint64_t hash = 0xcbf29ce484222325ULL;
    for (unsigned char c : bytes) {
        hash ^= c;
        hash *= 0x100000001b3ULL;
    }
    std::ostringstream out;
    out << std::hex;
    for (int shift = 60; shift >= 0; shift -= 4) {
        out << ((hash >> shift) & 0xf);
    }
    return out.str();
}

Poly rn_step(const Poly& prev, int n, int threads) {
    if (n < 3) throw std::invalid_argument("recursion step defined for n >= 3");
    Poly next = source_An(n - 1);
    const int count = prev.term_count();
    if (threads <= 1 || count < 256) {
        next += op_L(prev);
        next += op_H(prev);
        return next;
    }
    std::vector<std::pair<const Partition*, const BigInt*>> terms;
    terms.reserve(static_cast<std::size_t>(count));
    for (const auto& [key, coeff] : prev.terms()) terms.emplace_back(&key, &coeff);
    std::size_t workers = std::min<std::size_t>(static_cast<std::size_t>(threads), terms.size());
    std::vector<Poly> results(workers);
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (std::size_t w = 0; w < workers; ++w) {
        std::size_t begin = terms.size() * w / workers;
        std::size_t end = terms.size() * (w + 1) / workers;
        pool.emplace_back([&, w, begin, end] { results[w] = apply_flow_chunk(terms, begin, end); });
    }
    for (auto& t : pool) t.join();
    for (const auto& part : results) next += part;
    return next;
}

RnTable::RnTable(std::optional<std::filesystem::path> cache_dir, int threads)
    : cache_dir_(std::move(cache_dir)), threads_(threads < 1 ? 1 : threads) {}

int RnTable::highest_computed() const {
    return entries_.empty() ? 0 : entries_.rbegin()->first;
}

void RnTable::load_manifest() {
    if (manifest_loaded_) return;
    manifest_loaded_ = true;
    if (!cache_dir_) return;
    std::filesystem::create_directories(*cache_dir_);
    std::filesystem::path manifest = *cache_dir_ / "manifest.json";
    if (!std::filesystem::exists(manifest)) return;
    nlohmann::json root;
    try {
        root = nlohmann::json::parse(read_file(manifest));
    } catch (const nlohmann::json::exception& e) {
        throw CacheError(std::string("manifest unreadable: ") + e.what());
    }
    if (!root.is_object() || !root.contains("format_version") || !root["format_version"].is_number_integer()) {
        throw CacheError("manifest missing format_version");
    }
    if (root["format_version"].get<int>() != kFormatVersion) {
        /* different format: drop every entry and rebuild from scratch */
        for (const auto& entry : std::filesystem::directory_iterator(*cache_dir_)) {
            const std::string name = entry.path().filename().string();
            bool is_entry = name.size() > 6 && name[0] == 'R' &&
                            name.substr(name.size() - 5) == ".json" &&
                            name.find_first_not_of("0123456789", 1) == name.size() - 5;
            if (is_entry || name == "manifest.json") {
                std::filesystem::remove(entry.path());
            }
        }
        return;
    }
    if (!root.contains("hashes") || !root["hashes"].is_object()) {
        throw CacheError("manifest missing hashes");
    }
    for (const auto& [key, value] : root["hashes"].items()) {
        if (!value.is_string()) throw CacheError("manifest hash for order " + key + " is not a string");
        int order = 0;
        try {
            order = std::stoi(key);
        } catch (...) {
            throw CacheError("manifest hash key is not an order: " + key);
        }
        manifest_hashes_[order] = value.get<std::string>();
    }
}

Poly RnTable::load_cached(int n) {
    std::filesystem::path path = entry_path(*cache_dir_, n);
    if (!std::filesystem::exists(path)) {
        throw CacheError("manifest lists order " + std::to_string(n) + " but " + path.string() + " is missing");
    }
    std::string bytes = read_file(path);
    if (fnv1a64_hex(bytes) != manifest_hashes_.at(n)) {
        throw CacheError("hash mismatch for " + path.string() + "; delete the cache directory to rebuild");
    }
    ParsedPoly parsed;
    try {
        parsed = poly_from_json(bytes);
    } catch (const std::invalid_argument& e) {
        throw CacheError("corrupt cache entry " + path.string() + ": " + e.what());
    }
    if (parsed.order != n) {
        throw CacheError("cache entry " + path.string() + " declares order " + std::to_string(parsed.order));
    }
    return std::move(parsed.poly);
}

void RnTable::persist(int n, const Poly& p) {
    std::string bytes = poly_to_json(p, n);
    write_file_atomic(entry_path(*cache_dir_, n), bytes);
    manifest_hashes_[n] = fnv1a64_hex(bytes);
    nlohmann::ordered_json root;
    root["format_version"] = kFormatVersion;
    nlohmann::ordered_json hashes = nlohmann::ordered_json::object();
    for (const auto& [order, hash] : manifest_hashes_) {
        hashes[std::to_string(order)] = hash;
    }
    root["hashes"] = std::move(hashes);
    write_file_atomic(*cache_dir_ / "manifest.json", root.dump());
}

const Poly& RnTable::compute_Rn(int n) {
    if (n < 2) throw std::invalid_argument("flow polynomials start at order 2");
    load_manifest();
    if (cache_dir_) {
        /* a cache file outside the manifest is a torn or foreign write */
        for (int k = 3; k <= n; ++k) {
            if (!entries_.count(k) && !manifest_hashes_.count(k) &&
                std::filesystem::exists(entry_path(*cache_dir_, k))) {
                throw CacheError("unmanifested cache file " + entry_path(*cache_dir_, k).string() +
                                 "; delete the cache directory to rebuild");
            }
        }
    }
    for (int k = 2; k <= n; ++k) {
        if (entries_.count(k)) continue;
        if (k == 2) {
            entries_.emplace(2, Poly());
            continue;
        }
        if (cache_dir_ && manifest_hashes_.count(k)) {
            entries_.emplace(k, load_cached(k));
            continue;
        }
        Poly next = rn_step(entries_.at(k - 1), k, threads_);
        if (cache_dir_) persist(k, next);
        entries_.emplace(k, std::move(next));
    }
    return entries_.at(n);
}

}

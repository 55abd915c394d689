#pragma once
/* Memoized computation of the flow polynomials R_n, with an optional
 * persistent cache directory.
 *
 * R_2 = 0 and R_{n+1} = A_n + L(R_n) + H(R_n).
 *
 * Cache layout: one R<n>.json per order in the polynomial file format, plus
 * manifest.json = {"format_version":1,"hashes":{"<n>":"<fnv1a64 hex>"}}.
 * Any mismatch between manifest and files raises CacheError; the cache is
 * never silently repaired. A manifest written by a different format version
 * is not an error: the directory is rebuilt in place. */

#include <filesystem>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>

#include "gammaflow/poly.hpp"

namespace gammaflow {

/* Unreadable, tampered or internally inconsistent cache contents. The fix is
 * to delete the cache directory. */
class CacheError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/* One recursion step: builds R_n from R_{n-1} for n >= 3. With threads > 1
 * the two operators are applied over chunks of the previous polynomial in a
 * thread pool; arithmetic is exact, so the result never depends on the
 * schedule. */
Poly rn_step(const Poly& prev, int n, int threads = 1);

class RnTable {
public:
    RnTable() = default;
    explicit RnTable(std::optional<std::filesystem::path> cache_dir, int threads = 1);

    /* Returns R_n for n >= 2, computing or loading every lower order first.
     * The reference stays valid for the lifetime of the table. */
    const Poly& compute_Rn(int n);

    int term_count(int n) { return compute_Rn(n).term_count(); }

    /* Highest order currently held in memory, 0 when none. */
    int highest_computed() const;

    int threads() const { return threads_; }

private:
    void load_manifest();
    Poly load_cached(int n);
    void persist(int n, const Poly& p);

    std::map<int, Poly> entries_;
    std::optional<std::filesystem::path> cache_dir_;
    int threads_ = 1;
    bool manifest_loaded_ = false;
    std::map<int, std::string> manifest_hashes_;
};

/* FNV-1a 64 bit content hash, lowercase hex. Integrity marker for cache
 * files, not a cryptographic authenticator. */
std::string fnv1a64_hex(const std::string& bytes);

}

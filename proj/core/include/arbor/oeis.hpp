#pragma once

#include <filesystem>
#include <map>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "arbor/bigint.hpp"
#include "arbor/sequence.hpp"

namespace arbor {

// One "index value" line of an OEIS b-file.
struct BFileEntry {
    long long index;
    BigInt value;
    bool operator==(const BFileEntry&) const = default;
};

class BFileParseError : public std::runtime_error {
public:
    BFileParseError(const std::string& what, int line);
    int line() const { return line_; }

private:
    int line_;
};

// Network or cache-write trouble. Kept distinct from parse errors so
// callers can route it to a different exit path.
class OeisFetchError : public std::runtime_error {
    using std::runtime_error::runtime_error;
};

/* Parses b-file text: "index value" per line, any amount of whitespace,
 * '#' comment lines and blank lines skipped. Indices must be strictly
 * increasing. Throws BFileParseError with the 1-based line number. */
std::vector<BFileEntry> parse_bfile(std::string_view text);

// File source. Throws OeisFetchError if unreadable, BFileParseError if bad.
std::vector<BFileEntry> load_bfile(const std::filesystem::path& path);

/* Network source with a disk cache. sequence_id must match A followed by
 * six digits. A cached copy under oeis_cache_dir() is used when present;
 * otherwise fetches https://oeis.org/<id>/b<digits>.txt, validates, and
 * caches it with a write-to-temp-then-rename so concurrent fetches of the
 * same id stay safe. Network failure throws OeisFetchError, never a
 * silent fallback. */
std::vector<BFileEntry> fetch_bfile(const std::string& sequence_id);

// $ARBOR_CACHE_DIR if set, else the user cache directory ($XDG_CACHE_HOME
// or ~/.cache) plus /arbor.
std::filesystem::path oeis_cache_dir();

struct Mismatch {
    long long n;         // index on the computed side
    BigInt computed;
    BigInt reference;
    bool operator==(const Mismatch&) const = default;
};

/* Compares computed values against reference entries: computed index n is
 * checked against reference index n + offset. Returns every disagreement,
 * ascending by n; empty means full agreement on the overlap. Throws
 * std::invalid_argument when the overlap is empty (a comparison that checks
 * nothing is a configuration mistake, not a pass). */
std::vector<Mismatch> compare(const std::map<int, BigInt>& computed,
                              const std::vector<BFileEntry>& reference,
                              long long offset);

// Convenience for sequence tables (offset 0 for a(n) itself).
std::vector<Mismatch> compare(const SequenceTable& computed,
                              const std::vector<BFileEntry>& reference,
                              long long offset);

}  // namespace arbor

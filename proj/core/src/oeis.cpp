#define CPPHTTPLIB_OPENSSL_SUPPORT
#include <httplib.h>

#include "arbor/oeis.hpp"

#include <unistd.h>

#include <cctype>
#include <cstdlib>
#include <fstream>
#include <sstream>

namespace arbor {

BFileParseError::BFileParseError(const std::string& what, int line)
    : std::runtime_error("b-file line " + std::to_string(line) + ": " + what),
      line_(line) {}

namespace {

bool is_integer_token(const std::string& s) {
    if (s.empty()) return false;
    size_t start = s[0] == '-' ? 1 : 0;
    if (start == s.size()) return false;
    for (size_t i = start; i < s.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    return true;
}

}  // namespace

std::vector<BFileEntry> parse_bfile(std::string_view text) {
    std::vector<BFileEntry> entries;
    int line_no = 0;
    size_t pos = 0;
    while (pos < text.size()) {
        const size_t eol = text.find('\n', pos);
        std::string_view line =
            text.substr(pos, (eol == std::string_view::npos ? text.size() : eol) - pos);
        pos = eol == std::string_view::npos ? text.size() : eol + 1;
        ++line_no;

        while (!line.empty() && (line.back() == '\r' || line.back() == ' ' || line.back() == '\t'))
            line.remove_suffix(1);
        while (!line.empty() && (line.front() == ' ' || line.front() == '\t'))
            line.remove_prefix(1);
        if (line.empty() || line.front() == '#') continue;

        std::istringstream iss{std::string(line)};
        long long index = 0;
        std::string value_token;
        if (!(iss >> index >> value_token))
            throw BFileParseError("expected 'index value'", line_no);
        std::string extra;
        if (iss >> extra)
            throw BFileParseError("unexpected trailing token '" + extra + "'", line_no);
        if (!is_integer_token(value_token))
            throw BFileParseError("malformed value '" + value_token + "'", line_no);
        if (!entries.empty() && index <= entries.back().index)
            throw BFileParseError("index " + std::to_string(index) +
                                      " not strictly increasing",
                                  line_no);
        entries.push_back({index, BigInt(value_token)});
    }
    return entries;
}

std::vector<BFileEntry> load_bfile(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw OeisFetchError("cannot read b-file: " + path.string());
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_bfile(buf.str());
}

std::filesystem::path oeis_cache_dir() {
    if (const char* dir = std::getenv("ARBOR_CACHE_DIR"); dir && *dir)
        return std::filesystem::path(dir);
    if (const char* xdg = std::getenv("XDG_CACHE_HOME"); xdg && *xdg)
        return std::filesystem::path(xdg) / "arbor";
    if (const char* home = std::getenv("HOME"); home && *home)
        return std::filesystem::path(home) / ".cache" / "arbor";
    return std::filesystem::current_path() / ".arbor-cache";
}

namespace {

bool valid_sequence_id(const std::string& id) {
    if (id.size() != 7 || id[0] != 'A') return false;
    for (size_t i = 1; i < id.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(id[i]))) return false;
    return true;
}

void write_atomically(const std::filesystem::path& target, const std::string& data) {
    std::error_code ec;
    std::filesystem::create_directories(target.parent_path(), ec);
    const auto tmp = target.string() + ".tmp." + std::to_string(::getpid());
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        out << data;
        if (!out)
            throw OeisFetchError("cannot write cache file: " + tmp);
    }
    std::filesystem::rename(tmp, target, ec);
    if (ec)
        throw OeisFetchError("cannot move cache file into place: " + target.string());
}

}  // namespace

std::vector<BFileEntry> fetch_bfile(const std::string& sequence_id) {
    if (!valid_sequence_id(sequence_id))
        throw std::invalid_argument("sequence id must be 'A' followed by six digits, got '" +
                                    sequence_id + "'");
    const std::string bfile_name = "b" + sequence_id.substr(1) + ".txt";
    const std::filesystem::path cached = oeis_cache_dir() / bfile_name;
    if (std::filesystem::exists(cached))
        return load_bfile(cached);

    httplib::SSLClient client("oeis.org");
    client.set_connection_timeout(10);
    client.set_read_timeout(30);
    const std::string path = "/" + sequence_id + "/" + bfile_name;
    httplib::Result res = client.Get(path);
    if (!res)
        throw OeisFetchError("fetching https://oeis.org" + path + " failed: " +
                             httplib::to_string(res.error()));
    if (res->status != 200)
        throw OeisFetchError("fetching https://oeis.org" + path + " failed: HTTP " +
                             std::to_string(res->status));

    // Validate before caching; a bad download must not poison the cache.
    std::vector<BFileEntry> entries = parse_bfile(res->body);
    write_atomically(cached, res->body);
    return entries;
}

std::vector<Mismatch> compare(const std::map<int, BigInt>& computed,
                              const std::vector<BFileEntry>& reference,
                              long long offset) {
    std::map<long long, const BigInt*> ref_by_index;
    for (const BFileEntry& e : reference) ref_by_index.emplace(e.index, &e.value);

    std::vector<Mismatch> mismatches;
    size_t overlap = 0;
    for (const auto& [n, value] : computed) {
        auto it = ref_by_index.find(static_cast<long long>(n) + offset);
        if (it == ref_by_index.end()) continue;
        ++overlap;
        if (*it->second != value)
            mismatches.push_back({n, value, *it->second});
    }
    if (overlap == 0)
        throw std::invalid_argument("compare: no overlapping indices between computed and reference");
    return mismatches;
}

std::vector<Mismatch> compare(const SequenceTable& computed,
                              const std::vector<BFileEntry>& reference,
                              long long offset) {
    return compare(computed.entries(), reference, offset);
}

}  // namespace arbor

#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <string>

#include "arbor/oeis.hpp"
#include "arbor/sequence.hpp"
#include "arbor/trees.hpp"

using arbor::BFileEntry;
using arbor::BigInt;

namespace {

std::filesystem::path fixture(const char* name) {
    return std::filesystem::path(ARBOR_FIXTURE_DIR) / name;
}

struct TempCacheDir {
    std::filesystem::path dir;
    TempCacheDir() {
        dir = std::filesystem::temp_directory_path() /
              ("arbor-test-cache-" + std::to_string(::getpid()));
        std::filesystem::create_directories(dir);
        ::setenv("ARBOR_CACHE_DIR", dir.c_str(), 1);
    }
    ~TempCacheDir() {
        ::unsetenv("ARBOR_CACHE_DIR");
        std::error_code ec;
        std::filesystem::remove_all(dir, ec);
    }
};

}  // namespace

TEST_CASE("b-file lines parse") {
    const auto entries = arbor::parse_bfile("5 3\n");
    REQUIRE(entries.size() == 1);
    CHECK(entries[0] == BFileEntry{5, 3});

    const auto mixed = arbor::parse_bfile(
        "# a comment\n"
        "\n"
        "1 1\r\n"
        "  2 1\t\n"
        "10 73\n"
        "12 9999999999999999999999999999\n");
    REQUIRE(mixed.size() == 4);
    CHECK(mixed[0] == BFileEntry{1, 1});
    CHECK(mixed[1] == BFileEntry{2, 1});
    CHECK(mixed[2] == BFileEntry{10, 73});
    CHECK(mixed[3].value == BigInt("9999999999999999999999999999"));

    CHECK(arbor::parse_bfile("").empty());
    CHECK(arbor::parse_bfile("# only comments\n# here\n").empty());
    CHECK(arbor::parse_bfile("3 7").size() == 1);  // no trailing newline
}

TEST_CASE("b-file parse errors carry line numbers") {
    auto line_of = [](const char* text) -> int {
        try {
            arbor::parse_bfile(text);
        } catch (const arbor::BFileParseError& e) {
            return e.line();
        }
        FAIL("expected BFileParseError for ", text);
        return -1;
    };
    CHECK(line_of("junk\n") == 1);
    CHECK(line_of("1 2\n1 3\n") == 2);          // not strictly increasing
    CHECK(line_of("2 2\n1 3\n") == 2);
    CHECK(line_of("1 2 3\n") == 1);             // trailing token
    CHECK(line_of("1 2x\n") == 1);              // malformed value
    CHECK(line_of("# ok\n\n5 5\nbad\n") == 4);
}

TEST_CASE("vendored fixtures load and match computed values") {
    const auto a_ref = arbor::load_bfile(fixture("b345973.txt"));
    REQUIRE(a_ref.size() == 60);
    CHECK(a_ref.front() == BFileEntry{1, 1});
    CHECK(a_ref[9] == BFileEntry{10, 73});

    const arbor::SequenceTable table = arbor::a_gf(60);
    CHECK(arbor::compare(table, a_ref, 0).empty());

    const auto ng_ref = arbor::load_bfile(fixture("b346787.txt"));
    REQUIRE(ng_ref.size() == 31);
    CHECK(ng_ref[5] == BFileEntry{6, 3});  // 6 vertices = 5 edges, count 3

    std::map<int, BigInt> no_gray;
    const auto counts = arbor::count_no_gray_upto(30);
    for (int n = 0; n <= 30; ++n) no_gray.emplace(n, counts[static_cast<size_t>(n)]);
    CHECK(arbor::compare(no_gray, ng_ref, 1).empty());
}

TEST_CASE("compare reports mismatches with both values") {
    std::map<int, BigInt> computed{{1, 1}, {2, 1}, {3, 2}};
    std::vector<BFileEntry> reference{{1, 1}, {2, 5}, {3, 2}};
    const auto mismatches = arbor::compare(computed, reference, 0);
    REQUIRE(mismatches.size() == 1);
    CHECK(mismatches[0].n == 2);
    CHECK(mismatches[0].computed == 1);
    CHECK(mismatches[0].reference == 5);

    CHECK(arbor::compare(computed, std::vector<BFileEntry>{{1, 1}, {2, 1}, {3, 2}}, 0).empty());

    // partial overlap is fine; zero overlap is a configuration error
    CHECK(arbor::compare(computed, std::vector<BFileEntry>{{3, 2}, {9, 9}}, 0).empty());
    CHECK_THROWS_AS(arbor::compare(computed, std::vector<BFileEntry>{{50, 1}}, 0),
                    std::invalid_argument);
    CHECK_THROWS_AS(arbor::compare(std::map<int, BigInt>{}, reference, 0),
                    std::invalid_argument);
}

TEST_CASE("offset shifts the reference index") {
    std::map<int, BigInt> computed{{2, 10}, {3, 20}};
    std::vector<BFileEntry> reference{{3, 10}, {4, 20}};
    CHECK(arbor::compare(computed, reference, 1).empty());
    const auto shifted_wrong = arbor::compare(computed, reference, 0);  // 3 vs 3: 20 != 10
    REQUIRE(shifted_wrong.size() == 1);
    CHECK(shifted_wrong[0].n == 3);
}

TEST_CASE("fetch uses the disk cache without touching the network") {
    TempCacheDir cache;
    std::filesystem::copy_file(fixture("b345973.txt"), cache.dir / "b345973.txt");
    const auto entries = arbor::fetch_bfile("A345973");
    CHECK(entries.size() == 60);
    CHECK(entries == arbor::load_bfile(fixture("b345973.txt")));
}

TEST_CASE("fetch failure is a distinct error, never a silent fallback") {
    TempCacheDir cache;  // empty cache forces a network attempt
    // offline: connection error; online: HTTP 404 for a sequence with no
    // b-file at this id; an OeisFetchError either way
    CHECK_THROWS_AS(arbor::fetch_bfile("A999999"), arbor::OeisFetchError);
    CHECK_THROWS_AS(arbor::fetch_bfile("999999"), std::invalid_argument);
    CHECK_THROWS_AS(arbor::fetch_bfile("A12345"), std::invalid_argument);
    CHECK_THROWS_AS(arbor::fetch_bfile("A1234567"), std::invalid_argument);
    CHECK_THROWS_AS(arbor::fetch_bfile("B123456"), std::invalid_argument);
}

TEST_CASE("unreadable b-file path") {
    CHECK_THROWS_AS(arbor::load_bfile("/nonexistent/arbor/b000000.txt"),
                    arbor::OeisFetchError);
}

TEST_CASE("cache directory resolution order") {
    ::setenv("ARBOR_CACHE_DIR", "/tmp/arbor-explicit", 1);
    CHECK(arbor::oeis_cache_dir() == std::filesystem::path("/tmp/arbor-explicit"));
    ::unsetenv("ARBOR_CACHE_DIR");
    CHECK(arbor::oeis_cache_dir().filename() == "arbor");
}

// Opt-in: exercises the real network path and the cache-write path.
TEST_CASE("network fetch round-trips through the cache (opt-in)") {
    if (std::getenv("ARBOR_NETWORK_TESTS") == nullptr) {
        MESSAGE("set ARBOR_NETWORK_TESTS=1 to run the live-network test");
        return;
    }
    TempCacheDir cache;
    const auto fresh = arbor::fetch_bfile("A345973");
    CHECK(std::filesystem::exists(cache.dir / "b345973.txt"));
    CHECK(fresh == arbor::fetch_bfile("A345973"));  // second read is the cache
    const arbor::SequenceTable table = arbor::a_gf(60);
    CHECK(arbor::compare(table, fresh, 0).empty());
}

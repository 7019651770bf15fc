// arbor: compute the sequence a(n) (OEIS A345973) three independent ways,
// enumerate the bicolored ordered trees it counts, and cross-check both
// against OEIS b-files.

#include <algorithm>
#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "arbor/oeis.hpp"
#include "arbor/partitions.hpp"
#include "arbor/sequence.hpp"
#include "arbor/trees.hpp"

namespace {

// Exit status contract: 0 success/verified, 1 verification mismatch,
// 2 usage error, 3 network/IO error.
constexpr int kOk = 0;
constexpr int kMismatch = 1;
constexpr int kUsage = 2;
constexpr int kIoError = 3;

// eq1/eq3 walk full partition sets; p(58) is ~7e5 but p(100) is ~1.9e8.
constexpr int kRecurrenceMethodCap = 60;
constexpr int kEnumerateGuard = 12;

struct TermsOptions {
    int upto = 0;
    std::string method = "gf";
    std::string format = "text";
};

struct EnumerateOptions {
    int n = 0;
    std::string format = "text";
    bool count_only = false;
    bool force = false;
};

struct VerifyOptions {
    int upto = 0;
    std::string oracle = "both";
    int structural_cap = 12;
    int naive_cap = 7;
};

struct OeisOptions {
    std::string id;
    int upto = 0;
    std::string bfile;
    std::string format = "text";
};

int usage_error(const std::string& message) {
    std::cerr << "error: " << message << "\n";
    return kUsage;
}

arbor::SequenceTable table_for(const std::string& method, int upto) {
    if (method == "gf") return arbor::a_gf(upto);
    arbor::SequenceTable table;
    const arbor::Method m = arbor::method_from_string(method);
    for (int n = 1; n <= upto; ++n) arbor::a(n, m, table);
    return table;
}

int run_terms(const TermsOptions& opt) {
    if (opt.upto < 1)
        return usage_error("terms: --upto must be >= 1");
    if (opt.format != "text" && opt.format != "json")
        return usage_error("terms: --format must be text or json");
    if (opt.method != "gf" && opt.method != "eq1" && opt.method != "eq3")
        return usage_error("terms: --method must be gf, eq1 or eq3");
    if ((opt.method == "eq1" || opt.method == "eq3") && opt.upto > kRecurrenceMethodCap)
        return usage_error("terms: methods eq1/eq3 enumerate every integer partition of n-2 "
                           "and the partition count explodes past n = " +
                           std::to_string(kRecurrenceMethodCap) +
                           "; use the default gf method for large n");

    const arbor::SequenceTable table = table_for(opt.method, opt.upto);
    if (opt.format == "json") {
        nlohmann::json j;
        auto& values = j["values"] = nlohmann::json::array();
        for (int n = 1; n <= opt.upto; ++n) values.push_back(table.at(n).str());
        std::cout << j.dump() << "\n";
    } else {
        for (int n = 1; n <= opt.upto; ++n)
            std::cout << n << " " << table.at(n) << "\n";
    }
    return kOk;
}

int run_enumerate(const EnumerateOptions& opt) {
    if (opt.n < 0)
        return usage_error("enumerate: --n must be >= 0");
    if (opt.format != "text" && opt.format != "dot" && opt.format != "json")
        return usage_error("enumerate: --format must be text, dot or json");
    if (opt.n > kEnumerateGuard && !opt.force)
        return usage_error("enumerate: n > " + std::to_string(kEnumerateGuard) +
                           " produces a flood of trees; pass --force if you mean it");

    const std::vector<arbor::Tree> trees = arbor::enumerate_structural(opt.n);
    if (opt.count_only) {
        if (opt.format == "json")
            std::cout << nlohmann::json{{"count", std::to_string(trees.size())}}.dump() << "\n";
        else
            std::cout << trees.size() << "\n";
        return kOk;
    }
    if (opt.format == "json") {
        nlohmann::json j;
        auto& list = j["trees"] = nlohmann::json::array();
        for (const arbor::Tree& t : trees) list.push_back(arbor::serialize(t));
        std::cout << j.dump() << "\n";
    } else if (opt.format == "dot") {
        for (size_t i = 0; i < trees.size(); ++i)
            std::cout << arbor::to_dot(trees[i], "tree" + std::to_string(i));
    } else {
        for (const arbor::Tree& t : trees) std::cout << arbor::serialize(t) << "\n";
    }
    return kOk;
}

int run_verify(const VerifyOptions& opt) {
    if (opt.upto < 2)
        return usage_error("verify: --upto must be >= 2");
    if (opt.oracle != "structural" && opt.oracle != "naive" && opt.oracle != "both")
        return usage_error("verify: --oracle must be structural, naive or both");

    bool all_pass = true;
    std::optional<std::string> first_failure;
    auto report = [&](const std::string& check, bool pass, const std::string& detail) {
        std::cout << check << ": " << (pass ? "PASS" : "FAIL") << "  " << detail << "\n";
        if (!pass) {
            all_pass = false;
            if (!first_failure) first_failure = check + " (" + detail + ")";
        }
    };

    // (i) the three formulations agree, each computed with only its own
    // recursion (independent tables)
    const int cross_hi = std::min(opt.upto, 40);
    arbor::SequenceTable t_eq1, t_eq3;
    arbor::a_eq1(cross_hi, t_eq1);
    arbor::a_eq3(std::max(cross_hi, 3), t_eq3);
    const arbor::SequenceTable t_gf = arbor::a_gf(std::max(cross_hi, opt.upto));
    for (int n = 2; n <= cross_hi; ++n) {
        const arbor::BigInt& v1 = t_eq1.at(n);
        const arbor::BigInt& v3 = t_eq3.at(n);
        const arbor::BigInt& vg = t_gf.at(n);
        const bool pass = v1 == v3 && v3 == vg;
        report("cross-method n=" + std::to_string(n), pass,
               pass ? "a(n) = " + v1.str()
                    : "eq1=" + v1.str() + " eq3=" + v3.str() + " gf=" + vg.str());
    }

    const bool run_structural = opt.oracle == "structural" || opt.oracle == "both";
    const bool run_naive = opt.oracle == "naive" || opt.oracle == "both";

    std::vector<arbor::BigInt> structural_counts;  // index n, filled as computed
    if (run_structural || run_naive) {
        const int hi = std::max(run_structural ? std::min(opt.upto, opt.structural_cap) : 0,
                                run_naive ? std::min(opt.upto, opt.naive_cap) : 0);
        for (int n = 0; n <= hi; ++n)
            structural_counts.push_back(
                static_cast<arbor::BigInt>(arbor::enumerate_structural(n).size()));
    }

    if (run_structural) {
        report("structural n=0", structural_counts[0] == 1,
               "count = " + structural_counts[0].str() + ", expected 1");
        report("structural n=1", structural_counts[1] == 0,
               "count = " + structural_counts[1].str() + ", expected 0");
        for (int n = 2; n <= std::min(opt.upto, opt.structural_cap); ++n) {
            const arbor::BigInt& an = t_gf.at(n);
            const bool pass = structural_counts[static_cast<size_t>(n)] == an;
            report("structural n=" + std::to_string(n), pass,
                   "count = " + structural_counts[static_cast<size_t>(n)].str() +
                       ", a(n) = " + an.str());
        }
    }

    if (run_naive) {
        for (int n = 0; n <= std::min(opt.upto, opt.naive_cap); ++n) {
            const arbor::BigInt naive = arbor::enumerate_naive(n);
            const bool pass = naive == structural_counts[static_cast<size_t>(n)];
            report("naive n=" + std::to_string(n), pass,
                   "naive = " + naive.str() +
                       ", structural = " + structural_counts[static_cast<size_t>(n)].str());
        }
    }

    if (!all_pass) {
        std::cout << "verification FAILED; first mismatch: " << *first_failure << "\n";
        return kMismatch;
    }
    std::cout << "all checks passed\n";
    return kOk;
}

int run_oeis(const OeisOptions& opt) {
    if (opt.id != "A345973" && opt.id != "A346787")
        return usage_error("oeis: only A345973 and A346787 are supported (the index offset "
                           "of other sequences is unknown here)");
    if (opt.upto < 1)
        return usage_error("oeis: --upto must be >= 1");
    if (opt.format != "text" && opt.format != "json")
        return usage_error("oeis: --format must be text or json");

    std::vector<arbor::BFileEntry> reference;
    try {
        reference = opt.bfile.empty() ? arbor::fetch_bfile(opt.id)
                                      : arbor::load_bfile(opt.bfile);
    } catch (const arbor::OeisFetchError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kIoError;
    } catch (const arbor::BFileParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kIoError;
    }

    std::map<int, arbor::BigInt> computed;
    long long offset = 0;
    if (opt.id == "A345973") {
        // a(n) against reference index n
        computed = arbor::a_gf(opt.upto).entries();
    } else {
        // gray-free counts are indexed by vertex count on the OEIS side,
        // which is edge count + 1
        offset = 1;
        std::vector<arbor::BigInt> c = arbor::count_no_gray_upto(opt.upto);
        for (int n = 0; n <= opt.upto; ++n) computed.emplace(n, c[static_cast<size_t>(n)]);
    }

    std::vector<arbor::Mismatch> mismatches;
    size_t checked = computed.size();
    try {
        mismatches = arbor::compare(computed, reference, offset);
    } catch (const std::invalid_argument& e) {
        return usage_error(e.what());
    }

    if (opt.format == "json") {
        nlohmann::json j;
        auto& list = j["mismatches"] = nlohmann::json::array();
        for (const arbor::Mismatch& m : mismatches)
            list.push_back({{"n", m.n},
                            {"computed", m.computed.str()},
                            {"reference", m.reference.str()}});
        std::cout << j.dump() << "\n";
    } else if (mismatches.empty()) {
        std::cout << opt.id << ": all " << checked
                  << " computed terms agree with the reference\n";
    } else {
        for (const arbor::Mismatch& m : mismatches)
            std::cout << "n=" << m.n << ": computed " << m.computed << ", reference "
                      << m.reference << "\n";
    }
    return mismatches.empty() ? kOk : kMismatch;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"sequence A345973 and the bicolored ordered trees it counts"};
    app.require_subcommand(1);

    TermsOptions terms;
    CLI::App* cmd_terms = app.add_subcommand(
        "terms", "print a(1..upto); gf scales to n ~ 1000, eq1/eq3 are capped at " +
                     std::to_string(kRecurrenceMethodCap));
    cmd_terms->add_option("--upto", terms.upto, "highest index to print")->required();
    cmd_terms->add_option("--method", terms.method, "gf, eq1 or eq3 (default gf)");
    cmd_terms->add_option("--format", terms.format, "text or json (default text)");

    EnumerateOptions enumerate;
    CLI::App* cmd_enumerate = app.add_subcommand(
        "enumerate", "list (or count) every tree of size n in the family");
    cmd_enumerate->add_option("-n,--n", enumerate.n, "tree size (number of black edges)")
        ->required();
    cmd_enumerate->add_option("--format", enumerate.format, "text, dot or json (default text)");
    cmd_enumerate->add_flag("--count-only", enumerate.count_only, "print only the count");
    cmd_enumerate->add_flag("--force", enumerate.force,
                            "allow n > " + std::to_string(kEnumerateGuard));

    VerifyOptions verify;
    CLI::App* cmd_verify = app.add_subcommand(
        "verify", "check that the three formulations agree and that the enumerators "
                  "count exactly a(n)");
    cmd_verify->add_option("--upto", verify.upto, "highest index to verify")->required();
    cmd_verify->add_option("--oracle", verify.oracle, "structural, naive or both (default both)");
    cmd_verify->add_option("--structural-cap", verify.structural_cap,
                           "cap for the structural enumeration (default 12)");
    cmd_verify->add_option("--naive-cap", verify.naive_cap,
                           "cap for the brute-force enumeration (default 7)");

    OeisOptions oeis;
    CLI::App* cmd_oeis = app.add_subcommand(
        "oeis", "compare computed values against an OEIS b-file (A345973 or A346787)");
    cmd_oeis->add_option("--id", oeis.id, "A345973 (sequence terms) or A346787 (gray-free counts)")
        ->required();
    cmd_oeis->add_option("--upto", oeis.upto, "highest computed index to compare")->required();
    cmd_oeis->add_option("--bfile", oeis.bfile,
                         "read the reference from this file instead of the network");
    cmd_oeis->add_option("--format", oeis.format, "text or json (default text)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? kOk : kUsage;
    }

    try {
        if (cmd_terms->parsed()) return run_terms(terms);
        if (cmd_enumerate->parsed()) return run_enumerate(enumerate);
        if (cmd_verify->parsed()) return run_verify(verify);
        if (cmd_oeis->parsed()) return run_oeis(oeis);
    } catch (const std::invalid_argument& e) {
        return usage_error(e.what());
    } catch (const std::domain_error& e) {
        return usage_error(e.what());
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kIoError;
    }
    return kUsage;
}

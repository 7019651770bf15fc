#include "arbor/sequence.hpp"

#include "arbor/partitions.hpp"

namespace arbor {

const char* to_string(Method m) {
    switch (m) {
        case Method::Eq1: return "eq1";
        case Method::Eq3: return "eq3";
        case Method::Gf: return "gf";
    }
    throw std::logic_error("to_string: bad Method");
}

Method method_from_string(const std::string& s) {
    if (s == "eq1") return Method::Eq1;
    if (s == "eq3") return Method::Eq3;
    if (s == "gf") return Method::Gf;
    throw std::invalid_argument("unknown method '" + s + "' (expected eq1, eq3 or gf)");
}

SequenceTable::SequenceTable() {
    values_.emplace(1, BigInt(1));
}

const BigInt& SequenceTable::at(int n) const {
    auto it = values_.find(n);
    if (it == values_.end())
        throw std::out_of_range("SequenceTable: a(" + std::to_string(n) + ") not computed");
    return it->second;
}

void SequenceTable::store(int n, BigInt value) {
    if (n < 1)
        throw std::invalid_argument("SequenceTable: index must be >= 1");
    if (value <= 0)
        throw std::invalid_argument("SequenceTable: values are strictly positive");
    auto it = values_.find(n);
    if (it != values_.end()) {
        if (it->second != value)
            throw std::logic_error("SequenceTable: conflicting re-store of a(" +
                                   std::to_string(n) + ")");
        return;  // write-once; identical re-store is a no-op
    }
    values_.emplace(n, std::move(value));
}

SeriesCoeffs::SeriesCoeffs(int order) {
    if (order < 0)
        throw std::invalid_argument("SeriesCoeffs: order must be >= 0");
    coeffs_.assign(static_cast<size_t>(order) + 1, BigInt(0));
    coeffs_[0] = 1;
}

void SeriesCoeffs::apply_inverse_factor(int k, const BigInt& c) {
    if (k < 1)
        throw std::invalid_argument("SeriesCoeffs: factor degree must be >= 1");
    // Multiplying by 1/(1 - c x^k) means new[i] = old[i] + c*new[i-k];
    // ascending i updates in place.
    for (size_t i = static_cast<size_t>(k); i < coeffs_.size(); ++i)
        coeffs_[i] += c * coeffs_[i - static_cast<size_t>(k)];
}

namespace {

// Fills table with a(2..n) by the direct recurrence, lowest index first, so
// every product below only reads values already present.
void fill_eq1(int n, SequenceTable& table) {
    for (int m = 2; m <= n; ++m) {
        if (table.contains(m)) continue;
        BigInt total = 1;  // the root-with-m-black-leaves term
        for (int k = 2; k <= m - 2; ++k) {
            for_each_partition(m - k, 2, [&](const Partition& p) {
                BigInt prod = 1;
                for (int part : p) prod *= table.at(part);
                total += prod;
            });
        }
        table.store(m, std::move(total));
    }
}

// Fills table with a(2..n) by the all-partitions sum. At m=2 the sum runs
// over the single empty partition of 0 and gives 1.
void fill_eq3(int n, SequenceTable& table) {
    for (int m = 2; m <= n; ++m) {
        if (table.contains(m)) continue;
        BigInt total = 0;
        for_each_partition(m - 2, 1, [&](const Partition& p) {
            BigInt prod = 1;
            for (int part : p) prod *= table.at(part);
            total += prod;
        });
        table.store(m, std::move(total));
    }
}

}  // namespace

BigInt a_eq1(int n, SequenceTable& table) {
    if (n < 2)
        throw std::domain_error("a_eq1: n must be >= 2");
    fill_eq1(n, table);
    return table.at(n);
}

BigInt a_eq3(int n, SequenceTable& table) {
    if (n < 3)
        throw std::domain_error("a_eq3: n must be >= 3");
    fill_eq3(n, table);
    return table.at(n);
}

SequenceTable a_gf(int upto) {
    if (upto < 1)
        throw std::domain_error("a_gf: upto must be >= 1");
    SequenceTable table;  // a(1) = 1, forced by the x term of the identity
    if (upto < 2) return table;

    /* a(n+2) is the x^n coefficient of the reciprocal product once the
     * factors (1 - a(k) x^k) for k <= n are folded in. Coefficients beyond
     * x^(upto-2) are never read, so the series is truncated there. */
    SeriesCoeffs recip(upto - 2);
    table.store(2, recip.coeff(0));  // empty product: a(2) = 1
    for (int k = 1; k + 2 <= upto; ++k) {
        recip.apply_inverse_factor(k, table.at(k));
        table.store(k + 2, recip.coeff(k));
    }
    return table;
}

BigInt a(int n, Method method, SequenceTable& table) {
    if (n <= 0)
        throw std::domain_error("a(n): n must be >= 1");
    if (n == 1)
        return table.at(1);
    switch (method) {
        case Method::Eq1:
            return a_eq1(n, table);
        case Method::Eq3:
            // n=2 is the formula's own boundary case (empty partition of 0).
            fill_eq3(n, table);
            return table.at(n);
        case Method::Gf: {
            if (table.contains(n)) return table.at(n);
            SequenceTable fresh = a_gf(n);
            for (const auto& [idx, value] : fresh.entries())
                table.store(idx, value);
            return table.at(n);
        }
    }
    throw std::logic_error("a(n): bad Method");
}

BigInt a(int n, Method method) {
    SequenceTable table;
    return a(n, method, table);
}

}  // namespace arbor

#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "arbor/bigint.hpp"

namespace arbor {

/* The sequence a(n), n >= 1, can be computed three ways:
 *
 *   eq1  direct recurrence  a(n) = 1 + sum over k=2..n-2, sum over
 *        partitions of n-k with all parts >= 2, of the product of a(part)
 *   eq3  partition sum      a(n) = sum over all partitions of n-2 of the
 *        product of a(part), using the convention a(1) = 1
 *   gf   coefficient extraction from the functional identity
 *        sum a(n) x^n  =  x + x^2 / prod_{n>=1} (1 - a(n) x^n)
 *
 * All three agree everywhere. eq1/eq3 walk partition sets and blow up past
 * n of about 60; gf is the scalable path (n up to 1000 is comfortable).
 */
enum class Method { Eq1, Eq3, Gf };

const char* to_string(Method m);
Method method_from_string(const std::string& s);  // throws std::invalid_argument

/* Memoized values of a(n). Write-once per index: re-storing the same value
 * is a no-op, storing a different value for an existing index throws.
 * A fresh table holds only the convention value a(1) = 1 (the size-1 tree
 * family is empty, but the recurrences need a(1) = 1 to close). */
class SequenceTable {
public:
    SequenceTable();

    bool contains(int n) const { return values_.count(n) != 0; }
    const BigInt& at(int n) const;           // throws std::out_of_range if absent
    void store(int n, BigInt value);          // n >= 1, value > 0
    const std::map<int, BigInt>& entries() const { return values_; }

private:
    std::map<int, BigInt> values_;
};

/* Truncated coefficients of 1 / prod_k (1 - c_k x^k), with factors folded in
 * one at a time. Starts as the empty product (constant 1). coeff(0) is
 * always 1; the truncation order is fixed at construction. */
class SeriesCoeffs {
public:
    explicit SeriesCoeffs(int order);

    // Multiplies the series by 1 / (1 - c x^k), i.e. folds in one more
    // factor of the product. k must be >= 1.
    void apply_inverse_factor(int k, const BigInt& c);

    const BigInt& coeff(int i) const { return coeffs_.at(static_cast<size_t>(i)); }
    int order() const { return static_cast<int>(coeffs_.size()) - 1; }

private:
    std::vector<BigInt> coeffs_;
};

// a(n) by the direct recurrence; n >= 2. Memoizes into table.
BigInt a_eq1(int n, SequenceTable& table);

// a(n) by the sum over all partitions of n-2; n >= 3. Memoizes into table.
BigInt a_eq3(int n, SequenceTable& table);

/* a(1..upto) from the functional identity. The coefficient of x^(n+2) on
 * the right-hand side depends only on a(1..n), so the reciprocal product is
 * grown one factor per step and each new value read straight off it.
 * O(upto^2) big-integer multiplications. */
SequenceTable a_gf(int upto);

// Uniform dispatch. n >= 1; a(1) comes from the convention for every method.
BigInt a(int n, Method method, SequenceTable& table);
BigInt a(int n, Method method);  // fresh table per call

}  // namespace arbor

#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "arbor/bigint.hpp"

namespace arbor {

enum class EdgeColor : std::uint8_t { Black, Gray };

/* Rooted tree, children ordered, each child attached by a black or gray
 * edge. Immutable value type; equality is structural. The size of a tree is
 * its total number of black edges (gray edges are free).
 *
 * A tree belongs to the family enumerated here when
 *   1. every nonleaf vertex has at least two black child edges,
 *   2. the gray child edges of a vertex all lie to the right of its black
 *      child edges,
 *   3. the subtrees of a vertex, left to right, have weakly decreasing
 *      sizes,
 *   4. every leaf's parent edge (if it has one) is black.
 */
class Tree {
public:
    struct Edge;

    Tree() = default;  // the singleton: one vertex, no edges
    explicit Tree(std::vector<Edge> children);

    const std::vector<Edge>& children() const { return children_; }
    bool leaf() const;

    // Number of black edges in the whole tree.
    int size() const;

    bool operator==(const Tree& other) const;
    bool operator!=(const Tree& other) const { return !(*this == other); }

private:
    std::vector<Edge> children_;  // Edge is incomplete here; completed below
};

struct Tree::Edge {
    EdgeColor color;
    Tree child;
    bool operator==(const Edge&) const = default;
};

inline bool Tree::leaf() const { return children_.empty(); }

int gray_edge_count(const Tree& t);

/* One broken rule: condition 1..4 and the path (child indices from the
 * root) of the vertex it was detected at. Condition 4 is reported at the
 * offending leaf, the others at the nonleaf vertex. */
struct RuleViolation {
    int condition;
    std::vector<int> path;
    bool operator==(const RuleViolation&) const = default;
};

// Every violation, in preorder and by ascending condition per vertex.
std::vector<RuleViolation> violations(const Tree& t);

// Short-circuiting membership test; equivalent to violations(t).empty().
bool is_valid(const Tree& t);

/* Every tree of size n in the family, each exactly once.
 *
 * Built by root decomposition: a tree of size n >= 2 has k >= 2 black root
 * edges, and the sizes of the nonsingleton root subtrees form a partition
 * of n-k with all parts >= 2. With j parts: if j <= k the subtrees ride the
 * first j black edges and the remaining k-j black edges end in leaves; if
 * j > k the first k parts are black and the last j-k are gray (gray
 * subtrees are never leaves, so their sizes are >= 2 automatically).
 *
 * Condition 3 constrains sizes only: positions of equal size range over all
 * ordered subtree choices independently. That is what makes the count a
 * product of per-position counts, and it is the easiest way to miscount if
 * forgotten.
 *
 * Output order is fixed: k ascending, then size list reverse-lexicographic,
 * then child choices lexicographic by serialization (leftmost position most
 * significant). Exponential in n; fine through n = 12 or so. */
std::vector<Tree> enumerate_structural(int n);

/* Independent brute-force count of the same family: every ordered rooted
 * tree with at most max_total_edges edges, every 2-coloring of its edges,
 * filtered by is_valid and size == n. Shares no construction logic with
 * enumerate_structural.
 *
 * The default bound floor(3n/2) is exact: each gray edge ends in a nonleaf
 * vertex (condition 4) owning at least two black child edges (condition 1),
 * and those child edges are distinct across gray edges, so a size-n tree
 * has at most n/2 gray edges and at most n + n/2 edges total.
 *
 * Exponential in the bound; intended for n <= 7. */
BigInt enumerate_naive(int n);
BigInt enumerate_naive(int n, int max_total_edges);

// Number of size-n members with no gray edge at all (the structural
// recursion restricted to g = 0). Such a tree with size n has n+1 vertices.
BigInt count_no_gray(int n);
std::vector<BigInt> count_no_gray_upto(int n);  // indices 0..n

class TreeParseError : public std::runtime_error {
public:
    TreeParseError(const std::string& what, size_t offset);
    size_t offset() const { return offset_; }

private:
    size_t offset_;
};

/* Canonical text form, grammar (v1, frozen):
 *   tree := "(" edge* ")"
 *   edge := ("B" | "G") tree
 * serialize and deserialize are mutually inverse; deserialize throws
 * TreeParseError with the byte offset on malformed input. */
std::string serialize(const Tree& t);
Tree deserialize(std::string_view s);

// DOT digraph; node ids by preorder index, edges carry color=black|gray.
std::string to_dot(const Tree& t, std::string_view graph_name = "tree");

}  // namespace arbor

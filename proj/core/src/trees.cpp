#include "arbor/trees.hpp"

#include <algorithm>
#include <limits>
#include <utility>

#include "arbor/partitions.hpp"

namespace arbor {

Tree::Tree(std::vector<Edge> children) : children_(std::move(children)) {}

int Tree::size() const {
    int total = 0;
    for (const Edge& e : children_)
        total += (e.color == EdgeColor::Black ? 1 : 0) + e.child.size();
    return total;
}

bool Tree::operator==(const Tree& other) const {
    return children_ == other.children_;
}

int gray_edge_count(const Tree& t) {
    int total = 0;
    for (const Tree::Edge& e : t.children())
        total += (e.color == EdgeColor::Gray ? 1 : 0) + gray_edge_count(e.child);
    return total;
}

namespace {

void collect_violations(const Tree& t, std::vector<int>& path,
                        std::vector<RuleViolation>& out) {
    if (t.leaf()) return;
    const auto& children = t.children();

    int blacks = 0;
    bool seen_gray = false;
    bool black_after_gray = false;
    for (const Tree::Edge& e : children) {
        if (e.color == EdgeColor::Black) {
            ++blacks;
            if (seen_gray) black_after_gray = true;
        } else {
            seen_gray = true;
        }
    }
    if (blacks < 2) out.push_back({1, path});
    if (black_after_gray) out.push_back({2, path});

    bool decreasing = true;
    int prev = std::numeric_limits<int>::max();
    for (const Tree::Edge& e : children) {
        int s = e.child.size();
        if (s > prev) decreasing = false;
        prev = s;
    }
    if (!decreasing) out.push_back({3, path});

    for (size_t i = 0; i < children.size(); ++i) {
        path.push_back(static_cast<int>(i));
        if (children[i].child.leaf() && children[i].color == EdgeColor::Gray)
            out.push_back({4, path});
        collect_violations(children[i].child, path, out);
        path.pop_back();
    }
}

}  // namespace

std::vector<RuleViolation> violations(const Tree& t) {
    std::vector<RuleViolation> out;
    std::vector<int> path;
    collect_violations(t, path, out);
    return out;
}

bool is_valid(const Tree& t) {
    if (t.leaf()) return true;
    int blacks = 0;
    bool seen_gray = false;
    int prev = std::numeric_limits<int>::max();
    for (const Tree::Edge& e : t.children()) {
        if (e.color == EdgeColor::Black) {
            if (seen_gray) return false;
            ++blacks;
        } else {
            seen_gray = true;
            if (e.child.leaf()) return false;
        }
        int s = e.child.size();
        if (s > prev) return false;
        prev = s;
        if (!is_valid(e.child)) return false;
    }
    return blacks >= 2;
}

// ---------------------------------------------------------------------------
// structural enumeration

namespace {

bool advance_odometer(std::vector<size_t>& idx, const std::vector<size_t>& radix) {
    for (size_t i = idx.size(); i-- > 0;) {
        if (++idx[i] < radix[i]) return true;
        idx[i] = 0;
    }
    return false;
}

/* All trees of size s in the documented order, drawing subtrees from
 * canon[s'] (the size-s' trees sorted by serialization), s' < s. */
std::vector<Tree> compose_level(int s, const std::vector<std::vector<Tree>>& canon) {
    std::vector<Tree> out;
    if (s == 0) {
        out.emplace_back();
        return out;
    }
    if (s == 1) return out;

    for (int k = 2; k <= s; ++k) {
        for_each_partition(s - k, 2, [&](const Partition& p) {
            const int j = static_cast<int>(p.size());
            // j <= k: parts on the leftmost black edges, k-j singleton
            // leaves after them. j > k: first k parts black, rest gray.
            std::vector<int> sizes(p.begin(), p.end());
            if (j < k) sizes.resize(static_cast<size_t>(k), 0);
            const size_t positions = sizes.size();

            std::vector<size_t> radix(positions);
            for (size_t i = 0; i < positions; ++i) {
                radix[i] = canon[static_cast<size_t>(sizes[i])].size();
                if (radix[i] == 0) return;  // no trees of that size
            }

            std::vector<size_t> idx(positions, 0);
            do {
                std::vector<Tree::Edge> edges;
                edges.reserve(positions);
                for (size_t i = 0; i < positions; ++i) {
                    EdgeColor color = static_cast<int>(i) < k ? EdgeColor::Black
                                                              : EdgeColor::Gray;
                    edges.push_back({color, canon[static_cast<size_t>(sizes[i])][idx[i]]});
                }
                out.emplace_back(std::move(edges));
            } while (advance_odometer(idx, radix));
        });
    }
    return out;
}

std::vector<Tree> sorted_by_serialization(std::vector<Tree> trees) {
    std::vector<std::pair<std::string, Tree>> keyed;
    keyed.reserve(trees.size());
    for (Tree& t : trees) keyed.emplace_back(serialize(t), std::move(t));
    std::sort(keyed.begin(), keyed.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    std::vector<Tree> out;
    out.reserve(keyed.size());
    for (auto& [key, t] : keyed) out.push_back(std::move(t));
    return out;
}

}  // namespace

std::vector<Tree> enumerate_structural(int n) {
    if (n < 0)
        throw std::invalid_argument("enumerate_structural: n must be >= 0");
    // Candidate subtrees have size <= n-2; build those levels first.
    std::vector<std::vector<Tree>> canon;
    for (int s = 0; s <= n - 2; ++s)
        canon.push_back(sorted_by_serialization(compose_level(s, canon)));
    return compose_level(n, canon);
}

// ---------------------------------------------------------------------------
// brute-force oracle

namespace {

// Plain ordered rooted tree, no colors. Kept separate from Tree on purpose:
// the oracle must not borrow the structural enumerator's construction.
struct Shape {
    std::vector<Shape> kids;
};

/* shapes[e] = all ordered rooted trees with exactly e edges, by the Catalan
 * split: first child's subtree (i edges) plus the rest of the root
 * (e-1-i edges). */
std::vector<std::vector<Shape>> shapes_up_to(int max_edges) {
    std::vector<std::vector<Shape>> shapes(static_cast<size_t>(max_edges) + 1);
    shapes[0].push_back(Shape{});
    for (int e = 1; e <= max_edges; ++e) {
        for (int i = 0; i < e; ++i) {
            for (const Shape& first : shapes[static_cast<size_t>(i)]) {
                for (const Shape& rest : shapes[static_cast<size_t>(e - 1 - i)]) {
                    Shape s;
                    s.kids.reserve(1 + rest.kids.size());
                    s.kids.push_back(first);
                    s.kids.insert(s.kids.end(), rest.kids.begin(), rest.kids.end());
                    shapes[static_cast<size_t>(e)].push_back(std::move(s));
                }
            }
        }
    }
    return shapes;
}

// Colors the shape's edges by preorder index: mask bit 1 = black, 0 = gray.
Tree colorize(const Shape& s, unsigned long long mask, int& edge_idx) {
    std::vector<Tree::Edge> edges;
    edges.reserve(s.kids.size());
    for (const Shape& kid : s.kids) {
        EdgeColor color =
            ((mask >> edge_idx) & 1u) ? EdgeColor::Black : EdgeColor::Gray;
        ++edge_idx;
        edges.push_back({color, colorize(kid, mask, edge_idx)});
    }
    return Tree(std::move(edges));
}

}  // namespace

BigInt enumerate_naive(int n) {
    return enumerate_naive(n, (3 * n) / 2);
}

BigInt enumerate_naive(int n, int max_total_edges) {
    if (n < 0)
        throw std::invalid_argument("enumerate_naive: n must be >= 0");
    if (max_total_edges < 3LL * n / 2)
        throw std::domain_error("enumerate_naive: bound below floor(3n/2) would undercount");
    // Catalan(e) shapes times 2^e colorings; past this it is hopeless anyway.
    if (max_total_edges > 14)
        throw std::invalid_argument("enumerate_naive: bound above 14 edges is infeasible");

    const auto shapes = shapes_up_to(max_total_edges);
    BigInt count = 0;
    for (int e = 0; e <= max_total_edges; ++e) {
        const unsigned long long mask_end = 1ull << e;
        for (const Shape& shape : shapes[static_cast<size_t>(e)]) {
            for (unsigned long long mask = 0; mask < mask_end; ++mask) {
                // black-edge count is the popcount; only masks hitting n can
                // pass the size filter, so skip the rest before building
                if (__builtin_popcountll(mask) != n) continue;
                int edge_idx = 0;
                Tree t = colorize(shape, mask, edge_idx);
                if (t.size() == n && is_valid(t)) ++count;
            }
        }
    }
    return count;
}

// ---------------------------------------------------------------------------
// gray-free subfamily

std::vector<BigInt> count_no_gray_upto(int n) {
    if (n < 0)
        throw std::invalid_argument("count_no_gray_upto: n must be >= 0");
    std::vector<BigInt> c(static_cast<size_t>(n) + 1);
    c[0] = 1;
    for (int s = 2; s <= n; ++s) {
        BigInt total = 0;
        for (int k = 2; k <= s; ++k) {
            for_each_partition(s - k, 2, [&](const Partition& p) {
                if (static_cast<int>(p.size()) > k) return;  // would need gray edges
                BigInt prod = 1;
                for (int part : p) prod *= c[static_cast<size_t>(part)];
                total += prod;
            });
        }
        c[static_cast<size_t>(s)] = std::move(total);
    }
    return c;
}

BigInt count_no_gray(int n) {
    return count_no_gray_upto(n).at(static_cast<size_t>(n));
}

// ---------------------------------------------------------------------------
// text form

TreeParseError::TreeParseError(const std::string& what, size_t offset)
    : std::runtime_error(what + " at offset " + std::to_string(offset)),
      offset_(offset) {}

namespace {

void serialize_into(const Tree& t, std::string& out) {
    out += '(';
    for (const Tree::Edge& e : t.children()) {
        out += e.color == EdgeColor::Black ? 'B' : 'G';
        serialize_into(e.child, out);
    }
    out += ')';
}

Tree parse_tree(std::string_view s, size_t& pos) {
    if (pos >= s.size() || s[pos] != '(')
        throw TreeParseError("expected '('", pos);
    ++pos;
    std::vector<Tree::Edge> edges;
    for (;;) {
        if (pos >= s.size())
            throw TreeParseError("expected 'B', 'G' or ')'", pos);
        const char c = s[pos];
        if (c == ')') {
            ++pos;
            return Tree(std::move(edges));
        }
        if (c != 'B' && c != 'G')
            throw TreeParseError("expected 'B', 'G' or ')'", pos);
        ++pos;
        Tree child = parse_tree(s, pos);
        edges.push_back({c == 'B' ? EdgeColor::Black : EdgeColor::Gray, std::move(child)});
    }
}

}  // namespace

std::string serialize(const Tree& t) {
    std::string out;
    serialize_into(t, out);
    return out;
}

Tree deserialize(std::string_view s) {
    size_t pos = 0;
    Tree t = parse_tree(s, pos);
    if (pos != s.size())
        throw TreeParseError("trailing characters after tree", pos);
    return t;
}

namespace {

void dot_visit(const Tree& t, int id, int& next_id, std::string& out) {
    out += "  " + std::to_string(id) + ";\n";
    for (const Tree::Edge& e : t.children()) {
        const int child_id = next_id++;
        out += "  " + std::to_string(id) + " -> " + std::to_string(child_id) +
               " [color=" + (e.color == EdgeColor::Black ? "black" : "gray") + "];\n";
        dot_visit(e.child, child_id, next_id, out);
    }
}

}  // namespace

std::string to_dot(const Tree& t, std::string_view graph_name) {
    std::string out = "digraph ";
    out += graph_name;
    out += " {\n  node [shape=point];\n";
    int next_id = 1;
    dot_visit(t, 0, next_id, out);
    out += "}\n";
    return out;
}

}  // namespace arbor

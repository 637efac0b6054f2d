#pragma once

#include "navtest/navgraph.hpp"

#include <optional>

namespace navtest {

/// Sum-of-products algebra over edge labels. Factories normalize on the way
/// in: concatenations flatten and drop epsilons, sums flatten, deduplicate
/// and keep their children in a canonical order, singletons collapse. That
/// makes associativity, commutativity and idempotence hold structurally.
class PathExpr {
public:
    enum class Kind { epsilon, label, reset, loop_once, concat, sum };

    static PathExpr epsilon() { return PathExpr(); }
    static PathExpr label(EdgeId id);
    /// A reset edge inside an expression; prints as "R" and acts as a path
    /// separator during expansion.
    static PathExpr reset(EdgeId id);
    static PathExpr concat(std::vector<PathExpr> kids);
    static PathExpr sum(std::vector<PathExpr> kids);
    /// Exactly one traversal of the wrapped loop body.
    static PathExpr loop_once(PathExpr body);

    Kind kind() const { return kind_; }
    const EdgeId& label_id() const { return label_; }
    const std::vector<PathExpr>& kids() const { return kids_; }
    std::size_t node_count() const { return size_; }

    bool operator==(const PathExpr& other) const { return compare(*this, other) == 0; }
    static int compare(const PathExpr& a, const PathExpr& b);

    /// Paper-style rendering: products with "·", selection with " + ",
    /// parentheses only where needed. Loop bodies print as their single
    /// traversal, so the output reads as plain path expressions.
    std::string to_string() const;

private:
    PathExpr() = default;

    Kind kind_ = Kind::epsilon;
    EdgeId label_;
    std::vector<PathExpr> kids_;
    std::size_t size_ = 1;
};

/// Square array of optional path expressions, one row/column per vertex;
/// entry (i,j) sums the labels of the direct links i -> j.
struct GraphMatrix {
    std::vector<VertexId> vertices;
    std::vector<std::vector<std::optional<PathExpr>>> entries;

    std::size_t size() const { return vertices.size(); }
    std::size_t nonempty_count() const;
};

GraphMatrix build_matrix(const Multidigraph& g);

/// Beizer-style node reduction: remove self-loops by wrapping the node's
/// outgoing entries in a loop-once factor, then eliminate non-home nodes in
/// ascending declared order, accumulating equivalent links; the surviving
/// home -> home entry is the answer. Aborts with ExpansionTooLarge when the
/// accumulated expressions outgrow `node_budget`.
PathExpr node_reduce(const GraphMatrix& m, const VertexId& home, std::size_t node_budget = 500000);

/// Distributes products over sums into individual label sequences, cuts each
/// at reset labels exactly as a tour is cut, drops duplicates and paths that
/// add no new real-edge coverage (greedy, in expansion order). Throws
/// ExpansionTooLarge when the distributed term count would exceed `cap`.
std::vector<Path> expand_to_paths(const PathExpr& e, const Multidigraph& g, std::size_t cap = 10000);

} // namespace navtest

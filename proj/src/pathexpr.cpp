#include "navtest/pathexpr.hpp"

#include "navtest/errors.hpp"

#include <algorithm>
#include <cassert>
#include <set>

namespace navtest {

PathExpr PathExpr::label(EdgeId id) {
    PathExpr e;
    e.kind_ = Kind::label;
    e.label_ = std::move(id);
    return e;
}

PathExpr PathExpr::reset(EdgeId id) {
    PathExpr e;
    e.kind_ = Kind::reset;
    e.label_ = std::move(id);
    return e;
}

PathExpr PathExpr::concat(std::vector<PathExpr> kids) {
    std::vector<PathExpr> flat;
    for (PathExpr& k : kids) {
        if (k.kind_ == Kind::epsilon) continue;
        if (k.kind_ == Kind::concat) {
            for (PathExpr& g : k.kids_) flat.push_back(std::move(g));
        } else {
            flat.push_back(std::move(k));
        }
    }
    if (flat.empty()) return epsilon();
    if (flat.size() == 1) return std::move(flat.front());
    PathExpr e;
    e.kind_ = Kind::concat;
    e.size_ = 1;
    for (const PathExpr& k : flat) e.size_ += k.size_;
    e.kids_ = std::move(flat);
    return e;
}

PathExpr PathExpr::sum(std::vector<PathExpr> kids) {
    assert(!kids.empty() && "a sum needs at least one alternative");
    std::vector<PathExpr> flat;
    for (PathExpr& k : kids) {
        if (k.kind_ == Kind::sum) {
            for (PathExpr& g : k.kids_) flat.push_back(std::move(g));
        } else {
            flat.push_back(std::move(k));
        }
    }
    std::sort(flat.begin(), flat.end(),
              [](const PathExpr& a, const PathExpr& b) { return compare(a, b) < 0; });
    flat.erase(std::unique(flat.begin(), flat.end(),
                           [](const PathExpr& a, const PathExpr& b) { return compare(a, b) == 0; }),
               flat.end());
    if (flat.size() == 1) return std::move(flat.front());
    PathExpr e;
    e.kind_ = Kind::sum;
    e.size_ = 1;
    for (const PathExpr& k : flat) e.size_ += k.size_;
    e.kids_ = std::move(flat);
    return e;
}

PathExpr PathExpr::loop_once(PathExpr body) {
    if (body.kind_ == Kind::epsilon) return body;
    PathExpr e;
    e.kind_ = Kind::loop_once;
    e.size_ = 1 + body.size_;
    e.kids_.push_back(std::move(body));
    return e;
}

int PathExpr::compare(const PathExpr& a, const PathExpr& b) {
    if (a.kind_ != b.kind_) return a.kind_ < b.kind_ ? -1 : 1;
    if (int c = a.label_.compare(b.label_); c != 0) return c < 0 ? -1 : 1;
    for (std::size_t i = 0; i < a.kids_.size() && i < b.kids_.size(); ++i)
        if (int c = compare(a.kids_[i], b.kids_[i]); c != 0) return c;
    if (a.kids_.size() != b.kids_.size()) return a.kids_.size() < b.kids_.size() ? -1 : 1;
    return 0;
}

std::string PathExpr::to_string() const {
    switch (kind_) {
    case Kind::epsilon: return "ε";
    case Kind::label: return label_;
    case Kind::reset: return "R";
    case Kind::loop_once: {
        const PathExpr& body = kids_.front();
        bool parens = body.kind_ == Kind::concat || body.kind_ == Kind::sum;
        return parens ? "(" + body.to_string() + ")" : body.to_string();
    }
    case Kind::concat: {
        std::string out;
        for (std::size_t i = 0; i < kids_.size(); ++i) {
            if (i) out += "·";
            bool parens = kids_[i].kind_ == Kind::sum;
            out += parens ? "(" + kids_[i].to_string() + ")" : kids_[i].to_string();
        }
        return out;
    }
    case Kind::sum: {
        std::string out;
        for (std::size_t i = 0; i < kids_.size(); ++i) {
            if (i) out += " + ";
            out += kids_[i].to_string();
        }
        return out;
    }
    }
    return {};
}

std::size_t GraphMatrix::nonempty_count() const {
    std::size_t n = 0;
    for (const auto& row : entries)
        for (const auto& cell : row)
            if (cell) ++n;
    return n;
}

GraphMatrix build_matrix(const Multidigraph& g) {
    GraphMatrix m;
    m.vertices = g.vertices();
    m.entries.assign(m.size(), std::vector<std::optional<PathExpr>>(m.size()));
    for (const Edge& e : g.edges()) {
        std::size_t i = g.vertex_index(e.from), j = g.vertex_index(e.to);
        PathExpr lbl = e.kind == EdgeKind::reset ? PathExpr::reset(e.id) : PathExpr::label(e.id);
        auto& cell = m.entries[i][j];
        cell = cell ? PathExpr::sum({std::move(*cell), std::move(lbl)}) : std::move(lbl);
    }
    return m;
}

PathExpr node_reduce(const GraphMatrix& m, const VertexId& home, std::size_t node_budget) {
    std::size_t n = m.size();
    std::size_t home_idx = n;
    for (std::size_t i = 0; i < n; ++i)
        if (m.vertices[i] == home) home_idx = i;
    if (home_idx == n) throw Error(Errc::home_eliminated, "home '" + home + "' is not in the matrix");

    auto entries = m.entries;
    std::vector<bool> alive(n, true);

    auto check_budget = [&] {
        std::size_t total = 0;
        for (std::size_t i = 0; i < n; ++i) {
            if (!alive[i]) continue;
            for (std::size_t j = 0; j < n; ++j)
                if (alive[j] && entries[i][j]) total += entries[i][j]->node_count();
        }
        if (total > node_budget)
            throw Error(Errc::expansion_too_large,
                        "node reduction grew past " + std::to_string(node_budget) + " nodes");
    };

    auto remove_self_loop = [&](std::size_t k) {
        if (!entries[k][k]) return;
        PathExpr once = PathExpr::loop_once(std::move(*entries[k][k]));
        entries[k][k].reset();
        for (std::size_t j = 0; j < n; ++j) {
            if (!alive[j] || j == k || !entries[k][j]) continue;
            entries[k][j] = PathExpr::concat({once, std::move(*entries[k][j])});
        }
    };

    for (std::size_t k = 0; k < n; ++k) {
        if (k == home_idx) continue;
        remove_self_loop(k);
        for (std::size_t i = 0; i < n; ++i) {
            if (!alive[i] || i == k || !entries[i][k]) continue;
            for (std::size_t j = 0; j < n; ++j) {
                if (!alive[j] || j == k || !entries[k][j]) continue;
                PathExpr through = PathExpr::concat({*entries[i][k], *entries[k][j]});
                auto& cell = entries[i][j];
                cell = cell ? PathExpr::sum({std::move(*cell), std::move(through)})
                            : std::move(through);
            }
            check_budget(); // rows can balloon mid-elimination; fail early
        }
        alive[k] = false;
    }

    assert(alive[home_idx] && "home survives every elimination round");
    if (entries[home_idx][home_idx]) return *entries[home_idx][home_idx];
    return PathExpr::epsilon();
}

namespace {

struct Token {
    EdgeId id;
    bool is_reset;
};

// Saturating count of the fully distributed term list.
std::size_t term_count(const PathExpr& e, std::size_t cap) {
    switch (e.kind()) {
    case PathExpr::Kind::epsilon:
    case PathExpr::Kind::label:
    case PathExpr::Kind::reset: return 1;
    case PathExpr::Kind::loop_once: return term_count(e.kids().front(), cap);
    case PathExpr::Kind::concat: {
        std::size_t total = 1;
        for (const PathExpr& k : e.kids()) {
            total *= term_count(k, cap);
            if (total > cap) return cap + 1;
        }
        return total;
    }
    case PathExpr::Kind::sum: {
        std::size_t total = 0;
        for (const PathExpr& k : e.kids()) {
            total += term_count(k, cap);
            if (total > cap) return cap + 1;
        }
        return total;
    }
    }
    return 1;
}

std::vector<std::vector<Token>> distribute(const PathExpr& e) {
    switch (e.kind()) {
    case PathExpr::Kind::epsilon: return {{}};
    case PathExpr::Kind::label: return {{Token{e.label_id(), false}}};
    case PathExpr::Kind::reset: return {{Token{e.label_id(), true}}};
    case PathExpr::Kind::loop_once: return distribute(e.kids().front());
    case PathExpr::Kind::concat: {
        std::vector<std::vector<Token>> terms{{}};
        for (const PathExpr& k : e.kids()) {
            auto rhs = distribute(k);
            std::vector<std::vector<Token>> next;
            next.reserve(terms.size() * rhs.size());
            for (const auto& a : terms)
                for (const auto& b : rhs) {
                    std::vector<Token> joined = a;
                    joined.insert(joined.end(), b.begin(), b.end());
                    next.push_back(std::move(joined));
                }
            terms = std::move(next);
        }
        return terms;
    }
    case PathExpr::Kind::sum: {
        std::vector<std::vector<Token>> terms;
        for (const PathExpr& k : e.kids()) {
            auto part = distribute(k);
            terms.insert(terms.end(), std::make_move_iterator(part.begin()),
                         std::make_move_iterator(part.end()));
        }
        return terms;
    }
    }
    return {{}};
}

} // namespace

std::vector<Path> expand_to_paths(const PathExpr& e, const Multidigraph& g, std::size_t cap) {
    if (term_count(e, cap) > cap)
        throw Error(Errc::expansion_too_large,
                    "expansion exceeds " + std::to_string(cap) + " terms");

    // cut every term at its reset labels
    std::vector<std::vector<EdgeId>> candidates;
    for (const auto& term : distribute(e)) {
        std::vector<EdgeId> segment;
        for (const Token& t : term) {
            if (t.is_reset) {
                if (!segment.empty()) candidates.push_back(std::move(segment));
                segment.clear();
            } else {
                segment.push_back(t.id);
            }
        }
        if (!segment.empty()) candidates.push_back(std::move(segment));
    }

    std::set<std::vector<EdgeId>> seen;
    std::set<EdgeId> covered;
    std::vector<Path> kept;
    for (auto& cand : candidates) {
        if (!seen.insert(cand).second) continue;
        bool adds = false;
        for (const EdgeId& id : cand)
            if (covered.count(id) == 0) adds = true;
        if (!adds) continue;
        covered.insert(cand.begin(), cand.end());
        kept.push_back(make_path(g, cand));
    }
    return kept;
}

} // namespace navtest

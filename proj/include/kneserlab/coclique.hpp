#pragma once

#include <algorithm>
#include <atomic>
#include <bit>
#include <chrono>
#include <cstdint>
#include <functional>
#include <limits>
#include <optional>
#include <random>
#include <string>
#include <thread>
#include <vector>

#include "buildings.hpp"
#include "exterior.hpp"

namespace kneserlab {

/// Sorted vertex indices of a graph, pairwise nonadjacent.
struct Coclique {
    std::vector<int> members;

    friend bool operator==(const Coclique&, const Coclique&) = default;
    friend auto operator<=>(const Coclique&, const Coclique&) = default;
};

inline bool is_coclique(const Graph& g, const std::vector<int>& vertices)
{
    for (std::size_t a = 0; a < vertices.size(); ++a) {
        for (std::size_t b = a + 1; b < vertices.size(); ++b) {
            if (g.adjacent(vertices[a], vertices[b])) return false;
        }
    }
    return true;
}

namespace detail {

/// Bron–Kerbosch with Tomita pivoting on the complement of a graph of at most 64 vertices.
/// `nonadj[v]` is the mask of vertices nonadjacent to v (excluding v).
inline void bron_kerbosch(const std::vector<std::uint64_t>& nonadj, std::uint64_t r, std::uint64_t p, std::uint64_t x,
                          const std::function<void(std::uint64_t)>& emit)
{
    if (!p && !x) {
        emit(r);
        return;
    }
    int pivot = -1;
    int best = -1;
    for (std::uint64_t px = p | x; px; px &= px - 1) {
        const int u = std::countr_zero(px);
        const int c = std::popcount(p & nonadj[static_cast<std::size_t>(u)]);
        if (c > best) {
            best = c;
            pivot = u;
        }
    }
    for (std::uint64_t cand = p & ~nonadj[static_cast<std::size_t>(pivot)]; cand; cand &= cand - 1) {
        const int v = std::countr_zero(cand);
        const std::uint64_t bit = 1ULL << v;
        bron_kerbosch(nonadj, r | bit, p & nonadj[static_cast<std::size_t>(v)], x & nonadj[static_cast<std::size_t>(v)], emit);
        p &= ~bit;
        x |= bit;
    }
}

inline std::vector<std::uint64_t> sigma_nonadjacency(const KneserGraph& g)
{
    const std::size_t m = g.sigma.size();
    std::vector<std::uint64_t> nonadj(m, 0);
    for (std::size_t a = 0; a < m; ++a) {
        for (std::size_t b = 0; b < m; ++b) {
            if (a != b && !g.adjacent(g.sigma[a], g.sigma[b])) nonadj[a] |= 1ULL << b;
        }
    }
    return nonadj;
}

inline Coclique coclique_from_mask(const KneserGraph& g, std::uint64_t mask)
{
    Coclique c;
    for (; mask; mask &= mask - 1) c.members.push_back(g.sigma[static_cast<std::size_t>(std::countr_zero(mask))]);
    return c;
}

} // namespace detail

/// Every maximal coclique of the subgraph induced on Σ, as vertex indices of `g`, in lexicographic order.
inline std::vector<Coclique> maximal_cocliques_sigma(const KneserGraph& g)
{
    if (g.sigma.size() > 64) {
        throw UsageError("apartment has " + std::to_string(g.sigma.size()) + " vertices (limit 64); use sampling mode");
    }
    const auto nonadj = detail::sigma_nonadjacency(g);
    const std::uint64_t all = g.sigma.size() == 64 ? ~0ULL : (1ULL << g.sigma.size()) - 1;
    std::vector<Coclique> out;
    if (g.sigma.empty()) return {Coclique{}};
    detail::bron_kerbosch(nonadj, 0, all, 0, [&](std::uint64_t r) { out.push_back(detail::coclique_from_mask(g, r)); });
    std::sort(out.begin(), out.end());
    return out;
}

/// D: all vertices nonadjacent to every member of C.
inline BitRow extension_set(const Graph& g, const Coclique& c)
{
    if (!is_coclique(g, c.members)) throw UsageError("extension_set: the given vertex set is not a coclique");
    BitRow d(g.order(), true);
    for (int v : c.members) d.subtract(g.neighbours(v));
    return d;
}

inline BitRow extension_set(const KneserGraph& g, const Coclique& c) { return extension_set(g.graph, c); }

/// Least adjacent pair (x, y), x < y, inside a vertex set, if any.
inline std::optional<std::pair<int, int>> adjacent_pair_in(const Graph& g, const BitRow& d)
{
    for (int x = d.next(0); x >= 0; x = d.next(x + 1)) {
        const int y = g.neighbours(x).first_common(d);
        if (y >= 0) return std::pair{x, y};
    }
    return std::nullopt;
}

enum class UcepVerdict { holds, fails };

inline std::string to_string(UcepVerdict v) { return v == UcepVerdict::holds ? "holds" : "fails"; }

struct UcepWitness {
    Coclique coclique;
    int x = -1;
    int y = -1;

    friend bool operator==(const UcepWitness&, const UcepWitness&) = default;
};

struct UcepReport {
    std::string spec;
    UcepVerdict verdict = UcepVerdict::holds;
    long long cocliques_checked = 0;
    std::optional<UcepWitness> witness;
    std::optional<std::uint64_t> seed;
    long long elapsed_ms = 0;

    friend bool operator==(const UcepReport&, const UcepReport&) = default;
};

struct UcepOptions {
    /// Sample this many maximal cocliques instead of enumerating all of them.
    std::optional<int> sample;
    std::uint64_t seed = 1;
    int jobs = 1;
    bool timing = true;
};

/// Random maximal cocliques of Σ by greedy extension along a seeded shuffle; sorted, without repeats.
inline std::vector<Coclique> sample_maximal_cocliques_sigma(const KneserGraph& g, int count, std::uint64_t seed)
{
    std::mt19937_64 rng(seed);
    std::vector<Coclique> out;
    std::vector<int> order = g.sigma;
    for (int t = 0; t < count; ++t) {
        std::shuffle(order.begin(), order.end(), rng);
        Coclique c;
        for (int v : order) {
            if (std::none_of(c.members.begin(), c.members.end(), [&](int u) { return g.adjacent(u, v); })) c.members.push_back(v);
        }
        std::sort(c.members.begin(), c.members.end());
        out.push_back(std::move(c));
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

/// Decides the unique coclique extension property by scanning D for an edge,
/// for every (or a sample of) maximal coclique(s) of Σ. The witness is the first
/// failing coclique in lexicographic order, independent of `jobs`.
inline UcepReport check_ucep(const KneserGraph& g, const UcepOptions& options = {})
{
    const auto start = std::chrono::steady_clock::now();
    UcepReport report;
    report.spec = g.spec.label();
    std::vector<Coclique> cocliques;
    if (options.sample) {
        if (*options.sample < 1) throw UsageError("sample size must be positive");
        cocliques = sample_maximal_cocliques_sigma(g, *options.sample, options.seed);
        report.seed = options.seed;
    } else {
        cocliques = maximal_cocliques_sigma(g);
    }
    report.cocliques_checked = static_cast<long long>(cocliques.size());

    const std::size_t total = cocliques.size();
    std::atomic<std::size_t> first_failure{total};
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        while (true) {
            const std::size_t i = next.fetch_add(1);
            if (i >= total || i >= first_failure.load()) return;
            const BitRow d = extension_set(g.graph, cocliques[i]);
            if (adjacent_pair_in(g.graph, d)) {
                std::size_t cur = first_failure.load();
                while (i < cur && !first_failure.compare_exchange_weak(cur, i)) {
                }
            }
        }
    };
    const int jobs = std::max(1, options.jobs);
    if (jobs == 1) {
        worker();
    } else {
        std::vector<std::jthread> pool;
        for (int j = 0; j < jobs; ++j) pool.emplace_back(worker);
    }

    if (first_failure.load() < total) {
        const Coclique& c = cocliques[first_failure.load()];
        const auto pair = adjacent_pair_in(g.graph, extension_set(g.graph, c));
        report.verdict = UcepVerdict::fails;
        report.witness = UcepWitness{c, pair->first, pair->second};
    }
    if (options.timing) {
        report.elapsed_ms = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count();
    }
    return report;
}

/// Checks a failure witness directly against the adjacency rows.
inline bool witness_is_valid(const Graph& g, const UcepWitness& w)
{
    if (!is_coclique(g, w.coclique.members) || !g.adjacent(w.x, w.y)) return false;
    for (int c : w.coclique.members) {
        if (g.adjacent(c, w.x) || g.adjacent(c, w.y)) return false;
    }
    return true;
}

struct MaxCocliqueResult {
    bool exact = false;
    int lower = 0;
    int upper = 0;
    std::vector<int> witness;
    long long nodes = 0;
};

struct MaxCocliqueOptions {
    long long node_budget = std::numeric_limits<long long>::max();
    /// Vertices forced into the coclique; the search runs in their common non-neighbourhood.
    std::vector<int> forced;
};

namespace detail {

class CocliqueSearch {
public:
    CocliqueSearch(const Graph& g, long long budget) : g_(g), budget_(budget) {}

    void run(BitRow candidates, std::vector<int> current)
    {
        current_ = std::move(current);
        best_ = current_;
        expand(candidates, true);
    }

    const std::vector<int>& best() const { return best_; }
    bool aborted() const { return aborted_; }
    long long nodes() const { return nodes_; }
    int root_bound() const { return root_bound_; }

private:
    /// Greedy cover of `p` by cliques of g (colour classes of the complement);
    /// order[k] carries cover size bound[k] for the prefix up to it.
    void cover(BitRow p, std::vector<int>& order, std::vector<int>& bound) const
    {
        int colour = 0;
        while (p.any()) {
            ++colour;
            BitRow q = p;
            for (int v = q.next(0); v >= 0; v = q.next(v + 1)) {
                p.reset(v);
                q &= g_.neighbours(v);
                order.push_back(v);
                bound.push_back(colour);
            }
        }
    }

    void expand(BitRow p, bool root)
    {
        if (aborted_) return;
        if (++nodes_ > budget_) {
            aborted_ = true;
            return;
        }
        std::vector<int> order;
        std::vector<int> bound;
        cover(p, order, bound);
        if (root) root_bound_ = static_cast<int>(current_.size()) + (bound.empty() ? 0 : bound.back());
        for (std::size_t k = order.size(); k-- > 0;) {
            if (current_.size() + static_cast<std::size_t>(bound[k]) <= best_.size()) return;
            if (root) root_bound_ = static_cast<int>(current_.size()) + bound[k];
            const int v = order[k];
            current_.push_back(v);
            BitRow next = p;
            next.subtract(g_.neighbours(v));
            next.reset(v);
            if (next.none()) {
                if (current_.size() > best_.size()) best_ = current_;
            } else {
                expand(next, false);
            }
            current_.pop_back();
            if (aborted_) return;
            p.reset(v);
        }
    }

    const Graph& g_;
    long long budget_;
    long long nodes_ = 0;
    bool aborted_ = false;
    int root_bound_ = 0;
    std::vector<int> current_;
    std::vector<int> best_;
};

} // namespace detail

/// Maximum coclique by branch and bound with a greedy clique-cover bound.
/// When the node budget runs out, `exact` is false and [lower, upper] bracket the answer.
inline MaxCocliqueResult max_coclique(const Graph& g, const MaxCocliqueOptions& options = {})
{
    if (!is_coclique(g, options.forced)) throw UsageError("forced vertices are not a coclique");
    BitRow candidates(g.order(), true);
    for (int v : options.forced) {
        candidates.subtract(g.neighbours(v));
        candidates.reset(v);
    }
    std::vector<int> forced = options.forced;
    std::sort(forced.begin(), forced.end());
    detail::CocliqueSearch search(g, options.node_budget);
    search.run(candidates, forced);
    MaxCocliqueResult r;
    r.witness = search.best();
    std::sort(r.witness.begin(), r.witness.end());
    r.lower = static_cast<int>(r.witness.size());
    r.exact = !search.aborted();
    r.upper = r.exact ? r.lower : std::max(r.lower, search.root_bound());
    r.nodes = search.nodes();
    return r;
}

inline MaxCocliqueResult max_coclique(const KneserGraph& g, const MaxCocliqueOptions& options = {})
{
    return max_coclique(g.graph, options);
}

inline bool supports_span_check(const BuildingSpec& spec)
{
    if (spec.types.size() != 1) return false;
    if (spec.family == Family::A) return 2 * spec.types.front() <= spec.rank + 1;
    return spec.family == Family::D && spec.types.front() == 2 && spec.rank >= 3;
}

/// True iff ψx lies in span{ψc : c in C} for every x in D(C).
inline bool span_check(const KneserGraph& g, const Coclique& c)
{
    if (!supports_span_check(g.spec)) throw UsageError("span_check supports A_{n,i} with 2i <= n+1 and D_{n,2}; got " + g.spec.label());
    const BitRow d = extension_set(g, c);
    const auto& first = g.vertices.front().top();
    MultivectorSpan span(first.ambient(), first.modulus());
    for (int v : c.members) span.insert(plucker(g.vertices[static_cast<std::size_t>(v)].top()));
    for (int x = d.next(0); x >= 0; x = d.next(x + 1)) {
        if (!span.contains(plucker(g.vertices[static_cast<std::size_t>(x)].top()))) return false;
    }
    return true;
}

/// Coclique-extension certificate for a map Γ' -> Γ: fibres are cocliques
/// and x' ~ y' iff φx' ~ φy'.
struct ExtensionCertificate {
    bool surjective = false;
    bool fibres_are_cocliques = false;
    bool adjacency_descends = false;

    bool certified() const { return surjective && fibres_are_cocliques && adjacency_descends; }
};

inline ExtensionCertificate certify_coclique_extension(const Graph& fine, const Graph& coarse, const std::vector<int>& phi)
{
    ExtensionCertificate cert;
    std::vector<bool> hit(static_cast<std::size_t>(coarse.order()), false);
    for (int v : phi) hit[static_cast<std::size_t>(v)] = true;
    cert.surjective = std::all_of(hit.begin(), hit.end(), [](bool b) { return b; });
    cert.fibres_are_cocliques = true;
    cert.adjacency_descends = true;
    for (int a = 0; a < fine.order(); ++a) {
        for (int b = a + 1; b < fine.order(); ++b) {
            const int pa = phi[static_cast<std::size_t>(a)];
            const int pb = phi[static_cast<std::size_t>(b)];
            if (pa == pb && fine.adjacent(a, b)) cert.fibres_are_cocliques = false;
            if (fine.adjacent(a, b) != coarse.adjacent(pa, pb)) cert.adjacency_descends = false;
        }
    }
    return cert;
}

/// Projection of type-J' flags onto their type-J members, as vertex indices of `coarse`.
inline std::vector<int> flag_projection(const KneserGraph& fine, const KneserGraph& coarse)
{
    const auto& jf = fine.spec.types;
    std::vector<std::size_t> keep;
    for (int j : coarse.spec.types) {
        auto it = std::find(jf.begin(), jf.end(), j);
        if (it == jf.end()) throw UsageError("coarse type set must be contained in the fine type set");
        keep.push_back(static_cast<std::size_t>(it - jf.begin()));
    }
    std::vector<int> phi;
    phi.reserve(fine.vertices.size());
    for (const auto& v : fine.vertices) {
        GeometricObject image;
        for (std::size_t k : keep) image.flag.push_back(v.flag[k]);
        const int idx = coarse.index_of(image);
        if (idx < 0) throw ConstructionError("projection of " + v.to_string() + " is not a vertex of " + coarse.spec.label());
        phi.push_back(idx);
    }
    return phi;
}

} // namespace kneserlab

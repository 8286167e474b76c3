#pragma once

#include <algorithm>
#include <compare>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "enumerate.hpp"
#include "family.hpp"
#include "form.hpp"
#include "graph.hpp"

namespace kneserlab {

/// A concrete building geometry over F_p together with an object type.
///
/// Types follow the usual diagram numbering. For D_n the type sets are
/// {j} (j <= n-2), {n-1,n} ((n-1)-spaces), {n} (maximal spaces of the
/// class selected by `selector`, plus = class of <e_1,...,e_n>) and
/// {n-1} (maximal spaces of the other class).
struct BuildingSpec {
    Family family = Family::A;
    int rank = 1;
    std::vector<int> types;
    int p = 2;
    DSelector selector = DSelector::plus;
    /// Permits A-type flag sets J with J^{w0} != J (general-position adjacency).
    bool allow_non_self_opposite = false;

    friend bool operator==(const BuildingSpec&, const BuildingSpec&) = default;

    std::string label() const
    {
        std::string s(1, family_letter(family));
        s += "_{" + std::to_string(rank) + ",";
        if (types.size() == 1) {
            s += std::to_string(types.front());
        } else {
            s += "{";
            for (std::size_t i = 0; i < types.size(); ++i) s += (i ? "," : "") + std::to_string(types[i]);
            s += "}";
        }
        s += "}";
        if (family == Family::D && types == std::vector<int>{rank} && selector == DSelector::minus) s += "-";
        return s;
    }

    bool is_self_opposite() const
    {
        if (family != Family::A) return true;
        for (int j : types) {
            if (!std::binary_search(types.begin(), types.end(), rank + 1 - j)) return false;
        }
        return true;
    }

    /// Dimension of the ambient vector space of the concrete model.
    int ambient() const
    {
        switch (family) {
        case Family::A: return rank + 1;
        case Family::B: return 2 * rank + 1;
        case Family::C:
        case Family::D: return 2 * rank;
        case Family::G: return 7;
        }
        return 0;
    }

    /// Vector-space dimensions of the members of an object of this type.
    std::vector<int> member_dims() const
    {
        if (family == Family::D) {
            const int n = rank;
            if (types == std::vector<int>{n - 1, n}) return {n - 1};
            if (types == std::vector<int>{n - 1} || types == std::vector<int>{n}) return {n};
        }
        if (family == Family::G) return {1};
        return types;
    }

    /// Class of maximal spaces used for D-type {n-1} / {n}.
    DSelector effective_selector() const
    {
        if (family == Family::D && types == std::vector<int>{rank - 1} && rank >= 2) return DSelector::minus;
        return selector;
    }

    void validate() const
    {
        if (!is_supported_prime(p)) throw UsageError("p must be one of 2, 3, 5, 7 (got " + std::to_string(p) + ")");
        if (rank < 1) throw UsageError("rank must be positive");
        if (types.empty()) throw UsageError("type set must be nonempty");
        if (!std::is_sorted(types.begin(), types.end()) || std::adjacent_find(types.begin(), types.end()) != types.end()) {
            throw UsageError("type set must be strictly increasing");
        }
        if (types.front() < 1 || types.back() > rank) throw UsageError("type set must lie in {1.." + std::to_string(rank) + "}");
        if (ambient() > 16) throw UsageError("ambient dimension above 16 is outside desk scale");
        switch (family) {
        case Family::A:
            if (types.size() > 1 && !allow_non_self_opposite && !is_self_opposite()) {
                throw UsageError("type set " + label() + " is not self-opposite (J^w0 != J); flag Kneser adjacency undefined");
            }
            break;
        case Family::B:
            if (p % 2 == 0) throw UsageError("family B requires odd p (the B_n quadric is degenerate in characteristic 2)");
            if (types.size() != 1) throw UsageError("polar families support a single type");
            break;
        case Family::C:
            if (types.size() != 1) throw UsageError("polar families support a single type");
            break;
        case Family::D: {
            if (rank < 2) throw UsageError("family D requires rank >= 2");
            const int n = rank;
            const bool ok = (types.size() == 1 && (types[0] <= n - 2 || types[0] >= n - 1)) ||
                            types == std::vector<int>{n - 1, n};
            if (!ok) throw UsageError("unsupported D type set " + label());
            break;
        }
        case Family::G:
            if (rank != 2 || types != std::vector<int>{1}) throw UsageError("only G_{2,1} is supported");
            if (p % 2 == 0) throw UsageError("G_{2,1} uses the B_3 quadric and requires odd p");
            break;
        }
    }
};

/// A flag of nested subspaces; a single subspace for one-element type sets.
struct GeometricObject {
    std::vector<Subspace> flag;

    friend bool operator==(const GeometricObject&, const GeometricObject&) = default;
    friend std::strong_ordering operator<=>(const GeometricObject& a, const GeometricObject& b)
    {
        const std::size_t n = std::min(a.flag.size(), b.flag.size());
        for (std::size_t i = 0; i < n; ++i) {
            if (auto c = a.flag[i] <=> b.flag[i]; c != 0) return c;
        }
        return a.flag.size() <=> b.flag.size();
    }

    const Subspace& top() const { return flag.back(); }

    std::string to_string() const
    {
        std::string s;
        for (std::size_t i = 0; i < flag.size(); ++i) s += (i ? " < " : "") + flag[i].to_string();
        return s;
    }
};

/// The standard form of a polar family: hyperbolic for D, symplectic for C, parabolic for B (and G).
inline std::optional<Form> standard_form(const BuildingSpec& spec)
{
    switch (spec.family) {
    case Family::A: return std::nullopt;
    case Family::B: return Form::parabolic(spec.rank, spec.p);
    case Family::C: return Form::symplectic(spec.rank, spec.p);
    case Family::D: return Form::hyperbolic(spec.rank, spec.p);
    case Family::G: return Form::parabolic(3, spec.p);
    }
    return std::nullopt;
}

/// Kneser adjacency ("opposition") between objects of one spec.
///
/// Type A, single type i: disjointness of i-spaces when 2i <= n+1, and for
/// larger i disjointness of the annihilators (the dual (n+1-i)-spaces).
/// Type A flags: general position, dim(F_a ∩ G_b) = max(0, a+b-(n+1)).
/// Polar types: X^⊥ ∩ Y = 0, except that maximal spaces of one class in D_n,
/// n odd, never meet trivially and are adjacent when they meet in a point.
class Opposition {
public:
    explicit Opposition(const BuildingSpec& spec)
        : spec_(spec), form_(standard_form(spec)),
          dual_(spec.family == Family::A && spec.types.size() == 1 && 2 * spec.types.front() > spec.rank + 1),
          odd_half_spin_(spec.family == Family::D && spec.rank % 2 == 1 && spec.member_dims() == std::vector<int>{spec.rank} ? 1 : 0)
    {
        if (form_) form_->require_nondegenerate();
    }

    const std::optional<Form>& form() const { return form_; }

    bool operator()(const GeometricObject& x, const GeometricObject& y) const { return opposite_prepared(prepare(x), prepare(y)); }

    /// Replaces an object by the representative the relation is evaluated on
    /// (the annihilator for dualized A types, the object itself otherwise).
    GeometricObject prepare(const GeometricObject& x) const
    {
        if (!dual_) return x;
        return GeometricObject{{x.top().annihilator()}};
    }

    bool opposite_prepared(const GeometricObject& x, const GeometricObject& y) const
    {
        if (form_) return perp_meet_dim(x.top(), y.top(), *form_) == odd_half_spin_;
        if (x.flag.size() == 1) return intersection_dim(x.top(), y.top()) == 0;
        const int total = spec_.rank + 1;
        for (std::size_t a = 0; a < x.flag.size(); ++a) {
            for (std::size_t b = 0; b < y.flag.size(); ++b) {
                const int want = std::max(0, x.flag[a].dim() + y.flag[b].dim() - total);
                if (intersection_dim(x.flag[a], y.flag[b]) != want) return false;
            }
        }
        return true;
    }

private:
    BuildingSpec spec_;
    std::optional<Form> form_;
    bool dual_;
    int odd_half_spin_;
};

/// Vertex list, adjacency and marked apartment of a Kneser graph.
struct KneserGraph {
    BuildingSpec spec;
    std::vector<GeometricObject> vertices;
    Graph graph;
    std::vector<int> sigma;

    int order() const { return graph.order(); }
    bool adjacent(int u, int v) const { return graph.adjacent(u, v); }
    Graph sigma_graph() const { return graph.induced(sigma); }

    /// Index of `obj` in the sorted vertex list, or -1.
    int index_of(const GeometricObject& obj) const
    {
        auto it = std::lower_bound(vertices.begin(), vertices.end(), obj);
        if (it == vertices.end() || !(*it == obj)) return -1;
        return static_cast<int>(it - vertices.begin());
    }
};

namespace detail {

inline long long factorial(int n) { return n <= 1 ? 1 : n * factorial(n - 1); }
inline long long binomial(int n, int k)
{
    if (k < 0 || k > n) return 0;
    return factorial(n) / (factorial(k) * factorial(n - k));
}

/// Totally singular subspaces of the given dims forming the class of maximal spaces chosen by the spec.
inline bool in_d_class(const Subspace& a, const BuildingSpec& spec)
{
    const int n = spec.rank;
    std::vector<int> coords;
    for (int i = 0; i < n; ++i) coords.push_back(2 * i);
    const Subspace a0 = Subspace::coordinate(coords, 2 * n, spec.p);
    const bool same = (intersection_dim(a, a0) % 2) == (n % 2);
    return same == (spec.effective_selector() == DSelector::plus);
}

inline bool is_d_maximal(const BuildingSpec& spec)
{
    return spec.family == Family::D && spec.member_dims() == std::vector<int>{spec.rank};
}

/// All k-subspaces of `top`, re-expressed in ambient coordinates.
inline std::vector<Subspace> subspaces_of(const Subspace& top, int k)
{
    std::vector<Subspace> out;
    const int d = top.ambient();
    const Field f(top.modulus());
    for (const Subspace& c : enumerate_subspaces(top.dim(), k, top.modulus())) {
        Matrix m(k, d, top.modulus());
        for (int r = 0; r < k; ++r) {
            for (int j = 0; j < d; ++j) {
                std::uint8_t acc = 0;
                for (int t = 0; t < top.dim(); ++t) acc = f.add(acc, f.mul(c.basis().at(r, t), top.basis().at(t, j)));
                m.at(r, j) = acc;
            }
        }
        out.push_back(Subspace::span(std::move(m)));
    }
    return out;
}

inline void extend_flags(const std::vector<int>& dims, std::size_t level, std::vector<Subspace>& chain,
                         std::vector<GeometricObject>& out)
{
    // chain holds members dims[level+1..] from the top down
    if (level == static_cast<std::size_t>(-1)) {
        out.push_back(GeometricObject{std::vector<Subspace>(chain.rbegin(), chain.rend())});
        return;
    }
    for (Subspace& s : subspaces_of(chain.back(), dims[level])) {
        chain.push_back(std::move(s));
        extend_flags(dims, level - 1, chain, out);
        chain.pop_back();
    }
}

} // namespace detail

/// Whether `obj` is an object of the spec's type: nested members of the right
/// dimensions, in the spec's field, totally singular and of the right class where applicable.
inline bool is_vertex(const BuildingSpec& spec, const GeometricObject& obj)
{
    spec.validate();
    const auto dims = spec.member_dims();
    if (obj.flag.size() != dims.size()) return false;
    for (std::size_t t = 0; t < dims.size(); ++t) {
        const Subspace& s = obj.flag[t];
        if (s.ambient() != spec.ambient() || s.modulus() != spec.p || s.dim() != dims[t]) return false;
        if (t > 0 && !s.contains(obj.flag[t - 1])) return false;
    }
    if (auto form = standard_form(spec)) {
        if (!is_totally_singular(obj.top(), *form)) return false;
        if (detail::is_d_maximal(spec) && !detail::in_d_class(obj.top(), spec)) return false;
    }
    return true;
}

/// All objects of the spec's type, sorted.
inline std::vector<GeometricObject> enumerate_objects(const BuildingSpec& spec)
{
    spec.validate();
    const auto dims = spec.member_dims();
    std::vector<GeometricObject> out;
    if (auto form = standard_form(spec)) {
        for (Subspace& s : enumerate_singular_subspaces(*form, dims.front())) {
            if (detail::is_d_maximal(spec) && !detail::in_d_class(s, spec)) continue;
            out.push_back(GeometricObject{{std::move(s)}});
        }
    } else if (dims.size() == 1) {
        for (Subspace& s : enumerate_subspaces(spec.ambient(), dims.front(), spec.p)) out.push_back(GeometricObject{{std::move(s)}});
    } else {
        for (Subspace& top : enumerate_subspaces(spec.ambient(), dims.back(), spec.p)) {
            std::vector<Subspace> chain{std::move(top)};
            detail::extend_flags(dims, dims.size() - 2, chain, out);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

/// Apartment objects: coordinate subspaces (A) or frame subspaces <e_s : s in S>
/// with S free of hyperbolic pairs (B/C/D), sorted.
inline std::vector<GeometricObject> frame_objects(const BuildingSpec& spec)
{
    spec.validate();
    const auto dims = spec.member_dims();
    const int d = spec.ambient();
    std::vector<GeometricObject> out;
    if (spec.family == Family::A) {
        // chains of coordinate sets K_1 ⊂ K_2 ⊂ ... with |K_t| = dims[t]
        std::vector<std::uint32_t> chain;
        auto rec = [&](auto&& self, std::size_t level) -> void {
            if (level == dims.size()) {
                GeometricObject obj;
                for (std::uint32_t s : chain) {
                    std::vector<int> coords;
                    for (int c = 0; c < d; ++c) {
                        if (s >> c & 1u) coords.push_back(c);
                    }
                    obj.flag.push_back(Subspace::coordinate(coords, d, spec.p));
                }
                out.push_back(std::move(obj));
                return;
            }
            const std::uint32_t below = chain.empty() ? 0u : chain.back();
            for (std::uint32_t s = 0; s < (1u << d); ++s) {
                if (std::popcount(s) != dims[level] || (s & below) != below) continue;
                chain.push_back(s);
                self(self, level + 1);
                chain.pop_back();
            }
        };
        rec(rec, 0);
    } else {
        const int n = spec.family == Family::G ? 3 : spec.rank;
        const int k = dims.front();
        for (std::uint32_t pairs = 0; pairs < (1u << n); ++pairs) {
            if (std::popcount(pairs) != k) continue;
            for (std::uint32_t signs = 0; signs < (1u << k); ++signs) {
                std::vector<int> coords;
                int t = 0;
                for (int i = 0; i < n; ++i) {
                    if (!(pairs >> i & 1u)) continue;
                    coords.push_back(2 * i + static_cast<int>((signs >> t) & 1u));
                    ++t;
                }
                Subspace s = Subspace::coordinate(coords, d, spec.p);
                if (detail::is_d_maximal(spec) && !detail::in_d_class(s, spec)) continue;
                out.push_back(GeometricObject{{std::move(s)}});
            }
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

/// Number of apartment objects of the spec's type.
inline long long apartment_size(const BuildingSpec& spec)
{
    const auto dims = spec.member_dims();
    if (spec.family == Family::A) {
        long long r = detail::factorial(spec.rank + 1);
        int prev = 0;
        for (int j : dims) {
            r /= detail::factorial(j - prev);
            prev = j;
        }
        return r / detail::factorial(spec.rank + 1 - prev);
    }
    const int n = spec.family == Family::G ? 3 : spec.rank;
    const int k = dims.front();
    long long r = detail::binomial(n, k) << k;
    if (detail::is_d_maximal(spec)) r /= 2;
    return r;
}

/// Builds the Kneser graph on `vertices` (sorted) with the spec's opposition relation.
inline KneserGraph assemble(const BuildingSpec& spec, std::vector<GeometricObject> vertices, bool mark_sigma = true)
{
    KneserGraph g;
    g.spec = spec;
    g.vertices = std::move(vertices);
    const Opposition opp(spec);
    const int n = static_cast<int>(g.vertices.size());
    std::vector<GeometricObject> prepared;
    prepared.reserve(g.vertices.size());
    for (const auto& v : g.vertices) prepared.push_back(opp.prepare(v));
    g.graph = Graph(n);
    for (int u = 0; u < n; ++u) {
        for (int v = u + 1; v < n; ++v) {
            if (opp.opposite_prepared(prepared[static_cast<std::size_t>(u)], prepared[static_cast<std::size_t>(v)])) g.graph.add_edge(u, v);
        }
    }
    if (mark_sigma) {
        for (const GeometricObject& f : frame_objects(spec)) {
            const int idx = g.index_of(f);
            if (idx < 0) throw ConstructionError("apartment object " + f.to_string() + " missing from vertex set of " + spec.label());
            g.sigma.push_back(idx);
        }
        std::sort(g.sigma.begin(), g.sigma.end());
        if (static_cast<long long>(g.sigma.size()) != apartment_size(spec)) {
            throw ConstructionError("apartment of " + spec.label() + " has unexpected size " + std::to_string(g.sigma.size()));
        }
    }
    return g;
}

/// Full Kneser graph of the spec, with its standard apartment marked.
inline KneserGraph build(const BuildingSpec& spec)
{
    spec.validate();
    return assemble(spec, enumerate_objects(spec));
}

/// The apartment alone: vertices are the frame objects, all of them marked as Σ.
inline KneserGraph build_sigma(const BuildingSpec& spec)
{
    spec.validate();
    KneserGraph g = assemble(spec, frame_objects(spec), false);
    g.sigma.resize(static_cast<std::size_t>(g.order()));
    std::iota(g.sigma.begin(), g.sigma.end(), 0);
    return g;
}

/// i-subspaces of F_p^{n+1}.
inline KneserGraph build_projective_kneser(int n, int i, int p)
{
    if (i < 1 || i > n) throw UsageError("type i must satisfy 1 <= i <= n");
    return build(BuildingSpec{Family::A, n, {i}, p});
}

/// Flags of type J in F_p^{n+1}; J must be self-opposite unless explicitly allowed.
inline KneserGraph build_flag_kneser_A(int n, std::vector<int> types, int p, bool allow_non_self_opposite = false)
{
    std::sort(types.begin(), types.end());
    BuildingSpec spec{Family::A, n, std::move(types), p};
    spec.allow_non_self_opposite = allow_non_self_opposite;
    return build(spec);
}

/// Totally singular k-spaces of the standard B/C/D form of rank n.
inline KneserGraph build_polar_kneser(Family family, int n, int k, int p, DSelector selector = DSelector::plus)
{
    if (family != Family::B && family != Family::C && family != Family::D) throw UsageError("polar family must be B, C or D");
    if (k < 1 || k > n) throw UsageError("k exceeds the Witt index " + std::to_string(n));
    BuildingSpec spec{family, n, {k}, p, selector};
    if (family == Family::D && k == n - 1 && n >= 2) spec.types = {n - 1, n};
    return build(spec);
}

/// Totally singular planes of the hyperbolic 8-space (type D_{4,{3,4}}).
inline KneserGraph build_d4_planes(int p) { return build(BuildingSpec{Family::D, 4, {3, 4}, p}); }

/// Points of the generalized hexagon of type G_2, realized as the points of the B_3 quadric.
inline KneserGraph g2_points(int p)
{
    if (p % 2 == 0) throw UsageError("G_{2,1} uses the B_3 quadric and requires odd p");
    return build(BuildingSpec{Family::G, 2, {1}, p});
}

} // namespace kneserlab

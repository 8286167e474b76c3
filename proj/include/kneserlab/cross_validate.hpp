#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "buildings.hpp"
#include "coxeter.hpp"

namespace kneserlab {

/// A frame object or coset named by signed index sets, one per flag member.
using FrameLabel = std::vector<std::set<int>>;

inline std::string to_string(const FrameLabel& label)
{
    std::string s = "(";
    for (std::size_t t = 0; t < label.size(); ++t) {
        s += t ? ", {" : "{";
        bool first = true;
        for (int i : label[t]) {
            s += (first ? "" : ",") + std::to_string(i);
            first = false;
        }
        s += "}";
    }
    return s + ")";
}

struct CrossValidationMismatch {
    FrameLabel a;
    FrameLabel b;
    bool geometric = false;
    bool coset = false;
};

struct CrossValidationResult {
    std::string spec;
    int geometric_vertices = 0;
    int coset_vertices = 0;
    bool labels_match = false;
    std::optional<CrossValidationMismatch> mismatch;
    std::string message;

    bool ok() const { return labels_match && !mismatch; }
};

namespace detail {

/// Coordinate of the model -> signed index: A uses 1..n+1; polar frames map
/// coordinate 2i to i+1 and 2i+1 to -(i+1), the anisotropic coordinate never occurs.
inline int signed_index(Family family, int coord)
{
    if (family == Family::A) return coord + 1;
    return coord % 2 == 0 ? coord / 2 + 1 : -(coord / 2 + 1);
}

inline FrameLabel geometric_label(const BuildingSpec& spec, const GeometricObject& obj)
{
    FrameLabel label;
    for (const Subspace& member : obj.flag) {
        if (!member.is_coordinate()) throw ConstructionError("apartment object " + obj.to_string() + " is not a coordinate subspace");
        std::set<int> s;
        for (int c : member.pivots()) s.insert(signed_index(spec.family, c));
        label.push_back(std::move(s));
    }
    return label;
}

/// Weyl-level data: group family, rank and the type set J whose quotient models the spec.
inline std::pair<WeylGroup, std::vector<int>> weyl_model(const BuildingSpec& spec)
{
    if (spec.family == Family::G) return {WeylGroup(Family::B, 3), {1}};
    const int n = spec.rank;
    if (spec.family == Family::D && spec.types.size() == 1 && spec.types.front() >= n - 1) {
        return {WeylGroup(Family::D, n), {spec.effective_selector() == DSelector::plus ? n : n - 1}};
    }
    return {WeylGroup(spec.family, spec.rank), spec.types};
}

/// Signed index sets a coset representative w carries, member by member.
inline std::vector<std::vector<int>> base_sets(const BuildingSpec& spec)
{
    auto range = [](int k) {
        std::vector<int> v;
        for (int i = 1; i <= k; ++i) v.push_back(i);
        return v;
    };
    if (spec.family == Family::D) {
        const int n = spec.rank;
        if (spec.types == std::vector<int>{n - 1, n}) return {range(n - 1)};
        if (spec.types.size() == 1 && spec.types.front() >= n - 1 && spec.effective_selector() == DSelector::plus) return {range(n)};
        if (spec.types.size() == 1 && spec.types.front() >= n - 1) {
            auto v = range(n - 1);
            v.push_back(-n);
            return {v};
        }
    }
    if (spec.family == Family::G) return {range(1)};
    std::vector<std::vector<int>> out;
    for (int j : spec.types) out.push_back(range(j));
    return out;
}

inline FrameLabel coset_label(const std::vector<std::vector<int>>& bases, const WeylElement& w)
{
    FrameLabel label;
    for (const auto& base : bases) {
        std::set<int> s;
        for (int i : base) s.insert(w(i));
        label.push_back(std::move(s));
    }
    return label;
}

} // namespace detail

/// Compares the geometric apartment graph Σ with the coset Kneser graph on W/X
/// under the frame labelling; reports the first pair (in geometric order) where
/// adjacency disagrees.
inline CrossValidationResult cross_validate(const BuildingSpec& spec)
{
    spec.validate();
    if (spec.rank > 4 && spec.family != Family::G) throw UsageError("cross-validation is limited to rank <= 4");
    CrossValidationResult result;
    result.spec = spec.label();

    const KneserGraph sigma = build_sigma(spec);
    auto [group, types] = detail::weyl_model(spec);
    const ParabolicQuotient quotient(group, types);
    result.geometric_vertices = sigma.order();
    result.coset_vertices = quotient.size();

    std::vector<FrameLabel> geometric;
    for (const auto& v : sigma.vertices) geometric.push_back(detail::geometric_label(spec, v));
    const auto bases = detail::base_sets(spec);
    std::map<FrameLabel, int> coset_index;
    for (int c = 0; c < quotient.size(); ++c) coset_index.emplace(detail::coset_label(bases, quotient.representative(c)), c);

    if (static_cast<int>(coset_index.size()) != quotient.size()) {
        result.message = "coset labels are not distinct";
        return result;
    }
    std::vector<int> to_coset;
    for (const auto& label : geometric) {
        auto it = coset_index.find(label);
        if (it == coset_index.end()) {
            result.message = "apartment object " + to_string(label) + " has no coset";
            return result;
        }
        to_coset.push_back(it->second);
    }
    if (sigma.order() != quotient.size()) {
        result.message = "apartment has " + std::to_string(sigma.order()) + " objects but W/X has " + std::to_string(quotient.size()) + " cosets";
        return result;
    }
    result.labels_match = true;
    for (int a = 0; a < sigma.order(); ++a) {
        for (int b = a + 1; b < sigma.order(); ++b) {
            const bool g = sigma.adjacent(a, b);
            const bool c = quotient.graph().adjacent(to_coset[static_cast<std::size_t>(a)], to_coset[static_cast<std::size_t>(b)]);
            if (g != c) {
                result.mismatch = CrossValidationMismatch{geometric[static_cast<std::size_t>(a)], geometric[static_cast<std::size_t>(b)], g, c};
                result.message = "adjacency differs on " + to_string(result.mismatch->a) + " and " + to_string(result.mismatch->b);
                return result;
            }
        }
    }
    result.message = "match";
    return result;
}

/// Every implemented spec of rank <= 4 for the given field, including
/// non-self-opposite A flag types.
inline std::vector<BuildingSpec> cross_validation_grid(int p)
{
    std::vector<BuildingSpec> out;
    for (int n = 1; n <= 4; ++n) {
        for (unsigned mask = 1; mask < (1u << n); ++mask) {
            BuildingSpec s{Family::A, n, {}, p};
            for (int j = 1; j <= n; ++j) {
                if (mask >> (j - 1) & 1u) s.types.push_back(j);
            }
            s.allow_non_self_opposite = true;
            out.push_back(s);
        }
    }
    for (Family f : {Family::B, Family::C}) {
        if (f == Family::B && p % 2 == 0) continue;
        for (int n = 2; n <= 4; ++n) {
            if (f == Family::B && 2 * n + 1 > 16) continue;
            for (int k = 1; k <= n; ++k) out.push_back(BuildingSpec{f, n, {k}, p});
        }
    }
    for (int n = 3; n <= 4; ++n) {
        for (int k = 1; k <= n - 2; ++k) out.push_back(BuildingSpec{Family::D, n, {k}, p});
        out.push_back(BuildingSpec{Family::D, n, {n - 1}, p});
        out.push_back(BuildingSpec{Family::D, n, {n}, p, DSelector::plus});
        out.push_back(BuildingSpec{Family::D, n, {n}, p, DSelector::minus});
        out.push_back(BuildingSpec{Family::D, n, {n - 1, n}, p});
    }
    if (p % 2 == 1) out.push_back(BuildingSpec{Family::G, 2, {1}, p});
    return out;
}

} // namespace kneserlab

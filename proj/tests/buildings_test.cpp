#include <gtest/gtest.h>

#include <map>

#include "kneserlab/buildings.hpp"
#include "test_util.hpp"

using namespace kneserlab;
using kneserlab::testing::unit_sum;

namespace {

void expect_symmetric_irreflexive(const KneserGraph& g)
{
    EXPECT_TRUE(g.graph.is_symmetric_irreflexive()) << g.spec.label();
    for (int v : g.sigma) ASSERT_LT(v, g.order());
    EXPECT_TRUE(std::is_sorted(g.vertices.begin(), g.vertices.end()));
}

/// Row with ones at 0-based coordinates.
std::vector<long long> ones(std::initializer_list<int> coords, int d)
{
    std::vector<long long> v(static_cast<std::size_t>(d), 0);
    for (int c : coords) v[static_cast<std::size_t>(c)] = 1;
    return v;
}

std::size_t filtered_count(const Form& form, int k)
{
    std::size_t count = 0;
    for (const auto& s : enumerate_subspaces(form.ambient(), k, form.modulus())) count += is_totally_singular(s, form);
    return count;
}

} // namespace

TEST(ProjectiveKneser, Examples)
{
    const auto g32 = build_projective_kneser(3, 2, 2);
    EXPECT_EQ(g32.order(), 35);
    EXPECT_EQ(g32.sigma.size(), 6u);
    EXPECT_TRUE(g32.sigma_graph().is_regular(1));

    const auto g42 = build_projective_kneser(4, 2, 2);
    EXPECT_EQ(g42.sigma.size(), 10u);
    EXPECT_TRUE(g42.sigma_graph().is_regular(3));
    EXPECT_EQ(g42.sigma_graph().edge_count(), 15);

    const auto g21 = build_projective_kneser(2, 1, 2);
    EXPECT_EQ(g21.order(), 7);
    EXPECT_TRUE(g21.graph.is_regular(6));
    EXPECT_THROW(build_projective_kneser(3, 0, 2), UsageError);
    EXPECT_THROW(build_projective_kneser(3, 4, 2), UsageError);
}

TEST(ProjectiveKneser, SigmaIsTheSetKneserGraphViaCoordinateSubspaces)
{
    for (int n = 1; n <= 4; ++n) {
        for (int i = 1; 2 * i <= n + 1; ++i) {
            for (int p : {2, 3}) {
                if (p == 3 && n == 4) continue;
                const auto g = build_projective_kneser(n, i, p);
                std::vector<std::uint32_t> subsets;
                const Graph kneser = set_kneser(n + 1, i, &subsets);
                ASSERT_EQ(g.sigma.size(), subsets.size());
                std::vector<int> sigma_of(subsets.size());
                for (std::size_t s = 0; s < subsets.size(); ++s) {
                    std::vector<int> coords;
                    for (int c = 0; c <= n; ++c) {
                        if (subsets[s] >> c & 1u) coords.push_back(c);
                    }
                    sigma_of[s] = g.index_of(GeometricObject{{Subspace::coordinate(coords, n + 1, p)}});
                    ASSERT_GE(sigma_of[s], 0);
                    EXPECT_TRUE(std::binary_search(g.sigma.begin(), g.sigma.end(), sigma_of[s]));
                }
                for (std::size_t a = 0; a < subsets.size(); ++a) {
                    for (std::size_t b = 0; b < subsets.size(); ++b) {
                        EXPECT_EQ(g.adjacent(sigma_of[a], sigma_of[b]), kneser.adjacent(static_cast<int>(a), static_cast<int>(b)));
                    }
                }
            }
        }
    }
}

TEST(ProjectiveKneser, LargeTypesAreDualized)
{
    // planes of PG(3,2) meet pairwise, but opposite planes are disjoint in the dual
    const auto g = build_projective_kneser(3, 3, 2);
    EXPECT_EQ(g.order(), 15);
    EXPECT_TRUE(g.graph.is_regular(14));
    const auto h = build_projective_kneser(4, 3, 2);
    EXPECT_EQ(h.order(), build_projective_kneser(4, 2, 2).order());
    EXPECT_TRUE(h.sigma_graph().is_regular(3));
}

TEST(ProjectiveKneser, VertexCountsMatchGaussianBinomials)
{
    for (int n = 1; n <= 4; ++n) {
        for (int i = 1; i <= n; ++i) {
            const auto g = build_projective_kneser(n, i, 2);
            EXPECT_EQ(static_cast<long long>(g.order()), gaussian_binomial(n + 1, i, 2));
            expect_symmetric_irreflexive(g);
        }
    }
}

TEST(FlagKneser, PointLineFlagsOfThePlane)
{
    const auto g = build_flag_kneser_A(2, {1, 2}, 2);
    EXPECT_EQ(g.order(), 21);
    EXPECT_EQ(g.sigma.size(), 6u);
    EXPECT_TRUE(g.sigma_graph().is_regular(1));
    expect_symmetric_irreflexive(g);
    // (i, N\j) ~ (j, N\i)
    for (int v : g.sigma) {
        const auto& f = g.vertices[static_cast<std::size_t>(v)];
        const int w = g.sigma_graph().neighbours(static_cast<int>(std::lower_bound(g.sigma.begin(), g.sigma.end(), v) - g.sigma.begin())).next(0);
        const auto& h = g.vertices[static_cast<std::size_t>(g.sigma[static_cast<std::size_t>(w)])];
        EXPECT_EQ(intersection_dim(f.flag[0], h.flag[1]), 0);
        EXPECT_EQ(intersection_dim(h.flag[0], f.flag[1]), 0);
    }
}

TEST(FlagKneser, PointHyperplaneAdjacencyIsNonIncidence)
{
    const auto g = build_flag_kneser_A(3, {1, 3}, 2);
    EXPECT_EQ(g.order(), 15 * 7);
    EXPECT_EQ(g.sigma.size(), 12u);
    for (int a = 0; a < g.order(); a += 7) {
        for (int b = 0; b < g.order(); ++b) {
            const auto& x = g.vertices[static_cast<std::size_t>(a)];
            const auto& y = g.vertices[static_cast<std::size_t>(b)];
            const bool want = !y.flag[1].contains(x.flag[0]) && !x.flag[1].contains(y.flag[0]);
            EXPECT_EQ(g.adjacent(a, b), want);
        }
    }
    EXPECT_TRUE(g.sigma_graph().is_regular(1));
}

TEST(FlagKneser, WitnessFlagsAreAdjacent)
{
    const int d = 5;
    const auto u = unit_sum({1, 2}, d);
    const auto v = unit_sum({1, 5}, d);
    const GeometricObject f{{Subspace::span({u, unit_sum({3}, d)}, d, 2), Subspace::span({u, unit_sum({3}, d), unit_sum({5}, d)}, d, 2)}};
    const GeometricObject f2{{Subspace::span({v, unit_sum({4}, d)}, d, 2), Subspace::span({v, unit_sum({4}, d), unit_sum({2}, d)}, d, 2)}};
    const auto g = build_flag_kneser_A(4, {2, 3}, 2);
    const int a = g.index_of(f);
    const int b = g.index_of(f2);
    ASSERT_GE(a, 0);
    ASSERT_GE(b, 0);
    EXPECT_TRUE(g.adjacent(a, b));
    for (int x = 0; x < g.order(); ++x) EXPECT_FALSE(g.adjacent(x, x));
    EXPECT_EQ(g.order(), static_cast<int>(gaussian_binomial(5, 3, 2) * gaussian_binomial(3, 2, 2)));
}

TEST(FlagKneser, NonSelfOppositeTypesAreRejectedUnlessAllowed)
{
    EXPECT_THROW(build_flag_kneser_A(3, {1, 2}, 2), UsageError);
    const auto g = build_flag_kneser_A(3, {1, 2}, 2, true);
    EXPECT_EQ(g.order(), 15 * 7);
    expect_symmetric_irreflexive(g);
}

TEST(PolarKneser, D4LinesApartmentIsAMatching)
{
    const auto g = build_polar_kneser(Family::D, 4, 2, 2);
    EXPECT_EQ(g.order(), 1575);
    EXPECT_EQ(g.sigma.size(), 24u);
    EXPECT_TRUE(g.sigma_graph().is_regular(1));
    expect_symmetric_irreflexive(g);
    // {s,t} ~ {s',t'}
    for (int v : g.sigma) {
        const auto& x = g.vertices[static_cast<std::size_t>(v)].top();
        std::vector<int> partner;
        for (int c : x.pivots()) partner.push_back(c ^ 1);
        std::sort(partner.begin(), partner.end());
        const int w = g.index_of(GeometricObject{{Subspace::coordinate(partner, 8, 2)}});
        EXPECT_TRUE(g.adjacent(v, w));
    }
}

TEST(PolarKneser, PerpMeetIsReflexiveOnD4Lines)
{
    const Form q = Form::hyperbolic(4, 2);
    const auto lines = enumerate_singular_subspaces(q, 2);
    std::vector<Subspace> perps;
    for (const auto& l : lines) perps.push_back(perp(l, q));
    for (std::size_t a = 0; a < lines.size(); ++a) {
        for (std::size_t b = a + 1; b < lines.size(); ++b) {
            ASSERT_EQ(intersection_dim(perps[a], lines[b]) == 0, intersection_dim(lines[a], perps[b]) == 0);
        }
    }
}

TEST(PolarKneser, SymplecticPoints)
{
    const auto g = build_polar_kneser(Family::C, 3, 1, 2);
    EXPECT_EQ(g.order(), 63);
    EXPECT_EQ(g.sigma.size(), 6u);
    EXPECT_TRUE(g.sigma_graph().is_regular(1));
    // noncollinearity graph of W(5,2): each point is collinear with 2 + 2*2*... = 30 others
    EXPECT_TRUE(g.graph.is_regular(32));
}

TEST(PolarKneser, MaximalSpacesOfOneClassAreAdjacentIffDisjoint)
{
    for (auto selector : {DSelector::plus, DSelector::minus}) {
        const auto g = build_polar_kneser(Family::D, 4, 4, 2, selector);
        EXPECT_EQ(g.order(), 135);
        EXPECT_EQ(g.sigma.size(), 8u);
        for (int a = 0; a < g.order(); ++a) {
            for (int b = 0; b < g.order(); ++b) {
                EXPECT_EQ(g.adjacent(a, b), intersection_dim(g.vertices[static_cast<std::size_t>(a)].top(), g.vertices[static_cast<std::size_t>(b)].top()) == 0);
            }
        }
    }
    const auto plus = build_polar_kneser(Family::D, 4, 4, 2, DSelector::plus);
    EXPECT_GE(plus.index_of(GeometricObject{{Subspace::coordinate({0, 2, 4, 6}, 8, 2)}}), 0);
    const auto minus = build_polar_kneser(Family::D, 4, 4, 2, DSelector::minus);
    EXPECT_LT(minus.index_of(GeometricObject{{Subspace::coordinate({0, 2, 4, 6}, 8, 2)}}), 0);
}

TEST(PolarKneser, ApartmentValencyOne)
{
    for (const BuildingSpec& spec : {BuildingSpec{Family::C, 3, {3}, 3}, BuildingSpec{Family::B, 3, {2}, 3}, BuildingSpec{Family::D, 3, {2, 3}, 2},
                                     BuildingSpec{Family::D, 5, {2}, 2}, BuildingSpec{Family::C, 4, {4}, 2}}) {
        const auto sigma = build_sigma(spec);
        EXPECT_EQ(sigma.order(), apartment_size(spec)) << spec.label();
        EXPECT_TRUE(sigma.graph.is_regular(1)) << spec.label();
    }
    EXPECT_EQ(apartment_size(BuildingSpec{Family::D, 5, {2}, 2}), 2 * 5 * 4);
}

TEST(PolarKneser, VertexCountsMatchBruteForceFilter)
{
    struct Case {
        Family family;
        int n, k, p;
    };
    for (const Case& c : {Case{Family::C, 2, 1, 3}, Case{Family::C, 2, 2, 3}, Case{Family::C, 3, 2, 2}, Case{Family::D, 3, 2, 3},
                          Case{Family::B, 2, 1, 3}, Case{Family::B, 2, 2, 3}, Case{Family::B, 3, 1, 3}, Case{Family::D, 3, 1, 2}}) {
        const auto g = build_polar_kneser(c.family, c.n, c.k, c.p);
        const Form form = *standard_form(g.spec);
        EXPECT_EQ(static_cast<std::size_t>(g.order()), filtered_count(form, c.k)) << g.spec.label() << " p=" << c.p;
        expect_symmetric_irreflexive(g);
    }
}

TEST(D4Planes, WitnessPlanesAreAdjacentVertices)
{
    const int d = 8;
    // hyperbolic index i -> coordinate 2(i-1), i' -> 2(i-1)+1
    const Subspace pi = Subspace::span({ones({0, 2}, d), ones({1, 3}, d), ones({6}, d)}, d, 2);
    const Subspace pi2 = Subspace::span({ones({1, 4}, d), ones({0, 5}, d), ones({7}, d)}, d, 2);
    const auto g = build_d4_planes(2);
    // each plane lies on one maximal space of each class: 270 * 15 / 2
    EXPECT_EQ(g.order(), 2025);
    const int a = g.index_of(GeometricObject{{pi}});
    const int b = g.index_of(GeometricObject{{pi2}});
    ASSERT_GE(a, 0);
    ASSERT_GE(b, 0);
    EXPECT_TRUE(g.adjacent(a, b));
    EXPECT_EQ(g.sigma.size(), 32u);
    EXPECT_TRUE(g.sigma_graph().is_regular(1));
    const Subspace e4 = Subspace::coordinate({6}, d, 2);
    for (int v : g.sigma) {
        if (g.vertices[static_cast<std::size_t>(v)].top().contains(e4)) EXPECT_FALSE(g.adjacent(a, v));
    }
}

TEST(G2Points, AliasOfB3Points)
{
    const auto g = g2_points(3);
    const auto b = build_polar_kneser(Family::B, 3, 1, 3);
    EXPECT_EQ(g.order(), 364);
    EXPECT_EQ(g.spec.label(), "G_{2,1}");
    EXPECT_EQ(g.vertices, b.vertices);
    EXPECT_EQ(g.graph, b.graph);
    EXPECT_EQ(g.sigma, b.sigma);
    EXPECT_TRUE(g.sigma_graph().is_regular(1));
    EXPECT_EQ(g.sigma.size(), 6u);
    EXPECT_THROW(g2_points(2), UsageError);
}

TEST(BuildingSpec, ValidationErrors)
{
    EXPECT_THROW(build(BuildingSpec{Family::B, 3, {1}, 2}), UsageError);
    EXPECT_THROW(build(BuildingSpec{Family::A, 3, {2}, 4}), UsageError);
    EXPECT_THROW(build(BuildingSpec{Family::D, 4, {1, 3}, 2}), UsageError);
    EXPECT_THROW(build(BuildingSpec{Family::C, 3, {1, 3}, 2}), UsageError);
    EXPECT_THROW(build(BuildingSpec{Family::A, 3, {}, 2}), UsageError);
    EXPECT_THROW(build_polar_kneser(Family::C, 3, 4, 2), UsageError);
    EXPECT_THROW(build_polar_kneser(Family::A, 3, 1, 2), UsageError);
    EXPECT_THROW(build(BuildingSpec{Family::A, 16, {1}, 2}), UsageError);
}

TEST(BuildingSpec, Labels)
{
    EXPECT_EQ((BuildingSpec{Family::D, 4, {2}, 2}).label(), "D_{4,2}");
    EXPECT_EQ((BuildingSpec{Family::A, 4, {2, 3}, 2}).label(), "A_{4,{2,3}}");
    EXPECT_EQ((BuildingSpec{Family::D, 4, {4}, 2, DSelector::minus}).label(), "D_{4,4}-");
}

TEST(PolarKneser, OddRankMaximalSpacesAreAdjacentWhenMeetingInAPoint)
{
    // one class of maximal spaces of Q+(5,q) is the point set of PG(3,q): any two distinct ones are opposite
    for (int p : {2, 3}) {
        const auto g = build_polar_kneser(Family::D, 3, 3, p);
        EXPECT_EQ(static_cast<long long>(g.order()), gaussian_binomial(4, 1, p));
        EXPECT_TRUE(g.graph.is_regular(g.order() - 1));
        EXPECT_EQ(g.sigma.size(), 4u);
    }
}

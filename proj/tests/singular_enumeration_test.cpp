// Cross-validates the pruned singular-subspace enumerator against a plain
// filter of all k-subspaces, for every standard form with d <= 8, k <= 4.
#include <gtest/gtest.h>

#include <vector>

#include "kneserlab/enumerate.hpp"

using namespace kneserlab;

namespace {

std::vector<Subspace> brute_force(const Form& form, int k)
{
    std::vector<Subspace> out;
    const int d = form.ambient();
    for_each_rref(d, k, form.modulus(), [&](const Matrix& m) {
        for (int i = 0; i < k; ++i) {
            if (form.value(m.row(i)) != 0) return;
            for (int j = i + 1; j < k; ++j) {
                if (form.bilinear(m.row(i), m.row(j)) != 0) return;
            }
        }
        out.push_back(Subspace::from_canonical(m));
    });
    std::sort(out.begin(), out.end());
    return out;
}

void check_form(const Form& form, const std::string& name)
{
    for (int k = 0; k <= std::min(4, form.ambient()); ++k) {
        const auto pruned = enumerate_singular_subspaces(form, k);
        const auto filtered = brute_force(form, k);
        EXPECT_EQ(pruned, filtered) << name << " k=" << k;
        for (const auto& s : pruned) ASSERT_TRUE(is_totally_singular(s, form));
    }
}

} // namespace

TEST(SingularEnumeration, MatchesBruteForceFilterOverF2)
{
    for (int n = 1; n <= 4; ++n) {
        check_form(Form::hyperbolic(n, 2), "D" + std::to_string(n));
        check_form(Form::symplectic(n, 2), "C" + std::to_string(n));
    }
}

TEST(SingularEnumeration, MatchesBruteForceFilterOverF3)
{
    for (int n = 1; n <= 4; ++n) {
        check_form(Form::hyperbolic(n, 3), "D" + std::to_string(n));
        check_form(Form::symplectic(n, 3), "C" + std::to_string(n));
        if (2 * n + 1 <= 8) check_form(Form::parabolic(n, 3), "B" + std::to_string(n));
    }
}

TEST(SingularEnumeration, KnownPolarSpaceSizes)
{
    // t.s. lines of Q+(7,2): 135 points * 35 points of the Q+(5,2) quotient / 3 points per line
    EXPECT_EQ(enumerate_singular_subspaces(Form::hyperbolic(4, 2), 2).size(), 1575u);
    // maximal spaces of Q+(7,2): two classes of 135
    EXPECT_EQ(enumerate_singular_subspaces(Form::hyperbolic(4, 2), 4).size(), 270u);
    // maximal t.i. planes of W(5,3): (q+1)(q^2+1)(q^3+1)
    EXPECT_EQ(enumerate_singular_subspaces(Form::symplectic(3, 3), 3).size(), 1120u);
    EXPECT_TRUE(enumerate_singular_subspaces(Form::symplectic(2, 3), 3).empty());
}

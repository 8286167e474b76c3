#pragma once

#include <cctype>
#include <fstream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "coclique.hpp"

namespace kneserlab {

/// A known counterexample failed to verify: the geometry kernel disagrees with a construction it must reproduce.
class FixtureIntegrityError : public std::runtime_error {
public:
    FixtureIntegrityError(std::string fixture, std::string assertion)
        : std::runtime_error(fixture + ": " + assertion), fixture_(std::move(fixture)), assertion_(std::move(assertion))
    {
    }
    const std::string& fixture() const { return fixture_; }
    const std::string& assertion() const { return assertion_; }

private:
    std::string fixture_;
    std::string assertion_;
};

/// How `e<k>` names a coordinate: plain (e1..ed) or hyperbolic (e1, e1', e2, e2', ...).
enum class Indexing { plain, hyperbolic };

/// Object given as members, each a list of vectors written like "e1+e3-e5" or "e1'+e3".
using LiteralObject = std::vector<std::vector<std::string>>;

struct Fixture {
    std::string name;
    BuildingSpec spec;
    Indexing indexing = Indexing::plain;
    LiteralObject x;
    LiteralObject y;
    /// The compatible maximal coclique of Σ when given explicitly; searched for otherwise.
    std::optional<std::vector<LiteralObject>> coclique;
    /// Expected number of Σ-vertices adjacent to x or y, when asserted.
    std::optional<int> sigma_touching;

    friend bool operator==(const Fixture&, const Fixture&) = default;
};

struct FixtureReport {
    std::string name;
    std::string spec;
    int p = 0;
    LiteralObject x;
    LiteralObject y;
    std::vector<LiteralObject> coclique;
    std::optional<int> sigma_touching;
    bool certified = false;

    friend bool operator==(const FixtureReport&, const FixtureReport&) = default;
};

inline std::vector<long long> parse_literal_vector(const std::string& text, int d, Indexing indexing)
{
    std::vector<long long> v(static_cast<std::size_t>(d), 0);
    std::size_t i = 0;
    auto fail = [&](const std::string& why) { throw UsageError("cannot parse vector \"" + text + "\": " + why); };
    if (text.empty()) fail("empty");
    while (i < text.size()) {
        long long sign = 1;
        if (text[i] == '+' || text[i] == '-') {
            sign = text[i] == '-' ? -1 : 1;
            ++i;
        } else if (i != 0) {
            fail("expected + or -");
        }
        long long coeff = 1;
        if (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
            coeff = 0;
            while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) coeff = coeff * 10 + (text[i++] - '0');
        }
        if (i >= text.size() || text[i] != 'e') fail("expected e<index>");
        ++i;
        int k = 0;
        if (i >= text.size() || !std::isdigit(static_cast<unsigned char>(text[i]))) fail("missing index");
        while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) k = k * 10 + (text[i++] - '0');
        bool prime = false;
        if (i < text.size() && text[i] == '\'') {
            prime = true;
            ++i;
        }
        int coord = 0;
        if (indexing == Indexing::plain) {
            if (prime) fail("primed index in plain indexing");
            coord = k - 1;
        } else {
            coord = 2 * (k - 1) + (prime ? 1 : 0);
        }
        if (k < 1 || coord >= d) fail("index out of range");
        v[static_cast<std::size_t>(coord)] += sign * coeff;
    }
    return v;
}

inline std::string format_literal_vector(const std::vector<std::uint8_t>& v, int p, Indexing indexing)
{
    std::string s;
    for (std::size_t c = 0; c < v.size(); ++c) {
        if (!v[c]) continue;
        int coeff = v[c];
        std::string sign = s.empty() ? "" : "+";
        if (coeff == p - 1 && p > 2) {
            sign = "-";
            coeff = 1;
        }
        s += sign + (coeff == 1 ? "" : std::to_string(coeff)) + "e";
        if (indexing == Indexing::plain) {
            s += std::to_string(c + 1);
        } else {
            s += std::to_string(c / 2 + 1) + (c % 2 ? "'" : "");
        }
    }
    return s.empty() ? "0" : s;
}

inline GeometricObject parse_literal_object(const LiteralObject& lit, const BuildingSpec& spec, Indexing indexing)
{
    GeometricObject obj;
    for (const auto& member : lit) {
        std::vector<std::vector<long long>> rows;
        for (const auto& text : member) rows.push_back(parse_literal_vector(text, spec.ambient(), indexing));
        obj.flag.push_back(Subspace::span(rows, spec.ambient(), spec.p));
    }
    return obj;
}

inline LiteralObject format_literal_object(const GeometricObject& obj, Indexing indexing)
{
    LiteralObject lit;
    for (const auto& member : obj.flag) {
        std::vector<std::string> rows;
        for (int r = 0; r < member.dim(); ++r) {
            const auto row = member.row(r);
            rows.push_back(format_literal_vector(std::vector<std::uint8_t>(row.begin(), row.end()), member.modulus(), indexing));
        }
        lit.push_back(std::move(rows));
    }
    return lit;
}

inline Fixture fixture_b3_2(int p = 3)
{
    Fixture f{"B3_2", BuildingSpec{Family::B, 3, {2}, p}, Indexing::plain, {{"e1", "e3+e4+e7"}}, {{"e2", "e5+e6+e7"}}, std::nullopt, std::nullopt};
    std::vector<LiteralObject> c;
    for (auto [a, b] : std::vector<std::pair<int, int>>{{1, 3}, {1, 4}, {2, 5}, {2, 6}, {3, 5}, {3, 6}}) {
        c.push_back({{"e" + std::to_string(a), "e" + std::to_string(b)}});
    }
    f.coclique = c;
    return f;
}

inline Fixture fixture_c3_3(int p = 3)
{
    Fixture f{"C3_3", BuildingSpec{Family::C, 3, {3}, p}, Indexing::plain, {{"e1", "e3+e6", "e4+e5"}}, {{"e1+e3-e5", "e2+e6", "e4+e6"}},
              std::nullopt, std::nullopt};
    std::vector<LiteralObject> c;
    for (auto [a, b, d] : std::vector<std::tuple<int, int, int>>{{1, 3, 5}, {1, 4, 6}, {2, 3, 6}, {2, 4, 5}}) {
        c.push_back({{"e" + std::to_string(a), "e" + std::to_string(b), "e" + std::to_string(d)}});
    }
    f.coclique = c;
    return f;
}

inline Fixture fixture_d4_34(int p = 2)
{
    return Fixture{"D4_34", BuildingSpec{Family::D, 4, {3, 4}, p}, Indexing::hyperbolic, {{"e1+e2", "e1'+e2'", "e4"}},
                   {{"e1'+e3", "e1+e3'", "e4'"}}, std::nullopt, std::nullopt};
}

/// Flags of type {i, n-i} in an n-dimensional space (diagram A_{n-1}), 1 < i < n/2.
inline Fixture fixture_a_flags(int n = 5, int i = 2, int p = 2)
{
    if (!(1 < i && 2 * i < n)) throw UsageError("A_flags(n,i) requires 1 < i < n/2");
    auto e = [](int k) { return "e" + std::to_string(k); };
    const std::string u = "e1+e2";
    const std::string v = "e1+" + e(n);
    std::vector<std::string> a{u}, a2{v}, b{u}, b2{v};
    for (int k = 3; k <= i + 1; ++k) a.push_back(e(k));
    for (int k = n - 1; k >= n - i + 1; --k) a2.push_back(e(k));
    for (int k = 3; k <= n - i; ++k) b.push_back(e(k));
    b.push_back(e(n));
    for (int k = n - 1; k >= i + 2; --k) b2.push_back(e(k));
    b2.push_back(e(2));
    Fixture f{"A_flags", BuildingSpec{Family::A, n - 1, {i, n - i}, p}, Indexing::plain, {a, b}, {a2, b2}, std::nullopt, 4};
    return f;
}

/// The four counterexamples at their default characteristics.
inline std::vector<Fixture> default_fixtures() { return {fixture_b3_2(), fixture_c3_3(), fixture_d4_34(), fixture_a_flags()}; }

inline Fixture fixture_by_name(const std::string& name, std::optional<int> p = std::nullopt)
{
    Fixture f;
    if (name == "B3_2") {
        f = fixture_b3_2();
    } else if (name == "C3_3") {
        f = fixture_c3_3();
    } else if (name == "D4_34") {
        f = fixture_d4_34();
    } else if (name == "A_flags") {
        f = fixture_a_flags();
    } else {
        throw UsageError("unknown fixture " + name + " (expected B3_2, C3_3, D4_34 or A_flags)");
    }
    if (p) f.spec.p = *p;
    return f;
}

inline void check_fixture_characteristic(const Fixture& f)
{
    if ((f.name == "B3_2" || f.name == "C3_3") && f.spec.p % 2 == 0) throw UsageError(f.name + " needs odd p");
    if (f.name == "D4_34" && f.spec.p != 2) throw UsageError("D4_34 is a counterexample in characteristic 2 only");
    f.spec.validate();
}

/// Certifies that the fixture's witnesses violate unique coclique extension:
/// both are vertices, they are adjacent, and some maximal coclique C of Σ has
/// both in its extension set.
inline FixtureReport verify_nonexample(const Fixture& f)
{
    check_fixture_characteristic(f);
    auto require = [&](bool ok, const std::string& what) {
        if (!ok) throw FixtureIntegrityError(f.name, what);
    };
    GeometricObject x;
    GeometricObject y;
    try {
        x = parse_literal_object(f.x, f.spec, f.indexing);
        y = parse_literal_object(f.y, f.spec, f.indexing);
    } catch (const UsageError& e) {
        throw FixtureIntegrityError(f.name, e.what());
    }
    require(is_vertex(f.spec, x), "first witness is not a vertex of " + f.spec.label());
    require(is_vertex(f.spec, y), "second witness is not a vertex of " + f.spec.label());
    const Opposition opp(f.spec);
    require(opp(x, y), "witnesses are not adjacent");

    const KneserGraph sigma = build_sigma(f.spec);
    auto touches = [&](int v) {
        const auto& s = sigma.vertices[static_cast<std::size_t>(v)];
        return opp(s, x) || opp(s, y);
    };

    FixtureReport report;
    report.name = f.name;
    report.spec = f.spec.label();
    report.p = f.spec.p;
    report.x = f.x;
    report.y = f.y;

    if (f.sigma_touching) {
        std::vector<int> touching;
        for (int v = 0; v < sigma.order(); ++v) {
            if (touches(v)) touching.push_back(v);
        }
        require(static_cast<int>(touching.size()) == *f.sigma_touching,
                std::to_string(touching.size()) + " apartment vertices adjacent to a witness, expected " + std::to_string(*f.sigma_touching));
        require(is_coclique(sigma.graph, touching), "apartment vertices adjacent to a witness contain an edge");
        report.sigma_touching = static_cast<int>(touching.size());
    }

    if (f.coclique) {
        std::vector<int> members;
        for (const auto& lit : *f.coclique) {
            GeometricObject c;
            try {
                c = parse_literal_object(lit, f.spec, f.indexing);
            } catch (const UsageError& e) {
                throw FixtureIntegrityError(f.name, e.what());
            }
            const int idx = sigma.index_of(c);
            require(idx >= 0, "coclique member " + c.to_string() + " is not an apartment vertex");
            members.push_back(idx);
        }
        std::sort(members.begin(), members.end());
        require(std::adjacent_find(members.begin(), members.end()) == members.end(), "coclique has repeated members");
        require(is_coclique(sigma.graph, members), "given C is not a coclique");
        for (int v = 0; v < sigma.order(); ++v) {
            if (std::binary_search(members.begin(), members.end(), v)) continue;
            require(std::any_of(members.begin(), members.end(), [&](int c) { return sigma.adjacent(c, v); }), "given C is not maximal in the apartment");
        }
        for (int c : members) require(!touches(c), "a member of C is adjacent to a witness");
        report.coclique = *f.coclique;
    } else {
        std::optional<Coclique> found;
        if (sigma.graph.is_regular(1)) {
            // one endpoint from every edge of the matching, avoiding the witnesses' neighbours
            Coclique c;
            bool ok = true;
            for (int v = 0; v < sigma.order() && ok; ++v) {
                const int w = sigma.graph.neighbours(v).next(0);
                if (w < v) continue;
                if (!touches(v)) {
                    c.members.push_back(v);
                } else if (!touches(w)) {
                    c.members.push_back(w);
                } else {
                    ok = false;
                }
            }
            std::sort(c.members.begin(), c.members.end());
            if (ok) found = c;
        } else {
            for (const auto& c : maximal_cocliques_sigma(sigma)) {
                if (std::none_of(c.members.begin(), c.members.end(), touches)) {
                    found = c;
                    break;
                }
            }
        }
        require(found.has_value(), "no maximal coclique of the apartment avoids both witnesses");
        for (int v : found->members) report.coclique.push_back(format_literal_object(sigma.vertices[static_cast<std::size_t>(v)], f.indexing));
    }
    report.certified = true;
    return report;
}

// JSON

inline nlohmann::json fixture_to_json(const Fixture& f)
{
    nlohmann::json j;
    j["name"] = f.name;
    j["family"] = std::string(1, family_letter(f.spec.family));
    j["rank"] = f.spec.rank;
    j["types"] = f.spec.types;
    j["p"] = f.spec.p;
    j["indexing"] = f.indexing == Indexing::plain ? "plain" : "hyperbolic";
    j["x"] = f.x;
    j["y"] = f.y;
    j["coclique"] = f.coclique ? nlohmann::json(*f.coclique) : nlohmann::json(nullptr);
    j["sigma_touching"] = f.sigma_touching ? nlohmann::json(*f.sigma_touching) : nlohmann::json(nullptr);
    return j;
}

inline Fixture fixture_from_json(const nlohmann::json& j)
{
    Fixture f;
    f.name = j.at("name").get<std::string>();
    f.spec.family = parse_family(j.at("family").get<std::string>());
    f.spec.rank = j.at("rank").get<int>();
    f.spec.types = j.at("types").get<std::vector<int>>();
    f.spec.p = j.at("p").get<int>();
    const auto indexing = j.at("indexing").get<std::string>();
    if (indexing != "plain" && indexing != "hyperbolic") throw std::invalid_argument("indexing must be plain or hyperbolic");
    f.indexing = indexing == "plain" ? Indexing::plain : Indexing::hyperbolic;
    f.x = j.at("x").get<LiteralObject>();
    f.y = j.at("y").get<LiteralObject>();
    if (!j.at("coclique").is_null()) f.coclique = j.at("coclique").get<std::vector<LiteralObject>>();
    if (!j.at("sigma_touching").is_null()) f.sigma_touching = j.at("sigma_touching").get<int>();
    return f;
}

inline nlohmann::json fixtures_to_json(const std::vector<Fixture>& fixtures)
{
    nlohmann::json j;
    j["schema"] = 1;
    j["fixtures"] = nlohmann::json::array();
    for (const auto& f : fixtures) j["fixtures"].push_back(fixture_to_json(f));
    return j;
}

/// Reads a golden fixture file; any parse or schema problem is a fixture-integrity error.
inline std::vector<Fixture> load_fixtures(const std::string& path)
{
    std::ifstream in(path);
    if (!in) throw FixtureIntegrityError("golden", "cannot open " + path);
    try {
        const auto j = nlohmann::json::parse(in);
        if (j.at("schema").get<int>() != 1) throw std::invalid_argument("unsupported schema");
        std::vector<Fixture> out;
        for (const auto& item : j.at("fixtures")) out.push_back(fixture_from_json(item));
        return out;
    } catch (const FixtureIntegrityError&) {
        throw;
    } catch (const std::exception& e) {
        throw FixtureIntegrityError("golden", std::string("malformed fixture file ") + path + ": " + e.what());
    }
}

} // namespace kneserlab

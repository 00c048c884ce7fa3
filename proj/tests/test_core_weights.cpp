#include <doctest.h>

#include <numeric>
#include <set>

#include "bpfusion/core_weights.hpp"

using namespace bpf;

namespace {

std::vector<std::pair<int, int>> coprime_levels(int lo, int hi)
{
    std::vector<std::pair<int, int>> out;
    for (int u = lo; u <= hi; ++u)
        for (int v = lo; v <= hi; ++v)
            if (std::gcd(u, v) == 1) out.push_back({u, v});
    return out;
}

// brute force over lambda^F in P^{v-1} with lambda^F_0 != 0, times P^{u-3}
std::size_t brute_surv_count(int u, int v)
{
    std::size_t fin = 0, aff = 0;
    for (int a = 1; a <= v - 1; ++a)
        for (int b = 0; a + b <= v - 1; ++b) ++fin;
    for (int a = 0; a <= u - 3; ++a)
        for (int b = 0; a + b <= u - 3; ++b) ++aff;
    return fin * aff;
}

}  // namespace

TEST_CASE("level data at the worked examples")
{
    auto p = level_params(4, 3);
    CHECK(p.k == Rational(-5, 3));
    CHECK(p.c_bp == Rational(-1));
    CHECK(p.kappa == Rational(-1, 18));
    auto q = level_params(3, 4);
    CHECK(q.k == Rational(-9, 4));
    CHECK(q.c_bp == Rational(-23, 2));
    auto r = level_params(5, 3);
    CHECK(r.k == Rational(-4, 3));
    CHECK(r.kappa == Rational(1, 18));
    CHECK(r.c_bp == Rational(3, 5));
}

TEST_CASE("central charges add up")
{
    for (auto [u, v] : coprime_levels(3, 12)) {
        auto p = level_params(u, v);
        CHECK(p.c_bp == p.c_pi + p.c_w3);
    }
}

TEST_CASE("degenerate levels are rejected")
{
    CHECK_THROWS_AS(level_params(2, 3), DomainError);
    CHECK_THROWS_AS(level_params(3, 2), DomainError);
    CHECK_THROWS_AS(level_params(6, 4), DomainError);
    CHECK_THROWS_AS(level_params(3, 3), DomainError);
}

TEST_CASE("module counts")
{
    CHECK(enumerate_surv(level_params(4, 3)).size() == 9);
    CHECK(enumerate_surv(level_params(3, 4)).size() == 6);
    CHECK(enumerate_surv(level_params(5, 3)).size() == 18);
    CHECK(enumerate_infwts(level_params(4, 3)).size() == 1);
    CHECK(enumerate_infwts(level_params(3, 4)).size() == 1);
    auto orbs = enumerate_infwts(level_params(5, 3));
    REQUIRE(orbs.size() == 2);
    std::set<std::array<int, 3>> rs;
    for (const auto& o : orbs)
        for (const auto& m : o.members)
            if (m.s == std::array<int, 3>{0, 0, 0}) rs.insert(m.r);
    CHECK(rs.count({2, 0, 0}) == 1);
    CHECK(rs.count({1, 1, 0}) == 1);
}

TEST_CASE("enumeration agrees with brute force")
{
    for (auto [u, v] : coprime_levels(3, 8)) {
        auto p = level_params(u, v);
        CHECK(enumerate_surv(p).size() == brute_surv_count(u, v));
        CHECK(enumerate_infwts_labels(p).size() == 3 * enumerate_infwts(p).size());
    }
}

TEST_CASE("sigma cycles labels")
{
    RSLabel a{{0, 1, 0}, {0, 0, 0}};
    CHECK(sigma(a) == RSLabel{{0, 0, 1}, {0, 0, 0}});
    RSLabel b{{1, 2, 3}, {4, 5, 6}};
    CHECK(sigma(b, 3) == b);
    CHECK(sigma(sigma(b), -1) == b);
    auto o = orbit_of(RSLabel{{1, 1, 0}, {0, 0, 0}});
    std::set<RSLabel> members(o.members.begin(), o.members.end());
    CHECK(members == std::set<RSLabel>{{{1, 1, 0}, {0, 0, 0}}, {{0, 1, 1}, {0, 0, 0}}, {{1, 0, 1}, {0, 0, 0}}});
    CHECK(o.rep == *members.begin());
}

TEST_CASE("sigma acts freely on the infinite-type set")
{
    for (auto [u, v] : coprime_levels(3, 8)) {
        auto p = level_params(u, v);
        for (const auto& l : enumerate_infwts_labels(p)) CHECK(sigma(l) != l);
    }
}

TEST_CASE("highest-weight data")
{
    auto p = level_params(4, 3);
    auto d = hw_data(p, {{0, 1, 0}, {1, -1, 0}});
    CHECK(d.j == Rational(1, 3));
    CHECK(d.delta == Rational(1, 2));
    auto e = hw_data(p, {{0, 0, 1}, {0, 0, 0}});
    CHECK(e.j == Rational(-7, 9));
    CHECK(e.delta == Rational(5, 18));
    for (auto [u, v] : coprime_levels(3, 9)) {
        auto q = level_params(u, v);
        auto vac = hw_data(q, {{u - 3, 0, 0}, {v - 2, -1, 0}});
        CHECK(vac.j == Rational(0));
        CHECK(vac.delta == Rational(0));
    }
    CHECK_THROWS_AS(hw_data(p, {{0, 1, 0}, {0, 0, 1}}), DomainError);
}

TEST_CASE("twisted weights shift by kappa")
{
    for (auto [u, v] : coprime_levels(3, 7)) {
        auto p = level_params(u, v);
        for (const auto& l : enumerate_surv(p)) {
            auto d = hw_data(p, l);
            CHECK(d.j_tw == d.j + p.kappa);
        }
    }
}

TEST_CASE("W3 data")
{
    for (int u : {4, 5, 7, 8}) {
        auto p = level_params(u, 3);
        auto w = w3_data(p, RSLabel{{u - 3, 0, 0}, {0, 0, 0}});
        CHECK(w.delta == Rational(0));
        CHECK(w.w_num == Rational(0));
    }
    auto p = level_params(5, 3);
    CHECK(w3_data(p, RSLabel{{1, 1, 0}, {0, 0, 0}}).delta == Rational(-1, 5));
    CHECK(w3_data(p, RSLabel{{2, 0, 0}, {0, 0, 0}}).delta == Rational(0));
    for (auto [u, v] : coprime_levels(3, 8)) {
        auto q = level_params(u, v);
        for (const auto& o : enumerate_infwts(q)) {
            auto base = w3_data(q, o.rep);
            for (const auto& m : o.members) {
                CHECK(w3_data(q, m).delta == base.delta);
                CHECK(w3_data(q, m).w_num == base.w_num);
            }
            CHECK(w3_data(q, conj_swap(o.rep)).w_num == -base.w_num);
            // twisted conformal weight of the family vs the W3 weight
            for (const auto& m : o.members) CHECK(hw_data_raw(q, m).delta_tw == base.delta + 9 * q.kappa / 4);
        }
    }
}

TEST_CASE("label strings round-trip")
{
    RSLabel a{{1, 0, 2}, {0, -1, 3}};
    CHECK(to_string(a) == "[1,0,2;0,-1,3]");
    CHECK(parse_rslabel(to_string(a)) == a);
    CHECK(parse_rslabel(" [1, 0, 2; 0, -1, 3] ") == a);
    auto o = orbit_of(RSLabel{{1, 1, 0}, {0, 0, 0}});
    CHECK(parse_orbit(to_string(o)).rep == o.rep);
    CHECK_THROWS_AS(parse_rslabel("[1,2;3]"), DomainError);
    CHECK_THROWS_AS(parse_rslabel("garbage"), DomainError);
    CHECK(to_string(Rational(-7, 9)) == "-7/9");
    CHECK(parse_rational("-7/9") == Rational(-7, 9));
    CHECK(frac_mod1(Rational(-1, 3)) == Rational(2, 3));
    CHECK_THROWS_AS(parse_rational("1/0"), DomainError);
    CHECK_THROWS_AS(parse_rational("x"), DomainError);
}

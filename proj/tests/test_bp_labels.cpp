#include <doctest.h>

#include <map>
#include <numeric>
#include <set>

#include "bpfusion/bp_labels.hpp"

using namespace bpf;

namespace {

std::vector<std::pair<int, int>> small_levels()
{
    std::vector<std::pair<int, int>> out;
    for (int u = 3; u <= 7; ++u)
        for (int v = 3; v <= 5; ++v)
            if (std::gcd(u, v) == 1) out.push_back({u, v});
    return out;
}

std::set<Rational> as_set(const std::vector<Rational>& xs) { return {xs.begin(), xs.end()}; }

HalfInt H(int n) { return HalfInt::of(n); }

}  // namespace

TEST_CASE("half-integers")
{
    CHECK(to_string(HalfInt::half(3)) == "3/2");
    CHECK(to_string(HalfInt::half(-1)) == "-1/2");
    CHECK(to_string(H(4)) == "4");
    CHECK(parse_halfint("3/2") == HalfInt::half(3));
    CHECK(parse_halfint("-2") == H(-2));
    CHECK_THROWS_AS(parse_halfint("1/3"), DomainError);
    CHECK_THROWS_AS(HalfInt::half(1).to_int(), DomainError);
}

TEST_CASE("normal forms and flow maps round-trip")
{
    for (auto [u, v] : small_levels()) {
        auto p = level_params(u, v);
        for (const auto& lam : enumerate_surv(p)) {
            Label l = make_hw(p, lam, H(2));
            CHECK(normal_form(p, l.lam).shift == 0);
            auto maps = hw_flow_maps(p, lam);
            CHECK(maps.size() <= 3);
            bool has_identity = false;
            for (const auto& [m, mu] : maps) {
                CHECK(std::abs(m.twice) <= 4);
                CHECK(make_hw(p, mu, H(2)) == spectral_flow(l, m));
                has_identity = has_identity || (m == HalfInt{} && mu == lam);
            }
            CHECK(has_identity);
        }
    }
}

TEST_CASE("orbit types count highest-weight members")
{
    for (auto [u, v] : small_levels()) {
        auto p = level_params(u, v);
        std::map<RSLabel, int> count;
        for (const auto& lam : enumerate_surv(p)) ++count[normal_form(p, lam).leftmost];
        for (const auto& [left, n] : count) {
            CHECK(orbit_type(p, left) == n);
            CHECK(hw_orbit_members(p, left).size() == static_cast<std::size_t>(n));
        }
        CHECK(orbit_type(p, RSLabel{{u - 3, 0, 0}, {v - 2, -1, 0}}) == 3);
        if (v == 3)
            for (const auto& lam : enumerate_surv(p)) CHECK(orbit_type(p, lam) == 3);
    }
    CHECK(orbit_type(level_params(3, 4), RSLabel{{0, 0, 0}, {1, -1, 1}}) == 2);
}

TEST_CASE("spectral flow")
{
    auto p = level_params(4, 3);
    CHECK(make_hw(p, {{1, 0, 0}, {0, -1, 1}}, H(1)) == make_hw(p, {{0, 1, 0}, {1, -1, 0}}));
    Label l = make_hw(p, {{0, 1, 0}, {1, -1, 0}}, H(1));
    CHECK(spectral_flow(l, HalfInt{}) == l);
    for (auto [u, v] : small_levels()) {
        auto q = level_params(u, v);
        for (const auto& lam : enumerate_surv(q)) {
            auto d = hw_data(q, lam);
            auto [j, delta] = flow_weights(q, d.j, d.delta, Rational(1, 2));
            CHECK(j == d.j_tw);
            CHECK(delta == d.delta_tw);
        }
    }
}

TEST_CASE("conjugation")
{
    auto p = level_params(4, 3);
    CHECK(conjugate_hw(p, make_hw(p, {{0, 1, 0}, {1, -1, 0}})) == make_hw(p, {{0, 0, 1}, {1, -1, 0}}));
    for (auto [u, v] : small_levels()) {
        auto q = level_params(u, v);
        Label vac = make_hw(q, {{u - 3, 0, 0}, {v - 2, -1, 0}});
        CHECK(conjugate_hw(q, vac) == vac);
        for (const auto& lam : enumerate_surv(q))
            for (int ell = -2; ell <= 2; ++ell) {
                Label l = make_hw(q, lam, HalfInt::half(ell));
                Label c = conjugate_hw(q, l);
                CHECK(conjugate_hw(q, c) == l);
                CHECK(orbit_type(q, c) == orbit_type(q, l));
            }
        for (const auto& lam : enumerate_surv(q)) {
            RSLabel c{{lam.r[0], lam.r[2], lam.r[1]}, {lam.s[0], lam.s[2] - 1, lam.s[1] + 1}};
            REQUIRE(in_surv(q, c));
            CHECK(hw_data(q, c).j == -hw_data(q, lam).j);
            CHECK(hw_data(q, c).delta == hw_data(q, lam).delta);
        }
    }
}

TEST_CASE("gap charges")
{
    auto p43 = level_params(4, 3);
    for (const auto& o : enumerate_infwts(p43))
        CHECK(as_set(gap_set_twisted(p43, o)) == std::set<Rational>{Rational(1, 6), Rational(1, 2), Rational(5, 6)});
    auto p34 = level_params(3, 4);
    auto o34 = enumerate_infwts(p34).front();
    CHECK(as_set(gap_set_tilde(p34, o34)) == std::set<Rational>{Rational(0), Rational(1, 4), Rational(1, 2)});
    CHECK(gap_charge_tilde(p34, {{0, 0, 0}, {0, 0, 1}}) == Rational(1, 2));
    CHECK(gap_charge_tilde(p34, {{0, 0, 0}, {1, 0, 0}}) == Rational(1, 4));
    CHECK(gap_charge_tilde(p34, {{0, 0, 0}, {0, 1, 0}}) == Rational(0));
    CHECK(is_simple(p34, make_std(p34, Rational(3, 4), o34.rep)));
    CHECK_FALSE(is_simple(p34, make_std(p34, Rational(1, 4), o34.rep, H(5))));
    for (auto [u, v] : small_levels()) {
        auto q = level_params(u, v);
        for (const auto& o : enumerate_infwts(q)) {
            CHECK(as_set(gap_set_tilde(q, o)).size() == 3);
            for (const auto& m : o.members)
                CHECK(frac_mod1(gap_charge_tilde(q, m)) == frac_mod1(j_tw_of(q, m) + q.kappa));
        }
    }
}

TEST_CASE("gap identities at (3,4)")
{
    auto p = level_params(3, 4);
    auto o = enumerate_infwts(p).front().rep;
    auto I = [&](RSLabel l, int ell) { return FormalSum(make_hw(p, l, H(ell))); };
    CHECK(to_simple_basis(p, FormalSum(make_std(p, Rational(1, 2), o))) ==
          I({{0, 0, 0}, {0, 0, 1}}, 1) + I({{0, 0, 0}, {2, -1, 0}}, -1));
    CHECK(to_simple_basis(p, FormalSum(make_std(p, Rational(1, 4), o))) ==
          I({{0, 0, 0}, {1, 0, 0}}, 1) + I({{0, 0, 0}, {1, 0, 0}}, -1));
    CHECK(to_simple_basis(p, FormalSum(make_std(p, Rational(0), o))) ==
          I({{0, 0, 0}, {2, -1, 0}}, 2) + I({{0, 0, 0}, {0, 0, 1}}, 0));
}

TEST_CASE("twisted and tilde conventions")
{
    for (auto [u, v] : small_levels()) {
        auto p = level_params(u, v);
        for (const auto& o : enumerate_infwts(p)) {
            TwistedStd t{HalfInt::half(3), Rational(2, 7), o.rep};
            Label s = tilde_from_twisted(p, t);
            CHECK(s.ell == H(1));
            CHECK(twisted_from_tilde(p, s) == t);
            CHECK(std_charge(p, spectral_flow(s, H(1))) == frac_mod1(std_charge(p, s) + 2 * p.kappa));
        }
    }
}

TEST_CASE("gap decomposition")
{
    auto p = level_params(3, 4);
    auto g = gap_decomposition(p, {{0, 0, 0}, {1, 0, 0}});
    CHECK(g.sub == make_hw(p, {{0, 0, 0}, {1, 0, 0}}, HalfInt::half(1)));
    for (auto [u, v] : small_levels()) {
        auto q = level_params(u, v);
        for (const auto& lam : enumerate_infwts_labels(q)) {
            auto d = gap_decomposition(q, lam);
            FormalSum whole = to_simple_basis(q, FormalSum(tilde_from_twisted(q, d.middle)));
            CHECK(whole == FormalSum(d.sub) + FormalSum(d.quotient));
        }
    }
    CHECK_THROWS_AS(gap_decomposition(p, {{0, 0, 0}, {2, -1, 0}}), DomainError);
}

TEST_CASE("atypical sequences")
{
    for (auto [u, v] : small_levels()) {
        auto p = level_params(u, v);
        std::set<RSLabel> lefts;
        for (const auto& lam : enumerate_surv(p)) lefts.insert(normal_form(p, lam).leftmost);
        for (const auto& left : lefts) {
            auto ses = atypical_ses(p, left);
            CHECK(in_surv(p, ses.sub.lam));
            CHECK(in_surv(p, ses.quotient.lam));
            CHECK((ses.sub_type == 3) == (left.s == std::array<int, 3>{0, v - 4, 1}));
            CHECK(to_simple_basis(p, FormalSum(ses.middle)) == FormalSum(ses.sub) + FormalSum(ses.quotient));
        }
    }
    auto p = level_params(4, 3);
    auto ses = atypical_ses(p, {{1, 0, 0}, {0, -1, 1}});
    CHECK(ses.mu == RSLabel{{1, 0, 0}, {0, 0, 0}});
    CHECK(ses.sub == make_hw(p, {{1, 0, 0}, {0, 0, 0}}, H(1)));
    CHECK(ses.sub_type == 3);
    CHECK_THROWS_AS(atypical_ses(p, {{0, 1, 0}, {1, -1, 0}}), DomainError);
}

TEST_CASE("resolutions at v = 3 follow the period-nine pattern")
{
    for (int u : {4, 5, 7}) {
        auto p = level_params(u, 3);
        int depth = default_depth(p);
        for (const auto& r : std::vector<std::array<int, 3>>{{u - 3, 0, 0}, {1, u - 4, 0}, {0, 1, u - 4}}) {
            RSLabel lam{r, {1, -1, 0}};
            auto res = resolution(p, make_hw(p, lam), depth);
            Rational jr = Rational(r[1] - r[2], 3);
            RSLabel base{r, {0, 0, 0}};
            FormalSum expect;
            for (int n = 0; 9 * n + 1 <= depth + 1; ++n) {
                long long sgn = n % 2 ? -1 : 1;
                if (9 * n + 1 <= depth + 1) expect.add(make_std(p, jr - 2 * p.kappa, base, H(9 * n + 1)), sgn);
                if (9 * n + 4 <= depth + 1) expect.add(make_std(p, jr + p.kappa - Rational(1, 2), base, H(9 * n + 4)), -sgn);
                if (9 * n + 7 <= depth + 1) expect.add(make_std(p, jr + 4 * p.kappa, base, H(9 * n + 7)), sgn);
            }
            CHECK(res.terms == expect);
        }
    }
}

TEST_CASE("type-2 resolution at (3,4)")
{
    auto p = level_params(3, 4);
    int depth = default_depth(p);
    auto res = resolution(p, make_hw(p, {{0, 0, 0}, {1, -1, 1}}), depth);
    auto o = enumerate_infwts(p).front().rep;
    FormalSum expect;
    for (int n = 0; 2 * n <= depth; ++n) expect.add(make_std(p, Rational(1, 4), o, H(2 * n)), n % 2 ? -1 : 1);
    CHECK(res.terms == expect);
}

TEST_CASE("resolutions telescope in the Grothendieck group")
{
    for (auto [u, v] : small_levels()) {
        auto p = level_params(u, v);
        for (const auto& lam : enumerate_surv(p))
            for (int depth : {1, 5, default_depth(p)}) {
                Label l = make_hw(p, lam, H(-1));
                auto res = resolution(p, l, depth);
                for (const auto& [t, c] : res.terms.terms()) CHECK_FALSE(is_simple(p, t));
                FormalSum total = to_simple_basis(p, res.terms);
                total.add(res.remainder, res.remainder_coeff);
                CHECK(total == FormalSum(l));
                CHECK(res.remainder.ell > l.ell + H(depth));
            }
    }
}

TEST_CASE("label grammar round-trips")
{
    for (auto [u, v] : small_levels()) {
        auto p = level_params(u, v);
        for (const auto& lam : enumerate_surv(p))
            for (int tw = -3; tw <= 3; ++tw) {
                Label l = make_hw(p, lam, HalfInt::half(tw));
                CHECK(parse_label(p, to_string(p, l)) == l);
            }
        for (const auto& o : enumerate_infwts(p))
            for (int ell = -2; ell <= 2; ++ell) {
                Label s = make_std(p, Rational(-3, 7), o.members[1], H(ell));
                CHECK(s.j == Rational(4, 7));
                CHECK(parse_label(p, to_string(p, s)) == s);
            }
    }
    auto p = level_params(3, 4);
    CHECK(to_string(p, parse_label(p, "I[0,0,0;2,-1,0]^0")) == "I[0,0,0;2,-1,0]^0");
    FormalSum f = parse_formal_sum(p, "2*I[0,0,0;0,0,1]^0 + I[0,0,0;2,-1,0]^-2 + -1*R~[1/7;[[0,0,0;1,0,0]]]^3");
    CHECK(f.size() == 3);
    CHECK(parse_formal_sum(p, to_string(p, f)) == f);
    CHECK(to_string(p, FormalSum{}) == "0");
    CHECK(parse_formal_sum(p, "0").empty());
    for (const char* bad : {"I[0,0,0;0,0,0]", "I[0,0,0;0,0,1", "X[1]", "R~[1/7;[[0,0,0;2,0,0]]]^0", "I[0,0,0;0,0,1]^1/3",
                            "R~[1/7]^0", "I[0,0,0;0,0,1]x"})
        CHECK_THROWS_AS(parse_label(p, bad), DomainError);
}

TEST_CASE("formal sums drop zeros")
{
    auto p = level_params(3, 4);
    Label a = make_hw(p, {{0, 0, 0}, {0, 0, 1}});
    FormalSum f(a, 2);
    f.add(a, -2);
    CHECK(f.empty());
    CHECK((FormalSum(a) - FormalSum(a)).empty());
    CHECK((-FormalSum(a)).coeff(a) == -1);
}

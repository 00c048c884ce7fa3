#pragma once

#include <array>
#include <compare>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <boost/rational.hpp>

namespace bpf {

using Rational = boost::rational<long long>;

struct DomainError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// [x] in [0,1)
Rational frac_mod1(const Rational& x);
bool is_integer(const Rational& x);
long double to_ld(const Rational& x);
std::string to_string(const Rational& x);
Rational parse_rational(std::string_view text);

struct LevelParams {
    int u = 0;
    int v = 0;
    Rational k, kappa, c_bp, c_w3, c_pi;
};

LevelParams level_params(int u, int v);

struct RSLabel {
    std::array<int, 3> r{};
    std::array<int, 3> s{};
    auto operator<=>(const RSLabel&) const = default;
};

struct OrbitClass {
    RSLabel rep;
    std::array<RSLabel, 3> members;
    bool operator==(const OrbitClass& o) const { return rep == o.rep; }
    auto operator<=>(const OrbitClass& o) const { return rep <=> o.rep; }
};

// (r0,r1,r2;s0,s1,s2) -> (r2,r0,r1;s2,s0,s1), applied `times` times (any sign)
RSLabel sigma(const RSLabel& lam, int times = 1);
std::array<int, 3> sigma3(const std::array<int, 3>& t, int times = 1);

// r1<->r2, s1<->s2
RSLabel conj_swap(const RSLabel& lam);

bool in_surv(const LevelParams& p, const RSLabel& lam);
bool in_infwts(const LevelParams& p, const RSLabel& lam);

std::vector<RSLabel> enumerate_surv(const LevelParams& p);
std::vector<RSLabel> enumerate_infwts_labels(const LevelParams& p);
std::vector<OrbitClass> enumerate_infwts(const LevelParams& p);

OrbitClass orbit_of(const RSLabel& lam);

// affine Dynkin labels lambda_i = r_i - (u/v) lambda^F_i
std::array<Rational, 3> dynkin(const LevelParams& p, const RSLabel& lam);

struct HWData {
    Rational j, delta, j_tw, delta_tw;
};

// formulas only; no membership check
Rational j_of(const LevelParams& p, const RSLabel& lam);
Rational j_tw_of(const LevelParams& p, const RSLabel& lam);
HWData hw_data_raw(const LevelParams& p, const RSLabel& lam);
HWData hw_data(const LevelParams& p, const RSLabel& lam);

// w = w_num * (3uv)^(-3/2)
struct W3Data {
    Rational delta;
    Rational w_num;
    long long three_uv = 1;
    long double w() const;
};

W3Data w3_data(const LevelParams& p, const RSLabel& lam);
W3Data w3_data(const LevelParams& p, const OrbitClass& orbit);

std::string to_string(const RSLabel& lam);
std::string to_string(const OrbitClass& orbit);
RSLabel parse_rslabel(std::string_view text);
// accepts "[[...]]"; returns the orbit (membership is the caller's business)
OrbitClass parse_orbit(std::string_view text);

}  // namespace bpf

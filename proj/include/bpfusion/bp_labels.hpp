#pragma once

#include <compare>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <tuple>
#include <utility>
#include <vector>

#include "bpfusion/core_weights.hpp"

namespace bpf {

struct HalfInt {
    int twice = 0;

    static HalfInt of(int n) { return {2 * n}; }
    static HalfInt half(int twice_value) { return {twice_value}; }
    bool is_integer() const { return twice % 2 == 0; }
    int to_int() const;
    Rational to_rational() const { return Rational(twice, 2); }

    HalfInt operator+(HalfInt o) const { return {twice + o.twice}; }
    HalfInt operator-(HalfInt o) const { return {twice - o.twice}; }
    HalfInt operator-() const { return {-twice}; }
    auto operator<=>(const HalfInt&) const = default;
};

std::string to_string(HalfInt h);
HalfInt parse_halfint(std::string_view text);

enum class LabelKind { HW = 0, Std = 1 };

// HW:  lam is the leftmost member of its flow orbit, ell the residual flow.
// Std: tilde-convention standard R~^ell_{[j],[lam]}; lam the canonical orbit
//      representative and j in [0,1).
struct Label {
    LabelKind kind = LabelKind::HW;
    HalfInt ell;
    RSLabel lam;
    Rational j;
    bool operator==(const Label&) const = default;
    bool operator<(const Label& o) const
    {
        return std::tie(kind, ell, lam) < std::tie(o.kind, o.ell, o.lam) ||
               (std::tie(kind, ell, lam) == std::tie(o.kind, o.ell, o.lam) && j < o.j);
    }
};

// I_lam = sigma^shift(I_leftmost)
struct NormalForm {
    RSLabel leftmost;
    int shift = 0;
};
NormalForm normal_form(const LevelParams& p, const RSLabel& lam);

Label make_hw(const LevelParams& p, const RSLabel& lam, HalfInt ell = {});
Label make_std(const LevelParams& p, const Rational& j, const RSLabel& lam, HalfInt ell = {});

int orbit_type(const LevelParams& p, const RSLabel& lam);
int orbit_type(const LevelParams& p, const Label& hw);

// the members I_leftmost, sigma(I_leftmost), ... of a flow orbit
std::vector<RSLabel> hw_orbit_members(const LevelParams& p, const RSLabel& lam);
// all (m, mu) with sigma^m(I_lam) = I_mu, including m = 0
std::vector<std::pair<HalfInt, RSLabel>> hw_flow_maps(const LevelParams& p, const RSLabel& lam);

// type-3 labels are displayed through [r; v-2,-1,0]
struct Display {
    RSLabel lam;
    HalfInt ell;
};
Display display_form(const LevelParams& p, const Label& hw);
RSLabel type3_middle(const LevelParams& p, const Label& hw);

Label spectral_flow(const Label& l, HalfInt m);
// (j, Delta) -> (j + 2 m kappa, Delta + m j + m^2 kappa)
std::pair<Rational, Rational> flow_weights(const LevelParams& p, const Rational& j, const Rational& delta,
                                           const Rational& m);
// the charge coset of a standard label, j + 2 ell kappa
Rational std_charge(const LevelParams& p, const Label& s);

Label conjugate_hw(const LevelParams& p, const Label& hw);

// gap charges of the standard family of an orbit
Rational gap_charge_tilde(const LevelParams& p, const RSLabel& mu);
std::vector<Rational> gap_set_tilde(const LevelParams& p, const OrbitClass& o);
std::vector<Rational> gap_set_twisted(const LevelParams& p, const OrbitClass& o);
// the orbit member whose gap charge is the label's charge, if any
std::optional<RSLabel> nonsimple_member(const LevelParams& p, const Label& s);
bool is_simple(const LevelParams& p, const Label& l);

// twisted convention sigma^ell(R_{[j],[lam]}) <-> tilde convention
struct TwistedStd {
    HalfInt ell;
    Rational j;
    RSLabel lam;
    bool operator==(const TwistedStd&) const = default;
};
Label tilde_from_twisted(const LevelParams& p, const TwistedStd& t);
TwistedStd twisted_from_tilde(const LevelParams& p, const Label& s);

class FormalSum {
public:
    using Map = std::map<Label, long long>;

    FormalSum() = default;
    FormalSum(const Label& l, long long c = 1) { add(l, c); }

    void add(const Label& l, long long c);
    void add(const FormalSum& o, long long scale = 1);
    long long coeff(const Label& l) const;
    const Map& terms() const { return terms_; }
    bool empty() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }

    FormalSum operator+(const FormalSum& o) const;
    FormalSum operator-(const FormalSum& o) const;
    FormalSum operator-() const;
    bool operator==(const FormalSum& o) const = default;

private:
    Map terms_;
};

std::string to_string(const LevelParams& p, const Label& l);
std::string to_string(const LevelParams& p, const FormalSum& f);
Label parse_label(const LevelParams& p, std::string_view text);
// sum of "coeff*label" terms separated by '+', e.g. "2*I[..]^0 + R~[..]^1"
FormalSum parse_formal_sum(const LevelParams& p, std::string_view text);

// Gr(R~_mu^ell) = Gr(I_mu^{ell+1}) + Gr(I[r; s0, s1-1, s2+1]^ell), mu in the infinite-type set
FormalSum gap_hw_expansion(const LevelParams& p, const RSLabel& mu, HalfInt ell);
// rewrite nonsimple standards in terms of highest-weight labels
FormalSum to_simple_basis(const LevelParams& p, const FormalSum& f);

// 0 -> I^tw[r;s] -> R^tw[r;s] -> conj(I^tw[r0,r2,r1; s0,s2,s1]) -> 0
struct GapDecomposition {
    Label sub;             // sigma^{1/2}(I_lam)
    RSLabel quotient_arg;  // [r0,r2,r1; s0,s2,s1], twisted
    Label quotient;        // conj(sigma^{1/2} I_quotient_arg) as an HW label
    TwistedStd middle;     // the twisted relaxed module
};
GapDecomposition gap_decomposition(const LevelParams& p, const RSLabel& lam);

// 0 -> sigma(I_mu) -> sigma^{1/2}(R_mu) -> I_lam -> 0,  mu = [r; s0, s1+1, s2-1]
struct AtypicalSES {
    RSLabel mu;
    Label sub;
    Label middle;  // standard label R~^0_mu
    Label quotient;
    int sub_type;
};
AtypicalSES atypical_ses(const LevelParams& p, const RSLabel& leftmost);

struct Resolution {
    FormalSum terms;      // nonsimple standards
    Label remainder;      // Gr(I) = terms + remainder_coeff * remainder
    long long remainder_coeff = 0;
};
int default_depth(const LevelParams& p);
Resolution resolution(const LevelParams& p, const Label& hw, int depth);

}  // namespace bpf

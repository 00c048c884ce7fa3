#pragma once

#include <vector>

#include "bpfusion/bp_labels.hpp"
#include "bpfusion/w3_modular.hpp"

namespace bpf {

// a highest-weight kernel evaluated at a nonsimple standard label
struct GapDivergence : DomainError {
    using DomainError::DomainError;
};

struct OracleFailure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// value = w3 * exp(2 pi i phase_exponent) / denominator
struct SKernelEntry {
    Complex value;
    Complex w3;
    Rational phase_exponent;
    Complex denominator{1};
};

// 2cos(3 pi (k - kappa)) - sum_i 2cos(pi (k - kappa + 2 j_tw(sigma^i mu)))
Complex denominator_D(const LevelParams& p, long double k, const RSLabel& mu);

// kernels against the standard label (m, [k], [mu]) with k real
Complex standard_kernel_at(const LevelParams& p, const Label& a, long long m, long double k, const RSLabel& mu);
Complex type3_kernel_at(const LevelParams& p, const Label& a, long long m, long double k, const RSLabel& mu);
Complex vacuum_kernel_at(const LevelParams& p, long long m, long double k, const RSLabel& mu);

SKernelEntry standard_kernel(const LevelParams& p, const Label& a, const Label& b);
SKernelEntry type3_kernel(const LevelParams& p, const Label& a, const Label& b, long double tol = kDefaultTol);
SKernelEntry vacuum_kernel(const LevelParams& p, const Label& b, long double tol = kDefaultTol);

Label vacuum_label(const LevelParams& p);

// raw closed forms; outputs are tilde-convention standard labels
FormalSum fuse_standard(const LevelParams& p, const Label& a, const Label& b);
FormalSum fuse_type3_standard(const LevelParams& p, const Label& a, const Label& b);
FormalSum fuse_type3_type3(const LevelParams& p, const Label& a, const Label& b);

struct NotStabilised : DomainError {
    using DomainError::DomainError;
};

// resolution-based product of arbitrary labels, in the simple basis
FormalSum fuse_general(const LevelParams& p, const Label& a, const Label& b, int depth);
// type-3 times a highest-weight label through the resolution of b
FormalSum fuse_type3_by_resolution(const LevelParams& p, const Label& a, const Label& b, int depth);

// the same sum rewritten as sigma^ell(R_{[j],[lam]}) terms
std::vector<std::pair<TwistedStd, long long>> twisted_view(const LevelParams& p, const FormalSum& f);

// Fourier extraction of a single Grothendieck fusion coefficient
long long verlinde_oracle(const LevelParams& p, const Label& a, const Label& b, const Label& c);

struct SimpleCurrent {
    Label label;
    Rational j, delta;
    bool verified = false;
};
std::vector<SimpleCurrent> simple_currents(const LevelParams& p, int depth);

bool subring_iso_check(const LevelParams& p, int depth);

}  // namespace bpf

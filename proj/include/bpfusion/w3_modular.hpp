#pragma once

#include <vector>

#include "bpfusion/core_weights.hpp"
#include "bpfusion/sl3_fusion.hpp"

namespace bpf {

constexpr long double kDefaultTol = 1e-9L;

struct NearZeroDenominator : DomainError {
    using DomainError::DomainError;
};

// exp(2 pi i q), reducing q mod 1 exactly first
Complex phase(const Rational& q);
Rational inner_q(const Weight2& a, const Weight2& b);

// accepts arbitrary integral triples
Complex w3_smatrix_entry(const LevelParams& p, const RSLabel& a, const RSLabel& b);

struct W3SMatrix {
    LevelParams params;
    std::vector<OrbitClass> orbits;
    std::vector<std::vector<Complex>> S;
    std::size_t index_of(const RSLabel& lam) const;
    std::size_t vacuum_index() const;
};

W3SMatrix w3_smatrix(const LevelParams& p);
RSLabel w3_vacuum(const LevelParams& p);

struct MatrixReport {
    long double symmetry = 0, unitarity = 0, conjugation = 0;
};
MatrixReport w3_matrix_report(const W3SMatrix& m);

bool sigma_phase_check(const LevelParams& p, const RSLabel& a, const RSLabel& b, long double tol = kDefaultTol);
// largest |S| over labels whose s sits on a shifted alcove wall
long double alcove_vanishing_residual(const LevelParams& p);
// largest deviation of S(w.s) - det(w) S over finite w and the affine reflection
long double weyl_antisymmetry_residual(const LevelParams& p);

bool ratio_weyl_character_check(const LevelParams& p, const RSLabel& a, const RSLabel& b,
                                 long double tol = kDefaultTol);
bool tensor_sum_check(const LevelParams& p, const RSLabel& a, const Weight2& t, const RSLabel& b,
                      long double tol = kDefaultTol);
bool lemma_sum_check(int v, Complex x, Complex X1, Complex X2, Complex X3, long double tol = kDefaultTol);
bool sum_fund_modules_check(const LevelParams& p, const RSLabel& b, long double jp, long double tol = kDefaultTol);

bool in_root_lattice(int t1, int t2);
// representative of the orbit whose r (or s) projection lies in the root lattice
RSLabel fusion_representative(const OrbitClass& o, bool use_s);
long long w3_fusion(const LevelParams& p, const OrbitClass& a, const OrbitClass& b, const OrbitClass& c);
long long w3_fusion_with(const LevelParams& p, const RSLabel& a, const RSLabel& b, const RSLabel& c);
Complex w3_verlinde(const W3SMatrix& m, std::size_t a, std::size_t b, std::size_t c);

}  // namespace bpf

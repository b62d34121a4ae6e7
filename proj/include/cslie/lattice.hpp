// Integer data for lattices in the unimodular almost Abelian examples with a diagonal sp block.
#pragma once

#include "cslie/almostabelian.hpp"

#include <gmpxx.h>

#include <string>
#include <vector>

namespace cslie {

using ZVec = std::vector<mpz_class>;

/// a_0 = 2, a_1 = ell, a_{k+1} = ell a_k - a_{k-1}; returns a_0..a_kmax.
ZVec a_sequence(long ell, unsigned kmax);

/// (x - 1) prod_{j=1..m} (x^2 - a_{2j-1} x + 1).
QPoly build_q(long ell, unsigned m);

struct CompanionBlocks {
    QMat Bq;
    QMat Bl;  // diag(1, Bq, Bq)
};
CompanionBlocks companion_blocks(const QPoly& q);

/// gcd(q, q') = 1.
bool distinct_roots(const QPoly& q);

/// The diagonal block with entries +-(2k-1)/(2m), each doubled, in either coordinate order.
/// Split: all positive entries first. Blockwise: (c, c, -c, -c) per 4-block.
QMat lattice_block(unsigned m, SpForm order);
/// The derivation: lattice_block(n-1, Blockwise) padded with a zero 3x3 block.
QMat lattice_f(unsigned n);

struct LatticeReport {
    unsigned n = 0;
    long ell = 0;
    QPoly q;
    ZVec a_seq;
    QMat Bq, Bl;
    std::string t_ell_approx;
    bool distinct_roots = false;
    /// char(Bl) = (x-1) q^2, and the diagonal model (x-1)^3 prod (x^2 - a x + 1)^2 agrees with it.
    bool char_matches = false;
    bool model_matches = false;
    /// Floating check that q's quadratic factors have roots exp(+-(2j-1) t_ell / (2m)).
    bool numeric_roots_ok = false;
    double max_relative_error = 0;
};

LatticeReport lattice_report(unsigned n, long ell);

} // namespace cslie

#include "cslie/lattice.hpp"

#include <cmath>
#include <cstdio>

namespace cslie {

ZVec a_sequence(long ell, unsigned kmax) {
    if (ell < 3) throw AlgebraError("a_sequence: ell must be at least 3");
    ZVec a{2, ell};
    while (a.size() <= kmax) a.push_back(ell * a[a.size() - 1] - a[a.size() - 2]);
    a.resize(kmax + 1);
    return a;
}

namespace {

QPoly pair_factor(const mpz_class& a) { return QPoly({Rat(1), Rat(-a), Rat(1)}); }

} // namespace

QPoly build_q(long ell, unsigned m) {
    if (m < 1) throw AlgebraError("build_q: m must be at least 1");
    ZVec a = a_sequence(ell, 2 * m - 1);
    QPoly q = QPoly::from_ints({-1, 1});
    for (unsigned j = 1; j <= m; ++j) q = q * pair_factor(a[2 * j - 1]);
    return q;
}

CompanionBlocks companion_blocks(const QPoly& q) {
    CompanionBlocks B;
    B.Bq = companion(q);
    B.Bl = QMat::block_diag({QMat::identity(1), B.Bq, B.Bq});
    return B;
}

bool distinct_roots(const QPoly& q) { return gcd(q, q.derivative()).degree() == 0; }

QMat lattice_block(unsigned m, SpForm order) {
    if (m < 1) throw AlgebraError("lattice_block: m must be at least 1");
    QVec d(4 * m);
    for (unsigned k = 1; k <= m; ++k) {
        Rat c(2 * k - 1, 2 * m);
        c.canonicalize();
        if (order == SpForm::Split) {
            d[2 * k - 2] = d[2 * k - 1] = c;
            d[2 * m + 2 * k - 2] = d[2 * m + 2 * k - 1] = -c;
        } else {
            std::size_t b = 4 * (k - 1);
            d[b] = d[b + 1] = c;
            d[b + 2] = d[b + 3] = -c;
        }
    }
    return QMat::diag(d);
}

QMat lattice_f(unsigned n) {
    if (n < 2) throw AlgebraError("lattice_f: n must be at least 2");
    return QMat::block_diag({lattice_block(n - 1, SpForm::Blockwise), QMat(3, 3)});
}

LatticeReport lattice_report(unsigned n, long ell) {
    if (n < 2) throw AlgebraError("lattice_report: n must be at least 2");
    if (ell < 3) throw AlgebraError("lattice_report: ell must be at least 3");
    unsigned m = n - 1;
    LatticeReport R;
    R.n = n;
    R.ell = ell;
    R.a_seq = a_sequence(ell, 2 * m - 1);
    R.q = build_q(ell, m);
    auto B = companion_blocks(R.q);
    R.Bq = B.Bq;
    R.Bl = B.Bl;
    R.distinct_roots = distinct_roots(R.q);

    QPoly x1 = QPoly::from_ints({-1, 1});
    QPoly ch = charpoly(R.Bl);
    R.char_matches = ch == x1 * R.q * R.q;
    QPoly model = pow(x1, 3);
    for (unsigned j = 1; j <= m; ++j) model = model * pow(pair_factor(R.a_seq[2 * j - 1]), 2);
    R.model_matches = model == ch;

    long double t = 2.0L * m * std::acosh(static_cast<long double>(ell) / 2.0L);
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.15Lg", t);
    R.t_ell_approx = buf;
    R.max_relative_error = 0;
    for (unsigned j = 1; j <= m; ++j) {
        long double r = std::exp((2.0L * j - 1) * t / (2.0L * m));
        long double a = R.a_seq[2 * j - 1].get_d();
        long double err = std::fabs(r + 1 / r - a) / a;
        R.max_relative_error = std::max(R.max_relative_error, static_cast<double>(err));
    }
    R.numeric_roots_ok = R.max_relative_error < 1e-9;
    return R;
}

} // namespace cslie

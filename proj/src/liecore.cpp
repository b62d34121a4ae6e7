#include "cslie/liecore.hpp"

#include <algorithm>
#include <random>
#include <set>
#include <sstream>

namespace cslie {

JacobiViolation::JacobiViolation(std::size_t i_, std::size_t j_, std::size_t k_, QVec residual_)
    : AlgebraError("Jacobi identity fails on (e" + std::to_string(i_ + 1) + ", e" + std::to_string(j_ + 1) + ", e" +
                   std::to_string(k_ + 1) + ")"),
      i(i_), j(j_), k(k_), residual(std::move(residual_)) {}

LieAlgebra::LieAlgebra(std::size_t dim, const std::vector<Bracket>& brackets, bool check_jacobi)
    : m_dim(dim), m_c(dim * dim * dim) {
    std::set<std::tuple<std::size_t, std::size_t, std::size_t>> seen;
    for (const auto& b : brackets) {
        if (b.i >= dim || b.j >= dim || b.k >= dim)
            throw AlgebraError("bracket index out of range for dimension " + std::to_string(dim));
        if (b.i == b.j) {
            if (b.c != 0) throw AlgebraError("nonzero [e_i, e_i] for i = " + std::to_string(b.i + 1));
            continue;
        }
        auto key = std::tuple(std::min(b.i, b.j), std::max(b.i, b.j), b.k);
        if (!seen.insert(key).second)
            throw AlgebraError("duplicate bracket entry (" + std::to_string(b.i + 1) + "," + std::to_string(b.j + 1) +
                               "," + std::to_string(b.k + 1) + ")");
        at(b.i, b.j, b.k) = b.c;
        at(b.j, b.i, b.k) = -b.c;
    }
    if (check_jacobi)
        if (auto w = jacobi_witness()) throw *w;
}

QVec LieAlgebra::bracket_basis(std::size_t i, std::size_t j) const {
    QVec v(m_dim);
    for (std::size_t k = 0; k < m_dim; ++k) v[k] = c(i, j, k);
    return v;
}

QVec LieAlgebra::bracket(const QVec& x, const QVec& y) const {
    if (x.size() != m_dim || y.size() != m_dim) throw std::invalid_argument("bracket: vector length mismatch");
    QVec r(m_dim);
    for (std::size_t i = 0; i < m_dim; ++i) {
        if (x[i] == 0) continue;
        for (std::size_t j = 0; j < m_dim; ++j) {
            if (y[j] == 0 || i == j) continue;
            Rat s = x[i] * y[j];
            for (std::size_t k = 0; k < m_dim; ++k)
                if (c(i, j, k) != 0) r[k] += s * c(i, j, k);
        }
    }
    return r;
}

QMat LieAlgebra::ad(const QVec& x) const {
    QMat m(m_dim, m_dim);
    for (std::size_t j = 0; j < m_dim; ++j) {
        QVec col = bracket(x, unit_vector(m_dim, j));
        for (std::size_t k = 0; k < m_dim; ++k) m(k, j) = col[k];
    }
    return m;
}

QMat LieAlgebra::ad_basis(std::size_t i) const { return ad(unit_vector(m_dim, i)); }

std::vector<Bracket> LieAlgebra::brackets() const {
    std::vector<Bracket> out;
    for (std::size_t i = 0; i < m_dim; ++i)
        for (std::size_t j = i + 1; j < m_dim; ++j)
            for (std::size_t k = 0; k < m_dim; ++k)
                if (c(i, j, k) != 0) out.push_back({i, j, k, c(i, j, k)});
    return out;
}

bool LieAlgebra::is_abelian() const {
    return std::all_of(m_c.begin(), m_c.end(), [](const Rat& x) { return x == 0; });
}

std::optional<JacobiViolation> LieAlgebra::jacobi_witness() const {
    std::size_t n = m_dim;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            for (std::size_t k = j + 1; k < n; ++k) {
                QVec r(n);
                // [[e_i,e_j],e_k] + [[e_j,e_k],e_i] + [[e_k,e_i],e_j]
                for (std::size_t m = 0; m < n; ++m) {
                    if (c(i, j, m) != 0)
                        for (std::size_t l = 0; l < n; ++l) r[l] += c(i, j, m) * c(m, k, l);
                    if (c(j, k, m) != 0)
                        for (std::size_t l = 0; l < n; ++l) r[l] += c(j, k, m) * c(m, i, l);
                    if (c(k, i, m) != 0)
                        for (std::size_t l = 0; l < n; ++l) r[l] += c(k, i, m) * c(m, j, l);
                }
                if (std::any_of(r.begin(), r.end(), [](const Rat& x) { return x != 0; }))
                    return JacobiViolation(i, j, k, r);
            }
    return std::nullopt;
}

LieAlgebra LieAlgebra::change_basis(const QMat& P) const {
    auto inv = inverse(P);
    if (!inv) throw AlgebraError("change_basis: singular matrix");
    std::vector<Bracket> br;
    for (std::size_t a = 0; a < m_dim; ++a)
        for (std::size_t b = a + 1; b < m_dim; ++b) {
            QVec v = *inv * bracket(P.column(a), P.column(b));
            for (std::size_t k = 0; k < m_dim; ++k)
                if (v[k] != 0) br.push_back({a, b, k, v[k]});
        }
    return LieAlgebra(m_dim, br, false);
}

QVec unit_vector(std::size_t n, std::size_t i) {
    QVec v(n);
    v.at(i) = 1;
    return v;
}

// ---------------------------------------------------------------- Subspace

Subspace Subspace::span(std::size_t ambient, const std::vector<QVec>& vectors) {
    Subspace s(ambient);
    if (vectors.empty()) return s;
    QMat rows(vectors.size(), ambient);
    for (std::size_t r = 0; r < vectors.size(); ++r) {
        if (vectors[r].size() != ambient) throw std::invalid_argument("span: vector length mismatch");
        for (std::size_t j = 0; j < ambient; ++j) rows(r, j) = vectors[r][j];
    }
    std::vector<std::size_t> piv;
    QMat e = rref(rows, &piv);
    s.m_basis = e.block(0, 0, piv.size(), ambient).transpose();
    return s;
}

Subspace Subspace::column_span(const QMat& m) {
    std::vector<QVec> v;
    for (std::size_t j = 0; j < m.cols(); ++j) v.push_back(m.column(j));
    return span(m.rows(), v);
}

Subspace Subspace::full(std::size_t n) { return column_span(QMat::identity(n)); }

Subspace Subspace::coordinate(std::size_t n, const std::vector<std::size_t>& idx) {
    std::vector<QVec> v;
    for (auto i : idx) v.push_back(unit_vector(n, i));
    return span(n, v);
}

std::vector<QVec> Subspace::vectors() const {
    std::vector<QVec> v;
    for (std::size_t j = 0; j < dim(); ++j) v.push_back(m_basis.column(j));
    return v;
}

bool Subspace::contains(const QVec& v) const {
    if (v.size() != m_ambient) throw std::invalid_argument("contains: vector length mismatch");
    if (std::all_of(v.begin(), v.end(), [](const Rat& x) { return x == 0; })) return true;
    if (dim() == 0) return false;
    return rank(hstack(m_basis, QMat::from_columns({v}, m_ambient))) == dim();
}

bool Subspace::contains(const Subspace& s) const {
    if (s.dim() == 0) return true;
    return rank(hstack(m_basis, s.m_basis)) == dim();
}

Subspace Subspace::operator+(const Subspace& o) const {
    auto v = vectors();
    auto w = o.vectors();
    v.insert(v.end(), w.begin(), w.end());
    return span(m_ambient, v);
}

Subspace Subspace::intersect(const Subspace& o) const {
    if (dim() == 0 || o.dim() == 0) return Subspace(m_ambient);
    QMat k = kernel(hstack(m_basis, -o.m_basis));
    return column_span(m_basis * k.block(0, 0, dim(), k.cols()));
}

Subspace Subspace::image(const QMat& m) const {
    if (dim() == 0) return Subspace(m.rows());
    return column_span(m * m_basis);
}

std::string Subspace::str() const {
    std::ostringstream os;
    os << "<";
    for (std::size_t j = 0; j < dim(); ++j) {
        os << (j ? ", " : "") << "(";
        for (std::size_t i = 0; i < m_ambient; ++i) os << (i ? "," : "") << m_basis(i, j).get_str();
        os << ")";
    }
    os << ">";
    return os.str();
}

Subspace annihilated(const QMat& m) { return Subspace::column_span(kernel(m)); }

// ---------------------------------------------------------------- structure

std::vector<std::size_t> SeriesReport::dims() const {
    std::vector<std::size_t> d;
    for (const auto& t : terms) d.push_back(t.dim());
    return d;
}

Subspace bracket_span(const LieAlgebra& L, const Subspace& a, const Subspace& b) {
    std::vector<QVec> v;
    for (const auto& x : a.vectors())
        for (const auto& y : b.vectors()) v.push_back(L.bracket(x, y));
    return Subspace::span(L.dim(), v);
}

namespace {

SeriesReport run_series(const LieAlgebra& L, SeriesKind kind) {
    SeriesReport rep{kind, {}, std::nullopt};
    Subspace g = Subspace::full(L.dim());
    Subspace cur = g;
    while (true) {
        Subspace next = kind == SeriesKind::LowerCentral ? bracket_span(L, g, cur) : bracket_span(L, cur, cur);
        rep.terms.push_back(next);
        if (next.dim() == 0) {
            rep.step = static_cast<unsigned>(rep.terms.size());
            break;
        }
        if (next == cur) break;
        cur = next;
    }
    return rep;
}

} // namespace

SeriesReport lower_central_series(const LieAlgebra& L) { return run_series(L, SeriesKind::LowerCentral); }
SeriesReport derived_series(const LieAlgebra& L) { return run_series(L, SeriesKind::Derived); }

Subspace centralizer(const LieAlgebra& L, const Subspace& s) {
    std::size_t n = L.dim();
    if (s.dim() == 0) return Subspace::full(n);
    QMat stacked(0, n);
    for (const auto& v : s.vectors()) stacked = vstack(stacked, L.ad(v));
    return annihilated(stacked);
}

Subspace center(const LieAlgebra& L) { return centralizer(L, Subspace::full(L.dim())); }

Subspace commutator_ideal(const LieAlgebra& L) {
    Subspace g = Subspace::full(L.dim());
    return bracket_span(L, g, g);
}

bool is_ideal(const LieAlgebra& L, const Subspace& s) {
    return s.contains(bracket_span(L, Subspace::full(L.dim()), s));
}

bool is_abelian_subalgebra(const LieAlgebra& L, const Subspace& s) { return bracket_span(L, s, s).dim() == 0; }

bool is_unimodular(const LieAlgebra& L) {
    for (std::size_t i = 0; i < L.dim(); ++i)
        if (trace(L.ad_basis(i)) != 0) return false;
    return true;
}

bool is_nilpotent(const LieAlgebra& L) { return lower_central_series(L).step.has_value(); }

Codim1Result codim1_abelian_ideals(const LieAlgebra& L) {
    std::size_t n = L.dim();
    Codim1Result res;
    if (n == 0) {
        res.kind = IdealSearch::NoneFound;
        return res;
    }
    Subspace g1 = commutator_ideal(L);
    Subspace c1 = centralizer(L, g1);
    if (c1.dim() + 1 < n) {
        res.kind = IdealSearch::NoneFound;
        return res;
    }
    if (c1.dim() + 1 == n) {
        // Any abelian codim-1 ideal sits between g1 and c1, so it must be c1.
        if (is_abelian_subalgebra(L, c1)) {
            res.kind = IdealSearch::Unique;
            res.ideals.push_back(c1);
        } else {
            res.kind = IdealSearch::NoneFound;
        }
        return res;
    }
    // g1 is central. A hyperplane ker(phi) is abelian iff every component 2-form of the
    // bracket restricted to it vanishes, i.e. phi lies in the row space of each component.
    if (n == 1) {
        res.kind = IdealSearch::Unique;
        res.ideals.push_back(Subspace(1));
        return res;
    }
    QMat g1_rows = g1.basis().transpose();
    Subspace allowed = g1.dim() == 0 ? Subspace::full(n) : annihilated(g1_rows);
    for (std::size_t k = 0; k < n; ++k) {
        QMat form(n, n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) form(i, j) = L.c(i, j, k);
        if (form.is_zero()) continue;
        if (rank(form) > 2) {
            res.kind = IdealSearch::NoneFound;
            return res;
        }
        allowed = allowed.intersect(Subspace::column_span(form));
    }
    auto hyperplane = [&](const QVec& phi) {
        return annihilated(QMat::from_columns({phi}, n).transpose());
    };
    if (allowed.dim() == 0) {
        res.kind = IdealSearch::NoneFound;
    } else if (allowed.dim() == 1) {
        res.kind = IdealSearch::Unique;
        res.ideals.push_back(hyperplane(allowed.basis().column(0)));
    } else {
        res.kind = IdealSearch::Multiple;
        res.ideals.push_back(hyperplane(allowed.basis().column(0)));
        res.ideals.push_back(hyperplane(allowed.basis().column(1)));
        auto lcs = lower_central_series(L);
        res.heisenberg_split = L.is_abelian() ||
                               (lcs.step == 2u && g1.dim() == 1 && center(L).dim() + 2 == n);
    }
    return res;
}

Fingerprint invariant_fingerprint(const LieAlgebra& L, unsigned long seed) {
    Fingerprint fp;
    fp.dim = L.dim();
    fp.lower_central_dims = lower_central_series(L).dims();
    fp.derived_dims = derived_series(L).dims();
    fp.center_dim = center(L).dim();
    fp.unimodular = is_unimodular(L);
    std::mt19937_64 rng(seed);
    QVec x(L.dim());
    for (auto& v : x) v = static_cast<long>(rng() % 1999) - 999;
    for (const auto& prof : primary_profiles(L.ad(x)))
        fp.generic_ad_profile.push_back(
            {static_cast<unsigned>(prof.factor.degree()), root_classes(prof.factor), prof.block_sizes});
    std::sort(fp.generic_ad_profile.begin(), fp.generic_ad_profile.end());
    return fp;
}

} // namespace cslie

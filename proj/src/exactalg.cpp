#include "cslie/exactalg.hpp"

#include <algorithm>
#include <sstream>

namespace cslie {

Rat parse_rat(const std::string& text) {
    std::string t;
    for (char ch : text)
        if (ch != ' ') t.push_back(ch);
    if (t.empty()) throw std::invalid_argument("empty rational");
    std::size_t start = (t[0] == '-' || t[0] == '+') ? 1 : 0;
    std::size_t slash = t.find('/');
    auto digits = [&](std::size_t a, std::size_t b) {
        if (a >= b) return false;
        for (std::size_t i = a; i < b; ++i)
            if (t[i] < '0' || t[i] > '9') return false;
        return true;
    };
    bool ok = slash == std::string::npos ? digits(start, t.size())
                                         : digits(start, slash) && digits(slash + 1, t.size());
    if (!ok) throw std::invalid_argument("malformed rational '" + text + "'");
    if (t[0] == '+') t.erase(0, 1);
    Rat r;
    if (r.set_str(t, 10) != 0) throw std::invalid_argument("malformed rational '" + text + "'");
    if (r.get_den() == 0) throw std::invalid_argument("zero denominator in '" + text + "'");
    r.canonicalize();
    return r;
}

std::string rat_str(const Rat& r) { return r.get_str(); }

// ---------------------------------------------------------------- QMat

QMat::QMat(std::size_t rows, std::size_t cols) : m_rows(rows), m_cols(cols), m_data(rows * cols) {}

QMat QMat::identity(std::size_t n) {
    QMat m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

QMat QMat::from_rows(const std::vector<std::vector<Rat>>& rows) {
    std::size_t c = rows.empty() ? 0 : rows[0].size();
    QMat m(rows.size(), c);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != c) throw std::invalid_argument("ragged matrix rows");
        for (std::size_t j = 0; j < c; ++j) m(i, j) = rows[i][j];
    }
    return m;
}

QMat QMat::from_ints(const std::vector<std::vector<long>>& rows) {
    std::vector<std::vector<Rat>> r;
    for (const auto& row : rows) {
        std::vector<Rat> rr;
        for (long v : row) rr.emplace_back(v);
        r.push_back(std::move(rr));
    }
    return from_rows(r);
}

QMat QMat::from_columns(const std::vector<QVec>& cols, std::size_t rows) {
    QMat m(rows, cols.size());
    for (std::size_t j = 0; j < cols.size(); ++j) {
        if (cols[j].size() != rows) throw std::invalid_argument("column length mismatch");
        for (std::size_t i = 0; i < rows; ++i) m(i, j) = cols[j][i];
    }
    return m;
}

QMat QMat::diag(const QVec& d) {
    QMat m(d.size(), d.size());
    for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
    return m;
}

QMat QMat::block_diag(const std::vector<QMat>& blocks) {
    std::size_t r = 0, c = 0;
    for (const auto& b : blocks) {
        r += b.rows();
        c += b.cols();
    }
    QMat m(r, c);
    r = c = 0;
    for (const auto& b : blocks) {
        m.set_block(r, c, b);
        r += b.rows();
        c += b.cols();
    }
    return m;
}

QVec QMat::column(std::size_t j) const {
    QVec v(m_rows);
    for (std::size_t i = 0; i < m_rows; ++i) v[i] = (*this)(i, j);
    return v;
}

QVec QMat::row(std::size_t i) const {
    return QVec(m_data.begin() + i * m_cols, m_data.begin() + (i + 1) * m_cols);
}

QMat QMat::transpose() const {
    QMat t(m_cols, m_rows);
    for (std::size_t i = 0; i < m_rows; ++i)
        for (std::size_t j = 0; j < m_cols; ++j) t(j, i) = (*this)(i, j);
    return t;
}

QMat QMat::block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const {
    if (r0 + nr > m_rows || c0 + nc > m_cols) throw std::out_of_range("block outside matrix");
    QMat b(nr, nc);
    for (std::size_t i = 0; i < nr; ++i)
        for (std::size_t j = 0; j < nc; ++j) b(i, j) = (*this)(r0 + i, c0 + j);
    return b;
}

void QMat::set_block(std::size_t r0, std::size_t c0, const QMat& b) {
    if (r0 + b.rows() > m_rows || c0 + b.cols() > m_cols) throw std::out_of_range("block outside matrix");
    for (std::size_t i = 0; i < b.rows(); ++i)
        for (std::size_t j = 0; j < b.cols(); ++j) (*this)(r0 + i, c0 + j) = b(i, j);
}

bool QMat::is_zero() const {
    return std::all_of(m_data.begin(), m_data.end(), [](const Rat& x) { return x == 0; });
}

QMat QMat::operator+(const QMat& o) const {
    if (m_rows != o.m_rows || m_cols != o.m_cols) throw std::invalid_argument("shape mismatch in +");
    QMat r(*this);
    for (std::size_t i = 0; i < m_data.size(); ++i) r.m_data[i] += o.m_data[i];
    return r;
}

QMat QMat::operator-(const QMat& o) const {
    if (m_rows != o.m_rows || m_cols != o.m_cols) throw std::invalid_argument("shape mismatch in -");
    QMat r(*this);
    for (std::size_t i = 0; i < m_data.size(); ++i) r.m_data[i] -= o.m_data[i];
    return r;
}

QMat QMat::operator-() const {
    QMat r(*this);
    for (auto& x : r.m_data) x = -x;
    return r;
}

QMat QMat::operator*(const QMat& o) const {
    if (m_cols != o.m_rows) throw std::invalid_argument("shape mismatch in *");
    QMat r(m_rows, o.m_cols);
    for (std::size_t i = 0; i < m_rows; ++i)
        for (std::size_t k = 0; k < m_cols; ++k) {
            const Rat& a = (*this)(i, k);
            if (a == 0) continue;
            for (std::size_t j = 0; j < o.m_cols; ++j)
                if (o(k, j) != 0) r(i, j) += a * o(k, j);
        }
    return r;
}

QVec QMat::operator*(const QVec& v) const {
    if (m_cols != v.size()) throw std::invalid_argument("shape mismatch in matrix-vector product");
    QVec r(m_rows);
    for (std::size_t i = 0; i < m_rows; ++i)
        for (std::size_t k = 0; k < m_cols; ++k)
            if ((*this)(i, k) != 0 && v[k] != 0) r[i] += (*this)(i, k) * v[k];
    return r;
}

QMat QMat::operator*(const Rat& s) const {
    QMat r(*this);
    for (auto& x : r.m_data) x *= s;
    return r;
}

QMat operator*(const Rat& s, const QMat& m) { return m * s; }

bool QMat::operator==(const QMat& o) const {
    return m_rows == o.m_rows && m_cols == o.m_cols && m_data == o.m_data;
}

std::string QMat::str() const {
    std::ostringstream os;
    os << "[";
    for (std::size_t i = 0; i < m_rows; ++i) {
        os << (i ? ", [" : "[");
        for (std::size_t j = 0; j < m_cols; ++j) os << (j ? ", " : "") << (*this)(i, j).get_str();
        os << "]";
    }
    os << "]";
    return os.str();
}

// ---------------------------------------------------------------- elimination

namespace {

// Rows scaled to integers, then fraction-free elimination. Returns rank and,
// for square input, the determinant of the integer matrix.
std::pair<std::size_t, mpz_class> bareiss(const QMat& m, std::vector<mpz_class>* row_scales) {
    std::size_t R = m.rows(), C = m.cols();
    std::vector<std::vector<mpz_class>> a(R, std::vector<mpz_class>(C));
    for (std::size_t i = 0; i < R; ++i) {
        mpz_class l = 1;
        for (std::size_t j = 0; j < C; ++j) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m(i, j).get_den_mpz_t());
        if (row_scales) row_scales->push_back(l);
        for (std::size_t j = 0; j < C; ++j) a[i][j] = m(i, j).get_num() * (l / m(i, j).get_den());
    }
    mpz_class prev = 1;
    int sign = 1;
    std::size_t r = 0;
    for (std::size_t c = 0; c < C && r < R; ++c) {
        std::size_t p = r;
        while (p < R && a[p][c] == 0) ++p;
        if (p == R) continue;
        if (p != r) {
            std::swap(a[p], a[r]);
            sign = -sign;
        }
        for (std::size_t i = r + 1; i < R; ++i) {
            for (std::size_t j = c + 1; j < C; ++j) {
                a[i][j] = a[r][c] * a[i][j] - a[i][c] * a[r][j];
                mpz_divexact(a[i][j].get_mpz_t(), a[i][j].get_mpz_t(), prev.get_mpz_t());
            }
            a[i][c] = 0;
        }
        prev = a[r][c];
        ++r;
    }
    mpz_class d = 0;
    if (R == C && r == R) d = sign * a[R - 1][C - 1];
    return {r, d};
}

} // namespace

std::size_t rank(const QMat& m) {
    if (m.rows() == 0 || m.cols() == 0) return 0;
    return bareiss(m, nullptr).first;
}

Rat det(const QMat& m) {
    if (!m.square()) throw std::invalid_argument("det of non-square matrix");
    if (m.rows() == 0) return 1;
    std::vector<mpz_class> scales;
    auto [r, d] = bareiss(m, &scales);
    if (r < m.rows()) return 0;
    Rat out(d);
    for (const auto& s : scales) out /= s;
    out.canonicalize();
    return out;
}

QMat rref(const QMat& m, std::vector<std::size_t>* pivots) {
    QMat a(m);
    std::size_t R = a.rows(), C = a.cols(), r = 0;
    if (pivots) pivots->clear();
    for (std::size_t c = 0; c < C && r < R; ++c) {
        std::size_t p = r;
        while (p < R && a(p, c) == 0) ++p;
        if (p == R) continue;
        if (p != r)
            for (std::size_t j = 0; j < C; ++j) std::swap(a(p, j), a(r, j));
        Rat inv = 1 / a(r, c);
        for (std::size_t j = c; j < C; ++j) a(r, j) *= inv;
        for (std::size_t i = 0; i < R; ++i) {
            if (i == r || a(i, c) == 0) continue;
            Rat f = a(i, c);
            for (std::size_t j = c; j < C; ++j)
                if (a(r, j) != 0) a(i, j) -= f * a(r, j);
        }
        if (pivots) pivots->push_back(c);
        ++r;
    }
    return a;
}

QMat kernel(const QMat& m) {
    std::vector<std::size_t> piv;
    QMat a = rref(m, &piv);
    std::size_t C = m.cols();
    std::vector<bool> is_piv(C, false);
    for (auto p : piv) is_piv[p] = true;
    std::vector<QVec> basis;
    for (std::size_t f = 0; f < C; ++f) {
        if (is_piv[f]) continue;
        QVec v(C);
        v[f] = 1;
        for (std::size_t r = 0; r < piv.size(); ++r) v[piv[r]] = -a(r, f);
        basis.push_back(std::move(v));
    }
    return QMat::from_columns(basis, C);
}

std::optional<QMat> inverse(const QMat& m) {
    if (!m.square()) throw std::invalid_argument("inverse of non-square matrix");
    std::size_t n = m.rows();
    std::vector<std::size_t> piv;
    QMat a = rref(hstack(m, QMat::identity(n)), &piv);
    if (piv.size() < n || (n > 0 && piv[n - 1] != n - 1)) return std::nullopt;
    return a.block(0, n, n, n);
}

std::optional<QVec> solve(const QMat& m, const QVec& b) {
    if (b.size() != m.rows()) throw std::invalid_argument("solve: shape mismatch");
    QMat aug = hstack(m, QMat::from_columns({b}, b.size()));
    std::vector<std::size_t> piv;
    QMat a = rref(aug, &piv);
    QVec x(m.cols());
    for (std::size_t r = 0; r < piv.size(); ++r) {
        if (piv[r] == m.cols()) return std::nullopt;
        x[piv[r]] = a(r, m.cols());
    }
    return x;
}

QMat hstack(const QMat& a, const QMat& b) {
    if (a.rows() != b.rows()) throw std::invalid_argument("hstack: row mismatch");
    QMat r(a.rows(), a.cols() + b.cols());
    r.set_block(0, 0, a);
    r.set_block(0, a.cols(), b);
    return r;
}

QMat vstack(const QMat& a, const QMat& b) {
    if (a.cols() != b.cols()) throw std::invalid_argument("vstack: column mismatch");
    QMat r(a.rows() + b.rows(), a.cols());
    r.set_block(0, 0, a);
    r.set_block(a.rows(), 0, b);
    return r;
}

QMat power(const QMat& m, unsigned k) {
    QMat r = QMat::identity(m.rows());
    QMat b = m;
    while (k) {
        if (k & 1) r = r * b;
        k >>= 1;
        if (k) b = b * b;
    }
    return r;
}

Rat trace(const QMat& m) {
    Rat t = 0;
    for (std::size_t i = 0; i < std::min(m.rows(), m.cols()); ++i) t += m(i, i);
    return t;
}

// ---------------------------------------------------------------- QPoly

QPoly::QPoly(std::vector<Rat> coeffs) : m_c(std::move(coeffs)) { trim(); }

QPoly QPoly::from_ints(const std::vector<long>& coeffs) {
    std::vector<Rat> c;
    for (long v : coeffs) c.emplace_back(v);
    return QPoly(std::move(c));
}

QPoly QPoly::constant(const Rat& c) { return QPoly(std::vector<Rat>{c}); }

QPoly QPoly::monomial(const Rat& c, std::size_t deg) {
    std::vector<Rat> v(deg + 1);
    v[deg] = c;
    return QPoly(std::move(v));
}

void QPoly::trim() {
    while (!m_c.empty() && m_c.back() == 0) m_c.pop_back();
}

const Rat& QPoly::coeff(std::size_t i) const {
    static const Rat zero = 0;
    return i < m_c.size() ? m_c[i] : zero;
}

Rat QPoly::lead() const { return m_c.empty() ? Rat(0) : m_c.back(); }

QPoly QPoly::operator+(const QPoly& o) const {
    std::vector<Rat> r(std::max(m_c.size(), o.m_c.size()));
    for (std::size_t i = 0; i < r.size(); ++i) r[i] = coeff(i) + o.coeff(i);
    return QPoly(std::move(r));
}

QPoly QPoly::operator-(const QPoly& o) const {
    std::vector<Rat> r(std::max(m_c.size(), o.m_c.size()));
    for (std::size_t i = 0; i < r.size(); ++i) r[i] = coeff(i) - o.coeff(i);
    return QPoly(std::move(r));
}

QPoly QPoly::operator-() const { return *this * Rat(-1); }

QPoly QPoly::operator*(const QPoly& o) const {
    if (is_zero() || o.is_zero()) return {};
    std::vector<Rat> r(m_c.size() + o.m_c.size() - 1);
    for (std::size_t i = 0; i < m_c.size(); ++i) {
        if (m_c[i] == 0) continue;
        for (std::size_t j = 0; j < o.m_c.size(); ++j) r[i + j] += m_c[i] * o.m_c[j];
    }
    return QPoly(std::move(r));
}

QPoly QPoly::operator*(const Rat& s) const {
    std::vector<Rat> r(m_c);
    for (auto& x : r) x *= s;
    return QPoly(std::move(r));
}

Rat QPoly::eval(const Rat& t) const {
    Rat acc = 0;
    for (std::size_t i = m_c.size(); i-- > 0;) acc = acc * t + m_c[i];
    return acc;
}

QMat QPoly::eval(const QMat& m) const {
    if (!m.square()) throw std::invalid_argument("polynomial of non-square matrix");
    QMat acc(m.rows(), m.cols());
    QMat id = QMat::identity(m.rows());
    for (std::size_t i = m_c.size(); i-- > 0;) acc = acc * m + id * m_c[i];
    return acc;
}

QPoly QPoly::derivative() const {
    if (m_c.size() <= 1) return {};
    std::vector<Rat> r(m_c.size() - 1);
    for (std::size_t i = 1; i < m_c.size(); ++i) r[i - 1] = m_c[i] * static_cast<long>(i);
    return QPoly(std::move(r));
}

QPoly QPoly::monic() const {
    if (is_zero()) return {};
    return *this * (Rat(1) / lead());
}

QPoly QPoly::scale_arg(const Rat& c) const {
    std::vector<Rat> r(m_c);
    Rat pw = 1;
    for (auto& x : r) {
        x *= pw;
        pw *= c;
    }
    return QPoly(std::move(r));
}

std::string QPoly::str(const std::string& var) const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = m_c.size(); i-- > 0;) {
        const Rat& c = m_c[i];
        if (c == 0) continue;
        Rat a = abs(c);
        os << (c < 0 ? (first ? "-" : " - ") : (first ? "" : " + "));
        if (i == 0 || a != 1) os << a.get_str();
        if (i > 0) os << var;
        if (i > 1) os << "^" << i;
        first = false;
    }
    return os.str();
}

std::pair<QPoly, QPoly> divmod(const QPoly& a, const QPoly& b) {
    if (b.is_zero()) throw std::invalid_argument("polynomial division by zero");
    if (a.degree() < b.degree()) return {QPoly(), a};
    std::vector<Rat> r = a.coeffs();
    std::vector<Rat> q(a.degree() - b.degree() + 1);
    std::size_t db = b.degree();
    Rat lb = b.lead();
    for (std::size_t k = q.size(); k-- > 0;) {
        Rat f = r[k + db] / lb;
        q[k] = f;
        if (f == 0) continue;
        for (std::size_t j = 0; j <= db; ++j) r[k + j] -= f * b.coeff(j);
    }
    return {QPoly(std::move(q)), QPoly(std::move(r))};
}

QPoly gcd(const QPoly& a, const QPoly& b) {
    QPoly x = a, y = b;
    while (!y.is_zero()) {
        QPoly r = divmod(x, y).second;
        x = std::move(y);
        y = r.monic();
    }
    return x.monic();
}

QPoly pow(const QPoly& p, unsigned k) {
    QPoly r = QPoly::constant(1);
    for (unsigned i = 0; i < k; ++i) r = r * p;
    return r;
}

QPoly squarefree_part(const QPoly& p) {
    if (p.degree() <= 0) return p.monic();
    return divmod(p.monic(), gcd(p, p.derivative())).first;
}

QPoly charpoly(const QMat& m) {
    if (!m.square()) throw std::invalid_argument("charpoly of non-square matrix");
    // Faddeev-LeVerrier: M_k = A M_{k-1} + c_{n-k+1} I, c_{n-k} = -tr(A M_k)/k.
    std::size_t n = m.rows();
    std::vector<Rat> c(n + 1);
    c[n] = 1;
    QMat mk(n, n);
    QMat id = QMat::identity(n);
    for (std::size_t k = 1; k <= n; ++k) {
        mk = m * mk + id * c[n - k + 1];
        c[n - k] = -trace(m * mk) / Rat(static_cast<long>(k));
    }
    return QPoly(std::move(c));
}

QMat companion(const QPoly& monic_p) {
    if (monic_p.degree() < 1 || monic_p.lead() != 1) throw std::invalid_argument("companion needs a monic polynomial of degree >= 1");
    std::size_t d = monic_p.degree();
    QMat m(d, d);
    for (std::size_t i = 1; i < d; ++i) m(i, i - 1) = 1;
    for (std::size_t i = 0; i < d; ++i) m(i, d - 1) = -monic_p.coeff(i);
    return m;
}

// ---------------------------------------------------------------- profiles

unsigned PrimaryProfile::count(unsigned size) const {
    return static_cast<unsigned>(std::count(block_sizes.begin(), block_sizes.end(), size));
}

std::vector<PrimaryProfile> primary_profiles(const QMat& m) {
    if (!m.square()) throw std::invalid_argument("primary_profiles of non-square matrix");
    std::vector<PrimaryProfile> out;
    if (m.rows() == 0) return out;
    for (const auto& fac : factor_irreducible(charpoly(m))) {
        QMat pm = fac.poly.eval(m);
        std::size_t d = fac.poly.degree();
        std::vector<long> r{static_cast<long>(m.rows())};
        QMat acc = pm;
        for (unsigned k = 1; k <= fac.mult + 1; ++k) {
            r.push_back(static_cast<long>(rank(acc)));
            if (k <= fac.mult) acc = acc * pm;
        }
        PrimaryProfile prof{fac.poly, {}};
        for (unsigned k = fac.mult; k >= 1; --k) {
            long cnt = (r[k - 1] - 2 * r[k] + r[k + 1]) / static_cast<long>(d);
            for (long i = 0; i < cnt; ++i) prof.block_sizes.push_back(k);
        }
        out.push_back(std::move(prof));
    }
    return out;
}

// ---------------------------------------------------------------- real roots

namespace {

int sign_at(const QPoly& p, const std::optional<Rat>& t, bool plus_inf) {
    if (t) return sgn(p.eval(*t));
    int s = sgn(p.lead());
    if (!plus_inf && p.degree() % 2 == 1) s = -s;
    return s;
}

unsigned variations(const std::vector<QPoly>& seq, const std::optional<Rat>& t, bool plus_inf) {
    unsigned v = 0;
    int last = 0;
    for (const auto& q : seq) {
        int s = sign_at(q, t, plus_inf);
        if (s == 0) continue;
        if (last != 0 && s != last) ++v;
        last = s;
    }
    return v;
}

} // namespace

unsigned sturm_count(const QPoly& p, const std::optional<Rat>& lo, const std::optional<Rat>& hi) {
    if (lo && hi && *lo >= *hi) throw std::invalid_argument("sturm_count: degenerate interval");
    if (p.is_zero()) throw std::invalid_argument("sturm_count: zero polynomial");
    QPoly s = squarefree_part(p);
    if (s.degree() <= 0) return 0;
    std::vector<QPoly> seq{s, s.derivative()};
    while (true) {
        QPoly r = divmod(seq[seq.size() - 2], seq.back()).second;
        if (r.is_zero()) break;
        seq.push_back(-r);
    }
    unsigned vlo = variations(seq, lo, false);
    unsigned vhi = variations(seq, hi, true);
    return vlo - vhi;
}

RootClassification root_classes(const QPoly& p) {
    if (p.degree() < 1) throw std::invalid_argument("root_classes: constant polynomial");
    if (!is_irreducible(p)) throw std::invalid_argument("root_classes: reducible input " + p.str());
    QPoly q = p.monic();
    RootClassification rc;
    rc.is_zero = (q == QPoly::x());
    rc.n_real = sturm_count(q);
    // q(iy) = A(y) + i B(y) with i^k cycling 1, i, -1, -i.
    std::vector<Rat> a(q.coeffs().size()), b(q.coeffs().size());
    for (std::size_t k = 0; k < q.coeffs().size(); ++k) {
        const Rat& c = q.coeff(k);
        switch (k % 4) {
        case 0: a[k] = c; break;
        case 1: b[k] = c; break;
        case 2: a[k] = -c; break;
        default: b[k] = -c; break;
        }
    }
    QPoly g = gcd(QPoly(a), QPoly(b));
    if (g.degree() >= 1) rc.n_imag_pairs = sturm_count(g, Rat(0), std::nullopt);
    long rest = q.degree() - static_cast<long>(rc.n_real) - 2 * static_cast<long>(rc.n_imag_pairs);
    rc.n_generic_pairs = static_cast<unsigned>(rest / 2);
    return rc;
}

QPoly negation_partner(const QPoly& p) {
    return p.scale_arg(-1).monic();
}

} // namespace cslie

// Factorization over Q: squarefree decomposition, then Zassenhaus
// (distinct/equal-degree factorization mod p, Hensel lifting, subset recombination).
#include "cslie/exactalg.hpp"

#include <algorithm>
#include <random>

namespace cslie {

namespace {

using ZPoly = std::vector<mpz_class>;

void ztrim(ZPoly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

long zdeg(const ZPoly& a) { return static_cast<long>(a.size()) - 1; }

mpz_class modn(const mpz_class& x, const mpz_class& m) {
    mpz_class r;
    mpz_mod(r.get_mpz_t(), x.get_mpz_t(), m.get_mpz_t());
    return r;
}

ZPoly zmod(ZPoly a, const mpz_class& m) {
    for (auto& c : a) c = modn(c, m);
    ztrim(a);
    return a;
}

ZPoly zadd(const ZPoly& a, const ZPoly& b, const mpz_class& m) {
    ZPoly r(std::max(a.size(), b.size()));
    for (std::size_t i = 0; i < r.size(); ++i) {
        if (i < a.size()) r[i] += a[i];
        if (i < b.size()) r[i] += b[i];
    }
    return zmod(std::move(r), m);
}

ZPoly zsub(const ZPoly& a, const ZPoly& b, const mpz_class& m) {
    ZPoly r(std::max(a.size(), b.size()));
    for (std::size_t i = 0; i < r.size(); ++i) {
        if (i < a.size()) r[i] += a[i];
        if (i < b.size()) r[i] -= b[i];
    }
    return zmod(std::move(r), m);
}

ZPoly zmul(const ZPoly& a, const ZPoly& b, const mpz_class& m) {
    if (a.empty() || b.empty()) return {};
    ZPoly r(a.size() + b.size() - 1);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    }
    return zmod(std::move(r), m);
}

ZPoly zscale(const ZPoly& a, const mpz_class& s, const mpz_class& m) {
    ZPoly r(a);
    for (auto& c : r) c *= s;
    return zmod(std::move(r), m);
}

mpz_class zinv(const mpz_class& a, const mpz_class& m) {
    mpz_class r;
    if (mpz_invert(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t()) == 0)
        throw std::logic_error("non-invertible element in modular arithmetic");
    return r;
}

// Division by b whose leading coefficient is a unit mod m.
std::pair<ZPoly, ZPoly> zdivmod(const ZPoly& a, const ZPoly& b, const mpz_class& m) {
    ZPoly r = zmod(a, m);
    if (zdeg(r) < zdeg(b)) return {{}, r};
    mpz_class li = zinv(b.back(), m);
    std::size_t db = b.size() - 1;
    ZPoly q(r.size() - db);
    for (std::size_t k = q.size(); k-- > 0;) {
        mpz_class f = modn(r[k + db] * li, m);
        q[k] = f;
        if (f == 0) continue;
        for (std::size_t j = 0; j <= db; ++j) r[k + j] = modn(r[k + j] - f * b[j], m);
    }
    ztrim(q);
    ztrim(r);
    return {q, r};
}

ZPoly zmonic(const ZPoly& a, const mpz_class& p) {
    if (a.empty()) return a;
    return zscale(a, zinv(a.back(), p), p);
}

ZPoly zgcd(ZPoly a, ZPoly b, const mpz_class& p) {
    a = zmod(a, p);
    b = zmod(b, p);
    while (!b.empty()) {
        ZPoly r = zdivmod(a, b, p).second;
        a = std::move(b);
        b = std::move(r);
    }
    return zmonic(a, p);
}

// s, t with s a + t b = 1 mod p; a, b coprime.
std::pair<ZPoly, ZPoly> zext_gcd(const ZPoly& a, const ZPoly& b, const mpz_class& p) {
    ZPoly r0 = zmod(a, p), r1 = zmod(b, p);
    ZPoly s0{1}, s1{}, t0{}, t1{1};
    while (!r1.empty()) {
        auto [q, r] = zdivmod(r0, r1, p);
        ZPoly s2 = zsub(s0, zmul(q, s1, p), p);
        ZPoly t2 = zsub(t0, zmul(q, t1, p), p);
        r0 = std::move(r1);
        r1 = std::move(r);
        s0 = std::move(s1);
        s1 = std::move(s2);
        t0 = std::move(t1);
        t1 = std::move(t2);
    }
    if (r0.size() != 1) throw std::logic_error("ext_gcd: inputs not coprime mod p");
    mpz_class inv = zinv(r0[0], p);
    return {zscale(s0, inv, p), zscale(t0, inv, p)};
}

ZPoly zpowmod(ZPoly base, mpz_class e, const ZPoly& mod, const mpz_class& p) {
    ZPoly r{1};
    base = zdivmod(base, mod, p).second;
    while (e > 0) {
        if (mpz_odd_p(e.get_mpz_t())) r = zdivmod(zmul(r, base, p), mod, p).second;
        e >>= 1;
        if (e > 0) base = zdivmod(zmul(base, base, p), mod, p).second;
    }
    return r;
}

ZPoly zderiv(const ZPoly& a) {
    if (a.size() <= 1) return {};
    ZPoly r(a.size() - 1);
    for (std::size_t i = 1; i < a.size(); ++i) r[i - 1] = a[i] * static_cast<unsigned long>(i);
    return r;
}

// Monic squarefree f mod p -> monic irreducible factors.
std::vector<ZPoly> factor_mod_p(const ZPoly& f_in, const mpz_class& p, std::mt19937_64& rng) {
    std::vector<std::pair<ZPoly, long>> ddf;
    ZPoly f = f_in;
    ZPoly xpoly{0, 1};
    ZPoly h = xpoly;
    for (long d = 1; zdeg(f) >= 2 * d; ++d) {
        h = zpowmod(h, p, f, p);
        ZPoly g = zgcd(f, zsub(h, xpoly, p), p);
        if (zdeg(g) > 0) {
            ddf.emplace_back(g, d);
            f = zdivmod(f, g, p).first;
            h = zdivmod(h, f, p).second;
        }
    }
    if (zdeg(f) > 0) ddf.emplace_back(zmonic(f, p), zdeg(f));

    std::vector<ZPoly> out;
    for (auto& [g, d] : ddf) {
        std::vector<ZPoly> stack{g};
        mpz_class pd;
        mpz_pow_ui(pd.get_mpz_t(), p.get_mpz_t(), static_cast<unsigned long>(d));
        mpz_class e = (pd - 1) / 2;
        while (!stack.empty()) {
            ZPoly cur = stack.back();
            stack.pop_back();
            if (zdeg(cur) == d) {
                out.push_back(zmonic(cur, p));
                continue;
            }
            while (true) {
                ZPoly a(cur.size() - 1);
                for (auto& c : a) c = static_cast<unsigned long>(rng() % p.get_ui());
                ztrim(a);
                if (zdeg(a) < 1) continue;
                ZPoly b = zsub(zpowmod(a, e, cur, p), ZPoly{1}, p);
                ZPoly c = zgcd(cur, b, p);
                if (zdeg(c) > 0 && zdeg(c) < zdeg(cur)) {
                    stack.push_back(c);
                    stack.push_back(zmonic(zdivmod(cur, c, p).first, p));
                    break;
                }
            }
        }
    }
    return out;
}

// f = G H mod p^K from f = g h mod p; g monic, lc(h) = lc(f) mod p.
std::pair<ZPoly, ZPoly> hensel_lift(const ZPoly& f, const ZPoly& g, const ZPoly& h, const mpz_class& p,
                                    unsigned K) {
    auto [s, t] = zext_gcd(g, h, p);
    mpz_class q = p;
    mpz_class pk;
    mpz_pow_ui(pk.get_mpz_t(), p.get_mpz_t(), K);
    ZPoly G = g, H = h;
    H.back() = modn(f.back(), pk);
    for (unsigned k = 1; k < K; ++k) {
        mpz_class q1 = q * p;
        ZPoly e = zsub(zmod(f, q1), zmul(G, H, q1), q1);
        for (auto& c : e) {
            if (!mpz_divisible_p(c.get_mpz_t(), q.get_mpz_t())) throw std::logic_error("Hensel step not exact");
            c /= q;
        }
        e = zmod(e, p);
        auto [qq, dG] = zdivmod(zmul(t, e, p), g, p);
        ZPoly dH = zadd(zmul(s, e, p), zmul(qq, h, p), p);
        G = zadd(G, zscale(dG, q, q1), q1);
        H = zadd(H, zscale(dH, q, q1), q1);
        q = q1;
    }
    return {G, H};
}

mpz_class symmetric(const mpz_class& c, const mpz_class& m) {
    mpz_class r = modn(c, m);
    if (2 * r > m) r -= m;
    return r;
}

mpz_class content(const ZPoly& a) {
    mpz_class g = 0;
    for (const auto& c : a) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    return g;
}

ZPoly primitive(ZPoly a) {
    mpz_class c = content(a);
    if (c == 0) return a;
    if (a.back() < 0) c = -c;
    for (auto& x : a) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), c.get_mpz_t());
    return a;
}

ZPoly to_zpoly(const QPoly& q) {
    mpz_class l = 1;
    for (const auto& c : q.coeffs()) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den_mpz_t());
    ZPoly r;
    for (const auto& c : q.coeffs()) r.push_back(c.get_num() * (l / c.get_den()));
    return primitive(r);
}

QPoly to_qpoly(const ZPoly& z) {
    std::vector<Rat> c;
    for (const auto& x : z) c.emplace_back(x);
    return QPoly(std::move(c));
}

// Exact quotient over Z if b divides a.
std::optional<ZPoly> zexact_div(const ZPoly& a, const ZPoly& b) {
    auto [q, r] = divmod(to_qpoly(a), to_qpoly(b));
    if (!r.is_zero()) return std::nullopt;
    ZPoly out;
    for (const auto& c : q.coeffs()) {
        if (c.get_den() != 1) return std::nullopt;
        out.push_back(c.get_num());
    }
    return out;
}

const unsigned kPrimes[] = {3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59, 61, 67, 71, 73,
                            79, 83, 89, 97, 101, 103, 107, 109, 113, 127, 131, 137, 139, 149, 151, 157,
                            163, 167, 173, 179, 181, 191, 193, 197, 199, 211, 223, 227, 229, 233, 239};

// Primitive squarefree f with positive leading coefficient -> primitive irreducible factors.
std::vector<ZPoly> zassenhaus(ZPoly f) {
    if (zdeg(f) <= 1) return {f};
    std::mt19937_64 rng(0x5eed);

    mpz_class best_p = 0;
    std::vector<ZPoly> best;
    int tried = 0;
    for (unsigned pr : kPrimes) {
        mpz_class p = pr;
        if (modn(f.back(), p) == 0) continue;
        ZPoly fp = zmod(f, p);
        if (zdeg(zgcd(fp, zderiv(fp), p)) > 0) continue;
        auto facs = factor_mod_p(zmonic(fp, p), p, rng);
        if (best_p == 0 || facs.size() < best.size()) {
            best_p = p;
            best = std::move(facs);
        }
        if (best.size() == 1 || ++tried == 5) break;
    }
    if (best_p == 0) throw std::logic_error("no suitable prime for factorization");
    if (best.size() == 1) return {f};
    const mpz_class& p = best_p;

    long n = zdeg(f);
    mpz_class maxc = 0;
    for (const auto& c : f) maxc = std::max<mpz_class>(maxc, abs(c));
    mpz_class root;
    mpz_class np1 = n + 1;
    mpz_sqrt(root.get_mpz_t(), np1.get_mpz_t());
    mpz_class bound = (root + 1) * maxc * abs(f.back()) * 2;
    bound <<= static_cast<mp_bitcnt_t>(n);
    unsigned K = 1;
    mpz_class M = p;
    while (M <= bound) {
        M *= p;
        ++K;
    }

    std::vector<ZPoly> lifted;
    ZPoly F = zmod(f, M);
    for (std::size_t i = 0; i + 1 < best.size(); ++i) {
        ZPoly h{modn(f.back(), p)};
        for (std::size_t j = i + 1; j < best.size(); ++j) h = zmul(h, best[j], p);
        auto [G, H] = hensel_lift(F, best[i], h, p, K);
        lifted.push_back(G);
        F = H;
    }
    lifted.push_back(zscale(F, zinv(F.back(), M), M));

    std::vector<ZPoly> out;
    ZPoly rest = f;
    std::vector<ZPoly> pool = lifted;
    for (std::size_t s = 1; 2 * s <= pool.size(); ++s) {
        bool restart = true;
        while (restart) {
            restart = false;
            std::vector<std::size_t> idx(s);
            for (std::size_t i = 0; i < s; ++i) idx[i] = i;
            while (true) {
                ZPoly g{rest.back()};
                for (auto i : idx) g = zmul(g, pool[i], M);
                for (auto& c : g) c = symmetric(c, M);
                ztrim(g);
                g = primitive(g);
                if (auto q = zexact_div(rest, g)) {
                    out.push_back(g);
                    rest = primitive(*q);
                    for (std::size_t k = s; k-- > 0;) pool.erase(pool.begin() + static_cast<long>(idx[k]));
                    restart = 2 * s <= pool.size();
                    break;
                }
                std::size_t k = s;
                while (k > 0 && idx[k - 1] == pool.size() - s + k - 1) --k;
                if (k == 0) break;
                ++idx[k - 1];
                for (std::size_t j = k; j < s; ++j) idx[j] = idx[j - 1] + 1;
            }
        }
    }
    if (zdeg(rest) > 0) out.push_back(rest);
    return out;
}

} // namespace

std::vector<Factor> factor_irreducible(const QPoly& p) {
    if (p.is_zero()) throw std::invalid_argument("factor_irreducible: zero polynomial");
    std::vector<Factor> out;
    if (p.degree() == 0) return out;
    // Yun's squarefree decomposition.
    QPoly a = p.monic();
    QPoly b = a.derivative();
    QPoly c = gcd(a, b);
    QPoly w = divmod(a, c).first;
    QPoly y = divmod(b, c).first;
    QPoly z = y - w.derivative();
    for (unsigned i = 1; w.degree() > 0; ++i) {
        QPoly g = gcd(w, z);
        if (g.degree() > 0) {
            for (const auto& zf : zassenhaus(to_zpoly(g))) out.push_back({to_qpoly(zf).monic(), i});
        }
        w = divmod(w, g).first;
        y = divmod(z, g).first;
        z = y - w.derivative();
    }
    std::sort(out.begin(), out.end(), [](const Factor& l, const Factor& r) {
        if (l.poly.degree() != r.poly.degree()) return l.poly.degree() < r.poly.degree();
        const auto& a1 = l.poly.coeffs();
        const auto& a2 = r.poly.coeffs();
        return std::lexicographical_compare(a1.begin(), a1.end(), a2.begin(), a2.end());
    });
    return out;
}

bool is_irreducible(const QPoly& p) {
    if (p.degree() < 1) return false;
    auto f = factor_irreducible(p);
    return f.size() == 1 && f[0].mult == 1;
}

} // namespace cslie

#include "cslie/almostabelian.hpp"

#include <map>

namespace cslie {

namespace {

// Block-size multiset per irreducible factor; signed so that deltas can go negative.
using Counts = std::map<unsigned, long>;

struct Spectrum {
    std::vector<QPoly> factors;
    std::vector<Counts> counts;

    Counts* find(const QPoly& p) {
        for (std::size_t i = 0; i < factors.size(); ++i)
            if (factors[i] == p) return &counts[i];
        return nullptr;
    }
    Counts& get(const QPoly& p) {
        if (auto* c = find(p)) return *c;
        factors.push_back(p);
        counts.emplace_back();
        return counts.back();
    }
};

Spectrum spectrum_of(const std::vector<PrimaryProfile>& profs) {
    Spectrum s;
    for (const auto& pr : profs) {
        Counts& c = s.get(pr.factor);
        for (unsigned b : pr.block_sizes) ++c[b];
    }
    return s;
}

long at(const Counts& c, unsigned m) {
    auto it = c.find(m);
    return it == c.end() ? 0 : it->second;
}

// Drops zero entries so that equality compares multisets.
Counts normalized(const Counts& c) {
    Counts r;
    for (auto [k, v] : c)
        if (v != 0) r[k] = v;
    return r;
}

bool all_even(const Counts& c) {
    for (auto [k, v] : c)
        if (v % 2 != 0) return false;
    return true;
}

QPoly linear(const Rat& root) { return QPoly({-root, Rat(1)}); }

bool is_x(const QPoly& p) { return p == QPoly::x(); }

std::string root_str(const Rat& r) { return r.get_str(); }

bool zero_parities_ok(const Counts& z, std::optional<unsigned> skip_k, std::string* why) {
    for (auto [m, v] : z) {
        if (v == 0) continue;
        unsigned k = (m + 1) / 2;
        if (skip_k && k == *skip_k) continue;
        bool ok = m % 2 == 0 ? v % 2 == 0 : v % 4 == 0;
        if (!ok) {
            if (why)
                *why = "N(" + std::to_string(m) + ",0) = " + std::to_string(v) +
                       (m % 2 == 0 ? " is odd" : " is not divisible by 4");
            return false;
        }
    }
    return true;
}

long mod(long a, long m) { return ((a % m) + m) % m; }

} // namespace

bool sp_profile_admissible(const std::vector<PrimaryProfile>& profiles) {
    Spectrum s = spectrum_of(profiles);
    for (std::size_t i = 0; i < s.factors.size(); ++i) {
        const QPoly& p = s.factors[i];
        Counts c = normalized(s.counts[i]);
        if (is_x(p)) {
            if (!zero_parities_ok(c, std::nullopt, nullptr)) return false;
            continue;
        }
        Counts* partner = s.find(negation_partner(p));
        if (!partner || normalized(*partner) != c) return false;
        auto rc = root_classes(p);
        if ((rc.n_real > 0 || rc.n_imag_pairs > 0) && !all_even(c)) return false;
    }
    return true;
}

namespace {

// Conditions on every factor other than x and the linear factors at +-a0 (a0 may be absent).
bool other_factors_ok(Spectrum& s, const std::optional<Rat>& a0, std::string* why) {
    for (std::size_t i = 0; i < s.factors.size(); ++i) {
        const QPoly& p = s.factors[i];
        if (is_x(p)) continue;
        if (a0 && (p == linear(*a0) || p == linear(-*a0))) continue;
        Counts c = normalized(s.counts[i]);
        auto rc = root_classes(p);
        Counts* partner = s.find(negation_partner(p));
        Counts pc = partner ? normalized(*partner) : Counts{};
        if ((rc.n_generic_pairs > 0 || rc.n_real > 0) && pc != c) {
            if (why) *why = "Jordan data of " + p.str() + " and " + negation_partner(p).str() + " differ";
            return false;
        }
        if ((rc.n_imag_pairs > 0 || rc.n_real > 0) && !all_even(c)) {
            if (why) *why = "odd Jordan block count for " + p.str();
            return false;
        }
    }
    return true;
}

} // namespace

ExistenceVerdict classify_existence(const QMat& f) {
    if (!f.square() || (f.rows() + 1) % 4 != 0) throw DimensionNotMultipleOf4(f.rows() + 1);
    ExistenceVerdict v;
    Spectrum s = spectrum_of(primary_profiles(f));
    Counts zero = s.find(QPoly::x()) ? normalized(*s.find(QPoly::x())) : Counts{};

    if (trace(f) != 0) {
        std::string why;
        if (!zero_parities_ok(zero, std::nullopt, &why)) {
            v.label = why;
            return v;
        }
        std::string first_why;
        for (std::size_t i = 0; i < s.factors.size(); ++i) {
            const QPoly& p = s.factors[i];
            if (p.degree() != 1 || is_x(p)) continue;
            Rat a0 = -p.coeff(0);
            Counts pos = normalized(s.counts[i]);
            Counts* negp = s.find(linear(-a0));
            Counts neg = negp ? normalized(*negp) : Counts{};
            std::string w;
            if (!all_even(pos)) {
                w = "N(m," + root_str(a0) + ") is odd for some m";
            } else if (!other_factors_ok(s, a0, &w)) {
            } else {
                unsigned top = 1;
                for (auto [m, c] : pos) top = std::max(top, m);
                for (auto [m, c] : neg) top = std::max(top, m);
                // Positions where the counts at a0 and -a0 differ.
                std::vector<unsigned> diff;
                for (unsigned m = 1; m <= top; ++m)
                    if (at(pos, m) != at(neg, m)) diff.push_back(m);
                if (diff.size() == 1 && diff[0] == 1 && at(pos, 1) == at(neg, 1) + 1) {
                    v.yes = true;
                    v.label = "(a)(i)";
                    v.a0 = a0;
                    return v;
                }
                if (diff.size() == 2 && diff[1] == diff[0] + 1 && at(pos, diff[0]) == at(neg, diff[0]) - 1 &&
                    at(pos, diff[1]) == at(neg, diff[1]) + 1) {
                    v.yes = true;
                    v.label = "(a)(ii)";
                    v.a0 = a0;
                    v.offset = diff[0];
                    return v;
                }
                w = "Jordan data at " + root_str(a0) + " and " + root_str(-a0) + " match neither (a)(i) nor (a)(ii)";
            }
            if (first_why.empty()) first_why = w;
        }
        v.label = first_why.empty() ? "no nonzero rational eigenvalue can serve as a0" : first_why;
        return v;
    }

    std::string why;
    if (!other_factors_ok(s, std::nullopt, &why)) {
        v.label = why;
        return v;
    }
    std::vector<unsigned> bad;
    unsigned top = 0;
    for (auto [m, c] : zero) top = std::max(top, m);
    for (unsigned k = 1; 2 * k - 1 <= top; ++k)
        if (mod(at(zero, 2 * k), 2) != 0 || mod(at(zero, 2 * k - 1), 4) != 0) bad.push_back(k);
    if (bad.size() != 1) {
        v.label = bad.empty() ? "zero-eigenvalue Jordan data has no exceptional index k0"
                              : "zero-eigenvalue parities fail at more than one index";
        return v;
    }
    unsigned k0 = bad[0];
    long odd = mod(at(zero, 2 * k0 - 1), 4), even = at(zero, 2 * k0);
    v.offset = k0;
    if (k0 == 1 && odd == 3 && mod(even, 2) == 0)
        v.label = "(b)(i)";
    else if (k0 == 1 && odd == 1 && mod(even, 2) == 1)
        v.label = "(b)(ii)";
    else if (odd == 1 && mod(even, 4) == 3)
        v.label = "(b)(iii)";
    else if (k0 >= 2 && odd == 1 && mod(even, 2) == 1)
        v.label = "(b)(iv)";
    if (!v.label.empty()) {
        v.yes = true;
        return v;
    }
    v.label = "zero-eigenvalue Jordan data at k0 = " + std::to_string(k0) + " matches none of (b)(i)-(b)(iv)";
    return v;
}

namespace {

std::vector<PrimaryProfile> to_profiles(const Spectrum& s) {
    std::vector<PrimaryProfile> out;
    for (std::size_t i = 0; i < s.factors.size(); ++i) {
        PrimaryProfile p{s.factors[i], {}};
        for (auto [m, c] : s.counts[i])
            for (long j = 0; j < c; ++j) p.block_sizes.push_back(m);
        std::sort(p.block_sizes.rbegin(), p.block_sizes.rend());
        if (!p.block_sizes.empty()) out.push_back(std::move(p));
    }
    return out;
}

// Removes the given blocks; false if some block is missing.
bool remove_blocks(Spectrum& s, const QPoly& p, const std::vector<unsigned>& sizes) {
    Counts& c = s.get(p);
    for (unsigned m : sizes)
        if (--c[m] < 0) return false;
    return true;
}

} // namespace

bool classify_existence_oracle(const QMat& f) {
    if (!f.square() || (f.rows() + 1) % 4 != 0) throw DimensionNotMultipleOf4(f.rows() + 1);
    const Spectrum base = spectrum_of(primary_profiles(f));
    unsigned dim = static_cast<unsigned>(f.rows());
    auto try_remove = [&](const std::vector<std::pair<QPoly, std::vector<unsigned>>>& extra) {
        Spectrum s = base;
        for (const auto& [p, sizes] : extra)
            if (!remove_blocks(s, p, sizes)) return false;
        return sp_profile_admissible(to_profiles(s));
    };
    // Families with a = a0 != 0: blocks of the extra Y, JY, JX directions glued onto a chain of length p.
    for (const auto& p : base.factors) {
        if (p.degree() != 1 || is_x(p)) continue;
        Rat a0 = -p.coeff(0);
        for (unsigned len = 0; 2 * len + 1 <= dim; ++len) {
            std::vector<unsigned> neg = {len + 1};
            if (len > 0) neg.push_back(len);
            if (try_remove({{linear(a0), {len + 1, len + 1}}, {linear(-a0), neg}})) return true;
        }
    }
    const QPoly x = QPoly::x();
    if (try_remove({{x, {1, 1, 1}}}) || try_remove({{x, {1, 2}}})) return true;
    for (unsigned r = 1; 8 * r - 1 <= dim; ++r)
        if (try_remove({{x, {2 * r, 2 * r, 2 * r, 2 * r - 1}}})) return true;
    for (unsigned s = 1; 4 * s + 3 <= dim; ++s)
        if (try_remove({{x, {2 * s + 1, 2 * s + 2}}})) return true;
    return false;
}

Uniqueness uniqueness_hint(const QMat& f) {
    auto v = classify_existence(f);
    if (!v.yes) throw AlgebraError("uniqueness_hint: algebra admits no complex symplectic structure");
    if (v.label.rfind("(a)", 0) == 0 || v.label == "(b)(i)") return Uniqueness::UniqueUpToEquivalence;
    return Uniqueness::Unknown;
}

} // namespace cslie

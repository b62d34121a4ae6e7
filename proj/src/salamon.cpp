#include "cslie/liecore.hpp"

#include <cctype>
#include <map>
#include <sstream>

namespace cslie {

SalamonSyntaxError::SalamonSyntaxError(const std::string& what, std::size_t pos)
    : std::invalid_argument(what + " at position " + std::to_string(pos)), position(pos) {}

namespace {

class SalamonParser {
public:
    explicit SalamonParser(const std::string& s) : m_s(s) {}

    // Each slot maps (i,j) with i != j, 0-based, to the coefficient of e^{ij}.
    std::vector<std::map<std::pair<std::size_t, std::size_t>, Rat>> parse() {
        expect('(');
        std::vector<std::map<std::pair<std::size_t, std::size_t>, Rat>> slots;
        while (true) {
            parse_slot(slots);
            skip_ws();
            if (peek() == ',') {
                ++m_pos;
                continue;
            }
            expect(')');
            break;
        }
        skip_ws();
        if (m_pos != m_s.size()) fail("trailing characters");
        return slots;
    }

private:
    using Slot = std::map<std::pair<std::size_t, std::size_t>, Rat>;

    [[noreturn]] void fail(const std::string& msg) const { throw SalamonSyntaxError(msg, m_pos); }
    void skip_ws() {
        while (m_pos < m_s.size() && std::isspace(static_cast<unsigned char>(m_s[m_pos]))) ++m_pos;
    }
    char peek() {
        skip_ws();
        return m_pos < m_s.size() ? m_s[m_pos] : '\0';
    }
    void expect(char c) {
        if (peek() != c) fail(std::string("expected '") + c + "'");
        ++m_pos;
    }
    bool is_digit() { return m_pos < m_s.size() && std::isdigit(static_cast<unsigned char>(m_s[m_pos])); }
    std::string digits() {
        std::string d;
        while (is_digit()) d.push_back(m_s[m_pos++]);
        if (d.empty()) fail("expected a number");
        return d;
    }

    void parse_slot(std::vector<Slot>& slots) {
        skip_ws();
        std::size_t start = m_pos;
        // "0" or "0^n"
        if (peek() == '0') {
            std::size_t save = m_pos;
            ++m_pos;
            if (peek() == '^') {
                ++m_pos;
                skip_ws();
                unsigned long n = std::stoul(digits());
                if (n == 0) fail("empty zero run");
                for (unsigned long i = 0; i < n; ++i) slots.emplace_back();
                return;
            }
            char c = peek();
            if (c == ',' || c == ')') {
                slots.emplace_back();
                return;
            }
            m_pos = save;
        }
        Slot slot;
        bool first = true;
        while (true) {
            char c = peek();
            int sign = 1;
            if (c == '+' || c == '-') {
                sign = c == '-' ? -1 : 1;
                ++m_pos;
            } else if (!first) {
                break;
            }
            parse_term(slot, sign);
            first = false;
            c = peek();
            if (c == ',' || c == ')') break;
            if (c != '+' && c != '-') fail("expected '+', '-', ',' or ')'");
        }
        if (m_pos == start) fail("empty slot");
        slots.push_back(std::move(slot));
    }

    void parse_term(Slot& slot, int sign) {
        skip_ws();
        std::size_t term_start = m_pos;
        std::string first = digits();
        Rat coeff = sign;
        skip_ws();
        if (m_pos < m_s.size() && (m_s[m_pos] == '*' || m_s[m_pos] == '/')) {
            Rat c{mpz_class(first)};
            if (m_s[m_pos] == '/') {
                ++m_pos;
                skip_ws();
                mpz_class den(digits());
                if (den == 0) fail("zero denominator");
                c /= Rat(den);
                skip_ws();
            }
            if (m_pos >= m_s.size() || m_s[m_pos] != '*') fail("expected '*' after coefficient");
            ++m_pos;
            skip_ws();
            coeff *= c;
            first = digits();
        }
        std::size_t i, j;
        skip_ws();
        if (m_pos < m_s.size() && m_s[m_pos] == '.') {
            ++m_pos;
            skip_ws();
            i = std::stoul(first);
            j = std::stoul(digits());
        } else {
            if (first.size() != 2) {
                m_pos = term_start;
                fail("index pair must be two digits or dot-separated");
            }
            i = static_cast<std::size_t>(first[0] - '0');
            j = static_cast<std::size_t>(first[1] - '0');
        }
        if (i == 0 || j == 0) {
            m_pos = term_start;
            fail("indices start at 1");
        }
        if (i == j) {
            m_pos = term_start;
            fail("repeated index in term");
        }
        slot[{i - 1, j - 1}] += coeff;
    }

    const std::string& m_s;
    std::size_t m_pos = 0;
};

} // namespace

LieAlgebra parse_salamon(const std::string& text, bool check_jacobi) {
    SalamonParser p(text);
    auto slots = p.parse();
    std::size_t n = slots.size();
    std::map<std::tuple<std::size_t, std::size_t, std::size_t>, Rat> acc;
    for (std::size_t k = 0; k < n; ++k)
        for (const auto& [ij, coeff] : slots[k]) {
            auto [i, j] = ij;
            if (i >= n || j >= n)
                throw SalamonSyntaxError("index out of range in slot " + std::to_string(k + 1), 0);
            // de^k = coeff * e^{ij}  =>  c^k_{ij} = -coeff
            if (i < j)
                acc[{i, j, k}] -= coeff;
            else
                acc[{j, i, k}] += coeff;
        }
    std::vector<Bracket> br;
    for (const auto& [key, v] : acc)
        if (v != 0) br.push_back({std::get<0>(key), std::get<1>(key), std::get<2>(key), v});
    return LieAlgebra(n, br, check_jacobi);
}

std::string print_salamon(const LieAlgebra& L) {
    std::size_t n = L.dim();
    bool dotted = n >= 10;
    std::vector<std::string> slots(n);
    for (std::size_t k = 0; k < n; ++k) {
        std::ostringstream os;
        bool first = true;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j) {
                Rat d = -L.c(i, j, k);
                if (d == 0) continue;
                if (d < 0)
                    os << "-";
                else if (!first)
                    os << "+";
                Rat a = abs(d);
                if (a != 1) os << a.get_str() << "*";
                if (dotted)
                    os << (i + 1) << "." << (j + 1);
                else
                    os << (i + 1) << (j + 1);
                first = false;
            }
        slots[k] = first ? "0" : os.str();
    }
    std::ostringstream out;
    out << "(";
    for (std::size_t k = 0; k < n;) {
        if (k) out << ",";
        if (slots[k] == "0") {
            std::size_t run = 1;
            while (k + run < n && slots[k + run] == "0") ++run;
            if (run >= 2)
                out << "0^" << run;
            else
                out << "0";
            k += run;
            continue;
        }
        out << slots[k];
        ++k;
    }
    out << ")";
    return out.str();
}

} // namespace cslie

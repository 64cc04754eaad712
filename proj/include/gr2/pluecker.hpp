#pragma once

// Polynomials in the Plucker coordinates p_ij (i < j) of the 2x2 minors of a
// 2 x n matrix, the non-crossing monomial basis, and straightening.

#include "gr2/errors.hpp"
#include "gr2/rational.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <compare>
#include <map>
#include <numeric>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace gr2 {

using PlueckerVar = std::pair<int, int>;  // {i, j} with i < j

/// A monomial p^alpha, stored as the sorted multiset of its factors.
class PlueckerMonomial {
public:
    PlueckerMonomial() = default;

    explicit PlueckerMonomial(std::vector<PlueckerVar> factors) : factors_(std::move(factors)) {
        for (auto& [i, j] : factors_) {
            if (i == j || i < 1 || j < 1) throw std::invalid_argument("invalid Plucker variable");
            if (i > j) throw std::invalid_argument("Plucker variables need i < j");
        }
        std::sort(factors_.begin(), factors_.end());
    }

    static PlueckerMonomial var(int i, int j) { return PlueckerMonomial({{i, j}}); }

    const std::vector<PlueckerVar>& factors() const { return factors_; }
    int degree() const { return static_cast<int>(factors_.size()); }
    bool is_one() const { return factors_.empty(); }

    int exponent(int i, int j) const {
        return static_cast<int>(std::count(factors_.begin(), factors_.end(), PlueckerVar{i, j}));
    }

    /// (variable, exponent) pairs in lexicographic order.
    std::vector<std::pair<PlueckerVar, int>> exponents() const {
        std::vector<std::pair<PlueckerVar, int>> out;
        for (const auto& f : factors_) {
            if (!out.empty() && out.back().first == f)
                ++out.back().second;
            else
                out.emplace_back(f, 1);
        }
        return out;
    }

    int max_index() const {
        int m = 0;
        for (auto [i, j] : factors_) m = std::max(m, j);
        return m;
    }

    friend PlueckerMonomial operator*(const PlueckerMonomial& a, const PlueckerMonomial& b) {
        PlueckerMonomial r;
        r.factors_.reserve(a.factors_.size() + b.factors_.size());
        std::merge(a.factors_.begin(), a.factors_.end(), b.factors_.begin(), b.factors_.end(),
                   std::back_inserter(r.factors_));
        return r;
    }

    friend bool operator==(const PlueckerMonomial&, const PlueckerMonomial&) = default;

    /// Serialization order: higher degree first, then lexicographic on the
    /// sorted factor list.
    friend std::strong_ordering operator<=>(const PlueckerMonomial& a, const PlueckerMonomial& b) {
        if (a.degree() != b.degree()) return b.degree() <=> a.degree();
        return std::lexicographical_compare_three_way(a.factors_.begin(), a.factors_.end(), b.factors_.begin(),
                                                      b.factors_.end());
    }

private:
    std::vector<PlueckerVar> factors_;
};

/// Sparse polynomial with nonzero rational coefficients.
class PlueckerPolynomial {
public:
    using Terms = std::map<PlueckerMonomial, Rational>;

    PlueckerPolynomial() = default;

    static PlueckerPolynomial constant(const Rational& c) {
        PlueckerPolynomial f;
        f.add_term(PlueckerMonomial(), c);
        return f;
    }

    static PlueckerPolynomial monomial(const PlueckerMonomial& m, const Rational& c = 1) {
        PlueckerPolynomial f;
        f.add_term(m, c);
        return f;
    }

    /// p_ij, with p_ji = -p_ij.
    static PlueckerPolynomial var(int i, int j) {
        if (i == j) throw std::invalid_argument("p[i,i] is zero and not a variable");
        if (i < j) return monomial(PlueckerMonomial::var(i, j));
        return monomial(PlueckerMonomial::var(j, i), -1);
    }

    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }

    Rational coefficient(const PlueckerMonomial& m) const {
        auto it = terms_.find(m);
        return it == terms_.end() ? Rational(0) : it->second;
    }

    void add_term(const PlueckerMonomial& m, const Rational& c) {
        if (c == 0) return;
        auto [it, inserted] = terms_.try_emplace(m, c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    PlueckerPolynomial& operator+=(const PlueckerPolynomial& g) {
        for (const auto& [m, c] : g.terms_) add_term(m, c);
        return *this;
    }
    PlueckerPolynomial& operator-=(const PlueckerPolynomial& g) {
        for (const auto& [m, c] : g.terms_) add_term(m, -c);
        return *this;
    }
    PlueckerPolynomial& operator*=(const Rational& c) {
        if (c == 0) {
            terms_.clear();
            return *this;
        }
        for (auto& [m, v] : terms_) v *= c;
        return *this;
    }

    friend PlueckerPolynomial operator+(PlueckerPolynomial a, const PlueckerPolynomial& b) { return a += b; }
    friend PlueckerPolynomial operator-(PlueckerPolynomial a, const PlueckerPolynomial& b) { return a -= b; }
    friend PlueckerPolynomial operator-(PlueckerPolynomial a) { return a *= Rational(-1); }
    friend PlueckerPolynomial operator*(PlueckerPolynomial a, const Rational& c) { return a *= c; }
    friend PlueckerPolynomial operator*(const Rational& c, PlueckerPolynomial a) { return a *= c; }

    friend PlueckerPolynomial operator*(const PlueckerPolynomial& a, const PlueckerPolynomial& b) {
        PlueckerPolynomial r;
        for (const auto& [ma, ca] : a.terms_)
            for (const auto& [mb, cb] : b.terms_) r.add_term(ma * mb, ca * cb);
        return r;
    }

    int max_index() const {
        int m = 0;
        for (const auto& [mono, c] : terms_) m = std::max(m, mono.max_index());
        return m;
    }

    friend bool operator==(const PlueckerPolynomial&, const PlueckerPolynomial&) = default;

private:
    Terms terms_;
};

/// Text form: "c * p[i,j]^e * ..." terms joined by " + " / " - "; unit
/// coefficients and exponents 1 are omitted, the zero polynomial is "0".
inline std::string to_string(const PlueckerPolynomial& f) {
    if (f.is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [m, c] : f.terms()) {
        const bool negative = c < 0;
        const Rational magnitude = negative ? Rational(-c) : c;
        if (first)
            out << (negative ? "-" : "");
        else
            out << (negative ? " - " : " + ");
        first = false;
        bool need_sep = false;
        if (magnitude != 1 || m.is_one()) {
            out << to_string(magnitude);
            need_sep = true;
        }
        for (const auto& [v, e] : m.exponents()) {
            if (need_sep) out << " * ";
            out << "p[" << v.first << ',' << v.second << ']';
            if (e > 1) out << '^' << e;
            need_sep = true;
        }
    }
    return out.str();
}

inline std::string to_string(const PlueckerMonomial& m) { return to_string(PlueckerPolynomial::monomial(m)); }

namespace detail {

class PolynomialParser {
public:
    explicit PolynomialParser(std::string_view text) {
        // Normalize U+2212 MINUS SIGN to '-'.
        std::string s(text);
        for (std::size_t k = 0; (k = s.find("\xE2\x88\x92", k)) != std::string::npos;) s.replace(k, 3, "-");
        text_ = std::move(s);
    }

    PlueckerPolynomial parse() {
        PlueckerPolynomial f;
        skip_ws();
        int sign = 1;
        if (peek('-') || peek('+')) sign = text_[pos_++] == '-' ? -1 : 1;
        f += parse_term() * Rational(sign);
        while (true) {
            skip_ws();
            if (pos_ == text_.size()) break;
            if (!peek('+') && !peek('-')) fail("expected '+' or '-'");
            sign = text_[pos_++] == '-' ? -1 : 1;
            f += parse_term() * Rational(sign);
        }
        return f;
    }

private:
    [[noreturn]] void fail(const std::string& msg) const {
        throw std::invalid_argument("polynomial: " + msg + " at offset " + std::to_string(pos_));
    }

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    bool peek(char c) {
        skip_ws();
        return pos_ < text_.size() && text_[pos_] == c;
    }

    void expect(char c) {
        if (!peek(c)) fail(std::string("expected '") + c + "'");
        ++pos_;
    }

    int parse_int() {
        skip_ws();
        const std::size_t start = pos_;
        int v = 0;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
            v = v * 10 + (text_[pos_++] - '0');
            if (v > 1'000'000) fail("integer too large");
        }
        if (pos_ == start) fail("expected an integer");
        return v;
    }

    PlueckerPolynomial parse_factor() {
        skip_ws();
        if (peek('p')) {
            ++pos_;
            expect('[');
            const int i = parse_int();
            expect(',');
            const int j = parse_int();
            expect(']');
            if (i < 1 || j < 1 || i == j) fail("invalid Plucker variable");
            int e = 1;
            if (peek('^')) {
                ++pos_;
                e = parse_int();
            }
            PlueckerPolynomial v = PlueckerPolynomial::var(i, j);
            PlueckerPolynomial r = PlueckerPolynomial::constant(1);
            for (int k = 0; k < e; ++k) r = r * v;
            return r;
        }
        const std::size_t start = pos_;
        while (pos_ < text_.size() && (std::isdigit(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '/' ||
                                       text_[pos_] == '.'))
            ++pos_;
        if (pos_ == start) fail("expected a coefficient or p[i,j]");
        try {
            return PlueckerPolynomial::constant(parse_rational(std::string_view(text_).substr(start, pos_ - start)));
        } catch (const std::invalid_argument&) {
            fail("malformed coefficient");
        }
    }

    PlueckerPolynomial parse_term() {
        PlueckerPolynomial t = parse_factor();
        while (peek('*')) {
            ++pos_;
            t = t * parse_factor();
        }
        return t;
    }

    std::string text_;
    std::size_t pos_ = 0;
};

}  // namespace detail

inline PlueckerPolynomial parse_polynomial(std::string_view text) { return detail::PolynomialParser(text).parse(); }

/// A cyclic order on leaf labels, given by the position of each label. The
/// default is the natural order 1, 2, ..., n.
class CyclicOrder {
public:
    CyclicOrder() = default;

    explicit CyclicOrder(std::vector<int> labels) {
        int n = static_cast<int>(labels.size());
        position_.assign(n + 1, -1);
        for (int k = 0; k < n; ++k) {
            const int x = labels[k];
            if (x < 1 || x > n || position_[x] >= 0) throw std::invalid_argument("cyclic order must permute 1..n");
            position_[x] = k;
        }
    }

    bool is_natural() const { return position_.empty(); }

    int position(int label) const {
        if (position_.empty()) return label;
        if (label >= static_cast<int>(position_.size()))
            throw std::invalid_argument("label " + std::to_string(label) + " outside the cyclic order");
        return position_[label];
    }

private:
    std::vector<int> position_;
};

/// Chords {a,b} and {c,d} cross when their four endpoints are distinct and
/// alternate around the circle.
inline bool chords_cross(const PlueckerVar& x, const PlueckerVar& y, const CyclicOrder& order = {}) {
    if (x.first == y.first || x.first == y.second || x.second == y.first || x.second == y.second) return false;
    int a = order.position(x.first), b = order.position(x.second);
    if (a > b) std::swap(a, b);
    const int c = order.position(y.first), d = order.position(y.second);
    const bool c_in = a < c && c < b;
    const bool d_in = a < d && d < b;
    return c_in != d_in;
}

inline bool is_noncrossing(const PlueckerMonomial& m, const CyclicOrder& order = {}) {
    const auto& f = m.factors();
    for (std::size_t a = 0; a < f.size(); ++a)
        for (std::size_t b = a + 1; b < f.size(); ++b)
            if (chords_cross(f[a], f[b], order)) return false;
    return true;
}

/// The three-term relation as a polynomial that vanishes on 2 x n matrices:
/// for i<j<k<l, p_ik p_jl - p_ij p_kl - p_il p_jk.
inline PlueckerPolynomial plucker_relation(int i, int j, int k, int l) {
    if (!(i < j && j < k && k < l)) throw std::invalid_argument("plucker_relation needs i < j < k < l");
    using P = PlueckerPolynomial;
    return P::var(i, k) * P::var(j, l) - P::var(i, j) * P::var(k, l) - P::var(i, l) * P::var(j, k);
}

namespace detail {

/// Bracket [x y] = sign * p_{min,max}.
inline int bracket_sign(int x, int y) { return x < y ? 1 : -1; }

class Straightener {
public:
    explicit Straightener(const CyclicOrder& order) : order_(order) {}

    const PlueckerPolynomial& normal_form(const PlueckerMonomial& m, int depth = 0) {
        if (auto it = memo_.find(m); it != memo_.end()) return it->second;
        if (depth > 100'000) throw std::runtime_error("straightening did not terminate");
        const auto& f = m.factors();
        for (std::size_t a = 0; a < f.size(); ++a)
            for (std::size_t b = a + 1; b < f.size(); ++b) {
                if (!chords_cross(f[a], f[b], order_)) continue;
                // Endpoints A, B, C, D in cyclic position order; the chords
                // are AC and BD, and [AC][BD] = [AB][CD] + [AD][BC].
                std::array<int, 4> pts{f[a].first, f[a].second, f[b].first, f[b].second};
                std::sort(pts.begin(), pts.end(),
                          [&](int x, int y) { return order_.position(x) < order_.position(y); });
                const int A = pts[0], B = pts[1], C = pts[2], D = pts[3];
                std::vector<PlueckerVar> rest;
                for (std::size_t k = 0; k < f.size(); ++k)
                    if (k != a && k != b) rest.push_back(f[k]);
                const PlueckerMonomial base(rest);
                auto var = [](int x, int y) { return PlueckerVar{std::min(x, y), std::max(x, y)}; };
                const int lead = bracket_sign(A, C) * bracket_sign(B, D);
                const int s1 = lead * bracket_sign(A, B) * bracket_sign(C, D);
                const int s2 = lead * bracket_sign(A, D) * bracket_sign(B, C);
                const PlueckerMonomial m1 = base * PlueckerMonomial({var(A, B), var(C, D)});
                const PlueckerMonomial m2 = base * PlueckerMonomial({var(A, D), var(B, C)});
                PlueckerPolynomial result = normal_form(m1, depth + 1) * Rational(s1);
                result += normal_form(m2, depth + 1) * Rational(s2);
                return memo_.emplace(m, std::move(result)).first->second;
            }
        return memo_.emplace(m, PlueckerPolynomial::monomial(m)).first->second;
    }

private:
    const CyclicOrder& order_;
    std::map<PlueckerMonomial, PlueckerPolynomial> memo_;
};

}  // namespace detail

/// Rewrites f in the basis of monomials that are non-crossing for `order`,
/// using the three-term relation on the first crossing pair of each monomial.
inline PlueckerPolynomial straighten(const PlueckerPolynomial& f, const CyclicOrder& order = {}) {
    detail::Straightener s(order);
    PlueckerPolynomial out;
    for (const auto& [m, c] : f.terms()) out += s.normal_form(m) * c;
    return out;
}

}  // namespace gr2

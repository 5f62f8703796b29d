#pragma once

#include <gmpxx.h>

#include <algorithm>
#include <cctype>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "orthant/catalog.hpp"

namespace orthant {

namespace detail {

using ExpVec = std::vector<int>;
using TermMap = std::map<ExpVec, mpz_class>;

inline void add_term(TermMap& m, const ExpVec& e, const mpz_class& c) {
    if (c == 0) return;
    auto it = m.find(e);
    if (it == m.end()) {
        m.emplace(e, c);
    } else {
        it->second += c;
        if (it->second == 0) m.erase(it);
    }
}

inline TermMap add(const TermMap& a, const TermMap& b) {
    TermMap out = a;
    for (const auto& [e, c] : b) add_term(out, e, c);
    return out;
}

inline TermMap mul(const TermMap& a, const TermMap& b) {
    TermMap out;
    for (const auto& [ea, ca] : a)
        for (const auto& [eb, cb] : b) {
            ExpVec e = ea;
            for (size_t i = 0; i < e.size(); ++i) e[i] += eb[i];
            add_term(out, e, ca * cb);
        }
    return out;
}

/// Graded lexicographic order on the first n_graded coordinates, descending
/// (used only for deterministic printing).
inline bool print_before(const ExpVec& a, const ExpVec& b, size_t n_graded) {
    long da = 0, db = 0;
    for (size_t i = 0; i < n_graded; ++i) {
        da += a[i];
        db += b[i];
    }
    if (da != db) return da > db;
    return a > b;
}

}  // namespace detail

/// Element of R_H = Z[x_1..x_n] (finite type) or of Z[x_1..x_n, hbar]
/// (affine type): exponents are nonnegative and coefficients are integers.
class Poly {
public:
    Poly(size_t n, bool affine) : n_(n), affine_(affine) {}

    static Poly zero(size_t n, bool affine) { return Poly(n, affine); }
    static Poly constant(size_t n, bool affine, mpz_class c) {
        Poly p(n, affine);
        detail::add_term(p.terms_, detail::ExpVec(p.nvars(), 0), c);
        return p;
    }
    /// x_i for 0 <= i < n; the affine variable hbar is index n.
    static Poly variable(size_t n, bool affine, size_t i) {
        Poly p(n, affine);
        detail::ExpVec e(p.nvars(), 0);
        e.at(i) = 1;
        detail::add_term(p.terms_, e, 1);
        return p;
    }
    static Poly monomial(size_t n, bool affine, detail::ExpVec e, mpz_class c) {
        Poly p(n, affine);
        if (e.size() != p.nvars()) throw InvalidInput("monomial exponent length mismatch");
        for (int x : e)
            if (x < 0) throw InvalidInput("polynomial exponents must be nonnegative");
        detail::add_term(p.terms_, e, c);
        return p;
    }

    size_t n() const { return n_; }
    bool affine() const { return affine_; }
    size_t nvars() const { return n_ + (affine_ ? 1 : 0); }
    const detail::TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    friend Poly operator+(const Poly& a, const Poly& b) {
        a.check_compatible(b);
        Poly out(a.n_, a.affine_);
        out.terms_ = detail::add(a.terms_, b.terms_);
        return out;
    }
    friend Poly operator-(const Poly& a, const Poly& b) { return a + (mpz_class(-1) * b); }
    friend Poly operator*(const Poly& a, const Poly& b) {
        a.check_compatible(b);
        Poly out(a.n_, a.affine_);
        out.terms_ = detail::mul(a.terms_, b.terms_);
        return out;
    }
    friend Poly operator*(const mpz_class& c, const Poly& p) {
        Poly out(p.n_, p.affine_);
        for (const auto& [e, k] : p.terms_) detail::add_term(out.terms_, e, c * k);
        return out;
    }
    Poly pow(size_t k) const {
        Poly acc = constant(n_, affine_, 1);
        for (size_t i = 0; i < k; ++i) acc = acc * *this;
        return acc;
    }
    friend bool operator==(const Poly& a, const Poly& b) {
        return a.n_ == b.n_ && a.affine_ == b.affine_ && a.terms_ == b.terms_;
    }

private:
    void check_compatible(const Poly& o) const {
        if (n_ != o.n_ || affine_ != o.affine_) throw InvalidInput("polynomial ring mismatch");
    }

    size_t n_;
    bool affine_;
    detail::TermMap terms_;
};

/// Element of the group algebra Z[Lambda]: finitely many lattice points with
/// integer coefficients. Points are integer vectors of fixed rank; in the
/// affine interpretation the last coordinate is the hbar-exponent.
class GroupAlgebraElem {
public:
    explicit GroupAlgebraElem(size_t rank) : rank_(rank) {}

    static GroupAlgebraElem zero(size_t rank) { return GroupAlgebraElem(rank); }
    static GroupAlgebraElem monomial(detail::ExpVec point, mpz_class c) {
        GroupAlgebraElem g(point.size());
        detail::add_term(g.terms_, point, c);
        return g;
    }
    static GroupAlgebraElem one(size_t rank) {
        return monomial(detail::ExpVec(rank, 0), 1);
    }

    size_t rank() const { return rank_; }
    const detail::TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    friend GroupAlgebraElem operator+(const GroupAlgebraElem& a, const GroupAlgebraElem& b) {
        a.check_compatible(b);
        GroupAlgebraElem out(a.rank_);
        out.terms_ = detail::add(a.terms_, b.terms_);
        return out;
    }
    friend GroupAlgebraElem operator-(const GroupAlgebraElem& a, const GroupAlgebraElem& b) {
        return a + (mpz_class(-1) * b);
    }
    friend GroupAlgebraElem operator*(const GroupAlgebraElem& a, const GroupAlgebraElem& b) {
        a.check_compatible(b);
        GroupAlgebraElem out(a.rank_);
        out.terms_ = detail::mul(a.terms_, b.terms_);
        return out;
    }
    friend GroupAlgebraElem operator*(const mpz_class& c, const GroupAlgebraElem& g) {
        GroupAlgebraElem out(g.rank_);
        for (const auto& [e, k] : g.terms_) detail::add_term(out.terms_, e, c * k);
        return out;
    }
    friend bool operator==(const GroupAlgebraElem& a, const GroupAlgebraElem& b) {
        return a.rank_ == b.rank_ && a.terms_ == b.terms_;
    }

private:
    void check_compatible(const GroupAlgebraElem& o) const {
        if (rank_ != o.rank_) throw InvalidInput("group algebra rank mismatch");
    }

    size_t rank_;
    detail::TermMap terms_;
};

/// Element of R~_q = Z[q, q^-1][y_1..y_n]: a group algebra element over the
/// affine lattice whose hbar-exponent is read as the q-power via q = e^-hbar.
struct QLaurent {
    size_t n = 0;  // number of y variables; elem.rank() == n + 1
    GroupAlgebraElem elem = GroupAlgebraElem(1);

    /// True iff every y-exponent is nonnegative (membership in R~_q).
    bool polynomial_in_y() const {
        for (const auto& [e, c] : elem.terms())
            for (size_t i = 0; i < n; ++i)
                if (e[i] < 0) return false;
        return true;
    }
};

/// The homomorphism eps : R_H -> R_K determined by x_i |-> e^{x_i} = y_i
/// (and hbar |-> e^{hbar} = q^-1 in the affine case): a monomial's exponent
/// vector becomes a single lattice point.
inline GroupAlgebraElem epsilon(const Poly& f) {
    GroupAlgebraElem out(f.nvars());
    for (const auto& [e, c] : f.terms()) out = out + GroupAlgebraElem::monomial(e, c);
    return out;
}

/// w(e^lambda) = e^{w(lambda)}. The action matrix must map lattice points to
/// lattice points; a non-integer image throws LatticeViolation.
inline GroupAlgebraElem w_action_K(const Realization& r, const Word& w,
                                   const GroupAlgebraElem& f) {
    if (r.rank != f.rank()) throw InvalidInput("group algebra rank differs from realization");
    Mat m = word_matrix(r, w);
    GroupAlgebraElem out(f.rank());
    for (const auto& [e, c] : f.terms()) {
        Vec p(e.size());
        for (size_t i = 0; i < e.size(); ++i) p[i] = Rational(static_cast<long>(e[i]));
        Vec q = m.apply(p);
        detail::ExpVec img(e.size());
        for (size_t i = 0; i < e.size(); ++i) {
            if (!q[i].is_integer())
                throw LatticeViolation("group element maps a lattice point outside the lattice");
            img[i] = static_cast<int>(q[i].num().get_si());
        }
        out = out + GroupAlgebraElem::monomial(img, c);
    }
    return out;
}

/// Action of a word on R_H by linear substitution of variables. The matrix
/// must be integral so that variables map to Z-linear forms.
inline Poly w_action_H(const Realization& r, const Word& w, const Poly& f) {
    if (r.rank != f.nvars()) throw InvalidInput("polynomial ring rank differs from realization");
    Mat m = word_matrix(r, w);
    if (!m.is_integral())
        throw LatticeViolation("word does not act integrally on the polynomial ring");
    std::vector<Poly> images;
    for (size_t j = 0; j < f.nvars(); ++j) {
        Poly img = Poly::zero(f.n(), f.affine());
        for (size_t i = 0; i < f.nvars(); ++i) {
            mpz_class c = m.at(i, j).num();
            if (c != 0) img = img + c * Poly::variable(f.n(), f.affine(), i);
        }
        images.push_back(img);
    }
    Poly out = Poly::zero(f.n(), f.affine());
    for (const auto& [e, c] : f.terms()) {
        Poly term = Poly::constant(f.n(), f.affine(), c);
        for (size_t j = 0; j < e.size(); ++j)
            if (e[j] > 0) term = term * images[j].pow(e[j]);
        out = out + term;
    }
    return out;
}

/// p = y_1 ... y_n (with zero hbar-exponent in the affine case).
inline GroupAlgebraElem p_element(size_t n, bool affine) {
    detail::ExpVec e(n + (affine ? 1 : 0), 0);
    for (size_t i = 0; i < n; ++i) e[i] = 1;
    return GroupAlgebraElem::monomial(e, 1);
}

struct Localization {
    long N = 0;                                       // minimal power of p
    GroupAlgebraElem shifted = GroupAlgebraElem(0);   // p^N f, polynomial in y
};

/// Minimal N >= 0 with p^N f polynomial in y_1..y_n (the first n
/// coordinates); q-exponents are untouched. Witnesses R_K = R_H[p^-1].
inline Localization localize_membership(const GroupAlgebraElem& f, size_t n) {
    if (f.rank() < n) throw InvalidInput("rank smaller than the number of y variables");
    long lowest = 0;
    for (const auto& [e, c] : f.terms())
        for (size_t i = 0; i < n; ++i) lowest = std::min(lowest, static_cast<long>(e[i]));
    Localization out;
    out.N = -lowest;
    out.shifted = GroupAlgebraElem(f.rank());
    for (const auto& [e, c] : f.terms()) {
        detail::ExpVec shifted = e;
        for (size_t i = 0; i < n; ++i) shifted[i] += static_cast<int>(out.N);
        out.shifted = out.shifted + GroupAlgebraElem::monomial(shifted, c);
    }
    return out;
}

/// Whether every lattice point of [-box, box]^d is a Z>=0-combination of the
/// given points, searching coefficients up to coeff_bound. A failure only
/// means "not spanned within the bound".
inline bool nonneg_span_covers_box(const std::vector<Vec>& points, int box, int coeff_bound) {
    if (points.empty()) return false;
    size_t d = points[0].size();
    std::set<Vec> reachable;
    Vec acc(d);
    auto rec = [&](auto&& self, size_t idx, const Vec& sum) -> void {
        if (idx == points.size()) {
            reachable.insert(sum);
            return;
        }
        Vec cur = sum;
        for (int c = 0; c <= coeff_bound; ++c) {
            self(self, idx + 1, cur);
            cur = cur + points[idx];
        }
    };
    rec(rec, 0, acc);
    Vec probe(d);
    auto visit = [&](auto&& self, size_t pos) -> bool {
        if (pos == d) return reachable.count(probe) > 0;
        for (int v = -box; v <= box; ++v) {
            probe[pos] = v;
            if (!self(self, pos + 1)) return false;
        }
        return true;
    };
    return visit(visit, 0);
}

/// The SL_n counterexample: the Z>=0-span of the W-orbit of the fundamental
/// weight varpi of the standard representation covers the whole weight
/// lattice (verified on the box [-box, box]^{n-1} with coefficients up to
/// 4 box). Supports n in {2, 3}.
inline bool sln_orbit_span_full(int n, int box) {
    if (n != 2 && n != 3) throw Unsupported("sln_orbit_span_full supports n in {2, 3}");
    if (box < 1) throw InvalidInput("box must be >= 1");
    Realization r = fixtures::sl_weight(n);
    auto group = enumerate_until_complete(r);
    if (!group.has_value()) throw TheoremViolation("S_n image failed to enumerate");
    std::set<Vec> orbit;
    Vec varpi = unit_vec(r.rank, 0);
    for (const Mat& m : *group) orbit.insert(m.apply(varpi));
    return nonneg_span_covers_box(std::vector<Vec>(orbit.begin(), orbit.end()), box, 4 * box);
}

// ---------------------------------------------------------------------------
// Plain-text grammar shared by R_H and R_K elements:
//   expr   := [+|-] term (('+'|'-') term)*
//   term   := factor ('*' factor)*
//   factor := INT | var ('^' [-] INT)?
//   var    := 'q' | 'h' | 'x'DIGITS | 'y'DIGITS
// R_H uses x1..xn and h; R_K / R~_q use y1..yn and q. Printing is canonical:
// terms in descending graded-lex order of the (x- or y-) exponents, the
// q-power first inside a term, '*' between factors, exponent 1 omitted.
// ---------------------------------------------------------------------------

namespace detail {

struct ParsedFactor {
    std::optional<mpz_class> coeff;
    char kind = 0;  // 'x', 'y', 'q', 'h'
    size_t index = 0;
    long exponent = 1;
};

struct ParsedTerm {
    mpz_class coeff = 1;
    std::vector<ParsedFactor> vars;
};

inline std::vector<ParsedTerm> parse_terms(const std::string& src) {
    std::vector<ParsedTerm> out;
    size_t i = 0;
    auto skip_ws = [&] {
        while (i < src.size() && isspace(static_cast<unsigned char>(src[i]))) ++i;
    };
    auto parse_int = [&]() -> mpz_class {
        size_t start = i;
        if (i < src.size() && (src[i] == '-' || src[i] == '+')) ++i;
        while (i < src.size() && isdigit(static_cast<unsigned char>(src[i]))) ++i;
        if (i == start || (i == start + 1 && !isdigit(static_cast<unsigned char>(src[start]))))
            throw InvalidInput("expected an integer at position " + std::to_string(start) +
                               " in \"" + src + "\"");
        return mpz_class(src.substr(start, i - start));
    };
    skip_ws();
    if (i == src.size()) throw InvalidInput("empty polynomial expression");
    bool first = true;
    while (i < src.size()) {
        skip_ws();
        int sign = 1;
        if (i < src.size() && (src[i] == '+' || src[i] == '-')) {
            sign = src[i] == '-' ? -1 : 1;
            ++i;
        } else if (!first) {
            throw InvalidInput("expected '+' or '-' at position " + std::to_string(i) + " in \"" +
                               src + "\"");
        }
        first = false;
        ParsedTerm term;
        term.coeff = sign;
        bool expect_factor = true;
        while (expect_factor) {
            skip_ws();
            if (i >= src.size()) throw InvalidInput("dangling operator in \"" + src + "\"");
            char c = src[i];
            if (isdigit(static_cast<unsigned char>(c))) {
                term.coeff *= parse_int();
            } else if (c == 'q' || c == 'h' || c == 'x' || c == 'y') {
                ParsedFactor f;
                f.kind = c;
                ++i;
                if (c == 'x' || c == 'y') {
                    size_t start = i;
                    while (i < src.size() && isdigit(static_cast<unsigned char>(src[i]))) ++i;
                    if (i == start) throw InvalidInput("variable index missing in \"" + src + "\"");
                    f.index = std::stoul(src.substr(start, i - start));
                    if (f.index == 0) throw InvalidInput("variable indices start at 1");
                }
                skip_ws();
                if (i < src.size() && src[i] == '^') {
                    ++i;
                    skip_ws();
                    f.exponent = static_cast<long>(parse_int().get_si());
                }
                term.vars.push_back(f);
            } else {
                throw InvalidInput(std::string("unexpected character '") + c + "' in \"" + src +
                                   "\"");
            }
            skip_ws();
            if (i < src.size() && src[i] == '*') {
                ++i;
                expect_factor = true;
            } else {
                expect_factor = false;
            }
        }
        out.push_back(std::move(term));
        skip_ws();
    }
    return out;
}

inline std::string coeff_prefix(const mpz_class& c, bool lead, bool any_vars) {
    mpz_class a = abs(c);
    std::string sep = lead ? (c < 0 ? "-" : "") : (c < 0 ? " - " : " + ");
    if (a == 1 && any_vars) return sep;
    return sep + a.get_str() + (any_vars ? "*" : "");
}

}  // namespace detail

/// Parses the x/h grammar into R_H (affine admits the variable h).
inline Poly parse_poly(const std::string& src, size_t n, bool affine) {
    Poly out = Poly::zero(n, affine);
    for (const auto& term : detail::parse_terms(src)) {
        detail::ExpVec e(n + (affine ? 1 : 0), 0);
        for (const auto& f : term.vars) {
            if (f.kind == 'x') {
                if (f.index > n) throw InvalidInput("variable index out of range");
                if (f.exponent < 0) throw InvalidInput("negative exponent in a polynomial");
                e[f.index - 1] += static_cast<int>(f.exponent);
            } else if (f.kind == 'h') {
                if (!affine) throw InvalidInput("variable h only exists in the affine ring");
                if (f.exponent < 0) throw InvalidInput("negative exponent in a polynomial");
                e[n] += static_cast<int>(f.exponent);
            } else {
                throw InvalidInput("R_H admits only x variables and h");
            }
        }
        out = out + Poly::monomial(n, affine, e, term.coeff);
    }
    return out;
}

/// Parses the y/q grammar into the group algebra (rank n, or n + 1 with the
/// hbar coordinate last when affine; q^a contributes hbar-exponent -a).
inline GroupAlgebraElem parse_laurent(const std::string& src, size_t n, bool affine) {
    GroupAlgebraElem out(n + (affine ? 1 : 0));
    for (const auto& term : detail::parse_terms(src)) {
        detail::ExpVec e(out.rank(), 0);
        for (const auto& f : term.vars) {
            if (f.kind == 'y') {
                if (f.index > n) throw InvalidInput("variable index out of range");
                e[f.index - 1] += static_cast<int>(f.exponent);
            } else if (f.kind == 'q') {
                if (!affine) throw InvalidInput("q only exists in the affine group algebra");
                e[n] -= static_cast<int>(f.exponent);  // q = e^{-hbar}
            } else {
                throw InvalidInput("R_K admits only y variables and q");
            }
        }
        out = out + GroupAlgebraElem::monomial(e, term.coeff);
    }
    return out;
}

inline std::string print_poly(const Poly& f) {
    if (f.is_zero()) return "0";
    std::vector<const detail::TermMap::value_type*> terms;
    for (const auto& t : f.terms()) terms.push_back(&t);
    std::sort(terms.begin(), terms.end(), [&](auto* a, auto* b) {
        return detail::print_before(a->first, b->first, f.nvars());
    });
    std::string s;
    for (size_t k = 0; k < terms.size(); ++k) {
        const auto& [e, c] = *terms[k];
        std::vector<std::string> factors;
        for (size_t i = 0; i < f.n(); ++i) {
            if (e[i] == 0) continue;
            factors.push_back("x" + std::to_string(i + 1) +
                              (e[i] == 1 ? "" : "^" + std::to_string(e[i])));
        }
        if (f.affine() && e[f.n()] != 0)
            factors.push_back(e[f.n()] == 1 ? "h" : "h^" + std::to_string(e[f.n()]));
        s += detail::coeff_prefix(c, k == 0, !factors.empty());
        for (size_t i = 0; i < factors.size(); ++i) s += (i ? "*" : "") + factors[i];
    }
    return s;
}

/// Canonical printing of a group algebra element in the y/q grammar. When
/// affine, the hbar-exponent m prints as the q-power q^{-m}, first in the
/// term.
inline std::string print_laurent(const GroupAlgebraElem& f, size_t n, bool affine) {
    if (affine && f.rank() != n + 1) throw InvalidInput("rank must be n + 1 in the affine case");
    if (!affine && f.rank() != n) throw InvalidInput("rank must equal n");
    if (f.is_zero()) return "0";
    std::vector<const detail::TermMap::value_type*> terms;
    for (const auto& t : f.terms()) terms.push_back(&t);
    std::sort(terms.begin(), terms.end(), [&](auto* a, auto* b) {
        return detail::print_before(a->first, b->first, n);  // grade on y-exponents only
    });
    std::string s;
    for (size_t k = 0; k < terms.size(); ++k) {
        const auto& [e, c] = *terms[k];
        std::vector<std::string> factors;
        if (affine && e[n] != 0) {
            long qpow = -static_cast<long>(e[n]);
            factors.push_back(qpow == 1 ? "q" : "q^" + std::to_string(qpow));
        }
        for (size_t i = 0; i < n; ++i) {
            if (e[i] == 0) continue;
            factors.push_back("y" + std::to_string(i + 1) +
                              (e[i] == 1 ? "" : "^" + std::to_string(e[i])));
        }
        s += detail::coeff_prefix(c, k == 0, !factors.empty());
        for (size_t i = 0; i < factors.size(); ++i) s += (i ? "*" : "") + factors[i];
    }
    return s;
}

inline std::string print_qlaurent(const QLaurent& f) { return print_laurent(f.elem, f.n, true); }

}  // namespace orthant

#pragma once

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <ostream>
#include <string>
#include <vector>

#include "orthant/rational.hpp"

namespace orthant {

/// Fixed-length column of exact rationals.
struct Vec {
    std::vector<Rational> e;

    Vec() = default;
    explicit Vec(size_t n) : e(n) {}
    Vec(std::initializer_list<Rational> xs) : e(xs) {}

    size_t size() const { return e.size(); }
    Rational& operator[](size_t i) { return e[i]; }
    const Rational& operator[](size_t i) const { return e[i]; }

    bool is_zero() const {
        return std::all_of(e.begin(), e.end(), [](const Rational& r) { return r.is_zero(); });
    }
    bool is_integral() const {
        return std::all_of(e.begin(), e.end(), [](const Rational& r) { return r.is_integer(); });
    }

    friend Vec operator+(const Vec& a, const Vec& b) {
        check_same(a, b);
        Vec r(a.size());
        for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
        return r;
    }
    friend Vec operator-(const Vec& a, const Vec& b) {
        check_same(a, b);
        Vec r(a.size());
        for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
        return r;
    }
    friend Vec operator*(const Rational& c, const Vec& v) {
        Vec r(v.size());
        for (size_t i = 0; i < v.size(); ++i) r[i] = c * v[i];
        return r;
    }
    Vec operator-() const { return Rational(-1) * *this; }

    friend bool operator==(const Vec& a, const Vec& b) { return a.e == b.e; }
    friend bool operator!=(const Vec& a, const Vec& b) { return !(a == b); }
    friend bool operator<(const Vec& a, const Vec& b) {  // lexicographic, sizes first
        if (a.size() != b.size()) return a.size() < b.size();
        for (size_t i = 0; i < a.size(); ++i) {
            if (a[i] != b[i]) return a[i] < b[i];
        }
        return false;
    }

    std::string str() const {
        std::string s = "(";
        for (size_t i = 0; i < size(); ++i) {
            if (i) s += ", ";
            s += e[i].str();
        }
        return s + ")";
    }
    friend std::ostream& operator<<(std::ostream& os, const Vec& v) { return os << v.str(); }

private:
    static void check_same(const Vec& a, const Vec& b) {
        if (a.size() != b.size()) throw InvalidInput("vector length mismatch");
    }
};

/// Exact pairing of a dual-coordinate functional with a vector.
inline Rational pair(const Vec& functional, const Vec& v) {
    if (functional.size() != v.size()) throw InvalidInput("pairing length mismatch");
    Rational acc;
    for (size_t i = 0; i < v.size(); ++i) acc += functional[i] * v[i];
    return acc;
}

inline Vec zero_vec(size_t n) { return Vec(n); }
inline Vec unit_vec(size_t n, size_t i) {
    Vec v(n);
    v[i] = 1;
    return v;
}

/// Dense rectangular matrix of exact rationals, row-major.
struct Mat {
    size_t rows = 0, cols = 0;
    std::vector<Rational> a;

    Mat() = default;
    Mat(size_t r, size_t c) : rows(r), cols(c), a(r * c) {}

    Rational& at(size_t i, size_t j) { return a[i * cols + j]; }
    const Rational& at(size_t i, size_t j) const { return a[i * cols + j]; }

    static Mat identity(size_t n) {
        Mat m(n, n);
        for (size_t i = 0; i < n; ++i) m.at(i, i) = 1;
        return m;
    }

    static Mat from_columns(const std::vector<Vec>& cols_in) {
        if (cols_in.empty()) return Mat(0, 0);
        Mat m(cols_in[0].size(), cols_in.size());
        for (size_t j = 0; j < cols_in.size(); ++j) {
            if (cols_in[j].size() != m.rows) throw InvalidInput("ragged columns");
            for (size_t i = 0; i < m.rows; ++i) m.at(i, j) = cols_in[j][i];
        }
        return m;
    }
    static Mat from_rows(const std::vector<Vec>& rows_in) {
        if (rows_in.empty()) return Mat(0, 0);
        Mat m(rows_in.size(), rows_in[0].size());
        for (size_t i = 0; i < m.rows; ++i) {
            if (rows_in[i].size() != m.cols) throw InvalidInput("ragged rows");
            for (size_t j = 0; j < m.cols; ++j) m.at(i, j) = rows_in[i][j];
        }
        return m;
    }

    Vec col(size_t j) const {
        Vec v(rows);
        for (size_t i = 0; i < rows; ++i) v[i] = at(i, j);
        return v;
    }
    Vec row(size_t i) const {
        Vec v(cols);
        for (size_t j = 0; j < cols; ++j) v[j] = at(i, j);
        return v;
    }

    bool is_square() const { return rows == cols; }
    bool is_integral() const {
        return std::all_of(a.begin(), a.end(), [](const Rational& r) { return r.is_integer(); });
    }
    bool is_identity() const {
        if (!is_square()) return false;
        for (size_t i = 0; i < rows; ++i)
            for (size_t j = 0; j < cols; ++j)
                if (at(i, j) != Rational(i == j ? 1 : 0)) return false;
        return true;
    }

    Mat transpose() const {
        Mat t(cols, rows);
        for (size_t i = 0; i < rows; ++i)
            for (size_t j = 0; j < cols; ++j) t.at(j, i) = at(i, j);
        return t;
    }

    friend Mat operator*(const Mat& x, const Mat& y) {
        if (x.cols != y.rows) throw InvalidInput("matrix product shape mismatch");
        Mat r(x.rows, y.cols);
        for (size_t i = 0; i < x.rows; ++i)
            for (size_t k = 0; k < x.cols; ++k) {
                if (x.at(i, k).is_zero()) continue;
                for (size_t j = 0; j < y.cols; ++j) r.at(i, j) += x.at(i, k) * y.at(k, j);
            }
        return r;
    }
    /// Matrix-vector product M.v (columns are images of basis vectors).
    Vec apply(const Vec& v) const {
        if (cols != v.size()) throw InvalidInput("matrix apply shape mismatch");
        Vec r(rows);
        for (size_t j = 0; j < cols; ++j) {
            if (v[j].is_zero()) continue;
            for (size_t i = 0; i < rows; ++i) r[i] += at(i, j) * v[j];
        }
        return r;
    }

    friend bool operator==(const Mat& x, const Mat& y) {
        return x.rows == y.rows && x.cols == y.cols && x.a == y.a;
    }
    friend bool operator!=(const Mat& x, const Mat& y) { return !(x == y); }
    friend bool operator<(const Mat& x, const Mat& y) {  // lexicographic, for ordered sets
        if (x.rows != y.rows) return x.rows < y.rows;
        if (x.cols != y.cols) return x.cols < y.cols;
        for (size_t i = 0; i < x.a.size(); ++i) {
            if (x.a[i] != y.a[i]) return x.a[i] < y.a[i];
        }
        return false;
    }
};

inline Mat mat_power(const Mat& m, size_t k) {
    Mat acc = Mat::identity(m.rows);
    for (size_t i = 0; i < k; ++i) acc = acc * m;
    return acc;
}

/// Reduced row-echelon form plus the row transform that produced it:
/// transform * input == reduced, with transform invertible.
struct RrefResult {
    Mat reduced;
    Mat transform;
    std::vector<size_t> pivot_cols;
    size_t rank = 0;
};

inline RrefResult rref(const Mat& m) {
    RrefResult res;
    res.reduced = m;
    res.transform = Mat::identity(m.rows);
    Mat& r = res.reduced;
    Mat& t = res.transform;
    size_t lead = 0;
    for (size_t c = 0; c < m.cols && lead < m.rows; ++c) {
        size_t piv = lead;
        while (piv < m.rows && r.at(piv, c).is_zero()) ++piv;
        if (piv == m.rows) continue;
        if (piv != lead) {
            for (size_t j = 0; j < m.cols; ++j) std::swap(r.at(piv, j), r.at(lead, j));
            for (size_t j = 0; j < m.rows; ++j) std::swap(t.at(piv, j), t.at(lead, j));
        }
        Rational inv = r.at(lead, c).reciprocal();
        for (size_t j = 0; j < m.cols; ++j) r.at(lead, j) *= inv;
        for (size_t j = 0; j < m.rows; ++j) t.at(lead, j) *= inv;
        for (size_t i = 0; i < m.rows; ++i) {
            if (i == lead || r.at(i, c).is_zero()) continue;
            Rational f = r.at(i, c);
            for (size_t j = 0; j < m.cols; ++j) r.at(i, j) -= f * r.at(lead, j);
            for (size_t j = 0; j < m.rows; ++j) t.at(i, j) -= f * t.at(lead, j);
        }
        res.pivot_cols.push_back(c);
        ++lead;
    }
    res.rank = res.pivot_cols.size();
    return res;
}

inline size_t rank(const Mat& m) { return rref(m).rank; }

/// Scales a rational vector to a primitive integer vector whose first nonzero
/// entry is positive (clear denominators, divide by the gcd of the entries).
inline Vec saturate(const Vec& v) {
    if (v.is_zero()) return v;
    mpz_class l = 1;
    for (const Rational& x : v.e) l = lcm(l, x.den());
    std::vector<mpz_class> w(v.size());
    mpz_class g = 0;
    for (size_t i = 0; i < v.size(); ++i) {
        w[i] = v[i].num() * (l / v[i].den());
        g = gcd(g, w[i]);
    }
    int lead_sign = 0;
    for (const mpz_class& x : w) {
        if (x != 0) {
            lead_sign = sgn(x);
            break;
        }
    }
    Vec out(v.size());
    for (size_t i = 0; i < v.size(); ++i) {
        mpz_class q = w[i] / g;
        out[i] = Rational(lead_sign < 0 ? mpz_class(-q) : q);
    }
    return out;
}

/// Basis of the right kernel { v : m.v = 0 }. Each vector is saturated to a
/// primitive integer vector (first nonzero entry positive); the count is
/// always cols - rank.
inline std::vector<Vec> kernel_basis(const Mat& m) {
    RrefResult rr = rref(m);
    std::vector<bool> is_pivot(m.cols, false);
    for (size_t c : rr.pivot_cols) is_pivot[c] = true;
    std::vector<Vec> basis;
    for (size_t f = 0; f < m.cols; ++f) {
        if (is_pivot[f]) continue;
        Vec v(m.cols);
        v[f] = 1;
        for (size_t i = 0; i < rr.pivot_cols.size(); ++i)
            v[rr.pivot_cols[i]] = -rr.reduced.at(i, f);
        basis.push_back(saturate(v));
    }
    return basis;
}

inline Rational det(const Mat& m) {
    if (!m.is_square()) throw InvalidInput("determinant of non-square matrix");
    Mat r = m;
    Rational d = 1;
    for (size_t c = 0; c < r.cols; ++c) {
        size_t piv = c;
        while (piv < r.rows && r.at(piv, c).is_zero()) ++piv;
        if (piv == r.rows) return 0;
        if (piv != c) {
            for (size_t j = 0; j < r.cols; ++j) std::swap(r.at(piv, j), r.at(c, j));
            d = -d;
        }
        d *= r.at(c, c);
        Rational inv = r.at(c, c).reciprocal();
        for (size_t i = c + 1; i < r.rows; ++i) {
            if (r.at(i, c).is_zero()) continue;
            Rational f = r.at(i, c) * inv;
            for (size_t j = c; j < r.cols; ++j) r.at(i, j) -= f * r.at(c, j);
        }
    }
    return d;
}

inline Mat inverse(const Mat& m) {
    if (!m.is_square()) throw InvalidInput("inverse of non-square matrix");
    size_t n = m.rows;
    if (n == 0) return m;
    Mat aug(n, 2 * n);
    for (size_t i = 0; i < n; ++i) {
        for (size_t j = 0; j < n; ++j) aug.at(i, j) = m.at(i, j);
        aug.at(i, n + i) = 1;
    }
    RrefResult rr = rref(aug);
    if (rr.rank < n || rr.pivot_cols[n - 1] != n - 1) throw InvalidInput("singular matrix");
    Mat inv(n, n);
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) inv.at(i, j) = rr.reduced.at(i, n + j);
    return inv;
}

/// True iff m is a square integer matrix with determinant +1 or -1.
inline bool is_unimodular(const Mat& m) {
    if (!m.is_square()) throw InvalidInput("unimodularity of non-square matrix");
    if (!m.is_integral()) throw InvalidInput("unimodularity asked of non-integer matrix");
    return det(m).abs() == Rational(1);
}

/// Canonical form of the row space; two vector families span the same
/// subspace iff their canonical forms agree.
inline Mat rowspace_canonical(const std::vector<Vec>& vs, size_t ambient) {
    if (vs.empty()) return Mat(0, ambient);
    Mat rr = rref(Mat::from_rows(vs)).reduced;
    Mat out(orthant::rank(rr), ambient);
    for (size_t i = 0; i < out.rows; ++i)
        for (size_t j = 0; j < ambient; ++j) out.at(i, j) = rr.at(i, j);
    return out;
}

inline bool same_span(const std::vector<Vec>& a, const std::vector<Vec>& b, size_t ambient) {
    return rowspace_canonical(a, ambient) == rowspace_canonical(b, ambient);
}

}  // namespace orthant

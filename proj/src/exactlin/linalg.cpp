#include "wha/exactlin/linalg.hpp"

#include <algorithm>
#include <stdexcept>

namespace wha {

Vec zero_vec(std::size_t n) { return Vec(n); }

Vec unit_vec(std::size_t n, std::size_t i) {
    Vec v(n);
    v.at(i) = Rat(1);
    return v;
}

bool is_zero(std::span<const Rat> v) {
    return std::all_of(v.begin(), v.end(), [](const Rat& r) { return r.is_zero(); });
}

Vec add(std::span<const Rat> a, std::span<const Rat> b) {
    if (a.size() != b.size()) throw std::invalid_argument("add: length mismatch");
    Vec r(a.begin(), a.end());
    for (std::size_t i = 0; i < b.size(); ++i)
        if (!b[i].is_zero()) r[i] += b[i];
    return r;
}

Vec sub(std::span<const Rat> a, std::span<const Rat> b) {
    if (a.size() != b.size()) throw std::invalid_argument("sub: length mismatch");
    Vec r(a.begin(), a.end());
    for (std::size_t i = 0; i < b.size(); ++i)
        if (!b[i].is_zero()) r[i] -= b[i];
    return r;
}

Vec scale(std::span<const Rat> a, const Rat& s) {
    Vec r(a.size());
    if (s.is_zero()) return r;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (!a[i].is_zero()) r[i] = a[i] * s;
    return r;
}

void axpy(Vec& a, const Rat& s, std::span<const Rat> b) {
    if (a.size() != b.size()) throw std::invalid_argument("axpy: length mismatch");
    if (s.is_zero()) return;
    for (std::size_t i = 0; i < b.size(); ++i)
        if (!b[i].is_zero()) a[i] += s * b[i];
}

Rat dot(std::span<const Rat> a, std::span<const Rat> b) {
    if (a.size() != b.size()) throw std::invalid_argument("dot: length mismatch");
    Rat s;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (!a[i].is_zero() && !b[i].is_zero()) s += a[i] * b[i];
    return s;
}

std::string to_string(std::span<const Rat> v) {
    std::string s = "(";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) s += ", ";
        s += v[i].str();
    }
    return s + ")";
}

SparseVec nonzeros(std::span<const Rat> v) {
    SparseVec out;
    for (std::size_t i = 0; i < v.size(); ++i)
        if (!v[i].is_zero()) out.emplace_back(i, v[i]);
    return out;
}

Mat Mat::identity(std::size_t n) {
    Mat m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = Rat(1);
    return m;
}

Mat Mat::from_columns(std::span<const Vec> cols, std::size_t rows) {
    Mat m(rows, cols.size());
    for (std::size_t c = 0; c < cols.size(); ++c) m.set_column(c, cols[c]);
    return m;
}

Mat Mat::from_rows(std::span<const Vec> rows, std::size_t cols) {
    Mat m(rows.size(), cols);
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (rows[r].size() != cols) throw std::invalid_argument("Mat::from_rows: ragged rows");
        std::copy(rows[r].begin(), rows[r].end(), m.row(r).begin());
    }
    return m;
}

Vec Mat::column(std::size_t c) const {
    Vec v(rows_);
    for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
    return v;
}

void Mat::set_column(std::size_t c, std::span<const Rat> v) {
    if (v.size() != rows_) throw std::invalid_argument("Mat::set_column: length mismatch");
    for (std::size_t r = 0; r < rows_; ++r) (*this)(r, c) = v[r];
}

Mat Mat::transpose() const {
    Mat t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
    return t;
}

Vec Mat::apply(std::span<const Rat> v) const {
    if (v.size() != cols_) throw std::invalid_argument("Mat::apply: dimension mismatch");
    Vec out(rows_);
    for (std::size_t c = 0; c < cols_; ++c) {
        if (v[c].is_zero()) continue;
        for (std::size_t r = 0; r < rows_; ++r) {
            const Rat& a = (*this)(r, c);
            if (!a.is_zero()) out[r] += a * v[c];
        }
    }
    return out;
}

bool Mat::is_zero() const { return wha::is_zero(data_); }

Mat operator*(const Mat& a, const Mat& b) {
    if (a.cols_ != b.rows_) throw std::invalid_argument("Mat*: dimension mismatch");
    Mat p(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
        for (std::size_t k = 0; k < a.cols_; ++k) {
            const Rat& x = a(i, k);
            if (x.is_zero()) continue;
            for (std::size_t j = 0; j < b.cols_; ++j) {
                const Rat& y = b(k, j);
                if (!y.is_zero()) p(i, j) += x * y;
            }
        }
    return p;
}

Mat operator+(const Mat& a, const Mat& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw std::invalid_argument("Mat+: dimension mismatch");
    Mat s = a;
    for (std::size_t i = 0; i < s.data_.size(); ++i) s.data_[i] += b.data_[i];
    return s;
}

Mat operator-(const Mat& a, const Mat& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw std::invalid_argument("Mat-: dimension mismatch");
    Mat s = a;
    for (std::size_t i = 0; i < s.data_.size(); ++i) s.data_[i] -= b.data_[i];
    return s;
}

namespace {

// Clears denominators so the row is integral; zero rows are reported as empty.
bool integralize(std::vector<Rat>& row) {
    mpz_class l = 1;
    bool nonzero = false;
    for (const Rat& x : row) {
        if (x.is_zero()) continue;
        nonzero = true;
        if (!x.is_integer()) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.denominator().get_mpz_t());
    }
    if (!nonzero) return false;
    if (l != 1) {
        Rat s{mpq_class(l)};
        for (Rat& x : row)
            if (!x.is_zero()) x *= s;
    }
    return true;
}

}  // namespace

Echelon echelon(const Mat& m) {
    const std::size_t cols = m.cols();
    std::vector<std::vector<Rat>> rows;
    rows.reserve(m.rows());
    for (std::size_t r = 0; r < m.rows(); ++r) {
        std::vector<Rat> row(m.row(r).begin(), m.row(r).end());
        if (integralize(row)) rows.push_back(std::move(row));
    }

    Echelon e;
    Rat prev(1);
    std::size_t r = 0;
    std::vector<std::size_t> nz;
    for (std::size_t c = 0; c < cols && r < rows.size(); ++c) {
        std::size_t p = r;
        while (p < rows.size() && rows[p][c].is_zero()) ++p;
        if (p == rows.size()) continue;
        std::swap(rows[p], rows[r]);
        const Rat piv = rows[r][c];
        nz.clear();
        for (std::size_t j = c + 1; j < cols; ++j)
            if (!rows[r][j].is_zero()) nz.push_back(j);
        const Rat ratio = piv / prev;
        for (std::size_t i = r + 1; i < rows.size(); ++i) {
            auto& row = rows[i];
            const Rat a = row[c];
            if (a.is_zero()) {
                if (!ratio.is_one())
                    for (std::size_t j = c + 1; j < cols; ++j)
                        if (!row[j].is_zero()) row[j] *= ratio;
                continue;
            }
            // row <- (piv * row - a * pivot_row) / prev, exact over the integers.
            for (std::size_t j = c + 1; j < cols; ++j)
                if (!row[j].is_zero()) row[j] = row[j] * piv;
            for (std::size_t j : nz) row[j] -= a * rows[r][j];
            if (!prev.is_one())
                for (std::size_t j = c + 1; j < cols; ++j)
                    if (!row[j].is_zero()) row[j] /= prev;
            row[c] = Rat();
        }
        prev = piv;
        e.pivot_cols.push_back(c);
        ++r;
    }
    e.rank = r;

    // Back-substitution to reduced form.
    e.rref = Mat(e.rank, cols);
    for (std::size_t k = e.rank; k-- > 0;) {
        auto& row = rows[k];
        const std::size_t pc = e.pivot_cols[k];
        const Rat inv = row[pc].inverse();
        for (std::size_t j = pc; j < cols; ++j)
            if (!row[j].is_zero()) row[j] *= inv;
        for (std::size_t i = 0; i < k; ++i) {
            const Rat f = rows[i][pc];
            if (f.is_zero()) continue;
            for (std::size_t j = pc; j < cols; ++j)
                if (!row[j].is_zero()) rows[i][j] -= f * row[j];
        }
    }
    for (std::size_t k = 0; k < e.rank; ++k)
        std::copy(rows[k].begin(), rows[k].end(), e.rref.row(k).begin());
    return e;
}

std::size_t rank(const Mat& m) { return echelon(m).rank; }

std::vector<Vec> kernel_basis(const Mat& m) {
    const Echelon e = echelon(m);
    const std::size_t n = m.cols();
    std::vector<bool> is_pivot(n, false);
    for (std::size_t pc : e.pivot_cols) is_pivot[pc] = true;
    std::vector<Vec> basis;
    for (std::size_t f = 0; f < n; ++f) {
        if (is_pivot[f]) continue;
        Vec v(n);
        v[f] = Rat(1);
        for (std::size_t k = 0; k < e.rank; ++k) {
            const Rat& x = e.rref(k, f);
            if (!x.is_zero()) v[e.pivot_cols[k]] = -x;
        }
        basis.push_back(std::move(v));
    }
    return basis;
}

std::optional<Vec> solve(const Mat& m, std::span<const Rat> b) {
    if (b.size() != m.rows()) throw std::invalid_argument("solve: right-hand side has wrong length");
    Mat aug(m.rows(), m.cols() + 1);
    for (std::size_t r = 0; r < m.rows(); ++r) {
        std::copy(m.row(r).begin(), m.row(r).end(), aug.row(r).begin());
        aug(r, m.cols()) = b[r];
    }
    const Echelon e = echelon(aug);
    if (e.rank > 0 && e.pivot_cols.back() == m.cols()) return std::nullopt;
    Vec x(m.cols());
    for (std::size_t k = 0; k < e.rank; ++k) x[e.pivot_cols[k]] = e.rref(k, m.cols());
    return x;
}

std::optional<Mat> inverse(const Mat& m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("inverse: matrix not square");
    const std::size_t n = m.rows();
    Mat aug(n, 2 * n);
    for (std::size_t r = 0; r < n; ++r) {
        std::copy(m.row(r).begin(), m.row(r).end(), aug.row(r).begin());
        aug(r, n + r) = Rat(1);
    }
    const Echelon e = echelon(aug);
    if (e.rank < n || e.pivot_cols[n - 1] != n - 1) return std::nullopt;
    Mat inv(n, n);
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c) inv(r, c) = e.rref(r, n + c);
    return inv;
}

std::vector<Vec> span_basis(std::span<const Vec> vectors, std::size_t n) {
    if (vectors.empty()) return {};
    const Echelon e = echelon(Mat::from_rows(vectors, n));
    std::vector<Vec> basis;
    basis.reserve(e.rank);
    for (std::size_t k = 0; k < e.rank; ++k) basis.emplace_back(e.rref.row(k).begin(), e.rref.row(k).end());
    return basis;
}

std::optional<Vec> coordinates(std::span<const Vec> basis, std::span<const Rat> v) {
    if (basis.empty()) {
        if (is_zero(v)) return Vec{};
        return std::nullopt;
    }
    return solve(Mat::from_columns(basis, v.size()), v);
}

bool in_span(std::span<const Vec> basis, std::span<const Rat> v) { return coordinates(basis, v).has_value(); }

BasisCoords::BasisCoords(std::span<const Vec> basis, std::size_t n) : basis_(basis.begin(), basis.end()) {
    const std::size_t k = basis_.size();
    if (k == 0) return;
    // Pivot columns of B^T are rows of B that form an invertible k x k block.
    const Echelon e = echelon(Mat::from_rows(basis_, n));
    if (e.rank != k) throw std::invalid_argument("BasisCoords: dependent family");
    rows_ = e.pivot_cols;
    Mat block(k, k);
    for (std::size_t r = 0; r < k; ++r)
        for (std::size_t c = 0; c < k; ++c) block(r, c) = basis_[c][rows_[r]];
    inv_ = *inverse(block);
}

std::optional<Vec> BasisCoords::operator()(std::span<const Rat> v) const {
    const std::size_t k = basis_.size();
    Vec sel(k);
    for (std::size_t r = 0; r < k; ++r) sel[r] = v[rows_[r]];
    Vec x = inv_.apply(sel);
    Vec back(v.size());
    for (std::size_t c = 0; c < k; ++c)
        if (!x[c].is_zero()) axpy(back, x[c], basis_[c]);
    for (std::size_t i = 0; i < v.size(); ++i)
        if (back[i] != v[i]) return std::nullopt;
    return x;
}

bool same_span(std::span<const Vec> a, std::span<const Vec> b, std::size_t n) {
    return span_basis(a, n) == span_basis(b, n);
}

std::vector<Vec> intersect(std::span<const Vec> a, std::span<const Vec> b, std::size_t n) {
    if (a.empty() || b.empty()) return {};
    // Solve sum s_i a_i - sum t_j b_j = 0 and map kernel vectors back through a.
    Mat m(n, a.size() + b.size());
    for (std::size_t i = 0; i < a.size(); ++i) m.set_column(i, a[i]);
    for (std::size_t j = 0; j < b.size(); ++j) {
        Vec neg = scale(b[j], Rat(-1));
        m.set_column(a.size() + j, neg);
    }
    std::vector<Vec> out;
    for (const Vec& k : kernel_basis(m)) {
        Vec v(n);
        for (std::size_t i = 0; i < a.size(); ++i) axpy(v, k[i], a[i]);
        out.push_back(std::move(v));
    }
    return span_basis(out, n);
}

}  // namespace wha

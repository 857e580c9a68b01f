#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "wha/exactlin/rat.hpp"

namespace wha {

using Vec = std::vector<Rat>;

Vec zero_vec(std::size_t n);
Vec unit_vec(std::size_t n, std::size_t i);
bool is_zero(std::span<const Rat> v);
Vec add(std::span<const Rat> a, std::span<const Rat> b);
Vec sub(std::span<const Rat> a, std::span<const Rat> b);
Vec scale(std::span<const Rat> a, const Rat& s);
/// a += s * b
void axpy(Vec& a, const Rat& s, std::span<const Rat> b);
Rat dot(std::span<const Rat> a, std::span<const Rat> b);
std::string to_string(std::span<const Rat> v);

using SparseVec = std::vector<std::pair<std::size_t, Rat>>;
/// (index, value) pairs of the nonzero entries, in index order.
SparseVec nonzeros(std::span<const Rat> v);

/// Dense r x c matrix of exact rationals, row-major. Matrices act on column
/// vectors: column j holds the image of the j-th basis vector.
class Mat {
public:
    Mat() = default;
    Mat(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

    static Mat identity(std::size_t n);
    static Mat from_columns(std::span<const Vec> cols, std::size_t rows);
    static Mat from_rows(std::span<const Vec> rows, std::size_t cols);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Rat& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const Rat& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    std::span<Rat> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }
    std::span<const Rat> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }
    Vec column(std::size_t c) const;
    void set_column(std::size_t c, std::span<const Rat> v);

    Mat transpose() const;
    Vec apply(std::span<const Rat> v) const;
    bool is_zero() const;

    friend Mat operator*(const Mat& a, const Mat& b);
    friend Mat operator+(const Mat& a, const Mat& b);
    friend Mat operator-(const Mat& a, const Mat& b);
    friend bool operator==(const Mat& a, const Mat& b) = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Rat> data_;
};

/// Row echelon data produced by fraction-free elimination.
struct Echelon {
    std::size_t rank = 0;
    std::vector<std::size_t> pivot_cols;
    /// Reduced row echelon form (pivots normalised to one, zero above and below),
    /// `rank` rows by the input column count.
    Mat rref;
};

/// Bareiss fraction-free elimination followed by exact back-substitution.
Echelon echelon(const Mat& m);

std::size_t rank(const Mat& m);

/// Exact basis of the right null space {v : m v = 0}; empty iff m has full column rank.
std::vector<Vec> kernel_basis(const Mat& m);

/// Exact solution of m x = b, or nullopt when inconsistent. Throws
/// std::invalid_argument when b does not have m.rows() entries.
std::optional<Vec> solve(const Mat& m, std::span<const Rat> b);

/// Inverse of a square matrix, or nullopt when singular.
std::optional<Mat> inverse(const Mat& m);

/// Canonical basis (RREF rows) of the span of the given vectors, all of length n.
std::vector<Vec> span_basis(std::span<const Vec> vectors, std::size_t n);

/// Coordinates of v in an independent family, or nullopt when v is outside its span.
std::optional<Vec> coordinates(std::span<const Vec> basis, std::span<const Rat> v);

bool in_span(std::span<const Vec> basis, std::span<const Rat> v);

/// Repeated coordinate extraction against one independent family: the inverse of
/// a maximal invertible row block is computed once.
class BasisCoords {
public:
    /// Throws std::invalid_argument when the family is dependent.
    BasisCoords(std::span<const Vec> basis, std::size_t n);
    std::size_t dim() const { return basis_.size(); }
    /// Coordinates of v, or nullopt when v is outside the span.
    std::optional<Vec> operator()(std::span<const Rat> v) const;

private:
    std::vector<Vec> basis_;
    std::vector<std::size_t> rows_;
    Mat inv_;
};

/// Exact equality of two spans in k^n.
bool same_span(std::span<const Vec> a, std::span<const Vec> b, std::size_t n);

/// Basis of the intersection of two spans in k^n.
std::vector<Vec> intersect(std::span<const Vec> a, std::span<const Vec> b, std::size_t n);

}  // namespace wha

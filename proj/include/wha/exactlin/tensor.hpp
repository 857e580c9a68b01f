#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "wha/exactlin/linalg.hpp"

namespace wha {

/// One nonzero entry (j, k, c) of the slice T[i][.][.].
struct Entry3 {
    std::uint32_t j;
    std::uint32_t k;
    Rat c;
};

/// Order-3 tensor T[i][j][k] of shape n0 x n1 x n2.
///
/// For a multiplication tensor, T[i][j][k] is the coefficient of e_k in e_i e_j;
/// for a comultiplication tensor, T[i][j][k] is the coefficient of e_j (x) e_k in
/// Delta(e_i). Entries are stored per leading index as a list sorted by (j, k)
/// with zeros dropped, so the fiber T[i][j][.] is a contiguous run.
class Tensor3 {
public:
    Tensor3() = default;
    Tensor3(std::size_t n0, std::size_t n1, std::size_t n2);
    explicit Tensor3(std::size_t n) : Tensor3(n, n, n) {}

    std::array<std::size_t, 3> shape() const { return {n0_, n1_, n2_}; }
    std::size_t dim0() const { return n0_; }
    std::size_t dim1() const { return n1_; }
    std::size_t dim2() const { return n2_; }

    std::span<const Entry3> slice(std::size_t i) const { return slices_[i]; }
    /// Entries with the given (i, j), as a contiguous subrange of slice(i).
    std::span<const Entry3> fiber(std::size_t i, std::size_t j) const;
    Vec fiber_vec(std::size_t i, std::size_t j) const;
    Rat get(std::size_t i, std::size_t j, std::size_t k) const;
    std::size_t nonzeros() const;

    friend bool operator==(const Tensor3& a, const Tensor3& b);

    class Builder;

private:
    std::size_t n0_ = 0, n1_ = 0, n2_ = 0;
    std::vector<std::vector<Entry3>> slices_;
};

/// Accumulates entries in any order; build() sorts, merges and drops zeros.
class Tensor3::Builder {
public:
    Builder(std::size_t n0, std::size_t n1, std::size_t n2);
    void add(std::size_t i, std::size_t j, std::size_t k, const Rat& c);
    void add_fiber(std::size_t i, std::size_t j, std::span<const Rat> v);
    Tensor3 build() &&;

private:
    Tensor3 t_;
};

/// Element of V_1 (x) ... (x) V_r stored densely; the first leg is the most
/// significant index.
class TensorElem {
public:
    TensorElem() = default;
    explicit TensorElem(std::vector<std::size_t> dims);
    TensorElem(std::vector<std::size_t> dims, Vec coeffs);

    std::size_t legs() const { return dims_.size(); }
    const std::vector<std::size_t>& dims() const { return dims_; }
    const Vec& coeffs() const { return coeffs_; }
    Vec& coeffs() { return coeffs_; }
    std::size_t size() const { return coeffs_.size(); }

    std::size_t flat(std::span<const std::size_t> idx) const;
    std::vector<std::size_t> unflat(std::size_t f) const;
    Rat& at(std::span<const std::size_t> idx) { return coeffs_[flat(idx)]; }
    const Rat& at(std::span<const std::size_t> idx) const { return coeffs_[flat(idx)]; }
    Rat& at2(std::size_t i, std::size_t j) { return coeffs_[i * dims_[1] + j]; }
    const Rat& at2(std::size_t i, std::size_t j) const { return coeffs_[i * dims_[1] + j]; }

    bool is_zero() const { return wha::is_zero(coeffs_); }
    /// Flat indices of nonzero coefficients.
    std::vector<std::size_t> support() const;

    /// Leg permutation: result leg t is input leg perm[t].
    TensorElem permute(std::span<const std::size_t> perm) const;
    /// Two-leg element as a matrix with rows indexed by the first leg.
    Mat as_matrix() const;
    static TensorElem from_matrix(const Mat& m);

    friend TensorElem operator+(const TensorElem& a, const TensorElem& b);
    friend TensorElem operator-(const TensorElem& a, const TensorElem& b);
    friend TensorElem operator*(const Rat& s, const TensorElem& a);
    friend bool operator==(const TensorElem& a, const TensorElem& b) = default;

private:
    std::vector<std::size_t> dims_;
    Vec coeffs_;
};

/// Sparse accumulator keyed by flattened multi-indices, for expansions whose
/// dense form would be too large.
class SparseAcc {
public:
    void add(std::uint64_t key, const Rat& c);
    Rat get(std::uint64_t key) const;
    bool is_zero() const;
    /// Smallest key with a nonzero value, or nullopt when zero.
    std::optional<std::uint64_t> first_nonzero() const;
    const std::unordered_map<std::uint64_t, Rat>& entries() const { return m_; }
    friend bool operator==(const SparseAcc& a, const SparseAcc& b);

private:
    std::unordered_map<std::uint64_t, Rat> m_;
};

/// Outer product a (x) b; legs of a come first.
TensorElem outer(const TensorElem& a, const TensorElem& b);

/// Contracts leg pairs (leg of a, leg of b). The result carries the remaining
/// legs of a in order followed by the remaining legs of b in order. Throws
/// std::invalid_argument when paired legs differ in dimension or a leg repeats.
TensorElem contract(const TensorElem& a, const TensorElem& b,
                    std::span<const std::pair<std::size_t, std::size_t>> pairs);

}  // namespace wha

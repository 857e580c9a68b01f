#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "wha/exactlin/linalg.hpp"
#include "wha/exactlin/tensor.hpp"
#include "wha/report.hpp"

namespace wha {

/// Finite-dimensional associative unital algebra given by structure constants.
struct StructureAlgebra {
    std::size_t dim = 0;
    Tensor3 mult;  ///< mult[i][j][k]: coefficient of e_k in e_i e_j
    Vec unit;

    Vec mul(std::span<const Rat> x, std::span<const Rat> y) const;
    Vec mul_basis(std::size_t i, std::size_t j) const { return mult.fiber_vec(i, j); }
    /// Matrix of y -> x y.
    Mat left_mult(std::span<const Rat> x) const;
    /// Matrix of y -> y x.
    Mat right_mult(std::span<const Rat> x) const;
    bool is_commutative() const;
};

struct StructureCoalgebra {
    std::size_t dim = 0;
    Tensor3 comult;  ///< comult[i][j][k]: coefficient of e_j (x) e_k in Delta(e_i)
    Vec counit;

    TensorElem coprod(std::span<const Rat> x) const;
    Rat eps(std::span<const Rat> x) const { return dot(counit, x); }
};

/// Algebra, coalgebra and antipode on one space. Also the carrier of weak Hopf
/// structures, which differ only in the axioms they satisfy.
struct HopfData {
    StructureAlgebra algebra;
    StructureCoalgebra coalgebra;
    Mat antipode;

    std::size_t dim() const { return algebra.dim; }
};

struct GroupTable {
    std::vector<std::string> elements;
    std::vector<std::vector<std::size_t>> table;  ///< table[a][b] = index of a*b
};

/// Validates associativity, identity and inverses; returns the identity index.
/// Throws std::invalid_argument naming the failed axiom.
std::size_t validate_group(const GroupTable& g);
std::vector<std::size_t> group_inverses(const GroupTable& g);

/// Standard small groups with their elements in a fixed order. S3 elements are
/// e, (12), (13), (23), (123), (132) composed right-to-left as permutations.
GroupTable cyclic_group(std::size_t n);
GroupTable symmetric_group_s3();
GroupTable trivial_group();

StructureAlgebra pointwise_algebra(std::size_t n);
/// M_n(k) on matrix units E_ij at index i*n + j.
StructureAlgebra matrix_algebra(std::size_t n);
StructureAlgebra opposite_algebra(const StructureAlgebra& a);
/// A (x) B on the basis e_i (x) f_j at index i * b.dim + j.
StructureAlgebra tensor_algebra(const StructureAlgebra& a, const StructureAlgebra& b);
/// The subalgebra spanned by an independent family, in coordinates over that
/// family. Throws std::invalid_argument when the span is not a unital subalgebra.
StructureAlgebra restrict_algebra(const StructureAlgebra& a, std::span<const Vec> basis);

VerificationReport verify_algebra(const StructureAlgebra& a);
VerificationReport verify_coalgebra(const StructureCoalgebra& c);
VerificationReport verify_hopf(const HopfData& h);

HopfData group_algebra(const GroupTable& g);
HopfData dual_hopf(const HopfData& h);
/// Sweedler's four-dimensional Hopf algebra on the basis 1, g, x, gx with
/// g^2 = 1, x^2 = 0, xg = -gx, Delta(x) = x (x) 1 + g (x) x. Not semisimple and
/// S^2 != id; used to exercise conventions beyond group algebras.
HopfData sweedler_algebra();

enum class Opposite { op, cop, opcop };
HopfData opposites(const HopfData& h, Opposite which);

std::optional<Mat> antipode_inverse(const HopfData& h);

struct IntegralPair {
    Vec Lambda;  ///< two-sided integral in H
    Vec lambda;  ///< integral of H*, coefficients in the dual basis
};

/// Two-sided integral with <lambda, 1> = 1 and <lambda, Lambda> = 1. Throws
/// PreconditionError when either integral space is not one-dimensional or a
/// normalisation is impossible (non-semisimple input).
IntegralPair integrals(const HopfData& h);

struct MapKinds {
    bool algebra = false;
    bool coalgebra = false;
    bool antipode = false;
    bool injective = false;
};

/// Checks the requested properties of f (dst.dim x src.dim, columns = images of
/// source basis vectors).
VerificationReport check_map(const Mat& f, const HopfData& src, const HopfData& dst, MapKinds kinds);
VerificationReport check_algebra_map(const Mat& f, const StructureAlgebra& src, const StructureAlgebra& dst);

// --- Multi-leg element arithmetic -------------------------------------------

/// Product in A_1 (x) ... (x) A_r, one algebra per leg.
TensorElem mul_legs(std::span<const StructureAlgebra* const> algs, const TensorElem& x, const TensorElem& y);
/// Product in A (x) ... (x) A with the same algebra on each leg.
TensorElem mul_same(const StructureAlgebra& a, const TensorElem& x, const TensorElem& y);
/// Applies a linear map to one leg (leg dimension may change).
TensorElem apply_on_leg(const TensorElem& x, std::size_t leg, const Mat& f);
/// Replaces leg `leg` by the two legs of its coproduct.
TensorElem comult_on_leg(const TensorElem& x, std::size_t leg, const StructureCoalgebra& c);
/// Pure tensor of vectors.
TensorElem pure(std::span<const Vec> factors);
/// Places the legs of x at `positions` of an r-leg element and the given unit
/// vectors on the other legs; e.g. R13 = embed(R, {0, 2}, {1, 1, 1}).
TensorElem embed(const TensorElem& x, std::span<const std::size_t> positions, std::span<const Vec> units);
/// The flip x^1 (x) x^2 -> x^2 (x) x^1 of a two-leg element.
TensorElem flip(const TensorElem& x);
/// m(x) for x in A (x) A.
Vec multiply_out(const StructureAlgebra& a, const TensorElem& x);

}  // namespace wha

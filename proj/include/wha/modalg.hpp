#pragma once

#include <string>
#include <vector>

#include "wha/hopfcore.hpp"
#include "wha/qtriang.hpp"

namespace wha {

/// A left H-module algebra A. action[h][a][b] is the coefficient of e_b in h . e_a.
struct ModuleAlgebraData {
    HopfData host;
    StructureAlgebra A;
    Tensor3 action;

    /// h . a for arbitrary elements.
    Vec act(std::span<const Rat> h, std::span<const Rat> a) const;
    /// Matrix of a -> e_h . a.
    Mat action_matrix(std::size_t h) const;
};

/// Throws std::invalid_argument for a zero-dimensional algebra or mismatched shapes.
ModuleAlgebraData make_module_algebra(HopfData host, StructureAlgebra A, Tensor3 action);

/// Trivial action h . a = eps(h) a.
ModuleAlgebraData trivial_module_algebra(HopfData host, StructureAlgebra A);

/// k^X with g . e_x = e_{g x}; act[g][x] is the image point. The host is kG.
ModuleAlgebraData permutation_module_algebra(const GroupTable& g, const std::vector<std::vector<std::size_t>>& act);

VerificationReport verify_module_algebra(const ModuleAlgebraData& m);

/// ab = (R^2 . b)(R^1 . a) for all basis pairs.
Witnessed is_quantum_commutative(const QTStructure& q, const ModuleAlgebraData& m);

struct SeparabilityData {
    TensorElem x;  ///< x[a][b]: coefficient of e_a (x) e_b
    Vec alpha;     ///< trace of the left regular representation, on the basis
    VerificationReport report;
};

/// Casimir of the left-regular trace form. Throws PreconditionError when the
/// trace form is singular.
SeparabilityData separability(const StructureAlgebra& A);
/// As above, additionally checking <alpha, h . a> = eps(h) <alpha, a> and, when
/// S^2 = id on the host, h . x^1 (x) x^2 = x^1 (x) S(h) . x^2.
SeparabilityData separability(const ModuleAlgebraData& m);

/// u . a = a for all basis a, with u = S(R^2) R^1.
Witnessed u_acts_trivially(const QTStructure& q, const ModuleAlgebraData& m);

enum class Simplicity { certified_simple, not_simple, inconclusive };
std::string to_string(Simplicity s);

struct SimplicityResult {
    Simplicity verdict = Simplicity::inconclusive;
    std::vector<Vec> ideal;          ///< basis of a proper H-stable ideal when not_simple
    std::size_t commutant_dim = 0;   ///< of {L_a, R_a, h .} acting on A
    std::size_t operator_span_dim = 0;  ///< of the algebra they generate
    std::string detail;
};

/// Certified simple when the operators L_a, R_a and the action generate all of
/// End(A) (equivalently: commutant k and a semisimple operator algebra), which
/// means A has no proper H-stable ideal even after extending scalars. Reports
/// not_simple with a witness when the ideal generated by some basis vector is
/// proper, and inconclusive otherwise.
SimplicityResult is_H_simple(const ModuleAlgebraData& m);

/// Smallest subspace containing `seed` and closed under all given operators.
std::vector<Vec> operator_closure(std::span<const Mat> ops, std::span<const Vec> seed, std::size_t n);

/// Basis of {X : X M = M X for all M in ops}, matrices flattened row-major.
std::vector<Vec> commutant(std::span<const Mat> ops, std::size_t n);

}  // namespace wha

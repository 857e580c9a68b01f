#pragma once

#include <string>
#include <vector>

#include "wha/hopfcore.hpp"

namespace wha {

struct ModuleAlgebraData;

/// A Hopf algebra with an R-matrix R = sum R[a][b] e_a (x) e_b (first leg most
/// significant). Axioms follow the orientation
///   R Delta(h) = Delta^cop(h) R,  (Delta (x) id)R = R13 R23,  (id (x) Delta)R = R13 R12.
struct QTStructure {
    HopfData host;
    TensorElem R;
    TensorElem Rinv;

    std::size_t dim() const { return host.dim(); }
};

/// Builds the structure, computing Rinv as (S (x) id)(R) when that inverts R and
/// by an exact linear solve otherwise. Throws PreconditionError when R is not
/// invertible. The QT axioms are not checked here; see verify_qt.
QTStructure make_qt(HopfData host, TensorElem R);
/// R = 1 (x) 1.
QTStructure trivial_qt(HopfData host);

VerificationReport verify_qt(const QTStructure& q);

struct DrinfeldElement {
    Vec u;
    bool fixed_by_antipode = false;  ///< S(u) = u
    bool central = false;
};
/// u = S(R^2) R^1.
DrinfeldElement drinfeld_element(const QTStructure& q);

/// Q = R21 R = R_2^2 R_1^1 (x) R_2^1 R_1^2.
TensorElem monodromy(const QTStructure& q);

enum class Triangularity { triangular, almost_triangular_strict, quasi_triangular_only };
std::string to_string(Triangularity t);

struct TriangularityClass {
    Triangularity kind = Triangularity::quasi_triangular_only;
    bool first_leg_central = false;   ///< Q commutes with every h (x) 1
    bool second_leg_central = false;  ///< Q commutes with every 1 (x) h
    std::vector<std::size_t> witness;
};
TriangularityClass classify_triangularity(const QTStructure& q);

/// h .ad x = h_(1) x S(h_(2)); tensor[h][x][y] is the coefficient of e_y.
Tensor3 adjoint_action(const HopfData& h);

/// The transmuted braided group H_R: adjoint action, Delta_R(h) = h_(1) S(R^2) (x)
/// R^1 .ad h_(2) and S_R(h) = R^2 S(R^1 .ad h).
struct BraidedGroupData {
    QTStructure host;
    Tensor3 adjoint_action;
    Tensor3 comult_R;
    Mat antipode_R;
    VerificationReport report;

    /// (H, Delta_R, epsilon) as a coalgebra.
    StructureCoalgebra coalgebra() const { return {host.dim(), comult_R, host.host.coalgebra.counit}; }
    /// H_R^*: the algebra dual to (H, Delta_R, epsilon), with unit epsilon.
    StructureAlgebra dual_algebra() const;
};
BraidedGroupData transmute(const QTStructure& q);

/// Element-level Mueger test for an H-module algebra. `value` is
/// (R_2^2 R_1^1) . a (x) R_2^1 R_1^2 = a (x) 1 for all basis a; `alternate` is the
/// equivalent form R^1 . a (x) R^2 = R^2 . a (x) S(R^1).
struct MugerResult {
    Witnessed value;
    Witnessed alternate;
    bool consistent() const { return value.value == alternate.value; }
    explicit operator bool() const { return value.value; }
};
MugerResult muger_membership(const QTStructure& q, const ModuleAlgebraData& act);

/// The symmetric separability idempotent of H_R^*,
///   x = R^2 -> lambda_(1) (x) S^*(lambda_(2)) <-- R^1,
/// stored as x[g][h] = <x, e_g (x) e_h> over the dual basis.
struct DualSeparability {
    TensorElem x;
    StructureAlgebra hr_dual;
    VerificationReport report;
};
DualSeparability hr_dual_separability(const BraidedGroupData& bg, const IntegralPair& ip);

/// H acting on itself by the adjoint action, as a module algebra.
ModuleAlgebraData adjoint_module(const HopfData& h);
/// H_R^* as a left H^op-module algebra through <f <-- h, d> = <f, h .ad d>.
ModuleAlgebraData hr_dual_module(const BraidedGroupData& bg);
/// (H^op, R21). Requires an invertible antipode.
QTStructure op_qt(const QTStructure& q);

/// Evaluates the almost-triangularity equivalences independently: (2) Q central
/// in both legs, (3) H_R^* quantum commutative over (H^op, R21), (4) the adjoint
/// module lies in the Mueger center; records whether all agree.
VerificationReport prop42_report(const QTStructure& q);

}  // namespace wha

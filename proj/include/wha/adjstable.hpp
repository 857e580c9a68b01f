#pragma once

#include <string>
#include <vector>

#include "wha/hopfcore.hpp"
#include "wha/modalg.hpp"
#include "wha/qtriang.hpp"
#include "wha/smashcons.hpp"
#include "wha/weakhopf.hpp"

namespace wha {

/// Left comodule: coaction[w][c][w'] is the coefficient of e_c (x) w' in rho(w).
struct ComoduleData {
    StructureCoalgebra coalgebra;
    std::size_t dim = 0;
    Tensor3 coaction;
};
VerificationReport verify_comodule(const ComoduleData& w);
/// The subcomodule on an independent family (coordinates over that family).
/// Throws std::invalid_argument when the span is not a subcomodule.
ComoduleData restrict_comodule(const ComoduleData& w, std::span<const Vec> basis);
ComoduleData direct_sum(const ComoduleData& a, const ComoduleData& b);

/// Left-left Yetter-Drinfeld module. action[h][v][v']: coefficient of v' in h . v;
/// coaction[v][h][v']: coefficient of e_h (x) v' in v_<-1> (x) v_<0>.
struct YetterDrinfeldData {
    HopfData host;
    std::size_t dim = 0;
    Tensor3 action;
    Tensor3 coaction;
};
VerificationReport verify_yd(const YetterDrinfeldData& v);
/// (H, .ad, Delta) restricted to a subspace stable under both; the whole of H
/// when `block` is empty.
YetterDrinfeldData regular_yd(const HopfData& h, std::span<const Vec> block = {});

struct GeneratedComodule {
    ComoduleData comodule;         ///< rho_R over H_R
    std::vector<Vec> subcoalgebra; ///< D_V inside H
    VerificationReport report;
};
/// rho_R(v) = v_<-1> S(R^2) (x) R^1 . v_<0>, and the subcoalgebra it generates.
GeneratedComodule yd_to_comodule(const YetterDrinfeldData& v, const QTStructure& q);

/// An H-module with a compatible left H_R-coaction.
struct HComodule {
    std::size_t dim = 0;
    Tensor3 action;  ///< action[h][x][x']
    ComoduleData comodule;
};
/// Module laws, comodule laws and rho(h . x) = h_(1) .ad x_<-1> (x) h_(2) . x_<0>.
VerificationReport verify_h_comodule(const HComodule& m, const BraidedGroupData& bg);

/// H (x) W on the basis e_h (x) w at index h * dim W + w.
struct HTensorW {
    HComodule object;
    Tensor3 right_coaction;  ///< [x][x'][h]: coefficient of x' (x) e_h in rho'(x)
    VerificationReport report;
};
HTensorW build_h_tensor_w(const ComoduleData& w, const BraidedGroupData& bg);

/// D as a left H_R-comodule through Delta_R. Throws PreconditionError when D is
/// not a subcoalgebra of H_R.
ComoduleData subcoalgebra_comodule(const BraidedGroupData& bg, std::span<const Vec> D);
bool is_subcoalgebra(const StructureCoalgebra& c, std::span<const Vec> D);
bool is_ad_stable(const BraidedGroupData& bg, std::span<const Vec> D);

/// Basis of W^* box M inside W^* (x) M (index a * dim M + m), where W^* carries
/// the right coaction dual to the left coaction of W.
std::vector<Vec> cotensor(const ComoduleData& w, const ComoduleData& m);

/// N_W = W^* box (H (x) W) inside W^* (x) H (x) W, index (a * dim H + h) * dim W + b.
struct AdjointStableAlgebra {
    ComoduleData W;
    std::size_t dim_h = 0;
    std::vector<Vec> basis;
    StructureAlgebra carrier;
    VerificationReport report;

    std::size_t index(std::size_t a, std::size_t h, std::size_t b) const { return (a * dim_h + h) * W.dim + b; }
};
AdjointStableAlgebra adjoint_stable_algebra(const ComoduleData& w, const BraidedGroupData& bg);

/// W^* box V as a right N_W-module. action[y] is the matrix of m -> m . y in
/// coordinates over `basis`.
struct CotensorModule {
    std::vector<Vec> basis;
    std::vector<Mat> action;
    VerificationReport report;
};
CotensorModule cotensor_right_module(const HComodule& v, const AdjointStableAlgebra& n);
VerificationReport verify_right_module(const CotensorModule& m, const StructureAlgebra& n);

/// Which leg of Delta_R(d) Phi keeps in the D factor: from_first_leg pairs
/// d^(2) with D^* and keeps d^(1); from_second_leg does the opposite. They agree
/// when Delta_R is cocommutative on D.
enum class DualCoaction { from_first_leg, from_second_leg };
std::string to_string(DualCoaction c);

struct PsiPhi {
    std::vector<Vec> D;
    ModuleAlgebraData dual;  ///< D^* over H^op
    SmashProduct smash;      ///< D^* # H^op
    AdjointStableAlgebra N;
    Mat psi;  ///< N_D -> D^* # H^op, over the carrier bases
    Mat phi;  ///< D^* # H^op -> N_D
    DualCoaction convention = DualCoaction::from_first_leg;
    VerificationReport report;
};
/// Throws PreconditionError("H-module subcoalgebra D") when D is not one.
PsiPhi psi_phi(std::span<const Vec> D, const QTStructure& q, DualCoaction c);
/// Tries both conventions and keeps the one whose report passes.
PsiPhi psi_phi(std::span<const Vec> D, const QTStructure& q);

struct HRDecomposition {
    std::vector<std::vector<Vec>> blocks;  ///< sorted by dimension
    bool complete = true;
    std::string diagnostics;
    VerificationReport report;
};
HRDecomposition decompose_hr(const BraidedGroupData& bg);

/// Minimal invariant subspaces of `space` under `ops` (all n x n), split by
/// rational eigenspaces of commutant elements. `complete` is false when some
/// summand has a larger commutant without a rational splitting.
struct Splitting {
    std::vector<std::vector<Vec>> blocks;
    bool complete = true;
};
Splitting split_invariant(std::span<const Mat> ops, std::span<const Vec> space, std::size_t n);

struct NDTransport {
    PsiPhi iso;
    SmashWeakHopf smash_wha;
    WeakQTStructure nd;  ///< transported to the N_D carrier
    std::vector<std::size_t> nd_blocks;
    std::vector<std::vector<std::size_t>> nw_blocks;  ///< per simple W inside D
    VerificationReport report;
};
/// Throws PreconditionError("almost-triangular (H, R)") when the hypothesis fails.
NDTransport nd_transport_report(std::span<const Vec> D, const QTStructure& q);

}  // namespace wha

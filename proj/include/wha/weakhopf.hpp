#pragma once

#include <optional>
#include <string>
#include <vector>

#include "wha/hopfcore.hpp"
#include "wha/qtriang.hpp"

namespace wha {

/// Weak Hopf algebras share the HopfData carrier; only the axioms differ.
using WeakHopfData = HopfData;

/// Weak bialgebra axioms: algebra and coalgebra axioms, Delta multiplicative,
/// weak comultiplicativity of the unit in both orders and the two weak counit
/// identities eps(f g_(1)) eps(g_(2) h) = eps(f g h) = eps(f g_(2)) eps(g_(1) h).
VerificationReport verify_weak_bialgebra(const WeakHopfData& w);

struct CounitalData {
    Mat eps_s;  ///< h -> 1_(1) eps(h 1_(2))
    Mat eps_t;  ///< h -> eps(1_(1) h) 1_(2)
    std::vector<Vec> source_basis;
    std::vector<Vec> target_basis;
    VerificationReport report;  ///< idempotence, unital subalgebras, commuting images
};

CounitalData counital_data(const WeakHopfData& w);

/// h_(1) S(h_(2)) = eps_t(h), S(h_(1)) h_(2) = eps_s(h), S(h_(1)) h_(2) S(h_(3)) = S(h),
/// plus the weak bialgebra axioms. Whether S reverses products and coproducts,
/// and the identities eps_t S = eps_t eps_s = S eps_s, are recorded as facts.
VerificationReport verify_weak_hopf(const WeakHopfData& w);

struct WeakQTStructure {
    WeakHopfData host;
    TensorElem Rw;
    TensorElem Rw_bar;
};

/// Rbar R = Delta(1), R Rbar = Delta^cop(1), Delta^cop(h) R = R Delta(h),
/// (Delta (x) id) R = R13 R23, (id (x) Delta) R = R13 R12. The fact
/// "triangular" records R21 R = Delta(1).
VerificationReport verify_weak_qt(const WeakQTStructure& wq);

/// A Hopf QT structure viewed as a weak one (Delta(1) = 1 (x) 1).
WeakQTStructure as_weak_qt(const QTStructure& q);

/// Conditions (2) to (6) characterising almost-triangularity of a weak QT
/// structure with Q = R21 R: facts "cond2" .. "cond6"; the check
/// "conditions_agree" fails when they disagree.
///   (2) Q in C(C(H_s)) (x) H          (3) Q in H (x) C(C(H_t))
///   (4) both                          (5) C(H_s) lies in the Mueger centre
///   (6) Q is central in Delta(1)(H (x) H)Delta(1)
VerificationReport almost_triangular_wha_report(const WeakQTStructure& wq);

/// Algebra map, coalgebra map, f S = S f and injectivity.
VerificationReport check_wha_morphism(const Mat& f, const WeakHopfData& src, const WeakHopfData& dst);

/// Basis of {b : b s = s b for all s in the span of `span`} inside the algebra.
std::vector<Vec> centralizer(const StructureAlgebra& a, std::span<const Vec> span);

/// h ._ad b = h_(1) b S(h_(2)) for arbitrary h, b.
Vec weak_adjoint(const WeakHopfData& w, std::span<const Rat> h, std::span<const Rat> b);

// --- Groupoids ---------------------------------------------------------------------

struct GroupoidMorphism {
    std::size_t src = 0;
    std::size_t dst = 0;
    std::string name;
};

struct GroupoidData {
    std::vector<std::string> objects;
    std::vector<GroupoidMorphism> morphisms;
    /// compose[f][g] = f o g, defined exactly when src(f) = dst(g).
    std::vector<std::vector<std::optional<std::size_t>>> compose;
};

struct GroupoidStructure {
    std::vector<std::size_t> identity;  ///< identity morphism of each object
    std::vector<std::size_t> inverse;   ///< inverse of each morphism
};

/// Throws std::invalid_argument naming the first violated groupoid axiom.
GroupoidStructure validate_groupoid(const GroupoidData& g);

/// Morphisms (i, j): j -> i at index i*t + j, so the groupoid algebra is M_t(k).
GroupoidData pair_groupoid(std::size_t t);
/// G acting on points: (g, x): x -> g x at index g*|X| + x. act[g][x] is g x.
GroupoidData transformation_groupoid(const GroupTable& g, const std::vector<std::vector<std::size_t>>& act);
/// A group as a one-object groupoid.
GroupoidData group_groupoid(const GroupTable& g);

/// Groupoid algebra: product = composition or 0, Delta(g) = g (x) g, eps(g) = 1,
/// S(g) = g^-1. Throws std::invalid_argument for an invalid groupoid.
WeakHopfData groupoid_wha(const GroupoidData& g);

}  // namespace wha

#pragma once

#include <string>
#include <utility>
#include <vector>

#include "wha/hopfcore.hpp"
#include "wha/modalg.hpp"
#include "wha/qtriang.hpp"
#include "wha/weakhopf.hpp"

namespace wha {

/// A # H on the basis a_i # h_j at index i * dim H + j, with
/// (a # h)(b # g) = a (h_(1) . b) # h_(2) g. The Hopf algebra H is A.host.
struct SmashProduct {
    ModuleAlgebraData A;
    StructureAlgebra carrier;

    std::size_t dim_a() const { return A.A.dim; }
    std::size_t dim_h() const { return A.host.dim(); }
    std::size_t index(std::size_t i, std::size_t j) const { return i * dim_h() + j; }
    /// a # h for arbitrary a, h.
    Vec pure(std::span<const Rat> a, std::span<const Rat> h) const;
};

SmashProduct smash_algebra(const ModuleAlgebraData& A);

/// The weak Hopf structure on A # H:
///   Delta~(a # h) = a (R^2 . x^1) # R^1 h_(1) (x) x^2 # h_(2),
///   eps~(a # h) = <alpha, a> eps(h),
///   S~(a # h) = (1 # S(h)) (R^2 . a # R^1).
/// `identities` holds the helper identities (a#1 commutes with sigma(b); sigma is
/// anti-multiplicative; Delta~(a#h) = Delta~(1)(a#h_(1) (x) 1#h_(2)); Delta~(1)
/// commutes with h_(1) (x) h_(2)), idempotence of Delta~(1), and the closed forms
/// of eps~_s and eps~_t.
struct SmashWeakHopf {
    SmashProduct smash;
    QTStructure q;
    SeparabilityData sep;
    WeakHopfData wha;
    VerificationReport identities;
    /// False when u acts nontrivially: then only the weak bialgebra structure is
    /// meaningful and `wha.antipode` is left empty.
    bool has_antipode = false;
};

enum class AntipodeGuard { require, allow_missing };

/// Throws PreconditionError("quantum commutative") when A is not quantum
/// commutative over q, and PreconditionError("u acts trivially") when the
/// Drinfeld element acts nontrivially and `guard` is require.
SmashWeakHopf smash_weak_structure(const SmashProduct& s, const QTStructure& q, const SeparabilityData& sep,
                                   AntipodeGuard guard = AntipodeGuard::require);

/// The R-matrix of A # H:
///   R~ = 1~_(2) (1 # R^1) 1~_(1') (x) 1~_(1) (1 # R^2) 1~_(2'),
///   Rbar~ = 1~_(1) (1 # S(R^1)) 1~_(2') (x) 1~_(2) (1 # R^2) 1~_(1').
/// `identities` compares both simplified forms of each.
struct SmashQT {
    WeakQTStructure wq;
    VerificationReport identities;
};
/// Throws PreconditionError("Mueger centre") when A is not in the Mueger centre.
SmashQT smash_qt(const SmashWeakHopf& w);

/// Theta(a # h) = theta(a # h_(1)) (x) h_(2) with theta(a # h)(b*) = a -> (b* <| S^-1(h)),
/// into End(A^*) (x) H on the basis E_ij (x) h_l at index (i * dim A + j) * dim H + l.
struct ThetaEmbedding {
    Mat map;
    StructureAlgebra target;
    VerificationReport report;  ///< algebra map and injectivity
};
ThetaEmbedding theta_embed(const SmashProduct& s);

/// B = A (x) H (x) A^* on the basis a_i (x) h_j (x) p_k at index (i * dim H + j) * dim A + k.
struct BAlgebra {
    ModuleAlgebraData A;
    QTStructure q;
    SeparabilityData sep;
    WeakHopfData wha;
    TensorElem R;
    TensorElem Rbar;  ///< (S_B (x) id)(R_B)
    std::vector<Vec> source_basis;
    std::vector<Vec> target_basis;
    VerificationReport report;  ///< B_s and B_t against their closed forms

    std::size_t index(std::size_t i, std::size_t j, std::size_t k) const {
        return (i * A.host.dim() + j) * A.A.dim + k;
    }
    WeakQTStructure weak_qt() const { return {wha, R, Rbar}; }
};
/// Throws PreconditionError("quantum commutative") when the hypothesis fails.
BAlgebra build_B(const ModuleAlgebraData& A, const QTStructure& q, const SeparabilityData& sep);

/// phi(a # h) = S(h_(1)) . a_<0> (x) h_(2) (x) a_<1> with a_<0> (x) a_<1> = x^1 a (x) x^2 -> alpha.
struct PhiEmbedding {
    Mat map;
    std::vector<Vec> image;      ///< basis of the column space
    std::vector<Vec> equalizer;  ///< {b : a b = b <| a for all a}
    VerificationReport report;   ///< morphism checks and image = equalizer
};
/// Throws PreconditionError("u acts trivially") when the hypothesis fails.
PhiEmbedding phi_embed(const SmashWeakHopf& w, const BAlgebra& b);

struct ImageMuger {
    bool r_in_image = false;
    bool muger = false;
    VerificationReport report;  ///< "equivalence" check
};
ImageMuger rb_in_image_iff_muger(const BAlgebra& b, const PhiEmbedding& phi);

/// The transformation-groupoid example: A = k^X over kG with a transitive action.
struct CaseStudyReport {
    std::size_t t = 0;
    std::vector<std::size_t> stabilizer;     ///< G_1 as group-element indices
    std::vector<std::size_t> coset_reps;     ///< g_i with g_i . x_0 = x_i
    std::vector<std::size_t> points;         ///< x_i, in order
    std::vector<std::vector<Vec>> units;     ///< E_ij in A # H
    std::vector<Vec> phi;                    ///< phi(h) for h in G_1, same order as stabilizer
    GroupTable stabilizer_group;
    Mat iso;                                 ///< M_t (x) kG_1 -> A # H
    VerificationReport report;
};
/// Throws PreconditionError("transitive action") with the orbit of the first
/// point as witness and all orbits in the detail when the action is not transitive.
CaseStudyReport groupoid_case_study(const GroupTable& g, const std::vector<std::vector<std::size_t>>& act);

/// H # D(H) against Heis(H^cop) (x) H: the subalgebra H # (H^* bowtie 1), its
/// isomorphism to the Heisenberg double of H^cop, the centralizer C spanned by
///   c(h) = sum_i S(h_(1)) S(x_i(2)) h_(3) S^2(x_i(1)) # (p_i bowtie h_(2)),
/// and the total map X (x) h -> iota(X) c(h).
struct DoubleSmashReport {
    SmashProduct smash;
    StructureAlgebra heisenberg_cop;
    Mat iso;  ///< Heis(H^cop) (x) H -> H # D(H)
    VerificationReport report;
};
DoubleSmashReport double_smash_decomposition(const HopfData& h);

/// The H # D(H)-module H (x) M built from a left H-module M, checked to be a
/// module on all basis pairs. `m_action[h]` is the matrix of e_h on M.
VerificationReport double_smash_module_check(const HopfData& h, const std::vector<Mat>& m_action);

// --- Dual-space actions on A^* (coefficients over the dual basis) -----------------

/// <a -> f, b> = <f, b a>
Vec hit_left(const StructureAlgebra& A, std::span<const Rat> a, std::span<const Rat> f);
/// <f <- a, b> = <f, a b>
Vec hit_right(const StructureAlgebra& A, std::span<const Rat> f, std::span<const Rat> a);
/// <f <| h, b> = <f, h . b>
Vec transpose_action(const ModuleAlgebraData& m, std::span<const Rat> f, std::span<const Rat> h);

}  // namespace wha

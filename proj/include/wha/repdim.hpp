#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "wha/adjstable.hpp"
#include "wha/hopfcore.hpp"
#include "wha/modalg.hpp"
#include "wha/qtriang.hpp"
#include "wha/report.hpp"
#include "wha/weakhopf.hpp"

namespace wha {

/// Simple-module dimensions of a split semisimple algebra, one entry per block,
/// sorted ascending, with sum of squares equal to `dim`.
struct BlockReport {
    std::size_t dim = 0;
    std::vector<std::size_t> blocks;
    double residual = 0;  ///< largest spread of an eigenvalue cluster
    std::uint64_t seed = 0;
    double tolerance = 1e-8;
    std::size_t center_dim = 0;
    unsigned attempts = 0;
};

/// Throws PreconditionError("semisimple algebra") when the trace form is
/// degenerate, and std::runtime_error when the spectrum stays degenerate after
/// three reseeds.
BlockReport wedderburn_blocks(const StructureAlgebra& a, double tol = 1e-8, std::uint64_t seed = 0);

struct FPdimReport {
    BlockReport blocks;
    std::vector<std::size_t> fpdims;
    VerificationReport report;  ///< "divides" with the offending block as witness
};
/// FPdim V = dim V / dim A for each simple A#H-module V. Throws
/// PreconditionError("H-simple A") unless is_H_simple certifies A.
FPdimReport fpdim_report(const WeakHopfData& w, const ModuleAlgebraData& A, double tol = 1e-8,
                         std::uint64_t seed = 0);

/// One eigenvalue of an exact matrix with a basis of its eigenspace.
struct Eigenspace {
    Rat value;
    std::vector<Vec> basis;
};
/// Exact eigenspace decomposition when m is diagonalizable with rational
/// spectrum; nullopt otherwise. Candidates come from a floating solve and are
/// confirmed by exact kernels.
std::optional<std::vector<Eigenspace>> rational_eigenspaces(const Mat& m);

/// Minimal idempotents of a commutative algebra that splits over the rationals.
std::optional<std::vector<Vec>> split_commutative(const StructureAlgebra& c);

struct ClassIdempotent {
    Vec F;                    ///< over the dual basis of H
    std::vector<Vec> block;   ///< F -->_R H_R
};
struct ClassIdempotents {
    std::vector<ClassIdempotent> items;
    std::vector<Vec> cocommutative;  ///< basis of C(H^*)
    VerificationReport report;
};
/// Throws PreconditionError("C(H^*) split over the rationals") when the
/// idempotents are not rational.
ClassIdempotents class_idempotents(const HopfData& h, const QTStructure& q, const IntegralPair& ip);

struct DivisibilityReport {
    std::size_t dim_v = 0;
    std::size_t dim_dv = 0;
    VerificationReport report;  ///< "divides" fails as a theorem-violation alarm
};
/// dim D_V divides dim V for the subcoalgebra D_V generated by rho_R. Throws
/// PreconditionError("irreducible Yetter-Drinfeld module") when V splits.
DivisibilityReport dv_divisibility(const YetterDrinfeldData& v, const QTStructure& q);

}  // namespace wha

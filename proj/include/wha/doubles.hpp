#pragma once

#include "wha/hopfcore.hpp"
#include "wha/modalg.hpp"
#include "wha/qtriang.hpp"

namespace wha {

/// D(H) = H^{*cop} bowtie H on the basis p_i bowtie e_j (index i*n + j), with
///   (f bowtie h)(f' bowtie h') = f (h_(1) -> f' <- S^{-1}(h_(3))) bowtie h_(2) h',
///   Delta(p bowtie h) = (p_(2) bowtie h_(1)) (x) (p_(1) bowtie h_(2)),
///   R = sum_i (eps bowtie e_i) (x) (p_i bowtie 1).
/// Hit actions: (h -> f)(k) = f(k h), (f <- h)(k) = f(h k).
/// Throws PreconditionError if the antipode is not invertible; the result is
/// verified (Hopf axioms and R-matrix axioms) before it is returned.
QTStructure drinfeld_double(const HopfData& h);

/// Index of p_i bowtie e_j in D(H).
inline std::size_t double_index(std::size_t n, std::size_t i, std::size_t j) { return i * n + j; }

/// H as a left D(H)-module algebra:
///   (eps bowtie h) . l = h_(1) l S(h_(2)),  (p bowtie 1) . l = <p, S^{-1}(l_(1))> l_(2).
/// `dh` must be drinfeld_double(h).
ModuleAlgebraData double_module_algebra(const HopfData& h, const QTStructure& dh);

/// Heisenberg double H # H^* on the basis e_i # p_j (index i*n + j), where H^*
/// acts by p . h = h_(1) <p, h_(2)>, so (h # p)(h' # p') = h (p_(1) . h') # p_(2) p'.
StructureAlgebra heisenberg_double(const HopfData& h);

}  // namespace wha

#include "wha/exactlin/tensor.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_map>

namespace wha {

Tensor3::Tensor3(std::size_t n0, std::size_t n1, std::size_t n2)
    : n0_(n0), n1_(n1), n2_(n2), slices_(n0) {}

std::span<const Entry3> Tensor3::fiber(std::size_t i, std::size_t j) const {
    const auto& s = slices_[i];
    auto lo = std::lower_bound(s.begin(), s.end(), j, [](const Entry3& e, std::size_t v) { return e.j < v; });
    auto hi = std::upper_bound(lo, s.end(), j, [](std::size_t v, const Entry3& e) { return v < e.j; });
    return {s.data() + (lo - s.begin()), static_cast<std::size_t>(hi - lo)};
}

Vec Tensor3::fiber_vec(std::size_t i, std::size_t j) const {
    Vec v(n2_);
    for (const Entry3& e : fiber(i, j)) v[e.k] = e.c;
    return v;
}

Rat Tensor3::get(std::size_t i, std::size_t j, std::size_t k) const {
    for (const Entry3& e : fiber(i, j))
        if (e.k == k) return e.c;
    return Rat();
}

std::size_t Tensor3::nonzeros() const {
    std::size_t n = 0;
    for (const auto& s : slices_) n += s.size();
    return n;
}

bool operator==(const Tensor3& a, const Tensor3& b) {
    if (a.shape() != b.shape()) return false;
    for (std::size_t i = 0; i < a.n0_; ++i) {
        const auto& x = a.slices_[i];
        const auto& y = b.slices_[i];
        if (x.size() != y.size()) return false;
        for (std::size_t t = 0; t < x.size(); ++t)
            if (x[t].j != y[t].j || x[t].k != y[t].k || x[t].c != y[t].c) return false;
    }
    return true;
}

Tensor3::Builder::Builder(std::size_t n0, std::size_t n1, std::size_t n2) : t_(n0, n1, n2) {}

void Tensor3::Builder::add(std::size_t i, std::size_t j, std::size_t k, const Rat& c) {
    if (i >= t_.n0_ || j >= t_.n1_ || k >= t_.n2_) throw std::out_of_range("Tensor3::Builder::add: index out of range");
    if (c.is_zero()) return;
    t_.slices_[i].push_back({static_cast<std::uint32_t>(j), static_cast<std::uint32_t>(k), c});
}

void Tensor3::Builder::add_fiber(std::size_t i, std::size_t j, std::span<const Rat> v) {
    if (v.size() != t_.n2_) throw std::invalid_argument("Tensor3::Builder::add_fiber: length mismatch");
    for (std::size_t k = 0; k < v.size(); ++k) add(i, j, k, v[k]);
}

Tensor3 Tensor3::Builder::build() && {
    for (auto& s : t_.slices_) {
        std::sort(s.begin(), s.end(), [](const Entry3& a, const Entry3& b) {
            return a.j != b.j ? a.j < b.j : a.k < b.k;
        });
        std::vector<Entry3> merged;
        merged.reserve(s.size());
        for (const Entry3& e : s) {
            if (!merged.empty() && merged.back().j == e.j && merged.back().k == e.k)
                merged.back().c += e.c;
            else
                merged.push_back(e);
        }
        std::erase_if(merged, [](const Entry3& e) { return e.c.is_zero(); });
        s = std::move(merged);
    }
    return std::move(t_);
}

namespace {

std::size_t product(const std::vector<std::size_t>& dims) {
    std::size_t p = 1;
    for (std::size_t d : dims) p *= d;
    return p;
}

}  // namespace

TensorElem::TensorElem(std::vector<std::size_t> dims) : dims_(std::move(dims)), coeffs_(product(dims_)) {}

TensorElem::TensorElem(std::vector<std::size_t> dims, Vec coeffs) : dims_(std::move(dims)), coeffs_(std::move(coeffs)) {
    if (coeffs_.size() != product(dims_)) throw std::invalid_argument("TensorElem: coefficient count does not match dims");
}

std::size_t TensorElem::flat(std::span<const std::size_t> idx) const {
    if (idx.size() != dims_.size()) throw std::invalid_argument("TensorElem::flat: wrong number of indices");
    std::size_t f = 0;
    for (std::size_t t = 0; t < idx.size(); ++t) {
        if (idx[t] >= dims_[t]) throw std::out_of_range("TensorElem::flat: index out of range");
        f = f * dims_[t] + idx[t];
    }
    return f;
}

std::vector<std::size_t> TensorElem::unflat(std::size_t f) const {
    std::vector<std::size_t> idx(dims_.size());
    for (std::size_t t = dims_.size(); t-- > 0;) {
        idx[t] = f % dims_[t];
        f /= dims_[t];
    }
    return idx;
}

std::vector<std::size_t> TensorElem::support() const {
    std::vector<std::size_t> s;
    for (std::size_t f = 0; f < coeffs_.size(); ++f)
        if (!coeffs_[f].is_zero()) s.push_back(f);
    return s;
}

TensorElem TensorElem::permute(std::span<const std::size_t> perm) const {
    if (perm.size() != dims_.size()) throw std::invalid_argument("TensorElem::permute: wrong permutation length");
    std::vector<std::size_t> nd(dims_.size());
    for (std::size_t t = 0; t < perm.size(); ++t) nd[t] = dims_.at(perm[t]);
    TensorElem out(nd);
    std::vector<std::size_t> ni(dims_.size());
    for (std::size_t f : support()) {
        auto idx = unflat(f);
        for (std::size_t t = 0; t < perm.size(); ++t) ni[t] = idx[perm[t]];
        out.coeffs_[out.flat(ni)] = coeffs_[f];
    }
    return out;
}

Mat TensorElem::as_matrix() const {
    if (dims_.size() != 2) throw std::invalid_argument("TensorElem::as_matrix: needs two legs");
    Mat m(dims_[0], dims_[1]);
    for (std::size_t i = 0; i < dims_[0]; ++i)
        for (std::size_t j = 0; j < dims_[1]; ++j) m(i, j) = at2(i, j);
    return m;
}

TensorElem TensorElem::from_matrix(const Mat& m) {
    TensorElem t({m.rows(), m.cols()});
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) t.at2(i, j) = m(i, j);
    return t;
}

TensorElem operator+(const TensorElem& a, const TensorElem& b) {
    if (a.dims_ != b.dims_) throw std::invalid_argument("TensorElem+: shape mismatch");
    return TensorElem(a.dims_, add(a.coeffs_, b.coeffs_));
}

TensorElem operator-(const TensorElem& a, const TensorElem& b) {
    if (a.dims_ != b.dims_) throw std::invalid_argument("TensorElem-: shape mismatch");
    return TensorElem(a.dims_, sub(a.coeffs_, b.coeffs_));
}

TensorElem operator*(const Rat& s, const TensorElem& a) { return TensorElem(a.dims_, scale(a.coeffs_, s)); }

void SparseAcc::add(std::uint64_t key, const Rat& c) {
    if (c.is_zero()) return;
    auto [it, fresh] = m_.try_emplace(key, c);
    if (!fresh) it->second += c;
}

Rat SparseAcc::get(std::uint64_t key) const {
    auto it = m_.find(key);
    return it == m_.end() ? Rat() : it->second;
}

bool SparseAcc::is_zero() const {
    for (const auto& [k, v] : m_)
        if (!v.is_zero()) return false;
    return true;
}

std::optional<std::uint64_t> SparseAcc::first_nonzero() const {
    std::optional<std::uint64_t> best;
    for (const auto& [k, v] : m_)
        if (!v.is_zero() && (!best || k < *best)) best = k;
    return best;
}

bool operator==(const SparseAcc& a, const SparseAcc& b) {
    for (const auto& [k, v] : a.m_)
        if (v != b.get(k)) return false;
    for (const auto& [k, v] : b.m_)
        if (v != a.get(k)) return false;
    return true;
}

TensorElem outer(const TensorElem& a, const TensorElem& b) {
    std::vector<std::size_t> dims = a.dims();
    dims.insert(dims.end(), b.dims().begin(), b.dims().end());
    TensorElem out(dims);
    const auto sb = b.support();
    for (std::size_t fa : a.support())
        for (std::size_t fb : sb) out.coeffs()[fa * b.size() + fb] = a.coeffs()[fa] * b.coeffs()[fb];
    return out;
}

TensorElem contract(const TensorElem& a, const TensorElem& b,
                    std::span<const std::pair<std::size_t, std::size_t>> pairs) {
    std::vector<bool> used_a(a.legs(), false), used_b(b.legs(), false);
    for (auto [la, lb] : pairs) {
        if (la >= a.legs() || lb >= b.legs()) throw std::invalid_argument("contract: leg index out of range");
        if (used_a[la] || used_b[lb]) throw std::invalid_argument("contract: leg used twice");
        if (a.dims()[la] != b.dims()[lb]) throw std::invalid_argument("contract: paired legs differ in dimension");
        used_a[la] = used_b[lb] = true;
    }
    std::vector<std::size_t> rest_a, rest_b, out_dims;
    for (std::size_t t = 0; t < a.legs(); ++t)
        if (!used_a[t]) {
            rest_a.push_back(t);
            out_dims.push_back(a.dims()[t]);
        }
    for (std::size_t t = 0; t < b.legs(); ++t)
        if (!used_b[t]) {
            rest_b.push_back(t);
            out_dims.push_back(b.dims()[t]);
        }
    std::size_t rest_b_size = 1;
    for (std::size_t t : rest_b) rest_b_size *= b.dims()[t];

    auto key_of = [&](const std::vector<std::size_t>& idx, bool side_a) {
        std::size_t key = 0;
        for (auto [la, lb] : pairs) {
            const std::size_t leg = side_a ? la : lb;
            key = key * (side_a ? a.dims()[la] : b.dims()[lb]) + idx[leg];
        }
        return key;
    };
    auto rest_flat = [](const std::vector<std::size_t>& idx, const std::vector<std::size_t>& legs,
                        const std::vector<std::size_t>& dims) {
        std::size_t f = 0;
        for (std::size_t t : legs) f = f * dims[t] + idx[t];
        return f;
    };

    std::unordered_map<std::size_t, std::vector<std::pair<std::size_t, const Rat*>>> by_key;
    for (std::size_t fb : b.support()) {
        auto idx = b.unflat(fb);
        by_key[key_of(idx, false)].emplace_back(rest_flat(idx, rest_b, b.dims()), &b.coeffs()[fb]);
    }
    TensorElem out(out_dims);
    for (std::size_t fa : a.support()) {
        auto idx = a.unflat(fa);
        auto it = by_key.find(key_of(idx, true));
        if (it == by_key.end()) continue;
        const std::size_t base = rest_flat(idx, rest_a, a.dims()) * rest_b_size;
        const Rat& ca = a.coeffs()[fa];
        for (const auto& [rb, cb] : it->second) out.coeffs()[base + rb] += ca * *cb;
    }
    return out;
}

}  // namespace wha

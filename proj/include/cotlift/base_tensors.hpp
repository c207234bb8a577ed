#ifndef COTLIFT_BASE_TENSORS_HPP
#define COTLIFT_BASE_TENSORS_HPP

#include "cotlift/error.hpp"
#include "cotlift/fiber_scalar.hpp"

#include <map>
#include <vector>

namespace cotlift {

using IndexTuple = std::vector<int>;

// Sorts idx ascending; returns the permutation sign, or 0 on repeated indices.
inline int sort_sign(IndexTuple& idx) {
    int sign = 1;
    for (size_t i = 1; i < idx.size(); ++i) {
        size_t j = i;
        while (j > 0 && idx[j] < idx[j - 1]) {
            std::swap(idx[j], idx[j - 1]);
            sign = -sign;
            --j;
        }
        if (j > 0 && idx[j] == idx[j - 1]) return 0;
    }
    return sign;
}

// Antisymmetric contravariant tensor field on M, stored once per strictly
// increasing index tuple (0-based).
class Multivector {
public:
    Multivector(int n, int degree) : n_(n), degree_(degree) {}

    int dim() const { return n_; }
    int degree() const { return degree_; }
    bool is_zero() const { return comp_.empty(); }
    const std::map<IndexTuple, BaseScalar>& components() const { return comp_; }

    void add(IndexTuple idx, const BaseScalar& v) {
        if (v.is_zero()) return;
        int s = sort_sign(idx);
        if (s == 0) return;
        auto it = comp_.find(idx);
        BaseScalar add = s > 0 ? v : -v;
        if (it == comp_.end()) {
            comp_[idx] = add;
        } else {
            it->second += add;
            if (it->second.is_zero()) comp_.erase(it);
        }
    }
    BaseScalar component(IndexTuple idx) const {
        int s = sort_sign(idx);
        if (s == 0) return BaseScalar();
        auto it = comp_.find(idx);
        if (it == comp_.end()) return BaseScalar();
        return s > 0 ? it->second : -it->second;
    }
    // Antisymmetric matrix entry of a bivector.
    BaseScalar entry(int i, int j) const { return component({i, j}); }

    friend bool operator==(const Multivector& a, const Multivector& b) {
        return a.n_ == b.n_ && a.degree_ == b.degree_ && a.comp_ == b.comp_;
    }
    friend bool operator!=(const Multivector& a, const Multivector& b) { return !(a == b); }

private:
    int n_;
    int degree_;
    std::map<IndexTuple, BaseScalar> comp_;
};

// Antisymmetric covariant tensor (differential form) on M; same storage idea.
class DiffForm {
public:
    DiffForm(int n, int degree) : n_(n), degree_(degree) {}

    int dim() const { return n_; }
    int degree() const { return degree_; }
    bool is_zero() const { return comp_.empty(); }
    const std::map<IndexTuple, BaseScalar>& components() const { return comp_; }

    void add(IndexTuple idx, const BaseScalar& v) {
        if (v.is_zero()) return;
        int s = sort_sign(idx);
        if (s == 0) return;
        auto it = comp_.find(idx);
        BaseScalar add = s > 0 ? v : -v;
        if (it == comp_.end()) {
            comp_[idx] = add;
        } else {
            it->second += add;
            if (it->second.is_zero()) comp_.erase(it);
        }
    }
    BaseScalar component(IndexTuple idx) const {
        int s = sort_sign(idx);
        if (s == 0) return BaseScalar();
        auto it = comp_.find(idx);
        if (it == comp_.end()) return BaseScalar();
        return s > 0 ? it->second : -it->second;
    }
    BaseScalar entry(int i, int j) const { return component({i, j}); }

    friend bool operator==(const DiffForm& a, const DiffForm& b) {
        return a.n_ == b.n_ && a.degree_ == b.degree_ && a.comp_ == b.comp_;
    }
    friend bool operator!=(const DiffForm& a, const DiffForm& b) { return !(a == b); }

private:
    int n_;
    int degree_;
    std::map<IndexTuple, BaseScalar> comp_;
};

// Symmetric contravariant tensor field, stored through its fiberwise
// polynomial: one BaseScalar per sorted index multiset, no multinomial
// weights. The symmetric product is then plain polynomial multiplication.
class SymTensor {
public:
    SymTensor(int n, int degree) : n_(n), degree_(degree) {}
    SymTensor(int n, int degree, FiberScalar poly) : n_(n), degree_(degree), poly_(std::move(poly)) {
        if (!poly_.is_homogeneous(degree_))
            throw internal_error("SymTensor: inhomogeneous coefficient polynomial");
    }
    static SymTensor function(int n, const BaseScalar& f) { return SymTensor(n, 0, FiberScalar(f)); }
    static SymTensor coordinate_field(int n, int i) { return SymTensor(n, 1, FiberScalar::momentum(i)); }

    int dim() const { return n_; }
    int degree() const { return degree_; }
    bool is_zero() const { return poly_.is_zero(); }
    const FiberScalar& poly() const { return poly_; }

    void add(const IndexTuple& multiset, const BaseScalar& v) {
        Mono m;
        for (int i : multiset) m.e[i] += 1;
        poly_.add_term(m, v);
    }
    BaseScalar component(const IndexTuple& multiset) const {
        Mono m;
        for (int i : multiset) m.e[i] += 1;
        return poly_.coefficient(m);
    }
    // Vector-field component X^i (degree 1 only).
    BaseScalar vec(int i) const { return component({i}); }

    friend SymTensor operator+(const SymTensor& a, const SymTensor& b) {
        if (a.is_zero()) return b;
        if (b.is_zero()) return a;
        if (a.degree_ != b.degree_) throw internal_error("SymTensor: degree mismatch in sum");
        return SymTensor(a.n_, a.degree_, a.poly_ + b.poly_);
    }
    friend SymTensor operator-(const SymTensor& a, const SymTensor& b) { return a + (-b); }
    friend SymTensor operator-(const SymTensor& a) { return SymTensor(a.n_, a.degree_, -a.poly_); }
    friend SymTensor operator*(const BaseScalar& c, const SymTensor& a) {
        return SymTensor(a.n_, a.degree_, a.poly_ * c);
    }
    // Symmetric product (weight-free symmetrized sum).
    friend SymTensor sym_product(const SymTensor& a, const SymTensor& b) {
        return SymTensor(a.n_, a.degree_ + b.degree_, a.poly_ * b.poly_);
    }
    friend bool operator==(const SymTensor& a, const SymTensor& b) {
        if (a.n_ != b.n_) return false;
        if (a.poly_.is_zero() && b.poly_.is_zero()) return true;
        return a.degree_ == b.degree_ && a.poly_ == b.poly_;
    }
    friend bool operator!=(const SymTensor& a, const SymTensor& b) { return !(a == b); }

private:
    int n_;
    int degree_;
    FiberScalar poly_;
};

// Square matrix of exact scalars; workhorse for metrics and frame matrices.
class ScalarMatrix {
public:
    ScalarMatrix() : n_(0) {}
    explicit ScalarMatrix(int n) : n_(n), a_(static_cast<size_t>(n) * n) {}
    static ScalarMatrix identity(int n) {
        ScalarMatrix m(n);
        for (int i = 0; i < n; ++i) m.at(i, i) = BaseScalar(1);
        return m;
    }
    int dim() const { return n_; }
    BaseScalar& at(int i, int j) { return a_[static_cast<size_t>(i) * n_ + j]; }
    const BaseScalar& at(int i, int j) const { return a_[static_cast<size_t>(i) * n_ + j]; }
    bool symmetric() const {
        for (int i = 0; i < n_; ++i)
            for (int j = i + 1; j < n_; ++j)
                if (at(i, j) != at(j, i)) return false;
        return true;
    }
    friend bool operator==(const ScalarMatrix& x, const ScalarMatrix& y) {
        return x.n_ == y.n_ && x.a_ == y.a_;
    }

private:
    int n_;
    std::vector<BaseScalar> a_;
};

// Exact Gauss-Jordan inverse; throws input_error when singular.
ScalarMatrix invert(const ScalarMatrix& m, const char* what);

// Riemannian (or pseudo-) metric with its cached exact inverse.
class Metric {
public:
    Metric(int n, ScalarMatrix g) : n_(n), g_(std::move(g)), ginv_(invert(g_, "metric")) {
        if (!g_.symmetric()) throw input_error("metric block is not symmetric");
    }
    int dim() const { return n_; }
    const BaseScalar& lower(int i, int j) const { return g_.at(i, j); }
    const BaseScalar& upper(int i, int j) const { return ginv_.at(i, j); }
    const ScalarMatrix& matrix() const { return g_; }
    const ScalarMatrix& inverse() const { return ginv_; }

private:
    int n_;
    ScalarMatrix g_;
    ScalarMatrix ginv_;
};

// Linear connection coefficients Gamma^k_{ij}; first lower index is the
// differentiation direction.
class LinearConnection {
public:
    explicit LinearConnection(int n)
        : n_(n), gamma_(static_cast<size_t>(n) * n * n) {}
    int dim() const { return n_; }
    BaseScalar& at(int k, int i, int j) { return gamma_[idx(k, i, j)]; }
    const BaseScalar& at(int k, int i, int j) const { return gamma_[idx(k, i, j)]; }
    bool symmetric() const {
        for (int k = 0; k < n_; ++k)
            for (int i = 0; i < n_; ++i)
                for (int j = i + 1; j < n_; ++j)
                    if (at(k, i, j) != at(k, j, i)) return false;
        return true;
    }
    bool is_zero() const {
        for (const auto& g : gamma_)
            if (!g.is_zero()) return false;
        return true;
    }

private:
    size_t idx(int k, int i, int j) const {
        return (static_cast<size_t>(k) * n_ + i) * n_ + j;
    }
    int n_;
    std::vector<BaseScalar> gamma_;
};

// Contravariant connection D on (M, w): D_{dx^i} dx^j = Gamma^{ij}_k dx^k,
// together with the ambient Poisson bivector it differentiates along.
class ContravariantConnection {
public:
    ContravariantConnection(Multivector w, int n)
        : n_(n), w_(std::move(w)), gamma_(static_cast<size_t>(n) * n * n) {}
    int dim() const { return n_; }
    const Multivector& poisson() const { return w_; }
    BaseScalar& at(int i, int j, int k) { return gamma_[idx(i, j, k)]; }
    const BaseScalar& at(int i, int j, int k) const { return gamma_[idx(i, j, k)]; }
    bool is_flat_coefficients() const {
        for (const auto& g : gamma_)
            if (!g.is_zero()) return false;
        return true;
    }

private:
    size_t idx(int i, int j, int k) const {
        return (static_cast<size_t>(i) * n_ + j) * n_ + k;
    }
    int n_;
    Multivector w_;
    std::vector<BaseScalar> gamma_;
};

// Dense rank-4 curvature tensor R^h_{kij} = [R(d_i, d_j) d_k]^h.
class Curvature4 {
public:
    explicit Curvature4(int n) : n_(n), c_(static_cast<size_t>(n) * n * n * n) {}
    int dim() const { return n_; }
    BaseScalar& at(int h, int k, int i, int j) { return c_[idx(h, k, i, j)]; }
    const BaseScalar& at(int h, int k, int i, int j) const { return c_[idx(h, k, i, j)]; }
    bool is_zero() const {
        for (const auto& v : c_)
            if (!v.is_zero()) return false;
        return true;
    }

private:
    size_t idx(int h, int k, int i, int j) const {
        return ((static_cast<size_t>(h) * n_ + k) * n_ + i) * n_ + j;
    }
    int n_;
    std::vector<BaseScalar> c_;
};

} // namespace cotlift

#endif

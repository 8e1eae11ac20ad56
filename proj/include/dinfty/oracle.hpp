#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include <Eigen/Core>

#include "dinfty/field.hpp"
#include "dinfty/labels.hpp"
#include "dinfty/linalg.hpp"

/// Ground-truth layer: every label is realized as an explicit matrix
/// representation of the truncated quiver, and Hom/Ext dimensions are
/// computed by exact linear algebra.  Everything else in the project is
/// checked against this.
namespace dinfty {

struct CheckReport {
    bool pass = true;
    std::string detail;
};

/// Matrix representation of the truncated quiver on vertices 0..n_max.
template <class Scalar>
struct MatrixRep {
    int n_max = 0;
    Eigen::VectorXi dims;                                      // size n_max+1
    std::map<std::pair<int, int>, DenseMatrix<Scalar>> maps;   // arrow -> dims[y] x dims[x]
};

/// One morphism f: X -> Y, stored as a per-vertex block f[v]: X_v -> Y_v.
template <class Scalar>
using Morphism = std::vector<DenseMatrix<Scalar>>;

/// Euler form of the truncated quiver:
///   <d, e> = sum_v d_v e_v - sum_{arrows x->y} d_x e_y.
/// For representations whose supports plus one arrow step stay strictly
/// inside the truncation, <dim X, dim Y> = dim Hom(X,Y) - dim Ext^1(X,Y).
inline long long euler_form(const Eigen::VectorXi& d, const Eigen::VectorXi& e) {
    if (d.size() != e.size()) throw std::invalid_argument("euler_form: size mismatch");
    const int n_max = static_cast<int>(d.size()) - 1;
    long long value = 0;
    for (int v = 0; v <= n_max; ++v) value += static_cast<long long>(d[v]) * e[v];
    for (auto [x, y] : quiver_arrows(n_max))
        value -= static_cast<long long>(d[x]) * e[y];
    return value;
}

template <class Field>
class Oracle {
  public:
    using Scalar = typename Field::Scalar;
    using Mat = DenseMatrix<Scalar>;

    Oracle(Field field, int n_max) : field_(field), n_max_(n_max) {
        if (n_max < 3) throw std::invalid_argument("oracle truncation must be >= 3");
    }

    int truncation() const { return n_max_; }
    const Field& field() const { return field_; }

    /// Explicit matrices for a label; memoized and brick-certified.
    const MatrixRep<Scalar>& rep(const Label& x) {
        auto it = reps_.find(x);
        if (it != reps_.end()) return it->second;
        MatrixRep<Scalar> r = build(x);
        if (solve_dim(r, r) != 1)
            throw std::logic_error("constructed representation of " + to_string(x) +
                                   " is not a brick");
        return reps_.emplace(x, std::move(r)).first->second;
    }

    /// dim Hom(X, Y), memoized.
    int hom(const Label& x, const Label& y) {
        const auto key = std::make_pair(x, y);
        auto it = hom_dims_.find(key);
        if (it != hom_dims_.end()) return it->second;
        const int d = solve_dim(rep(x), rep(y));
        hom_dims_.emplace(key, d);
        return d;
    }

    /// Basis of Hom(X, Y) as per-vertex matrix blocks.
    std::vector<Morphism<Scalar>> hom_basis(const Label& x, const Label& y) {
        return solve_basis(rep(x), rep(y));
    }

    /// dim Ext^1(X, Y) via the Euler form; requires the supports plus one
    /// arrow step to stay strictly inside the truncation.
    int ext1(const Label& x, const Label& y) {
        require_ext_margin(x, y);
        const long long form = euler_form(dim_vector(x, n_max_), dim_vector(y, n_max_));
        const long long e = static_cast<long long>(hom(x, y)) - form;
        if (e < 0)
            throw std::logic_error("negative Ext dimension for (" + to_string(x) + ", " +
                                   to_string(y) + "): truncation misuse");
        return static_cast<int>(e);
    }

    /// True when composition Hom(Z,Y) x Hom(X,Z) -> Hom(X,Y) has nonzero image.
    bool compose_nonzero(const Label& x, const Label& z, const Label& y) {
        const auto fs = hom_basis(x, z);
        const auto gs = hom_basis(z, y);
        for (const auto& g : gs)
            for (const auto& f : fs)
                if (!composition_is_zero(g, f)) return true;
        return false;
    }

    /// Checks that 0 -> left -> (sum of mids) -> right -> 0 is a plausible
    /// almost-split sequence: dimension additivity, brick ends, and
    /// Ext^1(right, left) != 0.
    CheckReport validate_sequence(const Label& left, const std::vector<Label>& mids,
                                  const Label& right) {
        CheckReport rep_out;
        const std::string name = sequence_name(left, mids, right);
        Eigen::VectorXi sum = dim_vector(left, n_max_) + dim_vector(right, n_max_);
        Eigen::VectorXi mid_sum = Eigen::VectorXi::Zero(n_max_ + 1);
        for (const auto& m : mids) mid_sum += dim_vector(m, n_max_);
        if (sum != mid_sum) {
            rep_out.pass = false;
            rep_out.detail = name + ": dimension additivity fails";
            return rep_out;
        }
        if (hom(left, left) != 1 || hom(right, right) != 1) {
            rep_out.pass = false;
            rep_out.detail = name + ": end terms are not bricks";
            return rep_out;
        }
        if (ext1(right, left) < 1) {
            rep_out.pass = false;
            rep_out.detail = name + ": Ext^1(right, left) vanishes (sequence would split)";
            return rep_out;
        }
        rep_out.detail = name + ": ok";
        return rep_out;
    }

    static std::string sequence_name(const Label& left, const std::vector<Label>& mids,
                                     const Label& right) {
        std::string s = "0 -> " + to_string(left) + " -> ";
        for (std::size_t i = 0; i < mids.size(); ++i) {
            if (i) s += " (+) ";
            s += to_string(mids[i]);
        }
        s += " -> " + to_string(right) + " -> 0";
        return s;
    }

  private:
    MatrixRep<Scalar> build(const Label& x) {
        validate(x);
        if (max_support(x) > n_max_)
            throw std::invalid_argument("truncation too small for " + to_string(x));
        MatrixRep<Scalar> r;
        r.n_max = n_max_;
        r.dims = dim_vector(x, n_max_);
        for (auto [src, dst] : quiver_arrows(n_max_)) {
            const int dx = r.dims[src], dy = r.dims[dst];
            if (dx == 0 || dy == 0) continue;
            Mat m(dy, dx);
            if (dx == 1 && dy == 1) {
                m(0, 0) = field_.make(1);
            } else if (dx == 2 && dy == 2) {
                m(0, 0) = field_.make(1);
                m(0, 1) = field_.make(0);
                m(1, 0) = field_.make(0);
                m(1, 1) = field_.make(1);
            } else if (dx == 2 && dy == 1) {
                // out of the doubled zone: the two branch projections at the
                // fork, the summing projection at the right edge
                if (dst == 0) {
                    m(0, 0) = field_.make(1);
                    m(0, 1) = field_.make(0);
                } else if (dst == 1) {
                    m(0, 0) = field_.make(0);
                    m(0, 1) = field_.make(1);
                } else {
                    m(0, 0) = field_.make(1);
                    m(0, 1) = field_.make(1);
                }
            } else {  // dx == 1 && dy == 2: into the doubled zone
                m(0, 0) = field_.make(1);
                m(1, 0) = field_.make(1);
            }
            r.maps.emplace(std::make_pair(src, dst), std::move(m));
        }
        return r;
    }

    /// Rows of the intertwining system: per arrow x->y,
    ///   f_y X_a - Y_a f_x = 0,
    /// unknowns are all entries of all vertex blocks f_v.
    Mat intertwiner_system(const MatrixRep<Scalar>& rx, const MatrixRep<Scalar>& ry,
                           std::vector<int>& offsets) const {
        const int n = n_max_;
        offsets.assign(static_cast<std::size_t>(n) + 2, 0);
        for (int v = 0; v <= n; ++v)
            offsets[static_cast<std::size_t>(v) + 1] =
                offsets[static_cast<std::size_t>(v)] + ry.dims[v] * rx.dims[v];
        const int unknowns = offsets[static_cast<std::size_t>(n) + 1];
        int rows = 0;
        for (auto [src, dst] : quiver_arrows(n)) rows += ry.dims[dst] * rx.dims[src];
        Mat sys(rows, unknowns);
        for (int r = 0; r < rows; ++r)
            for (int c = 0; c < unknowns; ++c) sys(r, c) = field_.make(0);
        int row = 0;
        const auto flat = [&](int v, int i, int j) { return offsets[static_cast<std::size_t>(v)] + i * rx.dims[v] + j; };
        for (auto [src, dst] : quiver_arrows(n)) {
            const int dxs = rx.dims[src], dys = ry.dims[dst];
            if (dxs == 0 || dys == 0) continue;
            const Mat* xa = map_or_null(rx, src, dst);
            const Mat* ya = map_or_null(ry, src, dst);
            for (int r = 0; r < dys; ++r) {
                for (int c = 0; c < dxs; ++c) {
                    if (xa)  // coefficient of f_dst(r, k) is X_a(k, c)
                        for (int k = 0; k < rx.dims[dst]; ++k)
                            sys(row, flat(dst, r, k)) += (*xa)(k, c);
                    if (ya)  // coefficient of f_src(k, c) is -Y_a(r, k)
                        for (int k = 0; k < ry.dims[src]; ++k)
                            sys(row, flat(src, k, c)) -= (*ya)(r, k);
                    ++row;
                }
            }
        }
        return sys;
    }

    static const Mat* map_or_null(const MatrixRep<Scalar>& r, int src, int dst) {
        auto it = r.maps.find(std::make_pair(src, dst));
        return it == r.maps.end() ? nullptr : &it->second;
    }

    int solve_dim(const MatrixRep<Scalar>& rx, const MatrixRep<Scalar>& ry) const {
        std::vector<int> offsets;
        Mat sys = intertwiner_system(rx, ry, offsets);
        const Eigen::Index unknowns = sys.cols();
        return static_cast<int>(unknowns - rank(std::move(sys)));
    }

    std::vector<Morphism<Scalar>> solve_basis(const MatrixRep<Scalar>& rx,
                                              const MatrixRep<Scalar>& ry) const {
        std::vector<int> offsets;
        Mat sys = intertwiner_system(rx, ry, offsets);
        Mat basis = kernel_basis(std::move(sys), field_.make(1));
        std::vector<Morphism<Scalar>> out;
        for (Eigen::Index k = 0; k < basis.cols(); ++k) {
            Morphism<Scalar> f(static_cast<std::size_t>(n_max_) + 1);
            for (int v = 0; v <= n_max_; ++v) {
                Mat block(ry.dims[v], rx.dims[v]);
                for (int i = 0; i < ry.dims[v]; ++i)
                    for (int j = 0; j < rx.dims[v]; ++j)
                        block(i, j) =
                            basis(offsets[static_cast<std::size_t>(v)] + i * rx.dims[v] + j, k);
                f[static_cast<std::size_t>(v)] = std::move(block);
            }
            out.push_back(std::move(f));
        }
        return out;
    }

    static bool composition_is_zero(const Morphism<Scalar>& g, const Morphism<Scalar>& f) {
        for (std::size_t v = 0; v < f.size(); ++v) {
            if (g[v].rows() == 0 || f[v].cols() == 0 || g[v].cols() == 0) continue;
            DenseMatrix<Scalar> prod = g[v] * f[v];
            for (Eigen::Index i = 0; i < prod.rows(); ++i)
                for (Eigen::Index j = 0; j < prod.cols(); ++j)
                    if (!is_zero(prod(i, j))) return false;
        }
        return true;
    }

    void require_ext_margin(const Label& x, const Label& y) const {
        const int needed = std::max(max_support(x), max_support(y)) + 2;
        if (n_max_ < needed)
            throw std::invalid_argument("truncation " + std::to_string(n_max_) +
                                        " too small for Ext of (" + to_string(x) + ", " +
                                        to_string(y) + "); need >= " + std::to_string(needed));
    }

    Field field_;
    int n_max_;
    std::map<Label, MatrixRep<Scalar>> reps_;
    std::map<std::pair<Label, Label>, int> hom_dims_;
};

}  // namespace dinfty

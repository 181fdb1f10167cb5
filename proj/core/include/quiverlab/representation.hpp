#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "quiverlab/bound_quiver.hpp"
#include "quiverlab/matrix.hpp"

namespace qlab {

using DimVector = std::vector<int>;

/// A right module given as a quiver representation. For an arrow i -> j the
/// matrix has shape dims[i] x dims[j] and maps the space at j to the space
/// at i. A walk a1 a2 ... ak evaluates to M(a1) * M(a2) * ... * M(ak).
class Representation {
 public:
  Representation() = default;
  /// Error(ShapeError) if the matrices do not fit the quiver and dims.
  Representation(const NamedQuiver& quiver, DimVector dims, std::vector<RationalMatrix> mats);

  static Representation zero(const NamedQuiver& quiver);
  static Representation simple(const NamedQuiver& quiver, int vertex);

  const DimVector& dims() const noexcept { return dims_; }
  int dim(int vertex) const { return dims_.at(static_cast<std::size_t>(vertex - 1)); }
  const std::vector<RationalMatrix>& matrices() const noexcept { return mats_; }
  const RationalMatrix& matrix(std::size_t arrow) const { return mats_.at(arrow); }
  int total_dimension() const;
  bool is_zero() const { return total_dimension() == 0; }

  friend bool operator==(const Representation&, const Representation&) = default;

 private:
  DimVector dims_;
  std::vector<RationalMatrix> mats_;
};

/// Checks dims/matrix shapes against the quiver; Error(ShapeError) on mismatch.
void check_shape(const Representation& m, const NamedQuiver& quiver);

RationalMatrix evaluate_path(const Representation& m, const NamedQuiver& quiver, const Path& path);

/// Indices of the relations that do not vanish on m; empty iff m is a module
/// over the bound quiver algebra.
std::vector<std::size_t> check_relations(const Representation& m, const BoundQuiver& bq);

/// phi[v] maps the space of the source module at v to the target's space.
using Intertwiner = std::vector<RationalMatrix>;

struct HomSpace {
  std::size_t dimension = 0;
  std::vector<Intertwiner> basis;
};

/// Solves phi_i * M(a) = N(a) * phi_j for every arrow a: i -> j.
HomSpace hom_space(const Representation& m, const Representation& n, const BoundQuiver& bq);

/// Same dimension as hom_space, computed without a basis; uses exact integer
/// elimination when both modules have integer matrices.
std::size_t hom_dimension(const Representation& m, const Representation& n, const BoundQuiver& bq);

/// dim End(m) == 1. Error(NotAModulePoint) for the zero module.
bool is_schurian(const Representation& m, const BoundQuiver& bq);

DimVector dimension_vector(const Representation& m);

/// True iff every named arrow acts as zero. Error(UnknownArrow) on bad names.
bool is_annihilated_by(const Representation& m, const BoundQuiver& bq,
                       std::span<const std::string> arrows);

Representation direct_sum(const Representation& a, const Representation& b, const NamedQuiver& quiver);

/// Transports m along invertible base changes P[v]: M'(a) = P_i^-1 M(a) P_j.
Representation change_basis(const Representation& m, const NamedQuiver& quiver,
                            std::span<const RationalMatrix> base_change);

/// Builds the homogeneous system whose kernel is Hom(M, N). Unknowns are
/// laid out vertex by vertex, each block row-major of shape N_v x M_v.
template <class T>
Matrix<T> hom_system(const NamedQuiver& quiver, const DimVector& m_dims,
                     std::span<const Matrix<T>> m_mats, const DimVector& n_dims,
                     std::span<const Matrix<T>> n_mats) {
  const int n = quiver.vertex_count();
  std::vector<std::size_t> offset(static_cast<std::size_t>(n) + 2, 0);
  for (int v = 1; v <= n; ++v) {
    offset[v + 1] = offset[v] + static_cast<std::size_t>(n_dims[v - 1]) *
                                    static_cast<std::size_t>(m_dims[v - 1]);
  }
  std::size_t rows = 0;
  for (const auto& a : quiver.arrows()) {
    rows += static_cast<std::size_t>(n_dims[a.source - 1]) *
            static_cast<std::size_t>(m_dims[a.target - 1]);
  }
  Matrix<T> sys(rows, offset[n + 1]);
  std::size_t row = 0;
  for (std::size_t ai = 0; ai < quiver.arrow_count(); ++ai) {
    const auto& a = quiver.arrow(ai);
    const int i = a.source;
    const int j = a.target;
    const auto mi = static_cast<std::size_t>(m_dims[i - 1]);
    const auto mj = static_cast<std::size_t>(m_dims[j - 1]);
    const auto ni = static_cast<std::size_t>(n_dims[i - 1]);
    const auto nj = static_cast<std::size_t>(n_dims[j - 1]);
    const Matrix<T>& ma = m_mats[ai];
    const Matrix<T>& na = n_mats[ai];
    for (std::size_t r = 0; r < ni; ++r) {
      for (std::size_t c = 0; c < mj; ++c, ++row) {
        // (phi_i M_a)[r][c] = sum_k phi_i[r][k] M_a[k][c]
        for (std::size_t k = 0; k < mi; ++k) sys(row, offset[i] + r * mi + k) += ma(k, c);
        // (N_a phi_j)[r][c] = sum_k N_a[r][k] phi_j[k][c]
        for (std::size_t k = 0; k < nj; ++k) sys(row, offset[j] + k * mj + c) -= na(r, k);
      }
    }
  }
  return sys;
}

}  // namespace qlab

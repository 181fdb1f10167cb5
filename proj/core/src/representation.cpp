#include "quiverlab/representation.hpp"

#include <numeric>

#include "quiverlab/error.hpp"

namespace qlab {

Representation::Representation(const NamedQuiver& quiver, DimVector dims,
                               std::vector<RationalMatrix> mats)
    : dims_(std::move(dims)), mats_(std::move(mats)) {
  check_shape(*this, quiver);
}

Representation Representation::zero(const NamedQuiver& quiver) {
  std::vector<RationalMatrix> mats(quiver.arrow_count());
  return Representation(quiver, DimVector(static_cast<std::size_t>(quiver.vertex_count()), 0),
                        std::move(mats));
}

Representation Representation::simple(const NamedQuiver& quiver, int vertex) {
  if (vertex < 1 || vertex > quiver.vertex_count()) {
    throw Error(ErrorCode::InvalidVertex, "vertex " + std::to_string(vertex) + " out of range");
  }
  DimVector dims(static_cast<std::size_t>(quiver.vertex_count()), 0);
  dims[vertex - 1] = 1;
  std::vector<RationalMatrix> mats;
  for (const auto& a : quiver.arrows()) {
    mats.emplace_back(dims[a.source - 1], dims[a.target - 1]);
  }
  return Representation(quiver, std::move(dims), std::move(mats));
}

int Representation::total_dimension() const { return std::accumulate(dims_.begin(), dims_.end(), 0); }

void check_shape(const Representation& m, const NamedQuiver& quiver) {
  if (m.dims().size() != static_cast<std::size_t>(quiver.vertex_count())) {
    throw Error(ErrorCode::ShapeError, "dimension vector has " + std::to_string(m.dims().size()) +
                                           " entries, quiver has " +
                                           std::to_string(quiver.vertex_count()) + " vertices");
  }
  for (int d : m.dims()) {
    if (d < 0) throw Error(ErrorCode::ShapeError, "negative dimension");
  }
  if (m.matrices().size() != quiver.arrow_count()) {
    throw Error(ErrorCode::ShapeError, "expected one matrix per arrow");
  }
  for (std::size_t ai = 0; ai < quiver.arrow_count(); ++ai) {
    const auto& a = quiver.arrow(ai);
    const auto& mat = m.matrices()[ai];
    if (mat.rows() != static_cast<std::size_t>(m.dim(a.source)) ||
        mat.cols() != static_cast<std::size_t>(m.dim(a.target))) {
      throw Error(ErrorCode::ShapeError, "matrix of arrow '" + a.name + "' has shape " +
                                             std::to_string(mat.rows()) + "x" +
                                             std::to_string(mat.cols()) + ", expected " +
                                             std::to_string(m.dim(a.source)) + "x" +
                                             std::to_string(m.dim(a.target)));
    }
  }
}

RationalMatrix evaluate_path(const Representation& m, const NamedQuiver& quiver, const Path& path) {
  if (path.empty()) throw std::invalid_argument("cannot evaluate the empty path");
  RationalMatrix out = m.matrix(path.front());
  for (std::size_t k = 1; k < path.size(); ++k) {
    if (quiver.arrow(path[k - 1]).target != quiver.arrow(path[k]).source) {
      throw Error(ErrorCode::InvalidRelation, "path " + quiver.path_name(path) + " is not composable");
    }
    out = out * m.matrix(path[k]);
  }
  return out;
}

std::vector<std::size_t> check_relations(const Representation& m, const BoundQuiver& bq) {
  check_shape(m, bq.quiver());
  std::vector<std::size_t> violated;
  for (std::size_t r = 0; r < bq.relations().size(); ++r) {
    const auto& rel = bq.relations()[r];
    const int s = bq.quiver().path_source(rel.terms.front().path);
    const int t = bq.quiver().path_target(rel.terms.front().path);
    RationalMatrix sum(static_cast<std::size_t>(m.dim(s)), static_cast<std::size_t>(m.dim(t)));
    for (const auto& term : rel.terms) {
      sum += evaluate_path(m, bq.quiver(), term.path) * term.coeff;
    }
    if (!sum.is_zero()) violated.push_back(r);
  }
  return violated;
}

HomSpace hom_space(const Representation& m, const Representation& n, const BoundQuiver& bq) {
  const auto& quiver = bq.quiver();
  check_shape(m, quiver);
  check_shape(n, quiver);
  auto sys = hom_system<Rational>(quiver, m.dims(), m.matrices(), n.dims(), n.matrices());
  auto kernel = nullspace(std::move(sys));

  HomSpace out;
  out.dimension = kernel.size();
  for (const auto& vec : kernel) {
    Intertwiner phi;
    std::size_t pos = 0;
    for (int v = 1; v <= quiver.vertex_count(); ++v) {
      const auto rows = static_cast<std::size_t>(n.dim(v));
      const auto cols = static_cast<std::size_t>(m.dim(v));
      RationalMatrix block(rows, cols);
      for (std::size_t r = 0; r < rows; ++r) {
        for (std::size_t c = 0; c < cols; ++c) block(r, c) = vec[pos++];
      }
      phi.push_back(std::move(block));
    }
    out.basis.push_back(std::move(phi));
  }
  return out;
}

std::size_t hom_dimension(const Representation& m, const Representation& n, const BoundQuiver& bq) {
  const auto& quiver = bq.quiver();
  check_shape(m, quiver);
  check_shape(n, quiver);
  auto sys = hom_system<Rational>(quiver, m.dims(), m.matrices(), n.dims(), n.matrices());
  if (auto ints = to_integer(sys)) {
    if (auto r = integer_rank(*ints)) return sys.cols() - *r;
  }
  return sys.cols() - rank(std::move(sys));
}

bool is_schurian(const Representation& m, const BoundQuiver& bq) {
  if (m.is_zero()) throw Error(ErrorCode::NotAModulePoint, "the zero module is not Schurian");
  return hom_dimension(m, m, bq) == 1;
}

DimVector dimension_vector(const Representation& m) { return m.dims(); }

bool is_annihilated_by(const Representation& m, const BoundQuiver& bq,
                       std::span<const std::string> arrows) {
  bool killed = true;
  for (const auto& name : arrows) {
    const std::size_t idx = bq.quiver().arrow_index(name);
    killed = killed && m.matrix(idx).is_zero();
  }
  return killed;
}

Representation direct_sum(const Representation& a, const Representation& b, const NamedQuiver& quiver) {
  check_shape(a, quiver);
  check_shape(b, quiver);
  DimVector dims(a.dims().size());
  for (std::size_t v = 0; v < dims.size(); ++v) dims[v] = a.dims()[v] + b.dims()[v];
  std::vector<RationalMatrix> mats;
  for (std::size_t ai = 0; ai < quiver.arrow_count(); ++ai) {
    const auto& ma = a.matrix(ai);
    const auto& mb = b.matrix(ai);
    RationalMatrix sum(ma.rows() + mb.rows(), ma.cols() + mb.cols());
    for (std::size_t r = 0; r < ma.rows(); ++r) {
      for (std::size_t c = 0; c < ma.cols(); ++c) sum(r, c) = ma(r, c);
    }
    for (std::size_t r = 0; r < mb.rows(); ++r) {
      for (std::size_t c = 0; c < mb.cols(); ++c) sum(ma.rows() + r, ma.cols() + c) = mb(r, c);
    }
    mats.push_back(std::move(sum));
  }
  return Representation(quiver, std::move(dims), std::move(mats));
}

Representation change_basis(const Representation& m, const NamedQuiver& quiver,
                            std::span<const RationalMatrix> base_change) {
  check_shape(m, quiver);
  if (base_change.size() != static_cast<std::size_t>(quiver.vertex_count())) {
    throw Error(ErrorCode::ShapeError, "expected one base change per vertex");
  }
  std::vector<RationalMatrix> inverses;
  for (int v = 1; v <= quiver.vertex_count(); ++v) {
    const auto& p = base_change[v - 1];
    if (p.rows() != static_cast<std::size_t>(m.dim(v)) || p.cols() != p.rows()) {
      throw Error(ErrorCode::ShapeError, "base change at vertex " + std::to_string(v) + " has wrong shape");
    }
    auto inv = inverse(p);
    if (!inv) throw Error(ErrorCode::ShapeError, "base change at vertex " + std::to_string(v) + " is singular");
    inverses.push_back(std::move(*inv));
  }
  std::vector<RationalMatrix> mats;
  for (std::size_t ai = 0; ai < quiver.arrow_count(); ++ai) {
    const auto& a = quiver.arrow(ai);
    mats.push_back(inverses[a.source - 1] * m.matrix(ai) * base_change[a.target - 1]);
  }
  return Representation(quiver, m.dims(), std::move(mats));
}

}  // namespace qlab

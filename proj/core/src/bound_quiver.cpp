#include "quiverlab/bound_quiver.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "quiverlab/error.hpp"

namespace qlab {

NamedQuiver::NamedQuiver(int vertex_count, std::vector<Arrow> arrows)
    : n_(vertex_count), arrows_(std::move(arrows)) {
  if (n_ < 0) throw Error(ErrorCode::InvalidQuiver, "negative vertex count");
  std::set<std::string> names;
  for (const auto& a : arrows_) {
    if (a.name.empty()) throw Error(ErrorCode::InvalidQuiver, "arrow with empty name");
    if (!names.insert(a.name).second) {
      throw Error(ErrorCode::InvalidQuiver, "duplicate arrow name '" + a.name + "'");
    }
    if (a.source < 1 || a.source > n_ || a.target < 1 || a.target > n_) {
      throw Error(ErrorCode::InvalidVertex, "arrow '" + a.name + "' has an endpoint out of range");
    }
    if (a.source == a.target) {
      throw Error(ErrorCode::InvalidQuiver, "arrow '" + a.name + "' is a loop");
    }
  }
}

std::optional<std::size_t> NamedQuiver::find_arrow(std::string_view name) const {
  for (std::size_t i = 0; i < arrows_.size(); ++i) {
    if (arrows_[i].name == name) return i;
  }
  return std::nullopt;
}

std::size_t NamedQuiver::arrow_index(std::string_view name) const {
  if (auto idx = find_arrow(name)) return *idx;
  throw Error(ErrorCode::UnknownArrow, "unknown arrow '" + std::string(name) + "'");
}

Path NamedQuiver::path_from_names(std::span<const std::string> names) const {
  Path path;
  path.reserve(names.size());
  for (const auto& name : names) path.push_back(arrow_index(name));
  return path;
}

bool NamedQuiver::is_walk(const Path& path) const {
  for (std::size_t k = 0; k < path.size(); ++k) {
    if (path[k] >= arrows_.size()) return false;
    if (k > 0 && arrows_[path[k - 1]].target != arrows_[path[k]].source) return false;
  }
  return true;
}

int NamedQuiver::path_source(const Path& path) const { return arrows_.at(path.front()).source; }
int NamedQuiver::path_target(const Path& path) const { return arrows_.at(path.back()).target; }

std::string NamedQuiver::path_name(const Path& path) const {
  std::string out;
  for (std::size_t k = 0; k < path.size(); ++k) {
    if (k > 0) out += '*';
    out += arrows_.at(path[k]).name;
  }
  return out;
}

Quiver NamedQuiver::count_quiver() const {
  Quiver q(n_);
  for (const auto& a : arrows_) q.add_arrows(a.source, a.target);
  return q;
}

BoundQuiver::BoundQuiver(NamedQuiver quiver, std::vector<Relation> relations)
    : quiver_(std::move(quiver)), relations_(std::move(relations)) {
  for (std::size_t r = 0; r < relations_.size(); ++r) {
    const auto& rel = relations_[r];
    const std::string where = "relation " + std::to_string(r + 1);
    if (rel.terms.empty()) throw Error(ErrorCode::InvalidRelation, where + " has no terms");
    for (const auto& term : rel.terms) {
      if (term.path.size() < 2) {
        throw Error(ErrorCode::InvalidRelation,
                    where + " contains a path of length < 2 (ideal not admissible)");
      }
      if (!quiver_.is_walk(term.path)) {
        throw Error(ErrorCode::InvalidRelation,
                    where + ": path " + quiver_.path_name(term.path) + " is not composable");
      }
    }
    const int s = quiver_.path_source(rel.terms.front().path);
    const int t = quiver_.path_target(rel.terms.front().path);
    for (const auto& term : rel.terms) {
      if (quiver_.path_source(term.path) != s || quiver_.path_target(term.path) != t) {
        throw Error(ErrorCode::InvalidRelation, where + ": terms are not parallel");
      }
    }
  }
}

std::string BoundQuiver::relation_name(const Relation& relation) const {
  std::string out;
  for (std::size_t k = 0; k < relation.terms.size(); ++k) {
    const auto& term = relation.terms[k];
    Rational c = term.coeff;
    if (k == 0) {
      if (c.sign() < 0) out += "-";
    } else {
      out += c.sign() < 0 ? " - " : " + ";
    }
    if (c.sign() < 0) c = -c;
    if (c != Rational(1)) out += c.to_string() + " ";
    out += quiver_.path_name(term.path);
  }
  return out;
}

std::vector<Relation> cyclic_derivatives(const NamedQuiver& quiver, const Potential& potential) {
  for (const auto& term : potential.terms) {
    if (term.path.empty() || !quiver.is_walk(term.path) ||
        quiver.path_target(term.path) != quiver.path_source(term.path)) {
      throw Error(ErrorCode::InvalidPotential,
                  "potential term " + (term.path.empty() ? std::string("<empty>")
                                                         : quiver.path_name(term.path)) +
                      " is not a closed walk");
    }
  }
  std::vector<Relation> out;
  for (std::size_t a = 0; a < quiver.arrow_count(); ++a) {
    Relation rel;
    for (const auto& term : potential.terms) {
      const auto& cycle = term.path;
      const std::size_t len = cycle.size();
      for (std::size_t k = 0; k < len; ++k) {
        if (cycle[k] != a) continue;
        Path rotated;
        for (std::size_t s = 1; s < len; ++s) rotated.push_back(cycle[(k + s) % len]);
        if (rotated.empty()) continue;
        rel.terms.push_back({term.coeff, std::move(rotated)});
      }
    }
    rel = [&] {
      // combine like terms but keep the first-occurrence order
      Relation combined;
      for (const auto& t : rel.terms) {
        auto it = std::find_if(combined.terms.begin(), combined.terms.end(),
                               [&](const PathTerm& c) { return c.path == t.path; });
        if (it == combined.terms.end()) {
          combined.terms.push_back(t);
        } else {
          it->coeff += t.coeff;
        }
      }
      std::erase_if(combined.terms, [](const PathTerm& t) { return t.coeff.is_zero(); });
      return combined;
    }();
    if (!rel.terms.empty()) out.push_back(std::move(rel));
  }
  return out;
}

Relation normalized(const Relation& relation) {
  std::map<Path, Rational> combined;
  for (const auto& t : relation.terms) combined[t.path] += t.coeff;
  Relation out;
  for (auto& [path, coeff] : combined) {
    if (!coeff.is_zero()) out.terms.push_back({coeff, path});
  }
  if (!out.terms.empty()) {
    const Rational lead = out.terms.front().coeff;
    for (auto& t : out.terms) t.coeff /= lead;
  }
  return out;
}

bool generators_match_up_to_scalar(std::span<const Relation> lhs, std::span<const Relation> rhs) {
  auto contains_all = [](std::span<const Relation> from, std::span<const Relation> in) {
    std::vector<Relation> targets;
    for (const auto& r : in) targets.push_back(normalized(r));
    for (const auto& r : from) {
      const Relation n = normalized(r);
      if (n.terms.empty()) continue;
      if (std::find(targets.begin(), targets.end(), n) == targets.end()) return false;
    }
    return true;
  };
  return contains_all(lhs, rhs) && contains_all(rhs, lhs);
}

}  // namespace qlab

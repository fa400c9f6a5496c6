#pragma once

// Filtered Z/2-graded vector spaces with level-adapted bases.
//
// A space is presented by an ordered list of generators, each carrying a
// strictly positive exact level and a degree in {0,1}.  The filtration is
// strict: F^a V is the span of the generators of level < a, so F^0 V = {0}
// and the level of a vector is the maximum generator level over its support
// (-infinity for the zero vector).  Dual levels, tensor products and the
// contraction of a tensor by a functional on the left factor follow the same
// adapted-basis conventions.

#include "reebspec/fields.hpp"
#include "reebspec/jsonio.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace reebspec {

struct Generator {
  std::string label;
  ExactScalar level;
  int degree = 0;
};

template <class F>
class FilteredSpace {
 public:
  FilteredSpace() = default;

  explicit FilteredSpace(std::vector<Generator> gens) : gens_(std::move(gens)) {
    std::int64_t d = 0;
    for (std::size_t i = 0; i < gens_.size(); ++i) {
      const Generator& g = gens_[i];
      if (g.label.empty()) throw std::invalid_argument("generator with empty label");
      if (!index_.emplace(g.label, i).second) {
        throw std::invalid_argument("duplicate generator label \"" + g.label + "\"");
      }
      if (g.degree != 0 && g.degree != 1) {
        throw std::invalid_argument("generator \"" + g.label + "\" has degree " +
                                    std::to_string(g.degree) + ", want 0 or 1");
      }
      if (g.level.sign() <= 0) {
        throw std::invalid_argument("generator \"" + g.label +
                                    "\" has non-positive level " + g.level.to_string());
      }
      if (g.level.radicand() != 0) {
        if (d == 0) {
          d = g.level.radicand();
        } else if (d != g.level.radicand()) {
          throw FieldMismatchError("generator levels mix sqrt(" + std::to_string(d) +
                                   ") and sqrt(" + std::to_string(g.level.radicand()) + ")");
        }
      }
    }
  }

  std::size_t dim() const { return gens_.size(); }
  const Generator& gen(std::size_t i) const { return gens_.at(i); }
  const std::vector<Generator>& generators() const { return gens_; }

  std::size_t index_of(const std::string& label) const {
    auto it = index_.find(label);
    if (it == index_.end()) {
      throw std::invalid_argument("unknown generator label \"" + label + "\"");
    }
    return it->second;
  }

 private:
  std::vector<Generator> gens_;
  std::map<std::string, std::size_t> index_;
};

// Sparse coordinate vector in a space's adapted basis; only nonzero entries
// are stored, keyed by generator index.
template <class F>
struct Vector {
  std::map<std::uint32_t, F> coeffs;

  bool is_zero() const { return coeffs.empty(); }

  void set(std::uint32_t i, const F& c) {
    if (is_zero_coeff(c)) {
      coeffs.erase(i);
    } else {
      coeffs[i] = c;
    }
  }
  F get(std::uint32_t i) const {
    auto it = coeffs.find(i);
    return it == coeffs.end() ? F(0) : it->second;
  }

  Vector operator+(const Vector& o) const {
    Vector r = *this;
    for (const auto& [i, c] : o.coeffs) r.set(i, r.get(i) + c);
    return r;
  }
  Vector operator-(const Vector& o) const {
    Vector r = *this;
    for (const auto& [i, c] : o.coeffs) r.set(i, r.get(i) - c);
    return r;
  }
  Vector scaled(const F& s) const {
    Vector r;
    if (is_zero_coeff(s)) return r;
    for (const auto& [i, c] : coeffs) r.set(i, c * s);
    return r;
  }
  bool operator==(const Vector& o) const { return coeffs == o.coeffs; }

 private:
  static bool is_zero_coeff(const F& c) {
    using reebspec::is_zero;
    return is_zero(c);
  }
};

template <class F>
struct Functional {
  std::map<std::uint32_t, F> coeffs;  // phi = sum coeffs[i] * (i-th dual generator)

  bool is_zero() const { return coeffs.empty(); }
  F get(std::uint32_t i) const {
    auto it = coeffs.find(i);
    return it == coeffs.end() ? F(0) : it->second;
  }
};

template <class F>
Vector<F> make_vector(const FilteredSpace<F>& V,
                      const std::vector<std::pair<std::string, F>>& entries) {
  Vector<F> v;
  for (const auto& [label, c] : entries) {
    std::uint32_t i = static_cast<std::uint32_t>(V.index_of(label));
    v.set(i, v.get(i) + c);
  }
  return v;
}

template <class F>
Functional<F> make_functional(const FilteredSpace<F>& V,
                              const std::vector<std::pair<std::string, F>>& entries) {
  Functional<F> phi;
  for (const auto& [label, c] : entries) {
    std::uint32_t i = static_cast<std::uint32_t>(V.index_of(label));
    F s = phi.get(i) + c;
    using reebspec::is_zero;
    if (is_zero(s)) {
      phi.coeffs.erase(i);
    } else {
      phi.coeffs[i] = s;
    }
  }
  return phi;
}

template <class F>
void check_support(const FilteredSpace<F>& V, const std::map<std::uint32_t, F>& coeffs) {
  if (!coeffs.empty() && coeffs.rbegin()->first >= V.dim()) {
    throw std::invalid_argument("coordinate index " +
                                std::to_string(coeffs.rbegin()->first) +
                                " outside space of dimension " + std::to_string(V.dim()));
  }
}

// Level of a vector: max generator level over the support, -infinity for 0.
template <class F>
Level level(const FilteredSpace<F>& V, const Vector<F>& v) {
  check_support(V, v.coeffs);
  Level best = Level::bottom();
  for (const auto& [i, c] : v.coeffs) {
    Level l(V.gen(i).level);
    if (best < l) best = l;
  }
  return best;
}

// v lies in F^a V exactly when level(v) < a.
template <class F>
bool membership(const FilteredSpace<F>& V, const Vector<F>& v, const Level& a) {
  return level(V, v) < a;
}

// Sorted distinct generator levels.
template <class F>
std::vector<ExactScalar> spec(const FilteredSpace<F>& V) {
  std::vector<ExactScalar> out;
  for (const Generator& g : V.generators()) out.push_back(g.level);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

// Dual level: the largest a with phi|F^aV = 0, i.e. the minimum generator
// level over the support; +infinity for the zero functional.
template <class F>
Level dual_level(const FilteredSpace<F>& V, const Functional<F>& phi) {
  check_support(V, phi.coeffs);
  Level best = Level::top();
  for (const auto& [i, c] : phi.coeffs) {
    Level l(V.gen(i).level);
    if (l < best) best = l;
  }
  return best;
}

// Tensor product: generator (i,j) has label "(li,lj)", level the sum of the
// factor levels, degree the mod-2 sum.  Index layout is i*dim(W)+j.
template <class F>
struct TensorSpace {
  FilteredSpace<F> space;
  std::size_t left_dim = 0;
  std::size_t right_dim = 0;

  std::uint32_t index(std::size_t i, std::size_t j) const {
    return static_cast<std::uint32_t>(i * right_dim + j);
  }
  std::pair<std::size_t, std::size_t> factors(std::uint32_t idx) const {
    return {idx / right_dim, idx % right_dim};
  }
};

template <class F>
TensorSpace<F> tensor(const FilteredSpace<F>& V, const FilteredSpace<F>& W) {
  std::vector<Generator> gens;
  gens.reserve(V.dim() * W.dim());
  for (const Generator& gv : V.generators()) {
    for (const Generator& gw : W.generators()) {
      gens.push_back(Generator{"(" + gv.label + "," + gw.label + ")",
                               gv.level + gw.level, (gv.degree + gw.degree) % 2});
    }
  }
  return TensorSpace<F>{FilteredSpace<F>(std::move(gens)), V.dim(), W.dim()};
}

// Contraction of x in V (x) W by a functional phi on V: on decomposables,
// e_i (x) f_j maps to phi(e_i) * f_j.  The result lives in W and its level
// obeys |contract(phi, x)| <= |x| - |phi|.
template <class F>
Vector<F> contract(const TensorSpace<F>& T, const Functional<F>& phi, const Vector<F>& x) {
  if (T.left_dim * T.right_dim != T.space.dim()) {
    throw std::invalid_argument("malformed tensor space");
  }
  if (!phi.coeffs.empty() && phi.coeffs.rbegin()->first >= T.left_dim) {
    throw std::invalid_argument("functional support outside the left tensor factor");
  }
  check_support(T.space, x.coeffs);
  Vector<F> out;
  for (const auto& [idx, c] : x.coeffs) {
    auto [i, j] = T.factors(idx);
    F p = phi.get(static_cast<std::uint32_t>(i));
    using reebspec::is_zero;
    if (is_zero(p)) continue;
    std::uint32_t jj = static_cast<std::uint32_t>(j);
    out.set(jj, out.get(jj) + p * c);
  }
  return out;
}

template <class F>
Json space_to_json(const FilteredSpace<F>& V) {
  Json j;
  j["field"] = FieldInfo<F>::name;
  Json gens = Json::array();
  for (const Generator& g : V.generators()) {
    Json e;
    e["label"] = g.label;
    e["level"] = scalar_to_json_long(g.level);
    e["degree"] = g.degree;
    gens.push_back(std::move(e));
  }
  j["generators"] = std::move(gens);
  return j;
}

template <class F>
FilteredSpace<F> space_from_json(const Json& j) {
  std::string field = j.at("field").get<std::string>();
  if (field != FieldInfo<F>::name) {
    throw std::invalid_argument("space field is \"" + field + "\", expected \"" +
                                FieldInfo<F>::name + "\"");
  }
  std::vector<Generator> gens;
  for (const Json& e : j.at("generators")) {
    gens.push_back(Generator{e.at("label").get<std::string>(),
                             scalar_from_json_long(e.at("level")),
                             e.at("degree").get<int>()});
  }
  return FilteredSpace<F>(std::move(gens));
}

}  // namespace reebspec

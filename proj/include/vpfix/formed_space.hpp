#pragma once

#include <vector>

#include "vpfix/digraph.hpp"
#include "vpfix/gf.hpp"

namespace vpfix {

enum class FormKind { Parabolic, Plus, Minus, Hermitian };

// A vector space GF(q)^dim carrying a fixed standard form:
//   Parabolic (odd dim)  Q(x) = x_0^2 + x_1 x_2 + x_3 x_4 + ...
//   Plus (even dim)      Q(x) = x_0 x_1 + x_2 x_3 + ...
//   Minus (even dim)     plus-type on the first dim-2 coordinates, then an
//                        irreducible binary quadratic on the last two
//   Hermitian (GF(4))    beta(u, v) = sum_i u_i v_i^2
// together with the projective point list, normalized so the first nonzero
// coordinate is 1 and ordered lexicographically. The constructor verifies
// nondegeneracy: no nonzero singular vector lies in the radical of the polar
// (resp. Hermitian) form.
class FormedSpace {
 public:
  FormedSpace(int q, int dim, FormKind kind);

  int q() const { return field_.q(); }
  int dim() const { return dim_; }
  FormKind kind() const { return kind_; }
  const GaloisField& field() const { return field_; }

  const std::vector<std::vector<int>>& points() const { return points_; }
  int point_count() const { return static_cast<int>(points_.size()); }
  // Index of the point spanned by any nonzero vector v.
  int point_index(const std::vector<int>& v) const;

  // Value of the quadratic form (quadratic kinds only).
  int q_value(const std::vector<int>& v) const;
  // Polar form B(u,v) = Q(u+v) - Q(u) - Q(v) for quadratic kinds, the
  // Hermitian form for Hermitian kind.
  int bilinear(const std::vector<int>& u, const std::vector<int>& v) const;

  // Singular: Q(v) = 0, resp. beta(v,v) = 0 for Hermitian kind.
  bool is_singular_point(int index) const;

 private:
  int hermitian_form(const std::vector<int>& u,
                     const std::vector<int>& v) const;
  std::vector<int> normalize(std::vector<int> v) const;

  GaloisField field_;
  int dim_;
  FormKind kind_;
  std::vector<std::vector<int>> points_;
};

std::vector<int> singular_point_indices(const FormedSpace& s);
// Nonsingular points whose normalized representative has the given form
// value. Over GF(3) the classes are Q = 1 and Q = 2; over GF(2) and for
// Hermitian spaces the only class is 1.
std::vector<int> nonsingular_point_indices(const FormedSpace& s,
                                           int value_class);

// Graph on the listed points: arc (u, v) iff u != v and B(u, v) = 0.
// Vertex i of the result is points[i].
Digraph orthogonality_graph(const FormedSpace& s, const std::vector<int>& pts);

// Graph on nonsingular points over GF(3): arc iff the projective line
// through the two points meets the quadric in exactly one point.
Digraph tangent_line_graph(const FormedSpace& s, const std::vector<int>& pts);

// Totally isotropic lines of the Hermitian space GF(4)^4: vertices are the
// 2-dimensional subspaces on which beta vanishes, adjacent when they meet in
// a 1-dimensional subspace.
Digraph isotropic_line_graph(const FormedSpace& s);

}  // namespace vpfix

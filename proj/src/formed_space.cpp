#include "vpfix/formed_space.hpp"

#include <algorithm>
#include <set>

#include "vpfix/errors.hpp"

namespace vpfix {

namespace {

std::vector<int> add_vec(const GaloisField& f, const std::vector<int>& u,
                         const std::vector<int>& v) {
  std::vector<int> w(u.size());
  for (size_t i = 0; i < u.size(); ++i) w[i] = f.add(u[i], v[i]);
  return w;
}

std::vector<int> scale_vec(const GaloisField& f, int t,
                           const std::vector<int>& v) {
  std::vector<int> w(v.size());
  for (size_t i = 0; i < v.size(); ++i) w[i] = f.mul(t, v[i]);
  return w;
}

}  // namespace

FormedSpace::FormedSpace(int q, int dim, FormKind kind)
    : field_(q), dim_(dim), kind_(kind) {
  if (dim < 1 || dim > 8) throw DomainError("dimension must be in 1..8");
  switch (kind) {
    case FormKind::Parabolic:
      if (q != 3 || dim % 2 == 0 || dim < 3)
        throw DomainError("parabolic form needs odd dimension >= 3 over GF(3)");
      break;
    case FormKind::Plus:
    case FormKind::Minus:
      if (q == 4 || dim % 2 != 0)
        throw DomainError("orthogonal type forms need even dimension, q in {2,3}");
      break;
    case FormKind::Hermitian:
      if (q != 4 || dim != 4)
        throw DomainError("hermitian space is dim 4 over GF(4)");
      break;
  }

  // enumerate projective points: odometer over GF(q)^dim
  std::set<std::vector<int>> seen;
  std::vector<int> v(dim, 0);
  while (true) {
    int i = dim - 1;
    while (i >= 0 && v[i] == q - 1) v[i--] = 0;
    if (i < 0) break;
    ++v[i];
    seen.insert(normalize(v));
  }
  points_.assign(seen.begin(), seen.end());

  // nondegeneracy: no singular point may lie in the radical of the polar form
  std::vector<std::vector<int>> basis(dim, std::vector<int>(dim, 0));
  for (int i = 0; i < dim; ++i) basis[i][i] = 1;
  for (const auto& p : points_) {
    bool radical = true;
    for (int i = 0; i < dim && radical; ++i)
      if (bilinear(p, basis[i]) != 0) radical = false;
    if (!radical) continue;
    bool singular = kind_ == FormKind::Hermitian ? hermitian_form(p, p) == 0
                                                 : q_value(p) == 0;
    if (singular || kind_ == FormKind::Hermitian)
      throw DomainError("form is degenerate");
  }
}

std::vector<int> FormedSpace::normalize(std::vector<int> v) const {
  for (int x : v)
    if (x != 0) return scale_vec(field_, field_.inv(x), v);
  throw DomainError("zero vector has no projective point");
}

int FormedSpace::point_index(const std::vector<int>& v) const {
  std::vector<int> p = normalize(v);
  auto it = std::lower_bound(points_.begin(), points_.end(), p);
  return static_cast<int>(it - points_.begin());
}

int FormedSpace::q_value(const std::vector<int>& v) const {
  const GaloisField& f = field_;
  int acc = 0;
  switch (kind_) {
    case FormKind::Parabolic:
      acc = f.mul(v[0], v[0]);
      for (int i = 1; i + 1 < dim_; i += 2)
        acc = f.add(acc, f.mul(v[i], v[i + 1]));
      return acc;
    case FormKind::Plus:
      for (int i = 0; i + 1 < dim_; i += 2)
        acc = f.add(acc, f.mul(v[i], v[i + 1]));
      return acc;
    case FormKind::Minus: {
      for (int i = 0; i + 1 < dim_ - 2; i += 2)
        acc = f.add(acc, f.mul(v[i], v[i + 1]));
      int s = v[dim_ - 2], t = v[dim_ - 1];
      // irreducible binary part: s^2 + st + t^2 over GF(2), s^2 + t^2 over GF(3)
      int aniso = f.add(f.mul(s, s), f.mul(t, t));
      if (f.q() == 2) aniso = f.add(aniso, f.mul(s, t));
      return f.add(acc, aniso);
    }
    case FormKind::Hermitian:
      throw DomainError("hermitian space has no quadratic form");
  }
  return 0;  // unreachable
}

int FormedSpace::hermitian_form(const std::vector<int>& u,
                                const std::vector<int>& v) const {
  int acc = 0;
  for (int i = 0; i < dim_; ++i)
    acc = field_.add(acc, field_.mul(u[i], field_.frobenius(v[i])));
  return acc;
}

int FormedSpace::bilinear(const std::vector<int>& u,
                          const std::vector<int>& v) const {
  if (kind_ == FormKind::Hermitian) return hermitian_form(u, v);
  int quv = q_value(add_vec(field_, u, v));
  return field_.sub(field_.sub(quv, q_value(u)), q_value(v));
}

bool FormedSpace::is_singular_point(int index) const {
  const auto& p = points_[index];
  return kind_ == FormKind::Hermitian ? hermitian_form(p, p) == 0
                                      : q_value(p) == 0;
}

std::vector<int> singular_point_indices(const FormedSpace& s) {
  std::vector<int> out;
  for (int i = 0; i < s.point_count(); ++i)
    if (s.is_singular_point(i)) out.push_back(i);
  return out;
}

std::vector<int> nonsingular_point_indices(const FormedSpace& s,
                                           int value_class) {
  int max_class = s.q() == 3 ? 2 : 1;
  if (value_class < 1 || value_class > max_class)
    throw DomainError("value class out of range for this field");
  std::vector<int> out;
  for (int i = 0; i < s.point_count(); ++i) {
    if (s.is_singular_point(i)) continue;
    int val = s.kind() == FormKind::Hermitian
                  ? s.bilinear(s.points()[i], s.points()[i])
                  : s.q_value(s.points()[i]);
    if (val == value_class) out.push_back(i);
  }
  return out;
}

Digraph orthogonality_graph(const FormedSpace& s,
                            const std::vector<int>& pts) {
  int n = static_cast<int>(pts.size());
  Digraph g(n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (s.bilinear(s.points()[pts[i]], s.points()[pts[j]]) == 0) {
        g.set_arc(i, j);
        g.set_arc(j, i);
      }
  return g;
}

Digraph tangent_line_graph(const FormedSpace& s, const std::vector<int>& pts) {
  if (s.q() != 3 || s.kind() == FormKind::Hermitian)
    throw DomainError("tangent line graph needs a quadratic space over GF(3)");
  for (int p : pts)
    if (s.is_singular_point(p))
      throw DomainError("tangent line graph takes nonsingular points");
  const GaloisField& f = s.field();
  int n = static_cast<int>(pts.size());
  Digraph g(n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      const auto& u = s.points()[pts[i]];
      const auto& v = s.points()[pts[j]];
      // the line {u, v, u+v, u+2v}; u and v are nonsingular
      int hits = 0;
      for (int t = 1; t < 3; ++t)
        if (s.q_value(add_vec(f, u, scale_vec(f, t, v))) == 0) ++hits;
      if (hits == 1) {
        g.set_arc(i, j);
        g.set_arc(j, i);
      }
    }
  return g;
}

Digraph isotropic_line_graph(const FormedSpace& s) {
  if (s.kind() != FormKind::Hermitian)
    throw DomainError("isotropic line graph needs the hermitian space");
  const GaloisField& f = s.field();
  std::vector<int> sing = singular_point_indices(s);
  std::set<std::vector<int>> lines;
  for (size_t a = 0; a < sing.size(); ++a)
    for (size_t b = a + 1; b < sing.size(); ++b) {
      const auto& u = s.points()[sing[a]];
      const auto& v = s.points()[sing[b]];
      if (s.bilinear(u, v) != 0) continue;
      // the 5 points of the totally isotropic line spanned by u and v
      std::vector<int> line = {sing[static_cast<int>(a)],
                               sing[static_cast<int>(b)]};
      for (int t = 1; t < 4; ++t)
        line.push_back(s.point_index(add_vec(f, u, scale_vec(f, t, v))));
      std::sort(line.begin(), line.end());
      lines.insert(line);
    }
  std::vector<std::vector<int>> ls(lines.begin(), lines.end());
  int n = static_cast<int>(ls.size());
  Digraph g(n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      std::vector<int> common;
      std::set_intersection(ls[i].begin(), ls[i].end(), ls[j].begin(),
                            ls[j].end(), std::back_inserter(common));
      if (common.size() == 1) {
        g.set_arc(i, j);
        g.set_arc(j, i);
      }
    }
  return g;
}

}  // namespace vpfix

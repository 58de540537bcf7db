#include "kh/pseudo.hpp"

#include <algorithm>

#include "kh/error.hpp"
#include "kh/fox.hpp"
#include "kh/linalg.hpp"

namespace kh {
namespace {

void normalize(std::vector<Integer>& v) {
  Integer g = 0;
  for (const auto& x : v) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
  if (sgn(g) == 0) return;
  auto lead = std::find_if(v.begin(), v.end(), [](const Integer& x) { return sgn(x) != 0; });
  if (sgn(*lead) < 0) g = -g;
  for (auto& x : v) x /= g;
}

}  // namespace

std::vector<RowRelation> row_relations(const Diagram& d) {
  std::vector<RowRelation> out;
  if (d.empty()) return out;
  for (auto& v : integer_kernel(crossing_matrix(d).transpose())) {
    normalize(v);
    out.push_back({std::move(v)});
  }
  return out;
}

Classification classify_assignment(const Diagram& d, std::span<const Integer> colors) {
  if (colors.size() != static_cast<std::size_t>(d.arc_count()))
    throw DomainError("classify_assignment: expected " + std::to_string(d.arc_count()) + " colors, got " +
                      std::to_string(colors.size()));
  Classification out;
  out.defects = crossing_matrix(d) * colors;
  std::vector<int> nonzero;
  for (int k = 0; k < static_cast<int>(out.defects.size()); ++k)
    if (sgn(out.defects[static_cast<std::size_t>(k)]) != 0) nonzero.push_back(k);
  if (nonzero.empty()) {
    out.kind = AssignmentKind::fox;
    return out;
  }
  if (nonzero.size() != 2) return out;
  const Integer& a = out.defects[static_cast<std::size_t>(nonzero[0])];
  const Integer& b = out.defects[static_cast<std::size_t>(nonzero[1])];
  if (abs(a) != 1 || abs(b) != 1) return out;

  PseudoColoring p;
  p.colors.assign(colors.begin(), colors.end());
  p.defects = out.defects;
  if (a == -1 && b == -1) {
    for (auto& c : p.colors) c = -c;
    for (auto& x : p.defects) x = -x;
  }
  const Integer& pa = p.defects[static_cast<std::size_t>(nonzero[0])];
  const Integer& pb = p.defects[static_cast<std::size_t>(nonzero[1])];
  if (pa == 1 && pb == 1) {
    p.plus_crossing = nonzero[0];
    p.eps_crossing = nonzero[1];
    p.epsilon = 1;
  } else {
    p.plus_crossing = pa == 1 ? nonzero[0] : nonzero[1];
    p.eps_crossing = pa == 1 ? nonzero[1] : nonzero[0];
    p.epsilon = -1;
  }
  out.kind = AssignmentKind::pseudo;
  out.pseudo = std::move(p);
  return out;
}

std::vector<InverseColumnPseudo> pseudo_from_inverse_columns(const Diagram& d) {
  const IntMatrix c_prime = crossing_matrix(d);
  if (c_prime.empty() || !c_prime.is_square()) throw DomainError("pseudo_from_inverse_columns: determinant is zero");
  const int base = d.arc_count() - 1;
  const IntMatrix c = reduced_crossing_matrix(c_prime, base);
  const Integer det = determinant(c);
  if (sgn(det) == 0) throw DomainError("pseudo_from_inverse_columns: determinant is zero");
  const IntMatrix adj = adjugate(c);

  std::vector<InverseColumnPseudo> out;
  for (std::size_t j = 0; j < c.cols(); ++j) {
    std::vector<Integer> colors(static_cast<std::size_t>(d.arc_count()), Integer(0));
    bool integral = true;
    for (std::size_t r = 0; r < c.rows() && integral; ++r) {
      if (!mpz_divisible_p(adj(r, j).get_mpz_t(), det.get_mpz_t())) {
        integral = false;
        break;
      }
      colors[r] = adj(r, j) / det;
    }
    if (!integral) continue;
    auto cls = classify_assignment(d, colors);
    if (cls.kind == AssignmentKind::pseudo) out.push_back({static_cast<int>(j), std::move(*cls.pseudo)});
  }
  return out;
}

PseudoColoring tunnel_pseudo(const Diagram& d) {
  if (is_alternating(d)) throw DomainError("tunnel_pseudo: diagram is alternating and has no tunnel");
  for (const auto& arc : d.arcs()) {
    if (!arc.over_at.empty()) continue;
    std::vector<Integer> colors(static_cast<std::size_t>(d.arc_count()), Integer(0));
    colors[static_cast<std::size_t>(arc.index)] = -1;
    auto cls = classify_assignment(d, colors);
    if (cls.kind == AssignmentKind::pseudo) return std::move(*cls.pseudo);
  }
  throw DomainError("tunnel_pseudo: no tunnel arc yields a pseudo coloring");
}

}  // namespace kh

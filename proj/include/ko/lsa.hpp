#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ko/linalg.hpp"

namespace ko {

/// Sparse coefficient vector: (basis index, nonzero value) pairs sorted by index.
using SparseVec = std::vector<std::pair<std::uint32_t, Scalar>>;

/// A finite-dimensional restricted Z-graded Lie superalgebra given by
/// structure constants on a labeled homogeneous basis.
struct LSA {
  PrimeField field{5};
  std::size_t dim = 0;
  std::vector<std::string> labels;
  std::vector<std::uint8_t> parity;
  std::vector<int> degree;
  /// Structure constants: sc[i * dim + j] holds [e_i, e_j].
  std::vector<SparseVec> sc;
  /// p-mapping images of the even basis elements.
  std::map<std::size_t, Vec> pmap;
  /// Optional realization of each basis element as a function f with e_i = M_f:
  /// a list of (multi-index entries, coefficient).
  std::vector<std::vector<std::pair<std::vector<int>, Scalar>>> basis_terms;

  const PrimeField& F() const { return field; }
  std::uint32_t p() const { return field.p(); }

  const SparseVec& bracket_basis(std::size_t i, std::size_t j) const { return sc[i * dim + j]; }
  Vec bracket(const Vec& u, const Vec& v) const;
  Vec basis_vec(std::size_t i) const { return unit_vec(dim, i); }
  /// Matrix of ad(x) acting on coefficient columns.
  Matrix ad(const Vec& x) const;

  int min_degree() const;
  int max_degree() const;
  std::vector<std::size_t> indices_of_degree(int d) const;
  std::vector<std::size_t> indices_with_degree_at_least(int d) const;
  std::size_t even_count() const;

  /// Parity of a vector when homogeneous (zero vector -> 0).
  std::optional<unsigned> vec_parity(const Vec& v) const;
  /// Degree of a vector when homogeneous; nullopt for zero or mixed.
  std::optional<int> vec_degree(const Vec& v) const;

  /// x^{[p]} for an even, degree-homogeneous x.  Basis elements use pmap; other
  /// elements are solved from ad(x^{[p]}) = ad(x)^p against the negative part and
  /// validated on the full basis.
  Vec p_power(const Vec& x) const;
  /// ad(x)^p applied to v.
  Vec ad_power_apply(const Vec& x, Vec v, std::uint64_t e) const;

  bool structurally_equal(const LSA& o) const;
};

struct Violation {
  std::vector<std::size_t> indices;
  std::string what;
};

/// Outcome of an exhaustive check: empty violation list means pass.
struct CheckReport {
  std::string name;
  std::size_t checked = 0;
  std::size_t violation_count = 0;
  std::vector<Violation> violations;  // first few, for diagnostics
  bool passed() const { return violation_count == 0; }
  void add(Violation v);
};

CheckReport verify_antisymmetry(const LSA& g);
CheckReport verify_jacobi(const LSA& g);
CheckReport verify_restricted(const LSA& g);
CheckReport verify_degree_additivity(const LSA& g);

/// Smallest ideal containing seed.
Subspace ideal_closure(const LSA& g, const std::vector<Vec>& seed);
/// Smallest subalgebra containing seed.
Subspace subalgebra_closure(const LSA& g, const std::vector<Vec>& seed);
/// [S, S] of the span S of the given vectors.
Subspace bracket_span(const LSA& g, const Subspace& a, const Subspace& b);
Subspace derived_subalgebra(const LSA& g, int k);
/// g^i = sum_{j >= i} g_[j].
Subspace filtration_piece(const LSA& g, int i);
Subspace graded_piece(const LSA& g, int d);

/// Grading automorphism: multiplies a degree-d vector by c^d.
struct GradingAut {
  Scalar c = 1;
};
Scalar grading_factor(const PrimeField& F, Scalar c, int d);
Vec apply_grading_aut(const LSA& g, GradingAut phi, const Vec& v);

/// p-character: values on the basis, zero on odd elements.
struct PChar {
  Vec values;
  Scalar operator()(const Vec& x, const PrimeField& F) const { return dot(F, values, x); }
  Scalar at(std::size_t i) const { return values[i]; }
  bool operator==(const PChar&) const = default;
};

/// Checks length and the vanishing on the odd part.
void validate_pchar(const LSA& g, const PChar& chi);
PChar zero_pchar(const LSA& g);
/// (Phi . chi)(x) = chi(Phi^{-1} x).
PChar coadjoint_apply(const LSA& g, GradingAut phi, const PChar& chi);
/// ht(chi) = min{ i : chi(g^i) = 0 }.
int height(const LSA& g, const PChar& chi);

}  // namespace ko

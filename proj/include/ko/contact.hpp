#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "ko/dps.hpp"
#include "ko/lsa.hpp"

namespace ko {

/// O(n, n+1) with the contact structure.  Slot layout (0-based): x_1..x_n are
/// slots 0..n-1, x_{1'}..x_{n'} are slots n..2n-1, x_{2n+1} is slot 2n.
struct ContactShape {
  unsigned n = 1;
  std::uint32_t p = 5;
  Scalar kappa = 0;  // only read by sm

  Shape dps() const { return Shape(n, n + 1, p); }
};

/// i' for i < 2n.
unsigned prime_slot(const Shape& s, unsigned i);
/// The contact slot x_{2n+1}.
inline unsigned top_slot(const Shape& s) { return 2 * s.n_even; }

SuperElement euler(const SuperElement& f);
VectorField euler_field(const Shape& s);
VectorField le_field(const SuperElement& f);
VectorField m_field(const SuperElement& f);
SuperElement contact_bracket(const SuperElement& f, const SuperElement& g);
SuperElement div_kappa(const SuperElement& f, Scalar kappa);

enum class AlgebraKind { M, SM };
std::string to_string(AlgebraKind k);

/// A built m or sm(kappa): the abstract LSA together with the function f_i
/// realizing each basis element e_i = M_{f_i}.
struct ContactAlgebra {
  AlgebraKind kind = AlgebraKind::M;
  ContactShape shape;
  LSA lsa;
  std::vector<SuperElement> functions;

  // Ambient coordinates: the monomial basis of m in degree-then-lex order.
  std::vector<MultiIndex> ambient;
  std::map<MultiIndex, std::size_t> ambient_index;
  // sm only: each basis element in ambient coordinates and its pivot.
  std::vector<Vec> embed;
  std::vector<std::size_t> pivot;

  std::size_t dim() const { return lsa.dim; }
  const PrimeField& F() const { return lsa.field; }

  Vec ambient_coords(const SuperElement& f) const;
  /// Coordinates of M_f in the algebra basis; nullopt when M_f is not in it.
  std::optional<Vec> try_coords(const SuperElement& f) const;
  /// As try_coords, throwing when M_f is not in the algebra.
  Vec coords(const SuperElement& f) const;
  SuperElement function_of(const Vec& v) const;
  /// Index of the basis element M_{x^(r)} (m only).
  std::size_t monomial_index(const MultiIndex& r) const;
  /// Graded dimensions for degrees min..max.
  std::vector<std::size_t> graded_dims() const;
};

/// m = KO(n, n+1).  Basis ordered by degree, then lexicographically.
ContactAlgebra build_m(const ContactShape& cs);
/// sm(kappa): per graded piece, the reduced echelon kernel basis of div_kappa.
ContactAlgebra build_sm(const ContactShape& cs);
ContactAlgebra build_algebra(AlgebraKind kind, const ContactShape& cs);

struct RootSpace {
  Vec weight;  // eigenvalue of each Cartan basis element
  Subspace space;
};

struct CartanData {
  std::vector<Vec> cartan;           // basis of h or t
  std::vector<std::string> cartan_labels;
  Subspace zero_weight;              // should equal span(cartan)
  std::vector<RootSpace> roots;      // nonzero weights, sorted by weight
};

CartanData cartan_and_roots(const ContactAlgebra& g);

struct TriangularSplit {
  Subspace n_minus, cartan, n_plus;
  std::vector<Vec> n_minus_basis, cartan_basis, n_plus_basis;
};

TriangularSplit triangular_split(const ContactAlgebra& g);

/// vf_bracket(M_f, M_g) = M_{f,g} on every pair of monomials of O(n, n+1).
CheckReport verify_homomorphism(const ContactShape& cs);
/// Every basis function lies in ker div_kappa and the kernel is closed under
/// the contact bracket.
CheckReport verify_divergence_closure(const ContactAlgebra& g);
/// Parity and degree laws for each basis element.
CheckReport verify_parity_degree(const ContactAlgebra& g);

struct GoldenEntry {
  int degree;
  SuperElement f;
};

/// The published bases of m and sm(kappa) at n = 1, p = 5.
std::vector<GoldenEntry> golden_entries(AlgebraKind kind, Scalar kappa);
/// Each listed element lies in g at the stated degree and the listed elements
/// span each graded piece.
CheckReport verify_golden(const ContactAlgebra& g);

}  // namespace ko

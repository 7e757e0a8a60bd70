#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "ko/fastmod.hpp"
#include "ko/lsa.hpp"

namespace ko {

/// Coordinates with respect to a fixed, not necessarily echelon, basis.
class SpanCoords {
 public:
  SpanCoords() = default;
  SpanCoords(const PrimeField& F, std::vector<Vec> basis);
  std::size_t size() const { return basis_.size(); }
  const std::vector<Vec>& basis() const { return basis_; }
  /// c with sum c_k basis_k = v, or nullopt when v is outside the span.
  std::optional<Vec> coords(const Vec& v) const;

 private:
  PrimeField F_{5};
  std::vector<Vec> basis_;
  Subspace echelon_;
  Matrix to_basis_;  // echelon coordinates -> basis coordinates
};

/// A finite-dimensional supermodule over the span of `acting`, which must be
/// a subalgebra of g.  action[k] is the matrix of acting[k].
struct GModule {
  PrimeField field{5};
  std::size_t dim = 0;
  std::vector<std::uint8_t> parity;
  std::vector<Vec> acting;
  std::vector<SparseMatrix> action;

  /// Matrix of an arbitrary element of span(acting).
  SparseMatrix action_of(const Vec& z) const;
  std::vector<Matrix> dense_actions() const;
  /// Diagonal (-1)^{parity}.
  SparseMatrix parity_operator() const;
};

/// Bracket relations on every pair of acting elements and the u_chi relation
/// on every even acting element.
CheckReport verify_module(const LSA& g, const GModule& M, const PChar& chi);

/// 1-dimensional module with every acting element given the listed scalar.
GModule character_module(const PrimeField& F, std::vector<Vec> acting, const std::vector<Scalar>& values);
/// Same acting set with all g elements of positive degree acting by zero.
GModule extend_trivially(const LSA& g, const GModule& M, const std::vector<Vec>& acting);
/// M^Phi: x . m = (Phi^{-1} x) m.
GModule twist_module(const LSA& g, const GModule& M, GradingAut phi);
GModule submodule_action(const GModule& M, const Subspace& U);
GModule quotient_action(const GModule& M, const Subspace& U);

/// Semi-echelon basis with lazy 64-bit reduction; the workhorse of spinning.
class SemiEchelon {
 public:
  SemiEchelon(const PrimeField& F, std::size_t n);
  std::size_t dim() const { return rows_.size(); }
  Vec reduce(const Vec& v) const;
  /// Adds v when independent; *reduced receives the normalized new row.
  bool insert(const Vec& v, Vec* reduced);
  const std::vector<Vec>& rows() const { return rows_; }
  Subspace to_subspace() const;

 private:
  PrimeField F_;
  FastMod fm_;
  std::size_t n_;
  std::vector<Vec> rows_;
  std::vector<std::size_t> piv_;
  mutable std::vector<std::uint64_t> work_;
};

/// Kernel basis of a dense matrix (lazy elimination; fast for large inputs).
std::vector<Vec> fast_nullspace(const PrimeField& F, const Matrix& a);

/// Smallest invariant subspace containing the seeds.
Subspace spin(const PrimeField& F, const std::vector<Matrix>& gens, const std::vector<Vec>& seeds);
Subspace spin(const std::vector<SparseMatrix>& gens, const PrimeField& F, std::size_t n, const std::vector<Vec>& seeds);
Subspace spin(const GModule& M, const Vec& v);

enum class Verdict { Irreducible, Reducible, Inconclusive };
std::string to_string(Verdict v);

struct MeatAxeOptions {
  unsigned max_word_length = 12;
  unsigned max_attempts = 200;
  unsigned max_factor_degree = 6;
  /// Add the parity operator so that only graded submodules count.
  bool graded = true;
};

struct MeatAxeResult {
  Verdict verdict = Verdict::Inconclusive;
  std::vector<Vec> submodule;  // proper invariant subspace when Reducible
  std::uint64_t seed = 0;
  unsigned attempts = 0;
  unsigned factor_degree = 0;  // degree of the factor used by the certificate
  std::string note;
};

MeatAxeResult meataxe(const PrimeField& F, const std::vector<Matrix>& gens, std::uint64_t seed,
                      const MeatAxeOptions& opt = {});
MeatAxeResult meataxe_irreducible(const GModule& M, std::uint64_t seed, const MeatAxeOptions& opt = {});

/// Composition factors (graded), found by repeated MeatAxe splitting.
/// Throws when the MeatAxe is inconclusive on some piece.
std::vector<GModule> composition_factors(const GModule& M, std::uint64_t seed);
/// A simple quotient of M.
GModule simple_head(const GModule& M, std::uint64_t seed);

// ---------------------------------------------------------------------------
// Induced modules u_chi(A) (x)_{u_chi(B)} N with A = span(Y) + B.

class InducedModule {
 public:
  /// `Y` is an ordered complement of B = span(base.acting) in the subalgebra A.
  /// With character_mode the base must be 1-dimensional and products in u(B)
  /// are evaluated on the spot; otherwise span(Y) must be a p-closed subalgebra.
  InducedModule(const LSA& g, const PChar& chi, std::vector<Vec> Y, GModule base, bool character_mode = false);

  std::size_t dim() const { return monomials_.size() * base_.dim; }
  std::size_t monomial_count() const { return monomials_.size(); }
  std::size_t base_dim() const { return base_.dim; }
  const std::vector<std::uint8_t>& exponents(std::size_t s) const { return monomials_[s]; }
  const std::vector<Vec>& complement() const { return Y_; }
  const GModule& base() const { return base_; }
  /// Sum of s_i deg(y_i).
  int monomial_degree(std::size_t s) const;
  std::size_t top_monomial() const;
  std::size_t index(std::size_t s, std::size_t j) const { return s * base_.dim + j; }
  std::vector<std::uint8_t> parity() const;

  /// z . v for z in A (g coordinates) and v in the module.
  Vec apply(const Vec& z, const Vec& v) const;
  SparseMatrix action_matrix(const Vec& z) const;
  GModule as_module(const std::vector<Vec>& acting) const;

  /// True when every y in Y acts by scalars on the monomials (no u(B) part),
  /// i.e. the module is u(span Y) (x) N as a span(Y)-module.
  bool complement_acts_freely() const;
  /// Matrix of y_k on the free u(span Y)-module of rank one.
  Matrix regular_action(std::size_t k) const;

 private:
  using ZVec = std::map<std::uint32_t, Scalar>;  // 0 = scalar, 1 + j = base.acting[j]
  using Result = std::vector<std::pair<std::uint32_t, ZVec>>;

  const Result& act(std::size_t k, std::uint32_t s) const;
  Result act_coords(const SparseVec& c, std::uint32_t s) const;
  Result left_y(std::size_t a, const Result& r) const;
  SparseVec decompose(const Vec& z) const;
  ZVec fold(ZVec z) const;
  ZVec mul(const ZVec& a, const ZVec& b) const;
  std::uint32_t encode(const std::vector<std::uint8_t>& e) const;
  Matrix rho(const ZVec& z) const;

  const LSA* g_;
  PChar chi_;
  std::vector<Vec> Y_;
  GModule base_;
  bool character_mode_;
  std::vector<std::uint8_t> ypar_;
  std::vector<int> ydeg_;
  std::vector<std::uint32_t> bound_, stride_;
  std::vector<std::vector<std::uint8_t>> monomials_;
  SpanCoords abasis_;  // Y followed by base.acting
  std::vector<SparseVec> ypow_, ysq_;
  std::vector<std::uint8_t> bpar_;
  mutable std::map<std::pair<std::size_t, std::uint32_t>, Result> memo_;
  mutable std::map<std::pair<std::size_t, std::uint32_t>, bool> busy_;
};

}  // namespace ko

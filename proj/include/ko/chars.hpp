#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "ko/contact.hpp"

namespace ko {

/// chi evaluated on [g_[h], M_{x_b}] (b = slots 0..2n-1) and [g_[h+1], M_1].
struct CharMatrix {
  int h = 0;
  std::vector<Vec> top_basis;   // basis f_a of g_[h]
  std::vector<Vec> next_basis;  // basis g_c of g_[h+1]
  Matrix a1;                    // rows f_a, columns M_{x_b}
  Matrix a2;                    // rows g_c, one column M_1
};

/// Throws std::invalid_argument when ht(chi) < 2 or g_[h], g_[h+1] is zero.
CharMatrix char_matrix(const ContactAlgebra& g, const PChar& chi);
std::size_t rank_chi(const ContactAlgebra& g, const PChar& chi);
std::size_t rank_of(const PrimeField& F, const CharMatrix& m);
bool is_nonsingular(const ContactAlgebra& g, const PChar& chi);

/// A chi supported on g_[h-1] whose Sigma_k sets are all nonempty, built from
/// minimal elements and checked nonsingular.  Needs 2 <= h < p-2 and m.
PChar build_example_nonsingular(const ContactAlgebra& g, int h);

/// The singular character at h = p-2: value 1 on the even M_{x^(r)} with
/// ||r|| = h+1 and r_{n'} = r_{2n+1} = 1, zero elsewhere.  This kills the
/// M_{x_n} column of A1.  Throws when no such monomial exists (n = 1).
PChar build_example_singular(const ContactAlgebra& g);

enum class OrbitMode { Identity, GradingOrbit };
enum class Decision { Yes, No, Inconclusive };
std::string to_string(Decision d);

/// The data of a Delta-invertibility witness in the coordinates of Phi . chi,
/// Phi the grading automorphism with parameter c.
struct DeltaWitness {
  Scalar c = 1;
  std::size_t r = 0;
  std::vector<unsigned> I, J;           // slots of M_{x_i}
  std::vector<Vec> f;                   // basis of g_[h]
  std::vector<std::size_t> minor_rows;  // rows of f giving an invertible r x r minor on I
  std::vector<Vec> delta;               // basis of Delta inside g_[h-1]
  std::vector<Vec> e;                   // e_j in Delta, one per j in J
};

struct DeltaResult {
  Decision decision = Decision::No;
  DeltaWitness witness;
  std::vector<std::string> log;
};

DeltaResult is_delta_invertible(const ContactAlgebra& g, const PChar& chi, OrbitMode mode);
/// Rechecks all five conditions on the witness without reusing search state.
/// Returns an empty string on success, else the first failing condition.
std::string validate_delta_witness(const ContactAlgebra& g, const PChar& chi, const DeltaWitness& w);

/// h_j = M_{x_j x_{j'} - x_{j+1} x_{(j+1)'}} for j = 1..n-1.
std::vector<Vec> cartan_h(const ContactAlgebra& g);

struct RegularResult {
  bool value = false;
  bool degenerate = false;  // n = 1: no h_j, true vacuously
  std::string warning;
};
/// Throws std::invalid_argument unless ht(chi) = 1.
RegularResult is_regular_semisimple(const ContactAlgebra& g, const PChar& chi, OrbitMode mode);

enum class SearchTarget { Nonsingular, DeltaInvertible, RegularSemisimple };
std::string to_string(SearchTarget t);

struct SearchResult {
  bool found = false;
  PChar chi;
  std::uint64_t seed = 0;
  std::uint64_t budget = 0;
  std::uint64_t evaluations = 0;
  std::vector<std::string> log;  // one line per stage
};

/// Seeded search: structured sparse supports on single graded pieces first,
/// then random functionals, at most budget predicate evaluations.
SearchResult search_char(const ContactAlgebra& g, SearchTarget target, std::uint64_t seed,
                         std::uint64_t budget);

}  // namespace ko

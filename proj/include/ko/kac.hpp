#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "ko/contact.hpp"
#include "ko/repn.hpp"

namespace ko {

/// Basis of g_- in PBW order: M_{x_{1'}} .. M_{x_{n'}}, M_{x_n} .. M_{x_1}, M_1.
std::vector<Vec> kac_order(const ContactAlgebra& g);
/// Basis vectors of g^i.
std::vector<Vec> filtration_basis(const LSA& g, int i);
/// Basis vectors of g_[d].
std::vector<Vec> graded_basis(const LSA& g, int d);

/// K_chi(M) = u_chi(g) (x)_{u_chi(g^0)} M.  M must act through a basis of g^0.
InducedModule kac_module(const ContactAlgebra& g, const PChar& chi, const GModule& M);

/// Parameters of a Borel module over the Cartan part.  For a Cartan element H_i
/// with chi(H_i) = 0 the entry is its eigenvalue; for the first H_i0 with
/// chi(H_i0) != 0 the module is F_p[t]/(t^p - t - chi(H_i0)) with H_i0 acting
/// as t, and every other H_i with chi(H_i) != 0 acts as
/// (chi(H_i)/chi(H_i0)) t + params[i].  params[i0] is ignored.
using WeightParams = std::vector<Scalar>;

/// The Borel module over cartan + n^+ (n^+ acting by zero).
GModule borel_module(const ContactAlgebra& g, const TriangularSplit& split, const PChar& chi,
                     const WeightParams& params);
/// Every parameter vector (p^k of them, k the number of free entries).
std::vector<WeightParams> weight_sweep(const ContactAlgebra& g, const TriangularSplit& split, const PChar& chi);

/// u_chi(g_[0]) (x)_{u_chi(b)} L as an induced module with complement n^-.
InducedModule baby_verma(const ContactAlgebra& g, const TriangularSplit& split, const PChar& chi,
                         const WeightParams& params);
/// The baby Verma module with g_[0] acting through its basis vectors.
GModule baby_verma_module(const ContactAlgebra& g, const PChar& chi, const WeightParams& params);

/// For ht(chi) = h >= 2: u_chi(g^0) (x)_{u_chi(g^{h-1})} F_mu, where even
/// elements of g_[h-1] act by chi and g^h and odd elements act by zero.
InducedModule ideal_induction(const ContactAlgebra& g, const PChar& chi);

/// The simple u_chi(g^0)-modules used by the theorem checks, acting through a
/// basis of g^0.  ht <= 1: simple heads of the baby Verma sweep, extended by
/// zero on g^1.  ht >= 2: composition factors of ideal_induction.
struct SimpleFamily {
  std::vector<GModule> modules;
  std::vector<std::string> origin;  // how each module was produced
  bool complete = false;            // every simple module occurs up to isomorphism
};
SimpleFamily simple_g0_modules(const ContactAlgebra& g, const PChar& chi, std::uint64_t seed,
                               std::size_t limit = 0);

/// Bracket and u_chi relations of the induced action tested on random vectors,
/// for all pairs of the given elements.
CheckReport verify_induced_sampled(const LSA& g, const InducedModule& K, const PChar& chi,
                                   const std::vector<Vec>& elements, unsigned samples, std::uint64_t seed);

/// Unique simple socle 1 (x) M of K.  The exact part computes the joint
/// eigenspace E of g^{h-1} and checks E lies in 1 (x) M.  The sampled part walks
/// each random v down to E inside u(g^{h-1}) v and checks the end point lies in
/// 1 (x) M, which shows the g^0-submodule generated by v contains 1 (x) M.
struct SocleReport {
  std::size_t eigen_dim = 0;
  bool exact = false;
  unsigned samples = 0;
  unsigned sample_pass = 0;
  bool passed() const { return exact && sample_pass == samples; }
};
SocleReport unique_socle_check(const ContactAlgebra& g, const PChar& chi, const InducedModule& K,
                               unsigned samples, std::uint64_t seed);

/// Simplicity of K when chi vanishes on g_- and ht(chi) <= 1, without
/// building K densely:
///  (a) g_- acts freely and its joint kernel on u(g_-) is spanned by X^top,
///  (b) W = X^top (x) M is a simple graded g_[0]-module (MeatAxe),
///  (c) u(g) W meets 1 (x) M: a random raising path, else the exact layered
///      closure of u(g^0) W.  An empty closure proves K reducible,
///  (d) M is simple (MeatAxe).
/// Then every nonzero graded submodule meets W, contains W, reaches 1 (x) M and
/// so equals K.
struct KacCertificate {
  bool free_action = false;
  bool top_kernel = false;
  MeatAxeResult top;
  bool reaches_bottom = false;
  bool proved_reducible = false;  // u(g) W is a proper submodule
  MeatAxeResult base;
  std::string note;
  bool passed() const {
    return free_action && top_kernel && top.verdict == Verdict::Irreducible && reaches_bottom &&
           base.verdict == Verdict::Irreducible;
  }
  bool inconclusive() const {
    return !passed() && !proved_reducible && (top.verdict == Verdict::Inconclusive || base.verdict == Verdict::Inconclusive ||
                         (free_action && top_kernel && !reaches_bottom));
  }
};
KacCertificate kac_simplicity_certificate(const ContactAlgebra& g, const PChar& chi, const InducedModule& K,
                                          std::uint64_t seed);

}  // namespace ko

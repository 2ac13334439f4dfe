#pragma once

#include "qhecke/klr.hpp"
#include "qhecke/laurent.hpp"

#include <optional>
#include <string>
#include <vector>

namespace qh {

struct RelationReport {
  std::size_t checked = 0;
  std::vector<std::string> failures;
  bool ok() const { return failures.empty(); }
};

// Every relation of R_Q evaluated as an operator identity in the polynomial
// representation, on all monomials with exponent sum <= max_exp in every M_v.
RelationReport check_relations(const KLRAlgebra& A, int max_exp);

// PBW degree enumeration: sum of v^{deg tau_h 1_v} over h with h(v) = v'.
GradedDim hom_graded_dimension_enumerated(const KLRAlgebra& A, const Colours& v, const Colours& vprime);
// Closed form summed over W = prod_i S_{n_i}; each crossing of strands
// coloured s, t contributes a_{st}. Agrees with the enumeration after v -> v^{-1}.
GradedDim hom_graded_dimension(const QuiverData& quiver, const Colours& v, const Colours& vprime);

// Elements of the algebra presented by R'_Q only, kept as words in the tau's
// with polynomials pushed to the right.
class PrimeWords {
 public:
  using Terms = std::map<std::vector<int>, MPoly>;

  PrimeWords(const KLRAlgebra& A, Colours source) : A_(A), v_(std::move(source)) {}

  // tau_{letters} P 1_v
  Terms word(const std::vector<int>& letters, const MPoly& p) const;
  // P tau_{letters} 1_v
  Terms left_poly(const MPoly& p, const std::vector<int>& letters) const;
  static void accumulate(Terms& into, const Terms& t, const Integer& scale = 1);
  // reduction using only R'_Q moves; the result is zero only if the input is zero in H'
  Terms reduce(const Terms& t) const;

 private:
  const KLRAlgebra& A_;
  Colours v_;
  mutable std::map<std::vector<int>, Terms> cache_;

  Terms reduce_word(const std::vector<int>& letters) const;
};

struct TorsionResult {
  Colours v;
  int i = 0;
  bool discrepancy_zero = false;  // the extra relation already holds in H'
  bool annihilated = false;       // tau_i * discrepancy reduces to zero in H'
  MPoly multiplier;               // kills the discrepancy
  bool holds_in_h = false;        // the discrepancy vanishes in H
};
TorsionResult torsion_check(const KLRAlgebra& A, const Colours& v, int i);

struct CentralProbe {
  bool found = false;
  // in the variables X_{c,r}: colour c, r-th occurrence, numbered colour by colour
  MPoly symmetric;
  int degree = -1;
  std::string note;
};
// Searches for a central P * id in the two-sided ideal generated by gens inside
// the block of the orbit of v, using products a g b with a, b PBW words whose
// polynomial part has exponent sum <= word_bound, and P of degree <= poly_bound.
CentralProbe central_ideal_probe(const KLRAlgebra& A, const Colours& v, const std::vector<KLRElement>& gens,
                                 int word_bound, int poly_bound);
// P(X_{c,r}) as the element sum_{u in orbit} P(x_{positions of colours in u}) 1_u
KLRElement central_element(const KLRAlgebra& A, const Colours& v, const MPoly& P);
// exact membership test in the bounded span used by the probe
bool in_bounded_ideal(const KLRAlgebra& A, const Colours& v, const std::vector<KLRElement>& gens, int word_bound,
                      const KLRElement& target);

}  // namespace qh

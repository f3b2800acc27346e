#pragma once

#include <string>
#include <vector>

#include "eqcoh/cartan.hpp"
#include "eqcoh/linalg.hpp"
#include "eqcoh/setup.hpp"
#include "eqcoh/weilmodel.hpp"

namespace eqcoh {

/// Matrix of a degree-raising operator between two chosen subspace bases;
/// rows are codomain coordinates, columns domain vectors.
struct DegreeMatrix {
  int degree = 0;
  Matrix m;
};

struct BettiRow {
  int degree = 0;
  int dim = 0;     // subspace dimension at this degree
  int ker = 0;     // dim ker of the outgoing differential
  int im = 0;      // rank of the incoming differential
  int betti = 0;   // ker - im
};

struct BettiTable {
  std::vector<BettiRow> rows;
  std::string tsv() const;  // degree<TAB>dim<TAB>ker<TAB>im<TAB>betti
};

/// Joint kernel of the given operators on the span of `domain`, as exact
/// basis vectors.  Operator images must stay inside the truncation.
std::vector<GradedElement> joint_kernel(const Algebra& alg,
                                        const std::vector<Monomial>& domain,
                                        const std::vector<Operator>& ops);

/// Exact coordinates of op on the given bases; throws std::runtime_error
/// if some image escapes the codomain span (a Lemma 8 style violation
/// would surface here).
DegreeMatrix matrix_of(const Algebra& alg, const Operator& op,
                       const std::vector<GradedElement>& domain,
                       const std::vector<GradedElement>& codomain,
                       int degree);

/// Betti numbers of a complex given per-degree bases 0..N and the
/// differential; the top degree is excluded (its outgoing image is
/// truncated away).  Verifies that consecutive matrices compose to zero.
BettiTable betti(const Algebra& alg, const Operator& diff,
                 const std::vector<std::vector<GradedElement>>& bases);

/// Cohomology of (W(g), d_W) itself up to degree N (needs a point-module
/// setup); the classical triviality check.
BettiTable weil_cohomology(const Setup& s, int N);

enum class Model { cartan, weil_basic };

/// H*_G per the chosen model: the basic subcomplex ((W (x) A)_bas, D) or
/// the invariant Cartan complex ((S (x) A)^G, d_C), degrees 0..N-1.
BettiTable equivariant_cohomology(const Setup& s, int N, Model model,
                                  InvarianceMode inv_mode,
                                  BasicMode basic_mode);

}  // namespace eqcoh

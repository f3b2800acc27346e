#include "eqcoh/cohomology.hpp"

#include <map>
#include <stdexcept>

#include "eqcoh/brst.hpp"

namespace eqcoh {

namespace {

// Coordinates of x in the span of `codomain`; throws if x escapes it.
std::vector<Scalar> coordinates_in(const Algebra& alg, const GradedElement& x,
                                   const std::vector<GradedElement>& codomain,
                                   const std::string& what) {
  if (x.empty()) return std::vector<Scalar>(codomain.size());
  std::map<Monomial, int> row_of;
  for (const GradedElement& v : codomain)
    for (const auto& [m, c] : v)
      row_of.emplace(m, static_cast<int>(row_of.size()));
  for (const auto& [m, c] : x)
    row_of.emplace(m, static_cast<int>(row_of.size()));
  Matrix A(static_cast<int>(row_of.size()), static_cast<int>(codomain.size()));
  for (int j = 0; j < static_cast<int>(codomain.size()); ++j)
    for (const auto& [m, c] : codomain[j]) A.at(row_of.at(m), j) = c;
  std::vector<Scalar> b(row_of.size());
  for (const auto& [m, c] : x) b[row_of.at(m)] = c;
  auto sol = solve(A, b);
  if (!sol)
    throw std::runtime_error(what + ": image " + alg.to_string(x) +
                             " escapes the codomain span");
  return *sol;
}

}  // namespace

std::vector<GradedElement> joint_kernel(const Algebra& alg,
                                        const std::vector<Monomial>& domain,
                                        const std::vector<Operator>& ops) {
  if (domain.empty()) return {};
  // Stack the coordinate matrices of all operators on the domain span.
  std::map<Monomial, int> row_of;
  std::vector<std::vector<GradedElement>> images(ops.size());
  for (size_t o = 0; o < ops.size(); ++o)
    for (const Monomial& m : domain) {
      GradedElement img = ops[o](alg.monomial(m));
      for (const auto& [mm, c] : img)
        row_of.emplace(mm, static_cast<int>(row_of.size()));
      images[o].push_back(std::move(img));
    }
  int block = static_cast<int>(row_of.size());
  Matrix A(block * static_cast<int>(ops.size()),
           static_cast<int>(domain.size()));
  for (size_t o = 0; o < ops.size(); ++o)
    for (size_t j = 0; j < domain.size(); ++j)
      for (const auto& [mm, c] : images[o][j])
        A.at(static_cast<int>(o) * block + row_of.at(mm),
             static_cast<int>(j)) = c;
  std::vector<GradedElement> out;
  for (const std::vector<Scalar>& v : kernel(A)) {
    GradedElement e;
    for (size_t j = 0; j < domain.size(); ++j)
      if (!v[j].is_zero()) add_term(e, domain[j], v[j]);
    out.push_back(std::move(e));
  }
  return out;
}

DegreeMatrix matrix_of(const Algebra& alg, const Operator& op,
                       const std::vector<GradedElement>& domain,
                       const std::vector<GradedElement>& codomain,
                       int degree) {
  DegreeMatrix out;
  out.degree = degree;
  out.m = Matrix(static_cast<int>(codomain.size()),
                 static_cast<int>(domain.size()));
  for (size_t j = 0; j < domain.size(); ++j) {
    std::vector<Scalar> col =
        coordinates_in(alg, op(domain[j]), codomain,
                       "degree " + std::to_string(degree));
    for (size_t i = 0; i < codomain.size(); ++i)
      out.m.at(static_cast<int>(i), static_cast<int>(j)) = col[i];
  }
  return out;
}

std::string BettiTable::tsv() const {
  std::string out = "degree\tdim\tker\tim\tbetti\n";
  for (const BettiRow& r : rows)
    out += std::to_string(r.degree) + "\t" + std::to_string(r.dim) + "\t" +
           std::to_string(r.ker) + "\t" + std::to_string(r.im) + "\t" +
           std::to_string(r.betti) + "\n";
  return out;
}

BettiTable betti(const Algebra& alg, const Operator& diff,
                 const std::vector<std::vector<GradedElement>>& bases) {
  int N = static_cast<int>(bases.size()) - 1;
  std::vector<DegreeMatrix> mats;
  for (int d = 0; d < N; ++d)
    mats.push_back(matrix_of(alg, diff, bases[d], bases[d + 1], d));
  for (int d = 0; d + 1 < N; ++d)
    if (!(mats[d + 1].m * mats[d].m).is_zero())
      throw std::runtime_error("differential does not square to zero between "
                               "degrees " + std::to_string(d) + " and " +
                               std::to_string(d + 2));
  std::vector<int> rank(N);
  for (int d = 0; d < N; ++d) rank[d] = rank_bareiss(mats[d].m);
  BettiTable out;
  for (int d = 0; d < N; ++d) {
    BettiRow row;
    row.degree = d;
    row.dim = static_cast<int>(bases[d].size());
    row.ker = row.dim - rank[d];
    row.im = d == 0 ? 0 : rank[d - 1];
    row.betti = row.ker - row.im;
    out.rows.push_back(row);
  }
  return out;
}

BettiTable weil_cohomology(const Setup& s, int N) {
  if (s.mod->kind != "point")
    throw std::invalid_argument("weil_cohomology needs a point module");
  const Algebra& a = s.a();
  std::vector<std::vector<GradedElement>> bases;
  for (int d = 0; d <= N; ++d) {
    std::vector<GradedElement> layer;
    for (const Monomial& m : a.basis_of_degree(d))
      layer.push_back(a.monomial(m));
    bases.push_back(std::move(layer));
  }
  return betti(a, Operator::from_derivation(a, s.weil.d_w), bases);
}

BettiTable equivariant_cohomology(const Setup& s, int N, Model model,
                                  InvarianceMode inv_mode,
                                  BasicMode basic_mode) {
  const Algebra& a = s.a();
  if (model == Model::cartan)
    return betti(a, cartan_d(s), invariant_subspace(s, N, inv_mode));
  return betti(a, Operator::from_derivation(a, total_d(s)),
               basic_subspace(s, N, basic_mode));
}

}  // namespace eqcoh

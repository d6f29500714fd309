// PCA on points near a line: the input and output sides share one
// representation, so the uniqueness axiom holds. CCA on two views does not.

#include <iostream>

#include "axiocat/core/report_json.hpp"
#include "axiocat/random.hpp"
#include "axiocat/reduction/cca.hpp"
#include "axiocat/reduction/pca.hpp"

using namespace axiocat;

int main() {
  Rng rng(7);
  Matrix x(50, 3);
  for (Index k = 0; k < 50; ++k) {
    const double t = rng.uniform(-3, 3);
    x.row(k) << t, 2 * t + rng.normal(0, 0.05), -t + rng.normal(0, 0.05);
  }
  const DataMatrix X(x);
  const auto pca = fit_pca(X, 1);
  std::cout << "origin: " << pca.rep.origin.transpose() << "\nbasis: " << pca.rep.basis << "\n";
  std::cout << "residual: " << pca.residual << "\n";
  std::cout << "pca ucr: " << to_json(check_ucr(pca_input_bundle(X, pca), pca_output_bundle(pca), 1e-9)).dump() << "\n";

  const DataMatrix Z(x.leftCols(2) + rng.normal_matrix(50, 2, 0.5));
  const auto cca = fit_cca(X, Z);
  std::cout << "cca correlation: " << cca.correlation << "\n";
  std::cout << "cca ucr: " << to_json(check_ucr(cca_input_bundle(X, cca), cca_output_bundle(Z, cca), 1e-9)).dump()
            << "\n";
}

// Clusters two Gaussian blobs and prints the axiom report, then shows what
// ties on the boundary do to category separation.

#include <iostream>

#include "axiocat/clustering/prototypes.hpp"
#include "axiocat/core/report_json.hpp"

using namespace axiocat;

int main() {
  Rng rng(42);
  Matrix x = rng.normal_matrix(40, 2, 0.6);
  x.topRows(20).array() += 4.0;
  const DataMatrix X(x);

  ClusteringOptions opts;
  opts.seed = 1;
  const auto result = fit_prototype_clustering(X, 2, opts);
  std::cout << "prototypes:\n" << result.prototypes.values() << "\n";
  std::cout << "objective per step:";
  for (double v : result.objective) std::cout << ' ' << v;
  std::cout << "\naxioms: " << to_json(check_axioms(result.bundle)).dump() << "\n";

  // Objects on the bisector of two prototypes are equally similar to both.
  const PrototypeSet fixed((Matrix(2, 2) << 0, 0, 4, 0).finished());
  const DataMatrix probes{{1, 1}, {2, 5}, {3, -1}, {2, -2}};
  const auto report = check_axioms(referring_bundle(probes, prototype_inner(fixed)));
  std::cout << "probes: ss=" << report.ss.holds << " boundary=" << to_json(report)["boundary"].dump() << "\n";
}

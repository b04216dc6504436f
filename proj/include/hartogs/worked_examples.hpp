#pragma once

#include <map>
#include <optional>

#include "hartogs/families.hpp"
#include "hartogs/pseudoconvexity.hpp"

namespace hartogs {

struct GoldenCheck {
  std::string name;
  Scalar value = 0;
  std::optional<Scalar> expected;  // absent for one-sided bounds
  std::optional<Scalar> lower;     // bound checks
  std::optional<Scalar> upper;
  Scalar tol = 0;
  bool pass = false;
  std::string provenance;  // "exact" | "reference" | "computed"
};

struct ExampleReport {
  std::string name;
  std::map<std::string, Scalar> constants;
  std::vector<GoldenCheck> checks;
  std::string grid_info;
  std::vector<std::string> notes;
  bool pass = false;
};

// Single negative mode chi(r)/r with a smooth plateau at (n + 1/2)/(n + 1):
// boundary sup below 1 while the interior sup exceeds n. Runs the hypothesis
// check and (through the certificate) the full construction pipeline.
ExampleReport cutoff_example(int n);

// The series of the cutoff configuration alone, for reuse by the CLI and
// tests.
RadialModeSeries cutoff_series(int n, std::optional<int> n_theta = {});

// Totally-real disc example: reality margin, admissible tube-radius bound,
// the interior maximum of r |A_{-1}(r)|, and the hypothesis failure of the
// rescaled map.
ExampleReport wermer_example();
RadialModeSeries wermer_series(Scalar scale);

struct RosayParams {
  Scalar s = 0.1;
  Scalar delta = 0.05;
  int big_n = 0;     // 0: smallest admissible
  Scalar alpha = 0;  // 0: largest admissible power of ten
};

// Planar-slice tangency analysis of the pseudoconvex counterexample
// configuration: the tangency ratio exceeds 1, so the vector-valued mode
// condition fails on the plateau.
ExampleReport rosay_example(const RosayParams& params = {});

}  // namespace hartogs

#pragma once

#include <Eigen/Dense>
#include <complex>
#include <cstdlib>
#include <functional>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

namespace hartogs {

using Scalar = double;
using Complex = std::complex<double>;
using ArrayXd = Eigen::ArrayXd;
using ArrayXcd = Eigen::ArrayXcd;
using ArrayXXd = Eigen::ArrayXXd;
using ArrayXXcd = Eigen::ArrayXXcd;
using VectorXcd = Eigen::VectorXcd;

// Library-wide tolerances.
inline constexpr Scalar kTolFft = 1e-10;   // relative DFT round-trip tolerance
inline constexpr Scalar kTolFlat = 1e-8;   // flatness-certificate threshold at r = 0
inline constexpr Scalar kTolPsi = 1e-6;    // limit-graph formula vs extrapolation
inline constexpr Scalar kTolExt = 1e-8;    // extension-consistency threshold
inline constexpr int kFlatOrder = 6;       // finite-difference orders certified flat

inline const char* kSchemaId = "hartogs-lab/1";
inline const char* kToolVersion = "1.0.0";

// Error taxonomy; the CLI maps these onto its exit-code classes.
struct DomainError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};
struct AliasingError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct ResolutionError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct ConstructionError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct CertificateError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct ConsistencyError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct ParameterError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};
struct GeometryError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct HypothesisError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Worker count: hardware concurrency capped by HARTOGS_LAB_THREADS.
inline int worker_count() {
  int n = static_cast<int>(std::thread::hardware_concurrency());
  if (n < 1) n = 1;
  if (const char* env = std::getenv("HARTOGS_LAB_THREADS")) {
    int cap = std::atoi(env);
    if (cap >= 1 && cap < n) n = cap;
  }
  return n;
}

// Chunked parallel loop. Results must not depend on chunk boundaries; all
// call sites reduce with order-independent max/min or write disjoint slots.
inline void parallel_for(int begin, int end, const std::function<void(int)>& body) {
  const int n = end - begin;
  if (n <= 0) return;
  const int workers = std::min(worker_count(), n);
  if (workers == 1) {
    for (int i = begin; i < end; ++i) body(i);
    return;
  }
  std::vector<std::thread> pool;
  pool.reserve(workers);
  const int chunk = (n + workers - 1) / workers;
  for (int w = 0; w < workers; ++w) {
    const int lo = begin + w * chunk;
    const int hi = std::min(end, lo + chunk);
    if (lo >= hi) break;
    pool.emplace_back([&body, lo, hi] {
      for (int i = lo; i < hi; ++i) body(i);
    });
  }
  for (auto& t : pool) t.join();
}

}  // namespace hartogs

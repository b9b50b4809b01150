#include "rfg/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <memory>
#include <vector>

#include <boost/math/quadrature/exp_sinh.hpp>
#include <boost/math/quadrature/tanh_sinh.hpp>

#include "rfg/error.hpp"

namespace rfg::quad {

namespace {

// Integrators keep refinement tables; nested integrals (convolutions, CDFs of
// convolutions) each get their own instance per nesting depth.
template <class Integrator>
class Pool {
public:
  class Lease {
  public:
    explicit Lease(Pool& pool) : pool_(pool) {
      if (pool_.depth_ == pool_.items_.size()) pool_.items_.push_back(std::make_unique<Integrator>());
      item_ = pool_.items_[pool_.depth_++].get();
    }
    ~Lease() { --pool_.depth_; }
    Lease(const Lease&) = delete;
    Lease& operator=(const Lease&) = delete;
    Integrator& get() { return *item_; }

  private:
    Pool& pool_;
    Integrator* item_;
  };

private:
  std::vector<std::unique_ptr<Integrator>> items_;
  std::size_t depth_ = 0;
};

double finite_piece(const std::function<double(double)>& f, double a, double b, double tol) {
  static thread_local Pool<boost::math::quadrature::tanh_sinh<double>> pool;
  Pool<boost::math::quadrature::tanh_sinh<double>>::Lease lease(pool);
  auto& integrator = lease.get();
  auto guarded = [&](double x) {
    if (!(x > a && x < b)) return 0.0;
    return f(x);
  };
  return integrator.integrate(guarded, a, b, tol);
}

double upper_tail(const std::function<double(double)>& f, double a, double tol) {
  static thread_local Pool<boost::math::quadrature::exp_sinh<double>> pool;
  Pool<boost::math::quadrature::exp_sinh<double>>::Lease lease(pool);
  auto& integrator = lease.get();
  auto guarded = [&](double x) {
    if (!(x > a) || std::isinf(x)) return 0.0;
    return f(x);
  };
  return integrator.integrate(guarded, a, std::numeric_limits<double>::infinity(), tol);
}

} // namespace

double integrate(const std::function<double(double)>& f, double lo, double hi, std::span<const double> breaks,
                 double tolerance) {
  if (!(lo < hi)) return 0.0;
  if (std::isinf(lo)) {
    // mirror onto an upper tail
    auto mirrored = [&f](double x) { return f(-x); };
    std::vector<double> flipped;
    for (double b : breaks) flipped.push_back(-b);
    return integrate(mirrored, -hi, std::numeric_limits<double>::infinity(), flipped, tolerance);
  }

  std::vector<double> nodes{lo};
  for (double b : breaks)
    if (b > lo && b < hi) nodes.push_back(b);
  std::sort(nodes.begin(), nodes.end());
  nodes.erase(std::unique(nodes.begin(), nodes.end()), nodes.end());

  const bool infinite = std::isinf(hi);
  if (infinite) {
    // give the semi-infinite piece a finite start away from any singularity
    nodes.push_back(nodes.back() + 1.0);
  } else {
    nodes.push_back(hi);
  }

  double total = 0.0;
  try {
    for (std::size_t i = 0; i + 1 < nodes.size(); ++i) total += finite_piece(f, nodes[i], nodes[i + 1], tolerance);
    if (infinite) total += upper_tail(f, nodes.back(), tolerance);
  } catch (const Error&) {
    throw;
  } catch (const std::exception& e) {
    throw Error(ErrorCode::NonIntegrable, e.what());
  }
  if (!std::isfinite(total)) throw Error(ErrorCode::NonIntegrable, "integral is not finite");
  return total;
}

} // namespace rfg::quad

#pragma once

#include <Eigen/Dense>
#include <vector>

namespace switchopt {

// Convex scalar function with value / (sub)gradient / prox oracles.
// Three shapes:
//   quadratic  1/2 w'Hw + b'w + c   with H symmetric PSD,
//   affine     a'w + c,
//   max-of     pointwise maximum of a nonempty member list.
class ScalarFunction {
 public:
  enum class Kind { Quadratic, Affine, MaxOf };

  static ScalarFunction quadratic(Eigen::MatrixXd hessian, Eigen::VectorXd linear, double offset);
  static ScalarFunction affine(Eigen::VectorXd slope, double offset);
  static ScalarFunction max_of(std::vector<ScalarFunction> parts);

  Kind kind() const { return kind_; }
  int dim() const { return dim_; }

  double value(const Eigen::VectorXd& w) const;

  /// Subgradient; for max-of, the gradient of the lowest-index maximizer.
  Eigen::VectorXd gradient(const Eigen::VectorXd& w) const;

  /// argmin_x fn(x) + ||x - v||^2 / (2 eta), closed form. Quadratic/affine only.
  Eigen::VectorXd prox(double eta, const Eigen::VectorXd& v) const;
  bool has_closed_form_prox() const { return kind_ != Kind::MaxOf; }

  /// Hessian of the branch active at w (zero for affine).
  Eigen::MatrixXd hessian_at(const Eigen::VectorXd& w) const;

  /// Upper bound on the smoothness constant: max Hessian eigenvalue across branches.
  double smoothness_bound() const { return smoothness_; }

  // Shape accessors. hessian() is quadratic-only; linear() is the quadratic b
  // or the affine slope a.
  const Eigen::MatrixXd& hessian() const;
  const Eigen::VectorXd& linear() const;
  double offset() const { return c_; }
  const std::vector<ScalarFunction>& parts() const;

 private:
  ScalarFunction() = default;
  void check_dim(const Eigen::VectorXd& w) const;

  Kind kind_ = Kind::Affine;
  int dim_ = 0;
  Eigen::MatrixXd H_;
  Eigen::VectorXd b_;  // quadratic b / affine a
  double c_ = 0.0;
  double smoothness_ = 0.0;
  std::vector<ScalarFunction> parts_;
};

}  // namespace switchopt

#pragma once

#include <stdexcept>
#include <string>

namespace switchopt {

/// Inner fixed-point / prox iteration exhausted its budget before meeting tol.
class FixedPointDivergence : public std::runtime_error {
 public:
  FixedPointDivergence(int outer_step, double last_residual, const std::string& what)
      : std::runtime_error(what), outer_step_(outer_step), last_residual_(last_residual) {}
  int outer_step() const { return outer_step_; }
  double last_residual() const { return last_residual_; }

 private:
  int outer_step_;
  double last_residual_;
};

/// An iterate left the ball on which the instance's gradient bound G is certified.
class BallExit : public std::runtime_error {
 public:
  BallExit(int step, double norm, double radius, const std::string& what)
      : std::runtime_error(what), step_(step), norm_(norm), radius_(radius) {}
  int step() const { return step_; }
  double iterate_norm() const { return norm_; }
  double radius() const { return radius_; }

 private:
  int step_;
  double norm_;
  double radius_;
};

/// No iterate qualified for the averaged solution's index set.
class EmptyFeasibleSet : public std::runtime_error {
 public:
  explicit EmptyFeasibleSet(const std::string& what) : std::runtime_error(what) {}
};

/// Requested a derivative at a kink of a piecewise rule.
class NonDifferentiablePoint : public std::runtime_error {
 public:
  explicit NonDifferentiablePoint(const std::string& what) : std::runtime_error(what) {}
};

/// Too few usable points for a regression.
class InsufficientData : public std::runtime_error {
 public:
  explicit InsufficientData(const std::string& what) : std::runtime_error(what) {}
};

/// Reference solver could not bracket or solve the dual problem.
class InfeasibleOrIllConditioned : public std::runtime_error {
 public:
  explicit InfeasibleOrIllConditioned(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace switchopt

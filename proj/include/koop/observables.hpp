#pragma once

#include <Eigen/Dense>
#include <functional>
#include <string>
#include <vector>

#include "koop/errors.hpp"

namespace koop {

// One scalar observation function of the physical state.
struct Observable {
  std::string name;
  std::function<double(const Eigen::VectorXd&)> fn;
};

// Ordered bank of observables. Registration order defines the coordinate
// system of the lifted block and is persisted with any identified model, so
// a model and its bank cannot drift apart.
class ObservableSet {
 public:
  ObservableSet() = default;
  explicit ObservableSet(std::vector<Observable> entries)
      : entries_(std::move(entries)) {}

  void add(std::string name, std::function<double(const Eigen::VectorXd&)> fn) {
    entries_.push_back({std::move(name), std::move(fn)});
  }

  int size() const { return static_cast<int>(entries_.size()); }
  bool empty() const { return entries_.empty(); }
  const Observable& entry(int i) const { return entries_.at(i); }

  // Evaluates every entry at X, in registration order. A non-finite value
  // aborts with an EvaluationError naming the offending entry; clamping
  // would silently corrupt identification data.
  Eigen::VectorXd evaluate(const Eigen::VectorXd& X) const;

 private:
  std::vector<Observable> entries_;
};

// Lifted state. z1 is the physical state verbatim, z2 the observable values,
// z3 an optional extra bank (size 0 when unused).
struct KoopmanState {
  Eigen::VectorXd z1;
  Eigen::VectorXd z2;
  Eigen::VectorXd z3;

  Eigen::Index dim() const { return z1.size() + z2.size() + z3.size(); }

  // The block the identified subsystem predicts: [z2; z3].
  Eigen::VectorXd lifted() const;

  // [z1; z2; z3].
  Eigen::VectorXd stacked() const;
};

KoopmanState lift(const Eigen::VectorXd& X, const ObservableSet& obs);
KoopmanState lift(const Eigen::VectorXd& X, const ObservableSet& obs,
                  const ObservableSet& extra);

}  // namespace koop

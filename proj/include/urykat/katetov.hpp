#pragma once

#include <optional>
#include <string>
#include <vector>

#include "urykat/metric_space.hpp"

namespace urykat {

// An admissible one-point-extension profile over a space: 1-Lipschitz and
// d(x,y) <= f(x) + f(y) at every pair (hence nonnegative).
struct KatetovFunction {
  SpacePtr space;
  std::vector<Rational> values;

  const Rational& at(int i) const { return values[static_cast<std::size_t>(i)]; }
};

struct KatetovCheck {
  enum class Which { lipschitz, katetov };
  bool ok = true;
  int i = -1;
  int j = -1;
  Which which = Which::lipschitz;
};

// Verdict plus the first violating pair in canonical scan order.
KatetovCheck is_katetov(const MetricSpace& space, const std::vector<Rational>& values);

// Checked constructor; throws NotKatetov with the witness pair.
KatetovFunction katetov_function(SpacePtr space, std::vector<Rational> values);

// Largest 1-Lipschitz function agreeing with g on the subset:
// (g^X)(x) = min over a in A of g(a) + d(x, a). g is indexed like
// controllers.indices. Throws NotKatetovOnA when g fails on the induced
// subspace.
KatetovFunction katetov_extension(const SubspaceRef& controllers,
                                  const std::vector<Rational>& g);

// f equals the extension of its own restriction to the subset.
bool is_controlled_by(const KatetovFunction& f, const SubspaceRef& controllers);

struct ControlCertificate {
  KatetovFunction function;
  SubspaceRef controllers;
};

// Validates the control relation before returning the certificate.
ControlCertificate control_certificate(KatetovFunction f, SubspaceRef controllers);

// max over points of |f - g|; requires structurally equal spaces.
Rational sup_metric(const KatetovFunction& f, const KatetovFunction& g);

// The profile d(x, -).
KatetovFunction kuratowski(SpacePtr space, int x);
KatetovFunction kuratowski(SpacePtr space, const std::string& id);

// Adjoins one point with d(new, x) = f(x). The result is flagged pseudometric
// if f hits zero (the new point duplicates an existing one).
SpacePtr one_point_extension(const KatetovFunction& f, const std::string& new_id);

// Pointwise min(f, cap); requires cap >= diameter so the result stays
// admissible.
KatetovFunction truncate(const KatetovFunction& f, const Rational& cap);

}  // namespace urykat

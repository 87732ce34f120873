#pragma once

#include <vector>

#include "pthresh/count_options.hpp"
#include "pthresh/profile.hpp"
#include "pthresh/unordered_methods.hpp"
#include "pthresh/weights.hpp"

namespace pthresh {

struct StvTrace {
  OutcomeSet outcomes;
  // False if live + exhausted ballot value + Q * elected ever differed from V.
  bool conserved = true;
};

// Ideal STV with unrounded quota V/(S+delta) and uniform fractional surplus transfer.
StvTrace stv_count_trace(const Rational& delta, const Profile& p, const CountOptions& opt = {});
OutcomeSet stv_count(const Rational& delta, const Profile& p, const CountOptions& opt = {});

// Phragmen where each ballot supports only its first unelected name.
PhragmenResult phragmen_ordered(const Profile& p, const CountOptions& opt = {});

// Sequential; a ballot whose first unelected name is at position k gives it weight/k.
OutcomeSet thiele_ordered(const Profile& p, const CountOptions& opt = {});

// Static positional scores with weights w_k, top S elected.
OutcomeSet borda_count(const WeightScheme& w, const Profile& p, const CountOptions& opt = {});

}  // namespace pthresh

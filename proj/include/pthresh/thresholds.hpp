#pragma once

#include <optional>
#include <string>
#include <vector>

#include "pthresh/method.hpp"
#include "pthresh/rational.hpp"
#include "pthresh/scenarios.hpp"

namespace pthresh {

enum class Side { Plus, Minus, Unspecified };
enum class ValueKind { Pi, PiHat };
enum class Status { Exact, LowerBound, UpperBound, Interval, Unknown };

std::string to_string(Side s);
std::string to_string(ValueKind k);
std::string to_string(Status s);

struct ThresholdValue {
  Rational value;  // the exact value, or the bound the status refers to
  Side side = Side::Unspecified;
  ValueKind kind = ValueKind::Pi;
  Status status = Status::Unknown;
  Rational lo{0};  // proved enclosure; lo == hi == value when Exact
  Rational hi{1};
  bool conjectured = false;  // value believed exact but only the bound is proved
  std::string source;
  std::string note;

  bool exact() const { return status == Status::Exact; }
  std::string str() const;
};

// The headline value for a method/scenario pair. Tactic returns the large
// electorate version where that is the proved form.
ThresholdValue threshold(const MethodId& m, ScenarioId s, int ell, int S);
// Tactic thresholds in both forms.
ThresholdValue threshold_tactic_pi(const MethodId& m, int ell, int S);
ThresholdValue threshold_hat(const MethodId& m, int ell, int S);

bool supports(const MethodId& m, ScenarioId s);

struct GenericBound {
  std::string constraint;
  std::optional<Rational> lower;  // lower bound on pi(ell,S) when numeric
  std::string source;
};

// Bounds valid for every method and scenario.
std::vector<GenericBound> generic_bounds(int ell, int S);
// Best numeric generic lower bound, 1/(floor(S/ell)+1).
Rational generic_lower(int ell, int S);

enum class Criterion { JR, PJR, EJR, DPC, PSCStrong, WPSCFloor };
enum class Verdict { Yes, No, Unknown };

Criterion parse_criterion(const std::string& text);
std::string to_string(Criterion c);
std::string to_string(Verdict v);

Verdict criterion_check(const MethodId& m, Criterion c, int S);

// Named grids for 1 <= ell <= S <= smax (row S, column ell).
std::vector<std::string> table_names();
std::vector<std::vector<ThresholdValue>> threshold_table(const std::string& name, int smax = 5);

}  // namespace pthresh

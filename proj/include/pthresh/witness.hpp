#pragma once

#include <string>
#include <vector>

#include "pthresh/count_options.hpp"
#include "pthresh/method.hpp"
#include "pthresh/scenarios.hpp"

namespace pthresh {

struct Witness {
  ScenarioInstance instance;
  Rational claimed_fraction;  // W / V
  std::string source;         // catalog token
};

struct CatalogEntry {
  std::string token;
  std::string summary;
};

const std::vector<CatalogEntry>& witness_catalog();

// `epsilon` is used only by constructions whose supremum is a limit.
Witness construct_witness(const std::string& token, const MethodId& m, ScenarioId s, int ell, int seats,
                          const Rational& epsilon = Rational(1, 100));

// True iff the witness is an instance of its scenario, its fraction is right,
// and the method can return a bad committee on it.
bool verify_witness(const Witness& w, const MethodId& m, const CountOptions& opt = {});

}  // namespace pthresh

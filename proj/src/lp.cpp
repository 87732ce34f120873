#include "pthresh/lp.hpp"

#include <sstream>

#include "pthresh/errors.hpp"

namespace pthresh {

LinearProgram::LinearProgram(std::size_t vars) : objective(vars) {
  for (std::size_t j = 0; j < vars; ++j) names.push_back("x" + std::to_string(j + 1));
}

void LinearProgram::add(std::vector<Rational> coeffs, Relation rel, Rational rhs) {
  if (coeffs.size() != num_vars()) throw ValidationError("constraint width does not match variable count");
  constraints.push_back({std::move(coeffs), rel, std::move(rhs)});
}

Rational LinearProgram::lower_bound(std::size_t j) const { return lower.empty() ? Rational(0) : lower[j]; }

std::string LinearProgram::dump() const {
  std::ostringstream out;
  out << "vars";
  for (const auto& n : names) out << " " << n;
  out << "\nmin";
  for (const auto& c : objective) out << " " << c;
  out << "\n";
  if (!lower.empty()) {
    out << "lower";
    for (const auto& l : lower) out << " " << l;
    out << "\n";
  }
  for (const auto& c : constraints) {
    for (const auto& a : c.coeffs) out << a << " ";
    out << (c.rel == Relation::GE ? ">=" : c.rel == Relation::LE ? "<=" : "=") << " " << c.rhs << "\n";
  }
  return out.str();
}

namespace {

struct Tableau {
  std::size_t rows, cols;                 // cols excludes the rhs column
  std::vector<std::vector<mpq_class>> a;  // rows x (cols + 1)
  std::vector<mpq_class> d;               // reduced costs, size cols + 1 (last = -objective)
  std::vector<std::size_t> basis;
  std::vector<bool> blocked;              // columns barred from entering

  void pivot(std::size_t r, std::size_t c) {
    mpq_class inv = 1 / a[r][c];
    for (auto& x : a[r]) x *= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || a[i][c] == 0) continue;
      mpq_class f = a[i][c];
      for (std::size_t j = 0; j <= cols; ++j)
        if (a[r][j] != 0) a[i][j] -= f * a[r][j];
    }
    if (d[c] != 0) {
      mpq_class f = d[c];
      for (std::size_t j = 0; j <= cols; ++j)
        if (a[r][j] != 0) d[j] -= f * a[r][j];
    }
    basis[r] = c;
  }

  // Returns false when unbounded.
  bool run() {
    for (;;) {
      std::size_t enter = cols;
      for (std::size_t j = 0; j < cols; ++j)
        if (!blocked[j] && d[j] < 0) {
          enter = j;
          break;
        }
      if (enter == cols) return true;
      std::size_t leave = rows;
      mpq_class best;
      for (std::size_t i = 0; i < rows; ++i) {
        if (a[i][enter] <= 0) continue;
        mpq_class ratio = a[i][cols] / a[i][enter];
        if (leave == rows || ratio < best || (ratio == best && basis[i] < basis[leave])) {
          leave = i;
          best = ratio;
        }
      }
      if (leave == rows) return false;
      pivot(leave, enter);
    }
  }

  void set_costs(const std::vector<mpq_class>& c) {
    d.assign(cols + 1, 0);
    for (std::size_t j = 0; j < cols; ++j) d[j] = c[j];
    for (std::size_t i = 0; i < rows; ++i) {
      const mpq_class& cb = c[basis[i]];
      if (cb == 0) continue;
      for (std::size_t j = 0; j <= cols; ++j) d[j] -= cb * a[i][j];
    }
  }
};

}  // namespace

LpOutcome solve(const LinearProgram& lp) {
  const std::size_t n = lp.num_vars();
  if (n == 0) throw ValidationError("linear program has no variables");
  const std::size_t m = lp.constraints.size();

  // Shift x = x' + lower, then make every rhs non-negative.
  std::vector<std::vector<mpq_class>> rowsA(m, std::vector<mpq_class>(n));
  std::vector<mpq_class> rhs(m);
  std::vector<Relation> rel(m);
  for (std::size_t i = 0; i < m; ++i) {
    const auto& c = lp.constraints[i];
    if (c.coeffs.size() != n) throw ValidationError("constraint width does not match variable count");
    mpq_class b = c.rhs.raw();
    for (std::size_t j = 0; j < n; ++j) {
      rowsA[i][j] = c.coeffs[j].raw();
      b -= rowsA[i][j] * lp.lower_bound(j).raw();
    }
    rel[i] = c.rel;
    if (b < 0) {
      b = -b;
      for (auto& x : rowsA[i]) x = -x;
      if (rel[i] != Relation::EQ) rel[i] = rel[i] == Relation::GE ? Relation::LE : Relation::GE;
    }
    rhs[i] = b;
  }

  // Columns: originals, one slack/surplus per inequality, one artificial per GE/EQ row.
  std::size_t slacks = 0, arts = 0;
  for (auto r : rel) {
    if (r != Relation::EQ) ++slacks;
    if (r != Relation::LE) ++arts;
  }
  Tableau t;
  t.rows = m;
  t.cols = n + slacks + arts;
  t.a.assign(m, std::vector<mpq_class>(t.cols + 1));
  t.basis.assign(m, 0);
  t.blocked.assign(t.cols, false);
  std::size_t s = n, art = n + slacks;
  std::vector<mpq_class> phase1(t.cols, 0);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < n; ++j) t.a[i][j] = rowsA[i][j];
    t.a[i][t.cols] = rhs[i];
    if (rel[i] == Relation::LE) {
      t.a[i][s] = 1;
      t.basis[i] = s++;
    } else {
      if (rel[i] == Relation::GE) t.a[i][s++] = -1;
      t.a[i][art] = 1;
      phase1[art] = 1;
      t.basis[i] = art++;
    }
  }

  LpOutcome out;
  t.set_costs(phase1);
  t.run();
  if (t.d[t.cols] != 0) return out;  // phase-1 optimum -d[cols] > 0

  // Drive zero-level artificials out of the basis; drop redundant rows.
  const std::size_t first_art = n + slacks;
  for (std::size_t i = 0; i < t.rows;) {
    if (t.basis[i] < first_art) {
      ++i;
      continue;
    }
    std::size_t col = first_art;
    for (std::size_t j = 0; j < first_art; ++j)
      if (t.a[i][j] != 0) {
        col = j;
        break;
      }
    if (col < first_art) {
      t.pivot(i, col);
      ++i;
    } else {
      t.a.erase(t.a.begin() + static_cast<long>(i));
      t.basis.erase(t.basis.begin() + static_cast<long>(i));
      --t.rows;
    }
  }
  for (std::size_t j = first_art; j < t.cols; ++j) t.blocked[j] = true;

  std::vector<mpq_class> cost(t.cols, 0);
  for (std::size_t j = 0; j < n; ++j) cost[j] = lp.objective[j].raw();
  t.set_costs(cost);
  if (!t.run()) {
    out.status = LpOutcome::Status::Unbounded;
    return out;
  }

  out.status = LpOutcome::Status::Optimal;
  out.point.assign(n, Rational(0));
  for (std::size_t i = 0; i < t.rows; ++i)
    if (t.basis[i] < n) out.point[t.basis[i]] = Rational(t.a[i][t.cols]);
  for (std::size_t j = 0; j < n; ++j) {
    out.point[j] += lp.lower_bound(j);
    out.value += lp.objective[j] * out.point[j];
  }
  if (!satisfies(lp, out.point)) throw Error("simplex returned a point violating the constraints");
  return out;
}

bool satisfies(const LinearProgram& lp, const std::vector<Rational>& point) {
  if (point.size() != lp.num_vars()) return false;
  for (std::size_t j = 0; j < point.size(); ++j)
    if (point[j] < lp.lower_bound(j)) return false;
  for (const auto& c : lp.constraints) {
    Rational lhs;
    for (std::size_t j = 0; j < point.size(); ++j) lhs += c.coeffs[j] * point[j];
    if ((c.rel == Relation::GE && lhs < c.rhs) || (c.rel == Relation::LE && lhs > c.rhs) ||
        (c.rel == Relation::EQ && lhs != c.rhs))
      return false;
  }
  return true;
}

// Primal (after shifting to x >= 0): min c.x, a_i x (rel) b_i.
// Dual: max b.y, A^T y <= c, y_i >= 0 for >=, y_i <= 0 for <=, free for =.
// Written with y = y+ (>=), y = -y' (<=), y = y+ - y- (=), all >= 0, and
// minimising -b.y.
LinearProgram dual_of(const LinearProgram& lp) {
  const std::size_t n = lp.num_vars();
  std::vector<std::pair<std::size_t, int>> cols;  // (row, sign)
  for (std::size_t i = 0; i < lp.constraints.size(); ++i) {
    switch (lp.constraints[i].rel) {
      case Relation::GE: cols.push_back({i, 1}); break;
      case Relation::LE: cols.push_back({i, -1}); break;
      case Relation::EQ:
        cols.push_back({i, 1});
        cols.push_back({i, -1});
        break;
    }
  }
  LinearProgram d(cols.size());
  for (std::size_t k = 0; k < cols.size(); ++k) {
    const auto& c = lp.constraints[cols[k].first];
    Rational b = c.rhs;
    for (std::size_t j = 0; j < n; ++j) b -= c.coeffs[j] * lp.lower_bound(j);
    d.objective[k] = -b * Rational(cols[k].second);
  }
  for (std::size_t j = 0; j < n; ++j) {
    std::vector<Rational> row(cols.size());
    for (std::size_t k = 0; k < cols.size(); ++k)
      row[k] = lp.constraints[cols[k].first].coeffs[j] * Rational(cols[k].second);
    d.add(std::move(row), Relation::LE, lp.objective[j]);
  }
  return d;
}

Rational dual_offset(const LinearProgram& lp) {
  Rational off;
  for (std::size_t j = 0; j < lp.num_vars(); ++j) off += lp.objective[j] * lp.lower_bound(j);
  return off;
}

bool duality_audit(const LinearProgram& lp, const LpOutcome& primal) {
  if (primal.status != LpOutcome::Status::Optimal) return false;
  LinearProgram d = dual_of(lp);
  LpOutcome dual = solve(d);
  if (dual.status != LpOutcome::Status::Optimal) return false;
  return -dual.value + dual_offset(lp) == primal.value;
}

}  // namespace pthresh

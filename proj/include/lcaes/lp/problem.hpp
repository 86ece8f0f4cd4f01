#pragma once

#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

namespace lcaes::lp {

inline constexpr double kInf = std::numeric_limits<double>::infinity();

enum class RowSense { kLessEqual, kEqual, kGreaterEqual };

struct Variable {
  std::string name;
  double lower = 0.0;
  double upper = kInf;
  double cost = 0.0;
  bool integer = false;
};

struct Entry {
  int col = 0;
  double value = 0.0;
};

struct Row {
  std::string name;
  std::vector<Entry> entries;
  RowSense sense = RowSense::kEqual;
  double rhs = 0.0;
};

class StructuralError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Minimization LP/MILP in row form: min c'x + offset s.t. rows, bounds.
///
/// Columns are identified by insertion index. Entries with duplicate column
/// indices inside one row are summed when the row is added.
class Problem {
 public:
  int add_variable(std::string name, double lower, double upper,
                   double cost = 0.0, bool integer = false);
  int add_row(std::string name, std::vector<Entry> entries, RowSense sense,
              double rhs);

  void set_cost(int col, double cost);
  void set_bounds(int col, double lower, double upper);
  void set_rhs(int row, double rhs);
  void set_objective_offset(double offset) { offset_ = offset; }
  void clear_objective();

  int num_variables() const { return static_cast<int>(vars_.size()); }
  int num_rows() const { return static_cast<int>(rows_.size()); }
  const Variable& variable(int col) const { return vars_.at(col); }
  const Row& row(int r) const { return rows_.at(r); }
  const std::vector<Variable>& variables() const { return vars_; }
  const std::vector<Row>& rows() const { return rows_; }
  double objective_offset() const { return offset_; }
  bool has_integers() const;

  /// Objective value c'x + offset for a primal vector.
  double evaluate(const std::vector<double>& x) const;
  /// Activity a_r'x of one row.
  double activity(int r, const std::vector<double>& x) const;

  /// Throws StructuralError on out-of-range indices, NaN data, or
  /// inconsistent bounds.
  void check() const;

 private:
  std::vector<Variable> vars_;
  std::vector<Row> rows_;
  double offset_ = 0.0;
};

}  // namespace lcaes::lp

#pragma once

#include <string>
#include <vector>

namespace hetsim::lp {

inline constexpr double kInfinity = 1e30;

enum class VarKind { Continuous, Binary };
enum class Relation { LessEq, Equal, GreaterEq };

struct Variable {
    std::string name;
    VarKind kind = VarKind::Continuous;
    double lower = 0.0;
    double upper = kInfinity;
};

struct Term {
    int var = -1;
    double coeff = 0.0;
};

struct Constraint {
    std::string name;
    std::vector<Term> terms;
    Relation rel = Relation::LessEq;
    double rhs = 0.0;
};

/// Generic maximization MILP in sparse row form. Binary variables carry
/// fixed [0, 1] bounds; every term must reference a declared variable.
class MilpProgram {
public:
    int add_continuous(std::string name, double lower, double upper);
    int add_binary(std::string name);

    /// Throws std::invalid_argument on out-of-range variable references.
    void add_constraint(std::string name, std::vector<Term> terms, Relation rel, double rhs);

    /// Sets (overwrites) the objective coefficient of one variable.
    void set_objective(int var, double coeff);
    void add_objective(int var, double coeff);

    int num_variables() const { return static_cast<int>(vars_.size()); }
    int num_constraints() const { return static_cast<int>(cons_.size()); }
    const std::vector<Variable>& variables() const { return vars_; }
    const std::vector<Constraint>& constraints() const { return cons_; }
    const std::vector<double>& objective() const { return obj_; }
    const Variable& variable(int i) const { return vars_[i]; }

    double eval_objective(const std::vector<double>& values) const;

private:
    void check_var(int var) const;

    std::vector<Variable> vars_;
    std::vector<Constraint> cons_;
    std::vector<double> obj_;
};

}  // namespace hetsim::lp

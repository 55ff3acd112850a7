#include "hetsim/lp/program.hpp"

#include <cmath>
#include <stdexcept>

namespace hetsim::lp {

int MilpProgram::add_continuous(std::string name, double lower, double upper) {
    if (!(lower <= upper)) {
        throw std::invalid_argument("variable '" + name + "': lower bound exceeds upper");
    }
    vars_.push_back({std::move(name), VarKind::Continuous, lower, upper});
    obj_.push_back(0.0);
    return num_variables() - 1;
}

int MilpProgram::add_binary(std::string name) {
    vars_.push_back({std::move(name), VarKind::Binary, 0.0, 1.0});
    obj_.push_back(0.0);
    return num_variables() - 1;
}

void MilpProgram::check_var(int var) const {
    if (var < 0 || var >= num_variables()) {
        throw std::invalid_argument("constraint references undeclared variable index " +
                                    std::to_string(var));
    }
}

void MilpProgram::add_constraint(std::string name, std::vector<Term> terms, Relation rel,
                                 double rhs) {
    for (const auto& t : terms) {
        check_var(t.var);
        if (!std::isfinite(t.coeff)) {
            throw std::invalid_argument("constraint '" + name + "': non-finite coefficient");
        }
    }
    cons_.push_back({std::move(name), std::move(terms), rel, rhs});
}

void MilpProgram::set_objective(int var, double coeff) {
    check_var(var);
    obj_[var] = coeff;
}

void MilpProgram::add_objective(int var, double coeff) {
    check_var(var);
    obj_[var] += coeff;
}

double MilpProgram::eval_objective(const std::vector<double>& values) const {
    double obj = 0.0;
    for (int j = 0; j < num_variables(); ++j) obj += obj_[j] * values[j];
    return obj;
}

}  // namespace hetsim::lp

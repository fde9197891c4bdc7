#include "consensus/tolerances.hpp"

namespace consensus {

namespace {

std::map<std::string, double Tolerances::*> field_table() {
    return {
        {"row_sum", &Tolerances::row_sum},
        {"perron_residual", &Tolerances::perron_residual},
        {"jacobi_offdiag", &Tolerances::jacobi_offdiag},
        {"reversibility", &Tolerances::reversibility},
        {"identity", &Tolerances::identity},
        {"soundness", &Tolerances::soundness},
        {"contraction", &Tolerances::contraction},
        {"conservation", &Tolerances::conservation},
        {"early_stop", &Tolerances::early_stop},
        {"projection", &Tolerances::projection},
    };
}

}  // namespace

void Tolerances::set(const std::string& key, double value) {
    auto table = field_table();
    auto it = table.find(key);
    if (it == table.end()) throw std::invalid_argument("unknown tolerance key: " + key);
    this->*(it->second) = value;
}

double Tolerances::get(const std::string& key) const {
    auto table = field_table();
    auto it = table.find(key);
    if (it == table.end()) throw std::invalid_argument("unknown tolerance key: " + key);
    return this->*(it->second);
}

Tolerances& Tolerances::global() {
    static Tolerances t;
    return t;
}

}  // namespace consensus

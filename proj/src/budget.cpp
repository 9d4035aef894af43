#include "frobsing/budget.hpp"

#include <cstdlib>
#include <string>

namespace frobsing {

Budgets& budgets() {
    static Budgets b;
    return b;
}

bool apply_budget_env() {
    const char* raw = std::getenv("FROBSING_BUDGET");
    if (raw == nullptr || *raw == '\0') return false;
    char* end = nullptr;
    unsigned long long value = std::strtoull(raw, &end, 10);
    if (end == raw || *end != '\0' || value == 0) return false;
    budgets().dimension = value;
    budgets().groebner_pairs = value;
    return true;
}

}  // namespace frobsing

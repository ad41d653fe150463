#include "schub/common.hpp"

#include <sstream>

namespace schub {

Budgets& budgets() {
    static Budgets b;
    return b;
}

void configure_budgets(const std::string& text) {
    std::istringstream in(text);
    std::string item;
    Budgets& b = budgets();
    while (std::getline(in, item, ',')) {
        if (item.empty()) continue;
        auto eq = item.find('=');
        if (eq == std::string::npos) throw InputError("budget entry needs key=value: " + item);
        std::string key = item.substr(0, eq);
        long long value = 0;
        try {
            value = std::stoll(item.substr(eq + 1));
        } catch (const std::exception&) {
            throw InputError("budget value is not an integer: " + item);
        }
        if (value < 0) throw InputError("budget value must be nonnegative: " + item);
        if (key == "enumeration_cells") b.enumeration_cells = static_cast<int>(value);
        else if (key == "oracle_n") b.oracle_n = static_cast<int>(value);
        else if (key == "partition_size") b.partition_size = static_cast<int>(value);
        else if (key == "tree_nodes") b.tree_nodes = value;
        else if (key == "subset_n") b.subset_n = static_cast<int>(value);
        else if (key == "tu_columns") b.tu_columns = static_cast<int>(value);
        else throw InputError("unknown budget key: " + key);
    }
}

}  // namespace schub

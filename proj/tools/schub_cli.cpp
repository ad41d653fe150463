#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <numeric>
#include <optional>
#include <sstream>

#include "schub/lp.hpp"
#include "schub/schubert.hpp"
#include "schub/selftest.hpp"

using namespace schub;
using json = nlohmann::json;

namespace {

enum Exit { kYes = 0, kNo = 1, kInput = 2, kBudget = 3, kInternal = 4 };

struct Target {
    std::string code_text;
    std::string perm_text;
    CLI::Option* code_opt = nullptr;
    CLI::Option* perm_opt = nullptr;

    Code code() const {
        const bool by_code = code_opt->count() > 0, by_perm = perm_opt->count() > 0;
        if (by_code && by_perm) throw InputError("give either --code or a permutation, not both");
        if (by_code) return parse_code(code_text);
        if (by_perm) return permutation_to_code(parse_permutation(perm_text));
        throw InputError("a permutation or --code is required");
    }
};

void add_target(CLI::App* cmd, Target& t) {
    t.perm_opt = cmd->add_option("perm", t.perm_text, "permutation in one-line notation, e.g. 53841267 or 5,3,8,4");
    t.code_opt = cmd->add_option("--code", t.code_text, "Lehmer code, comma separated (empty for the identity)");
}

std::vector<int> parse_alpha(const std::string& text) {
    std::vector<int> out;
    std::stringstream in(text);
    std::string item;
    while (std::getline(in, item, ',')) {
        if (item.empty()) throw InputError("empty entry in alpha");
        std::size_t used = 0;
        long v = 0;
        try {
            v = std::stol(item, &used);
        } catch (const std::exception&) {
            throw InputError("alpha entry is not an integer: " + item);
        }
        if (used != item.size()) throw InputError("alpha entry is not an integer: " + item);
        if (v < 0) throw InputError("alpha entries must be nonnegative");
        out.push_back(static_cast<int>(v));
    }
    return out;
}

// Pads alpha with zeros to length L and rejects any positive entry past row L.
std::vector<int> fit_alpha(std::vector<int> alpha, const Code& code) {
    const std::size_t L = code.size();
    for (std::size_t i = L; i < alpha.size(); ++i) {
        if (alpha[i] > 0) {
            throw InputError("alpha_" + std::to_string(i + 1) + " > 0 but the code has length " + std::to_string(L) +
                             "; monomials of this Schubert polynomial only involve x_1..x_" + std::to_string(L));
        }
    }
    alpha.resize(L, 0);
    const long sum = std::accumulate(alpha.begin(), alpha.end(), 0L);
    if (sum != code_degree(code)) {
        throw InputError("|alpha| = " + std::to_string(sum) + " but the diagram has " +
                         std::to_string(code_degree(code)) + " boxes");
    }
    return alpha;
}

// The permutation of a code, or nothing when it is too long for the oracle.
std::optional<Permutation> small_permutation(const Code& code) {
    const auto prefix = code_prefix_values(code);
    std::int64_t top = static_cast<std::int64_t>(code.size());
    for (auto v : prefix) top = std::max(top, v);
    if (top > budgets().oracle_n) return std::nullopt;
    return code_to_permutation(code);
}

json tableau_json(const Tableau& t) {
    json cells = json::array();
    for (const auto& [c, label] : t.labels()) cells.push_back({{"row", c.row}, {"col", c.col}, {"label", label}});
    return cells;
}

double elapsed_ms(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
}

struct DecideArgs {
    Target target;
    std::string alpha;
    bool witness = false;
    bool oracle = false;
    bool as_json = false;
};

int cmd_decide(const DecideArgs& a) {
    const auto t0 = std::chrono::steady_clock::now();
    const Code code = a.target.code();
    const std::vector<int> alpha = fit_alpha(parse_alpha(a.alpha), code);
    const bool yes = nonvanishing(code, alpha);
    json report = {{"verdict", yes ? "yes" : "no"}, {"method", "lp"}};

    std::optional<Tableau> witness;
    if (yes && a.witness) {
        witness = tableau_witness(code, alpha);
        std::vector<int> want = alpha;
        if (witness) want.resize(static_cast<std::size_t>(witness->shape().n()), 0);
        if (!witness || !is_perfect(*witness) || !is_column_strict(*witness) || content(*witness) != want) {
            std::cerr << "internal error: witness failed verification\n";
            return kInternal;
        }
        report["witness"] = tableau_json(*witness);
    }
    std::string oracle_note;
    if (a.oracle) {
        if (auto w = small_permutation(code)) {
            const bool agrees = (coefficient_oracle(*w, alpha) > 0) == yes;
            report["method"] = "lp+oracle";
            oracle_note = agrees ? "oracle agrees" : "oracle DISAGREES";
            if (!agrees) {
                std::cerr << "internal error: divided differences disagree with the LP verdict\n";
                return kInternal;
            }
        } else {
            oracle_note = "oracle skipped (permutation exceeds oracle_n)";
        }
        report["oracle"] = oracle_note;
    }
    report["elapsed_ms"] = elapsed_ms(t0);

    if (a.as_json) {
        std::cout << report.dump() << '\n';
    } else {
        std::cout << (yes ? "yes" : "no") << '\n';
        if (witness) std::cout << render_tableau(*witness);
        if (!oracle_note.empty()) std::cout << oracle_note << '\n';
    }
    return yes ? kYes : kNo;
}

struct CountArgs {
    Target target;
    std::string alpha;
    std::string method = "transition";
    bool as_json = false;
};

int cmd_count(const CountArgs& a) {
    const auto t0 = std::chrono::steady_clock::now();
    const Code code = a.target.code();
    const std::vector<int> alpha = fit_alpha(parse_alpha(a.alpha), code);
    std::optional<std::int64_t> by_transition, by_oracle;
    if (a.method == "transition" || a.method == "both") by_transition = count_coefficient_transition(code, alpha);
    if (a.method == "oracle" || a.method == "both") {
        auto w = small_permutation(code);
        if (!w) throw BudgetError("permutation exceeds oracle_n = " + std::to_string(budgets().oracle_n));
        by_oracle = coefficient_oracle(*w, alpha);
    }
    if (by_transition && by_oracle && *by_transition != *by_oracle) {
        std::cerr << "internal error: transition gives " << *by_transition << ", oracle gives " << *by_oracle << '\n';
        return kInternal;
    }
    const std::int64_t value = by_transition ? *by_transition : *by_oracle;
    if (a.as_json) {
        json report = {{"verdict", "count"}, {"coefficient", value}, {"method", a.method},
                       {"elapsed_ms", elapsed_ms(t0)}};
        std::cout << report.dump() << '\n';
    } else {
        std::cout << value << '\n';
    }
    return kYes;
}

struct DiagramArgs {
    Target target;
    RenderOptions render;
};

int cmd_diagram(const DiagramArgs& a) {
    const Code code = a.target.code();
    std::cout << render_rothe(code_to_permutation(code), a.render);
    return kYes;
}

std::string describe_node(const Code& code) {
    return code_to_permutation(code).str() + "  code " + format_vector(code);
}

int cmd_tree(const Target& target) {
    const Code root = target.code();
    std::int64_t nodes = 0;
    std::function<void(const Code&, const std::string&, int)> walk = [&](const Code& code, const std::string& edge,
                                                                          int depth) {
        if (++nodes > budgets().tree_nodes) throw BudgetError("transition tree exceeds tree_nodes");
        std::cout << std::string(static_cast<std::size_t>(2 * depth), ' ') << edge << describe_node(code);
        if (is_vexillary(code)) {
            std::cout << "  [vexillary]\n";
            return;
        }
        const TransitionChildren kids = transition_children(code);
        std::cout << "  z=(" << kids.z.row << ',' << kids.z.col << ")\n";
        walk(kids.deletion, "x" + std::to_string(kids.z.row) + ": ", depth + 1);
        for (const auto& [i, child] : kids.marches) walk(child, "pivot " + std::to_string(i) + ": ", depth + 1);
    };
    walk(root, "", 0);
    return kYes;
}

struct PolytopeArgs {
    Target target;
    std::string alpha;
    std::string system = "P";
};

int cmd_polytope(const PolytopeArgs& a) {
    const Code code = a.target.code();
    const std::vector<int> alpha = fit_alpha(parse_alpha(a.alpha), code);
    if (a.system == "P") {
        std::cout << to_lp_text(build_P(rothe_diagram(code_to_permutation(code)), alpha));
    } else {
        std::cout << to_lp_text(build_Q(build_compression_rothe(code), alpha));
    }
    return kYes;
}

struct SelftestArgs {
    std::string scope = "quick";
    std::uint64_t seed = SelftestOptions{}.seed;
    bool as_json = false;
};

int cmd_selftest(const SelftestArgs& a) {
    SelftestOptions opts;
    opts.scope = a.scope == "full" ? Scope::Full : Scope::Quick;
    opts.seed = a.seed;
    if (!a.as_json) opts.on_result = [](const CriterionResult& r) { std::cout << format_result_line(r) << std::endl; };
    const auto results = run_selftest(opts);
    const bool ok = std::all_of(results.begin(), results.end(), [](const CriterionResult& r) { return r.passed; });
    if (a.as_json) {
        json arr = json::array();
        for (const auto& r : results) {
            arr.push_back({{"id", r.id}, {"name", r.name}, {"passed", r.passed}, {"detail", r.detail},
                           {"seconds", r.seconds}});
        }
        std::cout << json{{"scope", a.scope}, {"seed", a.seed}, {"passed", ok}, {"criteria", arr}}.dump(2) << '\n';
    }
    return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Schubert coefficient nonvanishing and counting"};
    app.require_subcommand(1);

    DecideArgs decide;
    auto* c_decide = app.add_subcommand("decide", "decide whether c_{alpha,w} > 0");
    add_target(c_decide, decide.target);
    c_decide->add_option("--alpha", decide.alpha, "exponent vector, comma separated")->required();
    c_decide->add_flag("--witness", decide.witness, "print a column-strict perfect tableau");
    c_decide->add_flag("--oracle", decide.oracle, "cross-check with divided differences when small enough");
    c_decide->add_flag("--json", decide.as_json);

    CountArgs count;
    auto* c_count = app.add_subcommand("count", "compute c_{alpha,w}");
    add_target(c_count, count.target);
    c_count->add_option("--alpha", count.alpha)->required();
    c_count->add_option("--method", count.method)->check(CLI::IsMember({"transition", "oracle", "both"}));
    c_count->add_flag("--json", count.as_json);

    DiagramArgs diagram;
    auto* c_diagram = app.add_subcommand("diagram", "draw the Rothe diagram");
    add_target(c_diagram, diagram.target);
    c_diagram->add_flag("--essential", diagram.render.essential, "mark essential cells with E");
    c_diagram->add_flag("--accessible", diagram.render.accessible, "mark the accessible box with z");

    Target tree;
    auto* c_tree = app.add_subcommand("tree", "print the transition tree");
    add_target(c_tree, tree);

    PolytopeArgs polytope;
    auto* c_polytope = app.add_subcommand("polytope", "dump the P or Q feasibility system");
    add_target(c_polytope, polytope.target);
    c_polytope->add_option("--alpha", polytope.alpha)->required();
    c_polytope->add_option("--system", polytope.system)->check(CLI::IsMember({"P", "Q"}));

    SelftestArgs selftest;
    auto* c_selftest = app.add_subcommand("selftest", "run the acceptance criteria");
    c_selftest->add_option("scope", selftest.scope)->check(CLI::IsMember({"quick", "full"}));
    c_selftest->add_option("--seed", selftest.seed);
    c_selftest->add_flag("--json", selftest.as_json);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : kInput;
    }

    try {
        if (const char* env = std::getenv("SCHUB_BUDGETS")) configure_budgets(env);
        if (*c_decide) return cmd_decide(decide);
        if (*c_count) return cmd_count(count);
        if (*c_diagram) return cmd_diagram(diagram);
        if (*c_tree) return cmd_tree(tree);
        if (*c_polytope) return cmd_polytope(polytope);
        if (*c_selftest) return cmd_selftest(selftest);
    } catch (const InputError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kInput;
    } catch (const BudgetError& e) {
        std::cerr << "budget exceeded: " << e.what() << '\n';
        return kBudget;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << '\n';
        return kInternal;
    }
    return kInput;
}

// loopkit: loop-space homology and homotopy decompositions of highly
// connected manifolds from their rational cohomology.

#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "loopkit/descriptor_io.hpp"
#include "loopkit/document.hpp"
#include "loopkit/errors.hpp"
#include "loopkit/lyndon.hpp"

using namespace loopkit;
using ojson = nlohmann::ordered_json;

namespace {

enum Exit { ok = 0, semantic = 1, parse = 2, inconsistent = 3 };

struct Flags {
    std::string path;
    int max_degree = kDefaultMaxDegree;
    int oracle_max_degree = kDefaultOracleMaxDegree;
    std::string format = "text";
    std::string seed_order;
};

std::optional<std::vector<Letter>> parse_seed_order(const std::string &text)
{
    if (text.empty())
        return std::nullopt;
    std::vector<Letter> order;
    std::stringstream in(text);
    std::string item;
    while (std::getline(in, item, ',')) {
        std::size_t used = 0;
        long v = 0;
        try {
            v = std::stol(item, &used);
        } catch (const std::exception &) {
            used = 0;
        }
        if (used == 0 || used != item.size() || v < 1 || v > 255)
            throw ParseError("--seed-order: \"" + item + "\" is not a generator index");
        order.push_back(static_cast<Letter>(v - 1));
    }
    return order;
}

// Returns the validated manifold, or prints the violations and yields nothing.
std::optional<ValidatedManifold> load_valid(const Flags &f)
{
    ValidationResult res = validate(load_descriptor(f.path));
    if (res.ok())
        return std::move(res.manifold);
    if (f.format == "json") {
        ojson out;
        out["valid"] = false;
        out["violations"] = violations_json(res.violations);
        std::cout << out.dump(2) << "\n";
    } else {
        std::cout << "invalid: " << res.violations.size() << " violation(s)\n";
        for (const auto &v : res.violations)
            std::cout << "  " << to_string(v.kind) << ": " << v.message << "\n";
    }
    return std::nullopt;
}

int cmd_validate(const Flags &f)
{
    auto v = load_valid(f);
    if (!v)
        return semantic;
    const std::string h = to_string(hyperbolicity(*v));
    if (f.format == "json") {
        ojson out;
        out["valid"] = true;
        out["r"] = v->r();
        out["hyperbolicity"] = h;
        std::cout << out.dump(2) << "\n";
    } else {
        std::cout << "valid, r=" << v->r() << ", " << h << "\n";
    }
    return ok;
}

int cmd_report(const Flags &f)
{
    auto v = load_valid(f);
    if (!v)
        return semantic;
    DocumentOptions opts;
    opts.max_degree = f.max_degree;
    opts.report.oracle_max_degree = f.oracle_max_degree;
    opts.seed_order = parse_seed_order(f.seed_order);
    const ojson doc = build_report_document(*v, opts);
    if (f.format == "json")
        std::cout << doc.dump(2) << "\n";
    else
        std::cout << render_report_text(doc);
    return ok;
}

int cmd_lie_basis(const Flags &f)
{
    auto v = load_valid(f);
    if (!v)
        return semantic;
    if (v->route() == Route::low_rank) {
        std::cerr << "lie-basis: r=" << v->r()
                  << " is a low-rank case; the loop homology is not a one-relator quadratic "
                     "algebra on three or more generators, so there is no Lyndon basis to "
                     "list (try `classify`)\n";
        return semantic;
    }
    const auto p = build_relation(normalize_basis(*v, parse_seed_order(f.seed_order)));
    const auto basis = standard_basis(p, f.max_degree);
    if (f.format == "json")
        std::cout << lie_basis_json(basis).dump(2) << "\n";
    else
        std::cout << render_lie_basis_text(basis);
    return ok;
}

int cmd_classify(const Flags &f)
{
    const ManifoldDescriptor desc = load_descriptor(f.path);
    std::string result;
    if (desc.rank() <= 2) {
        result = classify_low_rank(desc).to_string();
    } else {
        auto v = load_valid(f);
        if (!v)
            return semantic;
        result = to_string(hyperbolicity(*v));
    }
    if (f.format == "json") {
        ojson out;
        out["classification"] = result;
        std::cout << out.dump(2) << "\n";
    } else {
        std::cout << result << "\n";
    }
    return ok;
}

} // namespace

int main(int argc, char **argv)
{
    CLI::App app{"Loop-space homology and homotopy decompositions of (n-1)-connected "
                 "manifolds"};
    app.require_subcommand(1);
    Flags f;

    auto add_common = [&](CLI::App *sub, bool degree) {
        sub->add_option("path", f.path, "descriptor JSON file")->required();
        sub->add_option("--format", f.format, "output format")
            ->check(CLI::IsMember({"json", "text"}));
        sub->add_option("--seed-order", f.seed_order,
                        "letter order override, ascending, e.g. 3,2,1");
        if (degree)
            sub->add_option("--max-degree", f.max_degree, "largest loop degree")
                ->check(CLI::NonNegativeNumber);
    };

    auto *validate_cmd = app.add_subcommand("validate", "check a descriptor");
    add_common(validate_cmd, false);
    auto *report_cmd = app.add_subcommand("report", "full report");
    add_common(report_cmd, true);
    report_cmd->add_option("--oracle-max-degree", f.oracle_max_degree,
                           "largest loop degree for the word count minus slice rank route")
        ->check(CLI::NonNegativeNumber);
    auto *basis_cmd = app.add_subcommand("lie-basis", "standard Lyndon basis");
    add_common(basis_cmd, true);
    auto *classify_cmd = app.add_subcommand("classify", "hyperbolic or low-rank type");
    add_common(classify_cmd, false);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        const int code = app.exit(e);
        return code == 0 ? ok : parse;
    }

    try {
        if (validate_cmd->parsed())
            return cmd_validate(f);
        if (report_cmd->parsed())
            return cmd_report(f);
        if (basis_cmd->parsed())
            return cmd_lie_basis(f);
        return cmd_classify(f);
    } catch (const ParseError &e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return parse;
    } catch (const ValidationError &e) {
        std::cerr << "invalid: " << e.what() << "\n";
        for (const auto &v : e.violations())
            std::cerr << "  " << to_string(v.kind) << ": " << v.message << "\n";
        return semantic;
    } catch (const RealizabilityError &e) {
        std::cerr << "not realizable: " << e.what() << "\n";
        return semantic;
    } catch (const GuardError &e) {
        std::cerr << "refused: " << e.what() << "\n";
        return semantic;
    } catch (const UsageError &e) {
        std::cerr << "error: " << e.what() << "\n";
        return semantic;
    } catch (const InconsistencyError &e) {
        std::cerr << "internal inconsistency";
        if (e.degree() >= 0)
            std::cerr << " at loop degree " << e.degree();
        std::cerr << ": " << e.what() << "\n";
        return inconsistent;
    } catch (const std::exception &e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return inconsistent;
    }
}

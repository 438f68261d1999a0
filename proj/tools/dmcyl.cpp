#include <cstdio>
#include <iostream>
#include <memory>

#ifdef _WIN32
#include <io.h>
#define DMCYL_ISATTY _isatty(_fileno(stdout))
#else
#include <unistd.h>
#define DMCYL_ISATTY isatty(fileno(stdout))
#endif

#include <CLI11.hpp>

#include "dmcyl/decide.hpp"
#include "dmcyl/report.hpp"

namespace {

using namespace dmcyl;

struct CommonOpts {
    int max_degree = 0;  // 0: use file option or the default rule
    std::string format;  // "", "table", "json"
    std::uint64_t seed = 1;
    std::string catalog_path = default_catalog_path();
};

void add_common(CLI::App* cmd, CommonOpts& opts) {
    cmd->add_option("--max-degree", opts.max_degree, "truncation degree (default from the input)")
        ->check(CLI::Range(2, 200));
    cmd->add_option("--format", opts.format, "output format: table or json")
        ->check(CLI::IsMember({"table", "json"}));
    cmd->add_option("--seed", opts.seed, "seed for the depth search");
    cmd->add_option("--catalog", opts.catalog_path, "catalog file");
}

bool want_json(const CommonOpts& opts) {
    if (!opts.format.empty())
        return opts.format == "json";
    return !DMCYL_ISATTY;  // tables interactively, json otherwise
}

int resolve_degree(const CommonOpts& opts, const GroupDiagram& d) {
    if (opts.max_degree > 0)
        return opts.max_degree;
    if (d.max_degree)
        return *d.max_degree;
    return default_max_degree(d);
}

int run_cm_on(const GroupDiagram& diagram, const CommonOpts& opts, const std::string& input) {
    const int D = resolve_degree(opts, diagram);
    const CMVerdict v = cm_decide(diagram, D, opts.seed);
    if (want_json(opts)) {
        ordered_json out = report_header({"cm", input, D, opts.seed});
        out["verdict"] = verdict_to_json(v);
        std::cout << out.dump(2) << "\n";
    } else {
        std::cout << verdict_to_table(v) << "\n";
    }
    return verdict_exit_code(v);
}

int cmd_cm(const std::string& path, const CommonOpts& opts) {
    return run_cm_on(read_diagram(path), opts, path);
}

int cmd_betti(const std::string& path, bool homogeneous, const CommonOpts& opts) {
    std::vector<int> betti;
    int D = opts.max_degree;
    if (homogeneous) {
        const PairFile pf = read_pair(path);
        if (D == 0)
            D = pf.max_degree ? *pf.max_degree : default_max_degree(suspension_diagram(
                                                     pf.pair.K, pf.pair.H, pf.pair.iota));
        betti = cohomology_betti(homogeneous_model(pf.pair.iota), D);
    } else {
        const GroupDiagram diagram = read_diagram(path);
        if (D == 0)
            D = resolve_degree(opts, diagram);
        const auto cyl = std::make_shared<CylinderAlgebra>(borel_model(diagram, D));
        betti = cohomology_betti(*cyl, D);
    }
    if (want_json(opts)) {
        ordered_json out = report_header({"betti", path, D, opts.seed});
        out["model"] = homogeneous ? "homogeneous" : "borel";
        out["betti"] = betti;
        std::cout << out.dump(2) << "\n";
    } else {
        std::cout << "degree:";
        for (int d = 0; d <= D; ++d)
            std::cout << " " << d;
        std::cout << "\nbetti: ";
        for (const int b : betti)
            std::cout << " " << b;
        std::cout << "\n";
    }
    return 0;
}

int cmd_model(const std::string& path, const CommonOpts& opts) {
    const GroupDiagram diagram = read_diagram(path);
    const int D = resolve_degree(opts, diagram);
    const auto cyl = std::make_shared<CylinderAlgebra>(borel_model(diagram, D));
    TruncatedRing ring = ring_truncation(cyl, D);
    ring.tabulate();
    ordered_json out = report_header({"model", path, D, opts.seed});
    ordered_json trick = ordered_json::array();
    for (const auto& p : cyl->left().pairs()) {
        ordered_json e;
        e["generator"] = cyl->left().extended()->gen(p.u).name;
        e["degree"] = cyl->left().extended()->gen(p.u).degree;
        e["value"] = p.value.str();
        trick.push_back(std::move(e));
    }
    out["trick_pairs"] = std::move(trick);
    out["ring"] = ring_to_json(ring);
    if (want_json(opts)) {
        std::cout << out.dump(2) << "\n";
    } else {
        std::cout << "trick pairs: " << out["trick_pairs"].dump() << "\nbetti: ";
        for (int d = 0; d <= D; ++d)
            std::cout << ring.betti(d) << (d < D ? "," : "\n");
    }
    return 0;
}

GroupDiagram suspension_from_input(const std::string& input, const CommonOpts& opts) {
    Catalog cat = Catalog::load_file(opts.catalog_path);
    if (cat.has_fiber(input))
        return cat.suspension_of(input);
    const PairFile pf = read_pair(input);
    return suspension_diagram(pf.pair.K, pf.pair.H, pf.pair.iota);
}

int cmd_suspension(const std::string& input, const std::string& output, bool classify,
                   const CommonOpts& opts) {
    GroupDiagram d = suspension_from_input(input, opts);
    if (!d.max_degree && opts.max_degree > 0)
        d.max_degree = opts.max_degree;
    if (output.empty())
        std::cout << diagram_to_json(d).dump(2) << "\n";
    else
        write_diagram(d, output);
    if (classify)
        return run_cm_on(d, opts, input);
    return 0;
}

int cmd_join(const std::string& left, const std::string& right, const std::string& output,
             bool classify, const CommonOpts& opts) {
    GroupDiagram d = [&]() {
        Catalog cat = Catalog::load_file(opts.catalog_path);
        if (cat.has_fiber(left) || cat.has_fiber(right)) {
            // the generator's refusal reasons are advisory for plain joins:
            // the join diagram exists either way, it just fails to be a
            // non-CM witness
            JoinOutcome out = noncm_join_generator(cat, left, right);
            if (const auto* refusal = std::get_if<JoinRefusal>(&out)) {
                std::cerr << "note: not a non-Cohen-Macaulay generator: " << refusal->reason
                          << "\n";
                GroupDiagram plain = join_diagram(cat.pair_of(left), cat.pair_of(right));
                plain.fiber_minus_tag = cat.fiber(left).annotated_type;
                plain.fiber_plus_tag = cat.fiber(right).annotated_type;
                return plain;
            }
            return std::get<GroupDiagram>(std::move(out));
        }
        const PairFile lf = read_pair(left);
        const PairFile rf = read_pair(right);
        return join_diagram(lf.pair, rf.pair);
    }();
    if (!d.max_degree && opts.max_degree > 0)
        d.max_degree = opts.max_degree;
    if (output.empty())
        std::cout << diagram_to_json(d).dump(2) << "\n";
    else
        write_diagram(d, output);
    if (classify)
        return run_cm_on(d, opts, left + " * " + right);
    return 0;
}

int cmd_catalog(const CommonOpts& opts) {
    Catalog cat = Catalog::load_file(opts.catalog_path);
    if (want_json(opts)) {
        ordered_json out = report_header({"catalog", opts.catalog_path, 0, opts.seed});
        ordered_json fibers = ordered_json::array();
        for (const auto& name : cat.fiber_names()) {
            const CatalogFiber& f = cat.fiber(name);
            ordered_json e;
            e["name"] = name;
            e["pair"] = f.K.name + " / " + f.H.name;
            e["dim"] = f.dim;
            e["type"] = f.annotated_type;
            e["sullivan"] = f.sullivan;
            fibers.push_back(std::move(e));
        }
        out["fibers"] = std::move(fibers);
        out["groups"] = cat.group_names();
        std::cout << out.dump(2) << "\n";
    } else {
        std::cout << "fibers:\n";
        for (const auto& name : cat.fiber_names()) {
            const CatalogFiber& f = cat.fiber(name);
            std::cout << "  " << name << " = " << f.K.name << " / " << f.H.name << "  (dim "
                      << f.dim << ", " << f.annotated_type << (f.sullivan ? "" : ", not Sullivan")
                      << ")\n";
        }
        std::cout << "groups:";
        for (const auto& name : cat.group_names())
            std::cout << " " << name;
        std::cout << "\n";
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"equivariant cohomology of cohomogeneity-one group diagrams: double mapping "
                 "cylinder models and Cohen-Macaulay certificates"};
    app.require_subcommand(1);
    app.set_version_flag("--version", std::string(kToolName) + " " + kToolVersion);

    CommonOpts opts;
    std::string input, input2, output;
    bool homogeneous = false, classify = false;

    auto* cm = app.add_subcommand("cm", "decide the Cohen-Macaulay property of a diagram");
    cm->add_option("diagram", input, "diagram JSON file")->required();
    add_common(cm, opts);

    auto* betti = app.add_subcommand("betti", "betti numbers of the Borel model");
    betti->add_option("input", input, "diagram file (or pair file with --homogeneous)")->required();
    betti->add_flag("--homogeneous", homogeneous, "homogeneous-space model of a pair file");
    add_common(betti, opts);

    auto* model = app.add_subcommand("model", "truncated equivariant cohomology ring as JSON");
    model->add_option("diagram", input, "diagram JSON file")->required();
    add_common(model, opts);

    auto* join = app.add_subcommand("join", "join diagram from catalog fibers or pair files");
    join->add_option("left", input, "catalog fiber name or pair file")->required();
    join->add_option("right", input2, "catalog fiber name or pair file")->required();
    join->add_option("-o,--output", output, "write the diagram here instead of stdout");
    join->add_flag("--classify", classify, "run the cm decision on the result");
    add_common(join, opts);

    auto* susp = app.add_subcommand("suspension", "suspension diagram of a fiber");
    susp->add_option("fiber", input, "catalog fiber name or pair file")->required();
    susp->add_option("-o,--output", output, "write the diagram here instead of stdout");
    susp->add_flag("--classify", classify, "run the cm decision on the result");
    add_common(susp, opts);

    auto* cata = app.add_subcommand("catalog", "list catalog groups and fibers");
    add_common(cata, opts);

    CLI11_PARSE(app, argc, argv);

    try {
        if (cm->parsed())
            return cmd_cm(input, opts);
        if (betti->parsed())
            return cmd_betti(input, homogeneous, opts);
        if (model->parsed())
            return cmd_model(input, opts);
        if (join->parsed())
            return cmd_join(input, input2, output, classify, opts);
        if (susp->parsed())
            return cmd_suspension(input, output, classify, opts);
        if (cata->parsed())
            return cmd_catalog(opts);
    } catch (const dmcyl::error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}

#include "chevk1/cli.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>

#include "chevk1/reduction.hpp"
#include "chevk1/serialize.hpp"

namespace chevk1::cli {

namespace {

json read_json(const std::string &path) {
    if (path == "-")
        return json::parse(std::cin);
    std::ifstream in(path);
    if (!in)
        throw parse_error("cannot open input file '" + path + "'");
    try {
        return json::parse(in);
    } catch (const json::parse_error &e) {
        throw parse_error(std::string("bad JSON in '") + path + "': " + e.what());
    }
}

void write_text(const std::string &text, const std::string &path) {
    if (path.empty() || path == "-") {
        std::cout << text << "\n";
        return;
    }
    std::ofstream out(path);
    if (!out)
        throw parse_error("cannot open output file '" + path + "'");
    out << text << "\n";
}

void write_json(const json &j, const std::string &path) {
    write_text(j.dump(2), path);
}

// exit 2 for malformed inputs and unsupported requests, 1 for genuine
// domain failures (non-unit corner, non-unimodular vector, ...)
int classify(const domain_error &e) {
    std::string k = e.kind();
    if (k == "ParseError" || k == "UnsupportedRing" || k == "UnsupportedType" ||
        k == "NotMinuscule")
        return 2;
    return 1;
}

void emit_error(const std::string &kind, const std::string &detail) {
    json err = {{"error", {{"kind", kind}, {"detail", detail}}}};
    std::cerr << err.dump() << "\n";
}

struct Options {
    std::string system;
    std::string rep;
    std::string ring;
    std::string delta;
    std::string source;
    std::string target;
    std::string in_path;
    std::string out_path;
    std::string format = "json";
    std::string suite = "paper";
    int pivot = 1;
    int random_count = 0;
    unsigned long long seed = 0;
    int jobs = 1;
    bool trace = false;
    bool minimize = false;
};

int cmd_roots(const Options &o) {
    auto sys = RootSystem::build(o.system);
    json roots = json::array();
    for (const Root &r : sys->roots())
        roots.push_back(r);
    json out = {{"label", sys->label()},
                {"rank", sys->rank()},
                {"count", sys->roots().size()},
                {"cartan", sys->cartan()},
                {"maximal_root", sys->maximal_root()},
                {"roots", std::move(roots)}};
    write_json(out, o.out_path);
    return 0;
}

int cmd_diagram(const Options &o) {
    DiagramPtr d = parse_rep(o.rep);
    if (o.format == "dot")
        write_text(to_dot(*d), o.out_path);
    else if (o.format == "json")
        write_json(diagram_to_json(*d), o.out_path);
    else
        throw parse_error("unknown format '" + o.format + "'");
    return 0;
}

int cmd_elem(const Options &o) {
    DiagramPtr d = parse_rep(o.rep);
    RingDescPtr ring = RingDescriptor::parse(o.ring);
    GeneratorWord w = word_from_json(ring, d->label(), read_json(o.in_path));
    write_json(matrix_to_json(realize(d, ring, w)), o.out_path);
    return 0;
}

GroupElement load_element(const Options &o, const DiagramPtr &d) {
    json j = read_json(o.in_path);
    if (j.is_object() && j.contains("matrix"))
        return matrix_from_json(j);
    if (o.ring.empty())
        throw parse_error("--ring is required for word input");
    RingDescPtr ring = RingDescriptor::parse(o.ring);
    return realize(d, ring, word_from_json(ring, d->label(), j));
}

int cmd_decompose(const Options &o) {
    DiagramPtr d = parse_rep(o.rep);
    GroupElement g = load_element(o, d);
    ParabolicSplit split = chevalley_matsumoto(g, o.pivot);
    write_json(split_to_json(split), o.out_path);
    return 0;
}

json reduce_one(const DiagramPtr &d, std::vector<RingElement> coords,
                const Options &o) {
    ReductionStrategy strategy;
    strategy.minimize = o.minimize;
    UnimodularVector v(d, coords);
    GeneratorWord w = d->system()->label() == "E6" ? reduce_E6(v, strategy)
                                                   : reduce_Dl(v, strategy);
    if (!o.trace)
        return word_to_json(w);

    json trace = json::object();
    trace["input"] = vector_to_json(coords);
    auto cert = unimodular_certificate(coords);
    if (cert) {
        json cs = json::array();
        for (const RingElement &c : cert->coefficients)
            cs.push_back(element_to_json(c));
        trace["bezout_certificate"] = std::move(cs);
    }
    json steps = json::array();
    std::vector<RingElement> cur = coords;
    // replay applies the last letter of the word first
    for (std::size_t i = w.letters.size(); i-- > 0;) {
        GeneratorWord one{w.rep, {w.letters[i]}};
        cur = act_word(*d, one, std::move(cur));
        steps.push_back(
            {{"letter", i}, {"vector", vector_to_json(cur)["coordinates"]}});
    }
    trace["steps"] = std::move(steps);
    return {{"letters", word_to_json(w)}, {"trace", std::move(trace)}};
}

int cmd_reduce(const Options &o) {
    DiagramPtr d = parse_rep(o.rep);
    RingDescPtr ring = RingDescriptor::parse(o.ring);

    if (o.random_count > 0) {
        std::mt19937_64 rng(o.seed);
        json batch = json::array();
        for (int k = 0; k < o.random_count; ++k) {
            std::vector<RingElement> coords;
            do {
                coords.clear();
                for (std::size_t i = 0; i < d->size(); ++i)
                    coords.push_back(RingElement::from_int(
                        ring, Int(static_cast<long long>(rng() % 1999)) - 999));
            } while (!unimodular_certificate(coords));
            json entry = {{"vector", vector_to_json(coords)["coordinates"]},
                          {"result", reduce_one(d, coords, o)}};
            batch.push_back(std::move(entry));
        }
        write_json(batch, o.out_path);
        return 0;
    }

    std::vector<RingElement> coords =
        vector_from_json(ring, read_json(o.in_path));
    write_json(reduce_one(d, std::move(coords), o), o.out_path);
    return 0;
}

int cmd_verify(const Options &o) {
    if (o.suite != "paper")
        throw parse_error("unknown suite '" + o.suite + "'");
    std::vector<CheckReport> reports = verify_z_factorization();
    for (CheckReport &r : verify_h_delta_product())
        reports.push_back(std::move(r));

    auto t0 = std::chrono::steady_clock::now();
    RelativeContext ctx = universal_context();
    RingElement xi = RingElement::variable(ctx.ring, "xi");
    RingElement zeta = RingElement::variable(ctx.ring, "zeta");
    Root a1 = ctx.diagram->system()->simple(1);
    std::size_t conjugable = 0, verified = 0, outside = 0;
    for (const Root &alpha : ctx.delta.complement()) {
        ++outside;
        if (find_weyl_conjugator(ctx.delta, a1, alpha))
            ++conjugable;
        if (general_z_membership(ctx, alpha, xi, zeta).verify(ctx))
            ++verified;
    }
    CheckReport transitivity;
    transitivity.check = "W(Delta)-transitivity on Phi(E7) \\ Delta";
    transitivity.pass = conjugable == outside && outside == 64;
    transitivity.detail = std::to_string(conjugable) + "/" +
                          std::to_string(outside) + " conjugable to alpha_1";
    transitivity.elapsed_ms =
        std::chrono::duration<double, std::milli>(
            std::chrono::steady_clock::now() - t0)
            .count();
    reports.push_back(std::move(transitivity));

    CheckReport sweep;
    sweep.check = "tagged z-certificates for all roots outside Delta";
    sweep.pass = verified == outside;
    sweep.detail =
        std::to_string(verified) + "/" + std::to_string(outside) + " verified";
    reports.push_back(std::move(sweep));

    write_json(report_to_json(reports), o.out_path);
    for (const CheckReport &r : reports)
        if (!r.pass) {
            emit_error("InternalPostconditionFailure",
                       "verify check failed: " + r.check);
            return 1;
        }
    return 0;
}

int cmd_conjugate(const Options &o) {
    auto sys = RootSystem::build(o.system);
    std::vector<int> keep;
    std::vector<Root> extra;
    if (o.delta.empty()) {
        for (int i = 1; i <= sys->rank(); ++i)
            keep.push_back(i);
    } else {
        std::stringstream ss(o.delta);
        std::string tok;
        while (std::getline(ss, tok, ',')) {
            if (tok == "max")
                extra.push_back(sys->maximal_root());
            else
                try {
                    keep.push_back(std::stoi(tok));
                } catch (const std::exception &) {
                    throw parse_error("bad --delta token '" + tok + "'");
                }
        }
    }
    SubsystemEmbedding delta = subsystem(sys, keep, extra, o.delta);

    Root source, target;
    try {
        for (const auto &c : json::parse(o.source))
            source.push_back(c.get<int>());
        for (const auto &c : json::parse(o.target))
            target.push_back(c.get<int>());
    } catch (const json::parse_error &e) {
        throw parse_error(std::string("bad root: ") + e.what());
    }

    auto word = find_weyl_conjugator(delta, source, target);
    if (!word)
        throw no_such_element("target is not in the W(Delta)-orbit of source");
    if (apply_weyl_word(*sys, *word, source) != target)
        throw internal_postcondition_failure("conjugator replay mismatch");
    json jword = json::array();
    for (const Root &r : *word)
        jword.push_back(r);
    write_json({{"system", sys->label()},
                {"source", source},
                {"target", target},
                {"word", std::move(jword)}},
               o.out_path);
    return 0;
}

} // namespace

int run(int argc, const char *const *argv) {
    CLI::App app{"Chevalley groups in minuscule representations over exact rings"};
    app.require_subcommand(1);
    Options o;

    auto add_common = [&](CLI::App *c) {
        c->add_option("--out", o.out_path, "Output path (default: stdout)");
        c->add_option("--seed", o.seed, "Seed for randomized batch modes");
        c->add_option("--jobs", o.jobs, "Worker count for batch subcommands");
    };

    CLI::App *roots = app.add_subcommand("roots", "Enumerate a root system");
    roots->add_option("--system", o.system, "System label, e.g. E6")->required();
    add_common(roots);

    CLI::App *diagram = app.add_subcommand("diagram", "Export a weight diagram");
    diagram->add_option("--rep", o.rep, "Representation, e.g. E6:w1")->required();
    diagram->add_option("--format", o.format, "dot or json");
    add_common(diagram);

    CLI::App *elem = app.add_subcommand("elem", "Realize a generator word");
    elem->add_option("--rep", o.rep)->required();
    elem->add_option("--ring", o.ring, "Ring descriptor, e.g. Z/360")->required();
    elem->add_option("--in", o.in_path, "Word JSON")->required();
    add_common(elem);

    CLI::App *decompose =
        app.add_subcommand("decompose", "Chevalley-Matsumoto split g = v g1 u");
    decompose->add_option("--rep", o.rep)->required();
    decompose->add_option("--pivot", o.pivot, "Pivot simple root (1-based)");
    decompose->add_option("--ring", o.ring, "Ring (required for word input)");
    decompose->add_option("--in", o.in_path, "Matrix or word JSON")->required();
    add_common(decompose);

    CLI::App *reduce =
        app.add_subcommand("reduce", "Reduce a unimodular column to e^mu");
    reduce->add_option("--rep", o.rep)->required();
    reduce->add_option("--ring", o.ring)->required();
    reduce->add_option("--in", o.in_path, "Vector JSON");
    reduce->add_option("--random", o.random_count,
                       "Reduce N seeded random vectors instead of --in");
    reduce->add_flag("--trace", o.trace, "Emit per-letter vectors");
    reduce->add_flag("--minimize", o.minimize, "Greedy word minimization");
    add_common(reduce);

    CLI::App *verify = app.add_subcommand("verify", "Run a verification suite");
    verify->add_option("--suite", o.suite, "Suite name (paper)");
    add_common(verify);

    CLI::App *conjugate =
        app.add_subcommand("conjugate", "Weyl word over a subsystem");
    conjugate->add_option("--system", o.system)->required();
    conjugate->add_option("--delta", o.delta,
                          "Simple indices and 'max', e.g. 2,3,4,5,6,7,max");
    conjugate->add_option("--source", o.source, "Root as JSON array")->required();
    conjugate->add_option("--target", o.target, "Root as JSON array")->required();
    add_common(conjugate);

    try {
        app.parse(argc, argv);
        if (roots->parsed())
            return cmd_roots(o);
        if (diagram->parsed())
            return cmd_diagram(o);
        if (elem->parsed())
            return cmd_elem(o);
        if (decompose->parsed())
            return cmd_decompose(o);
        if (reduce->parsed()) {
            if (o.in_path.empty() && o.random_count <= 0)
                throw parse_error("reduce needs --in or --random");
            return cmd_reduce(o);
        }
        if (verify->parsed())
            return cmd_verify(o);
        return cmd_conjugate(o);
    } catch (const CLI::CallForHelp &e) {
        std::cout << app.help();
        return 0;
    } catch (const CLI::ParseError &e) {
        emit_error("UsageError", e.what());
        return 2;
    } catch (const domain_error &e) {
        emit_error(e.kind(), e.what());
        return classify(e);
    } catch (const std::exception &e) {
        emit_error("Internal", e.what());
        return 1;
    }
}

} // namespace chevk1::cli

#include "rlf/cli.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "rlf/errors.hpp"
#include "rlf/genus.hpp"
#include "rlf/json_io.hpp"

namespace rlf::cli {

namespace {

std::string slurp(const std::string& path, std::istream& in) {
    if (path == "-") {
        std::ostringstream ss;
        ss << in.rdbuf();
        return ss.str();
    }
    std::ifstream f(path);
    if (!f) throw ParseError("cannot open input file '" + path + "'");
    std::ostringstream ss;
    ss << f.rdbuf();
    return ss.str();
}

Json parse_json(const std::string& text) {
    try {
        return Json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(std::string("invalid JSON: ") + e.what());
    }
}

void emit(std::ostream& out, const Json& j, bool pretty) {
    out << j.dump(pretty ? 2 : -1) << "\n";
}

int cmd_classify(const Json& input, bool pretty, std::ostream& out) {
    AffineClass c = affine_from_json(input);
    StructureClass cls = classify_structure(c); // throws NotInvolution
    FixedSetReport fix = fixed_components(c);
    Json j{{"components", cls.components},
           {"class", "k" + std::to_string(cls.components)},
           {"canonical", to_json(canonical_structure(cls.components))},
           {"circles", to_json(fix)["circles"]}};
    emit(out, j, pretty);
    return 0;
}

int cmd_codes(bool mirror, bool pretty, std::ostream& out) {
    Json list = Json::array();
    int id = 1;
    for (const RealCode& code : enumerate_code_classes()) {
        auto profile = fiber_profile(code, mirror);
        list.push_back(Json{{"id", id},
                            {"name", code_class_name(id)},
                            {"code", to_json(code)},
                            {"local_model", local_model_name(local_model(code))},
                            {"fiber_profile", Json::array({profile.first, profile.second})}});
        ++id;
    }
    emit(out, list, pretty);
    return 0;
}

int cmd_validate(const Json& input, bool pretty, std::ostream& out) {
    ConcreteChain chain = chain_from_json(input); // throws InvariantViolation with index
    ValidationReport rep = validate_chain(chain);
    if (!rep.ok) throw InvariantViolation(rep.diagnostics.front());
    Json structures = Json::array();
    for (const AffineClass& c : chain.structures) structures.push_back(to_json(c));
    emit(out, Json{{"status", "ok"}, {"structures", structures}}, pretty);
    return 0;
}

int cmd_decorate(const Json& input, bool pretty, std::ostream& out) {
    ConcreteChain chain = chain_from_json(input);
    emit(out, to_json(decorated_invariant(chain)), pretty);
    return 0;
}

int cmd_close(const Json& input, bool pretty, std::ostream& out) {
    ConcreteChain chain = chain_from_json(input);
    ClosureReport rep = sphere_closure(chain);
    Json j{{"closable", rep.closable}, {"reason", closure_reason_name(rep.reason)}};
    if (rep.closable) {
        j["extension_count"] = *rep.extension_count;
        j["invariant"] = to_json(cyclic_canonical(closed_invariant(chain)));
    }
    emit(out, j, pretty);
    return 0;
}

int cmd_census(int n, long long limit, int threads, bool jsonl, bool pretty, std::ostream& out) {
    CensusOptions opts;
    opts.node_limit = limit > 0 ? static_cast<std::uint64_t>(limit) : 0;
    opts.threads = threads;
    CensusResult res = enumerate_closed_chains(n, opts);
    if (jsonl) {
        for (const DecoratedChain& d : res.chains) out << to_json(d).dump() << "\n";
    } else {
        Json chains = Json::array();
        for (const DecoratedChain& d : res.chains) chains.push_back(to_json(d));
        emit(out,
             Json{{"n", n},
                  {"exhaustive", res.exhaustive},
                  {"count", res.chains.size()},
                  {"chains", chains}},
             pretty);
    }
    return res.exhaustive ? 0 : 3;
}

int cmd_counts(int g, bool pretty, std::ostream& out) {
    auto classes = structure_classes(g); // throws on g < 1
    Json list = Json::array();
    int sep = 0;
    for (const auto& c : classes) {
        if (c.separating) ++sep;
        list.push_back(
            Json{{"g", c.genus}, {"kind", c.separating ? "sep" : "nonsep"}, {"k", c.components}});
    }
    emit(out,
         Json{{"g", g},
              {"structures", classes.size()},
              {"separating", sep},
              {"nonseparating", classes.size() - static_cast<size_t>(sep)},
              {"harnack", harnack_bound(g)},
              {"code_classes_nonsep", count_code_classes_nonsep(g)},
              {"classes", list}},
         pretty);
    return 0;
}

} // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err) {
    CLI::App app{"real Lefschetz chain toolkit for torus fibrations"};
    app.require_subcommand(1);

    std::string input = "-";
    bool pretty = false, mirror = false, jsonl = false;
    int n = 1, g = 1, threads = 1;
    long long limit = 0;

    auto* classify = app.add_subcommand("classify", "classify a real structure");
    classify->add_option("--input", input, "AffineClass JSON file, - for stdin");
    classify->add_flag("--pretty", pretty);

    auto* codes = app.add_subcommand("codes", "list the six real code classes");
    codes->add_flag("--mirror", mirror, "mirrored fiber-profile convention");
    codes->add_flag("--pretty", pretty);

    auto* validate = app.add_subcommand("validate", "validate a chain file");
    validate->add_option("--input", input);
    validate->add_flag("--pretty", pretty);

    auto* decorate = app.add_subcommand("decorate", "decorated invariant of a chain file");
    decorate->add_option("--input", input);
    decorate->add_flag("--pretty", pretty);

    auto* close = app.add_subcommand("close", "sphere closure of a chain file");
    close->add_option("--input", input);
    close->add_flag("--pretty", pretty);

    auto* census = app.add_subcommand("census", "enumerate closed chains of length n");
    census->add_option("--n", n, "chain length")->required();
    census->add_option("--limit", limit, "search node budget (0 = unlimited)");
    census->add_option("--threads", threads, "worker threads");
    census->add_flag("--jsonl", jsonl, "one canonical chain per line");
    census->add_flag("--pretty", pretty);

    auto* counts = app.add_subcommand("counts", "symbolic class counts for genus g");
    counts->add_option("--g", g, "genus")->required();
    counts->add_flag("--pretty", pretty);

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) { // --help
            out << app.help();
            return 0;
        }
        err << e.what() << "\n";
        return 1;
    }

    try {
        if (classify->parsed()) return cmd_classify(parse_json(slurp(input, in)), pretty, out);
        if (codes->parsed()) return cmd_codes(mirror, pretty, out);
        if (validate->parsed()) return cmd_validate(parse_json(slurp(input, in)), pretty, out);
        if (decorate->parsed()) return cmd_decorate(parse_json(slurp(input, in)), pretty, out);
        if (close->parsed()) return cmd_close(parse_json(slurp(input, in)), pretty, out);
        if (census->parsed()) return cmd_census(n, limit, threads, jsonl, pretty, out);
        if (counts->parsed()) return cmd_counts(g, pretty, out);
    } catch (const ParseError& e) {
        err << Json{{"status", "error"}, {"diagnostics", Json::array({e.what()})}}.dump() << "\n";
        return 1;
    } catch (const ResourceLimit& e) {
        err << Json{{"status", "error"}, {"diagnostics", Json::array({e.what()})}}.dump() << "\n";
        return 3;
    } catch (const Error& e) {
        err << Json{{"status", "error"}, {"diagnostics", Json::array({e.what()})}}.dump() << "\n";
        return 2;
    }
    return 1;
}

} // namespace rlf::cli

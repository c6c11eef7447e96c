#include "symvec/cli.hpp"

#include <cstdio>
#include <cstdlib>
#include <ctime>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "symvec/acquisition.hpp"
#include "symvec/evaluation.hpp"
#include "symvec/filtering.hpp"
#include "symvec/generation.hpp"
#include "symvec/induction.hpp"
#include "symvec/nominalization.hpp"
#include "symvec/similarity.hpp"
#include "symvec/store_io.hpp"

namespace symvec::cli {

namespace {

namespace fs = std::filesystem;
using nlohmann::json;

struct Settings {
    std::string store_path;
    std::string acquisition_config_path;
    std::string generation_templates_path;
    std::string lexicon_path;
    std::string benchmark_path;
    std::string applicability_path;
    double tau = 0.5;
    double theta = 0.2;
    SimilarityConfig similarity;
    BackendEndpoint backend;
};

// Paths inside a config file are taken relative to the file itself, so a
// bundled config works from any working directory.
std::string resolve_against(const fs::path& base_dir, const std::string& path) {
    if (path.empty()) return path;
    fs::path p(path);
    if (p.is_absolute()) return p.string();
    return (base_dir / p).lexically_normal().string();
}

Settings load_settings(const std::string& config_path) {
    Settings settings;
    if (config_path.empty()) return settings;
    if (!fs::exists(config_path)) throw_config("config file not found: " + config_path);

    json doc = json::parse(read_file(config_path), nullptr, false);
    if (doc.is_discarded() || !doc.is_object())
        throw_config("malformed config file: " + config_path);
    if (!doc.contains("version") || doc["version"] != "1")
        throw_config("config file has an unsupported version: " + config_path);

    const fs::path base_dir = fs::path(config_path).parent_path();
    if (doc.contains("paths")) {
        const json& paths = doc["paths"];
        if (!paths.is_object()) throw_config("config paths must be an object");
        auto take = [&](const char* key, std::string& into) {
            if (!paths.contains(key)) return;
            if (!paths[key].is_string())
                throw_config(std::string("config path ") + key + " must be a string");
            into = resolve_against(base_dir, paths[key].get<std::string>());
        };
        take("store", settings.store_path);
        take("templates", settings.acquisition_config_path);
        take("generation_templates", settings.generation_templates_path);
        take("lexicon", settings.lexicon_path);
        take("benchmark", settings.benchmark_path);
        take("applicability", settings.applicability_path);
        if (paths.contains("fixtures")) {
            if (!paths["fixtures"].is_string())
                throw_config("config path fixtures must be a string");
            settings.backend.kind = BackendEndpoint::Kind::Fixture;
            settings.backend.location =
                resolve_against(base_dir, paths["fixtures"].get<std::string>());
        }
    }
    if (doc.contains("tau")) {
        if (!doc["tau"].is_number()) throw_config("config tau must be a number");
        settings.tau = doc["tau"].get<double>();
    }
    if (doc.contains("theta")) {
        if (!doc["theta"].is_number()) throw_config("config theta must be a number");
        settings.theta = doc["theta"].get<double>();
    }
    if (doc.contains("similarity")) {
        const json& sim = doc["similarity"];
        if (!sim.is_object()) throw_config("config similarity must be an object");
        if (sim.contains("measure")) {
            auto measure = parse_measure(sim["measure"].get<std::string>());
            if (!measure)
                throw_config("unknown measure: " + sim["measure"].get<std::string>());
            settings.similarity.measure = *measure;
        }
        if (sim.contains("policy")) {
            auto policy = parse_missing_policy(sim["policy"].get<std::string>());
            if (!policy)
                throw_config("unknown missing policy: " + sim["policy"].get<std::string>());
            settings.similarity.policy = *policy;
        }
        if (sim.contains("alpha")) {
            if (!sim["alpha"].is_object())
                throw_config("config similarity alpha must be an object");
            for (const auto& [name, value] : sim["alpha"].items()) {
                auto dim = parse_dimension(name);
                if (!dim) throw_config("unknown dimension in alpha: " + name);
                if (!value.is_number())
                    throw_config("alpha for " + name + " must be a number");
                settings.similarity.alpha[*dim] = value.get<double>();
            }
        }
    }
    if (doc.contains("backend")) {
        const json& backend = doc["backend"];
        if (!backend.is_object()) throw_config("config backend must be an object");
        if (backend.contains("kind")) {
            std::string kind = backend["kind"].get<std::string>();
            if (kind == "fixture") settings.backend.kind = BackendEndpoint::Kind::Fixture;
            else if (kind == "http") settings.backend.kind = BackendEndpoint::Kind::Http;
            else throw_config("unknown backend kind: " + kind);
        }
        if (backend.contains("location")) {
            std::string location = backend["location"].get<std::string>();
            settings.backend.location =
                settings.backend.kind == BackendEndpoint::Kind::Fixture
                    ? resolve_against(base_dir, location)
                    : location;
        }
        if (backend.contains("auth_env"))
            settings.backend.auth_env = backend["auth_env"].get<std::string>();
        if (backend.contains("timeout_seconds")) {
            if (!backend["timeout_seconds"].is_number())
                throw_config("backend timeout_seconds must be a number");
            settings.backend.timeout_seconds = backend["timeout_seconds"].get<double>();
        }
    }
    return settings;
}

void require_file(const std::string& path, const char* what) {
    if (path.empty())
        throw_config(std::string("no ") + what + " configured (set it in the config file " +
                     "or pass the matching flag)");
    if (!fs::exists(path)) throw_config(std::string(what) + " not found: " + path);
}

void require_output_dir(const std::string& path, const char* what) {
    fs::path parent = fs::path(path).parent_path();
    if (!parent.empty() && !fs::exists(parent))
        throw_config(std::string(what) + " directory does not exist: " + parent.string());
}

// New stores get a reproducible creation stamp: SOURCE_DATE_EPOCH when the
// environment pins one, the epoch otherwise.
std::string creation_timestamp() {
    long long seconds = 0;
    if (const char* env = std::getenv("SOURCE_DATE_EPOCH")) {
        try {
            seconds = std::stoll(env);
        } catch (const std::exception&) {
            seconds = 0;
        }
    }
    std::time_t t = static_cast<std::time_t>(seconds);
    std::tm tm{};
    gmtime_r(&t, &tm);
    char buf[32];
    std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

std::string fixed6(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.6f", v);
    return buf;
}

std::set<Dimension> context_slots() {
    std::set<Dimension> slots;
    for (Dimension d : kAllDimensions) {
        if (d != Dimension::OfType) slots.insert(d);
    }
    return slots;
}

EmbeddingStore load_store_checked(const std::string& path) {
    require_file(path, "store");
    return store_load(path);
}

const Lexicon& lexicon_for(const Settings& settings, Lexicon& storage) {
    if (settings.lexicon_path.empty()) return Lexicon::builtin();
    require_file(settings.lexicon_path, "lexicon");
    storage = Lexicon::load(settings.lexicon_path);
    return storage;
}

struct AcquireArgs {
    std::vector<std::string> words;
    std::vector<std::string> dims;
    bool all = false;
    std::string out;
};

int do_acquire(const Settings& settings, const AcquireArgs& args, std::ostream& out) {
    std::string target = args.out.empty() ? settings.store_path : args.out;
    if (target.empty())
        throw_config("no output store configured (use --out, --store, or a config file)");
    require_file(settings.acquisition_config_path, "acquisition template pack");
    if (settings.backend.kind == BackendEndpoint::Kind::Fixture)
        require_file(settings.backend.location, "fixture file");
    require_output_dir(target, "output store");

    AcquisitionConfig config = load_acquisition_config(settings.acquisition_config_path);
    std::vector<Dimension> dims;
    if (args.all) {
        for (const auto& [dim, templates] : config.templates) {
            (void)templates;
            dims.push_back(dim);
        }
    } else {
        for (const std::string& name : args.dims) {
            auto dim = parse_dimension(name);
            if (!dim) throw_config("unknown dimension: " + name);
            dims.push_back(*dim);
        }
    }
    if (dims.empty()) throw_config("nothing to acquire: pass --dim or --all");

    std::unique_ptr<MaskBackend> backend = make_backend(settings.backend);
    EmbeddingStore store;
    if (fs::exists(target)) {
        store = store_load(target);
    } else {
        store.metadata().created = creation_timestamp();
        store.metadata().provenance = "mask-filling acquisition";
    }
    for (const std::string& word : args.words) {
        ConceptTerm term(word);
        for (Dimension dim : dims) {
            WeightedConceptSet set = acquire(term, dim, *backend, config);
            store.merge_dimension(term.lemma, dim, set);
            out << term.lemma << " " << dimension_name(dim) << ": " << set.size()
                << " concepts\n";
        }
    }
    store_save(store, target);
    out << "wrote " << target << "\n";
    return 0;
}

int do_sim(const Settings& settings, const std::string& w1, const std::string& w2, bool explain,
           std::ostream& out) {
    EmbeddingStore store = load_store_checked(settings.store_path);
    SimilarityReport report = similarity(w1, w2, store, settings.similarity);
    if (explain) {
        out << report_to_text(report);
    } else {
        out << fixed6(report.aggregate) << "\n";
    }
    return 0;
}

int do_nearest(const Settings& settings, const std::string& word, int k, std::ostream& out) {
    EmbeddingStore store = load_store_checked(settings.store_path);
    for (const auto& [candidate, score] : nearest(word, store, k, settings.similarity)) {
        out << candidate << " " << fixed6(score) << "\n";
    }
    return 0;
}

int do_induce(const Settings& settings, const std::string& out_dot,
              const std::string& out_lattice, std::ostream& out) {
    EmbeddingStore store = load_store_checked(settings.store_path);
    if (!out_dot.empty()) require_output_dir(out_dot, "DOT output");
    if (!out_lattice.empty()) require_output_dir(out_lattice, "lattice output");

    FormalContext context = FormalContext::build(store, settings.tau, context_slots());
    TypeLattice lattice = induce_lattice(context);
    if (!out_dot.empty()) write_file_atomic(out_dot, lattice_to_dot(lattice));
    if (!out_lattice.empty()) write_file_atomic(out_lattice, lattice_to_json(lattice));
    if (out_dot.empty() && out_lattice.empty()) out << lattice_to_dot(lattice);
    return 0;
}

int do_typesigs(const Settings& settings, std::ostream& out) {
    EmbeddingStore store = load_store_checked(settings.store_path);
    FormalContext context = FormalContext::build(store, settings.tau, context_slots());
    TypeLattice lattice = induce_lattice(context);
    out << "types:\n";
    for (const TypeNode& node : lattice.nodes()) {
        out << "  " << node.label << " = {";
        for (std::size_t i = 0; i < node.extent.size(); ++i) {
            if (i > 0) out << ", ";
            out << node.extent[i];
        }
        out << "}\n";
    }
    out << "signatures:\n";
    for (const PredicateSignature& sig : type_signatures(context, lattice)) {
        out << "  " << format_signature(sig) << "\n";
    }
    return 0;
}

int do_eval(const Settings& settings, const std::string& benchmark_flag, bool as_json,
            std::ostream& out) {
    std::string benchmark = benchmark_flag.empty() ? settings.benchmark_path : benchmark_flag;
    require_file(benchmark, "benchmark");
    EmbeddingStore store = load_store_checked(settings.store_path);
    EvalReport report = evaluate(store, load_benchmark(benchmark), settings.similarity);
    out << (as_json ? report_to_json(report) : report_to_text(report));
    return 0;
}

int do_generate(const Settings& settings, const std::string& template_flag,
                const std::string& name, std::uint64_t seed, int count, std::ostream& out) {
    std::string template_path =
        template_flag.empty() ? settings.generation_templates_path : template_flag;
    require_file(template_path, "generation template file");
    EmbeddingStore store = load_store_checked(settings.store_path);

    std::vector<GenerationTemplate> templates = load_generation_templates(template_path);
    std::vector<const GenerationTemplate*> selected;
    for (const GenerationTemplate& tmpl : templates) {
        if (name.empty() || tmpl.name == name) selected.push_back(&tmpl);
    }
    if (selected.empty())
        throw_config(name.empty() ? "template file contains no templates"
                                  : "no template named '" + name + "' in " + template_path);

    bool needs_lattice = false;
    for (const GenerationTemplate* tmpl : selected) {
        for (const SlotSpec& slot : tmpl->slots) {
            if (slot.kind == ConstraintKind::NounOfType) needs_lattice = true;
        }
    }
    TypeLattice lattice;
    if (needs_lattice) {
        lattice = induce_lattice(FormalContext::build(store, settings.tau, context_slots()));
    }
    for (const GenerationTemplate* tmpl : selected) {
        for (const GeneratedSentence& sentence : generate(*tmpl, store, lattice, seed, count)) {
            out << sentence.text << "\n";
        }
    }
    return 0;
}

int do_nominalize(const Settings& settings, const std::string& sentence, std::ostream& out) {
    Lexicon storage;
    const Lexicon& lexicon = lexicon_for(settings, storage);
    out << format_triple(nominalize(sentence, lexicon)) << "\n";
    return 0;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"symbolic word profiles: acquisition, similarity, induction, generation"};
    app.require_subcommand(1);

    std::string config_path;
    std::string store_flag;
    double tau_flag = 0.0;
    double theta_flag = 0.0;
    std::string measure_flag;
    std::string policy_flag;
    std::string backend_flag;
    double timeout_flag = 0.0;
    app.add_option("--config", config_path, "config file (JSON)");
    auto* store_opt = app.add_option("--store", store_flag, "embedding store file");
    auto* tau_opt = app.add_option("--tau", tau_flag, "incidence threshold for induction");
    auto* theta_opt = app.add_option("--theta", theta_flag, "information-content threshold");
    auto* measure_opt =
        app.add_option("--measure", measure_flag, "WEIGHTED_JACCARD or COSINE");
    auto* policy_opt =
        app.add_option("--policy", policy_flag, "SKIP_RENORMALIZE or ZERO");
    auto* backend_opt = app.add_option(
        "--backend", backend_flag, "fixture file path, or an http:// endpoint URL");
    auto* timeout_opt =
        app.add_option("--timeout", timeout_flag, "backend timeout in seconds");

    AcquireArgs acquire_args;
    auto* acquire_cmd = app.add_subcommand("acquire", "build or extend a store by mask filling");
    acquire_cmd->add_option("--word", acquire_args.words, "word to profile")->required();
    auto* dim_opt = acquire_cmd->add_option("--dim", acquire_args.dims, "dimension name");
    auto* all_opt = acquire_cmd->add_flag("--all", acquire_args.all,
                                          "every dimension the template pack covers");
    dim_opt->excludes(all_opt);
    all_opt->excludes(dim_opt);
    acquire_cmd->add_option("--out", acquire_args.out, "output store (defaults to --store)");

    std::string w1, w2;
    bool explain = false;
    auto* sim_cmd = app.add_subcommand("sim", "similarity of two words");
    sim_cmd->add_option("--w1", w1, "first word")->required();
    sim_cmd->add_option("--w2", w2, "second word")->required();
    sim_cmd->add_flag("--explain", explain, "per-dimension breakdown");

    std::string nearest_word;
    int k = 5;
    auto* nearest_cmd = app.add_subcommand("nearest", "most similar words in the store");
    nearest_cmd->add_option("--word", nearest_word, "query word")->required();
    nearest_cmd->add_option("--k", k, "how many neighbors");

    std::string out_dot;
    std::string out_lattice;
    auto* induce_cmd = app.add_subcommand("induce", "induce the type lattice");
    induce_cmd->add_option("--out-dot", out_dot, "write Graphviz DOT here");
    induce_cmd->add_option("--out-lattice", out_lattice, "write the structured lattice here");

    auto* typesigs_cmd = app.add_subcommand("typesigs", "typed predicate signatures");

    std::string benchmark_flag;
    bool eval_json = false;
    auto* eval_cmd = app.add_subcommand("eval", "score a word-similarity benchmark");
    eval_cmd->add_option("--benchmark", benchmark_flag, "benchmark CSV");
    eval_cmd->add_flag("--json", eval_json, "machine-readable report");

    std::string template_flag;
    std::string template_name;
    std::uint64_t seed = 0;
    int count = 5;
    auto* generate_cmd = app.add_subcommand("generate", "sensibility-checked slot filling");
    generate_cmd->add_option("--template", template_flag, "template file");
    generate_cmd->add_option("--name", template_name, "generate only this template");
    generate_cmd->add_option("--seed", seed, "sampling seed");
    generate_cmd->add_option("--count", count, "sentences per template");

    std::string sentence;
    auto* nominalize_cmd =
        app.add_subcommand("nominalize", "rewrite a copular sentence as a typed relation");
    nominalize_cmd->add_option("--sentence", sentence, "copular sentence")->required();

    for (CLI::App* sc : {acquire_cmd, sim_cmd, nearest_cmd, induce_cmd, typesigs_cmd, eval_cmd,
                         generate_cmd, nominalize_cmd}) {
        sc->fallthrough();
    }

    std::vector<const char*> argv;
    argv.reserve(args.size() + 1);
    argv.push_back("symvec");
    for (const std::string& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? 0 : 2;
    }

    try {
        Settings settings = load_settings(config_path);
        if (store_opt->count()) settings.store_path = store_flag;
        if (tau_opt->count()) settings.tau = tau_flag;
        if (theta_opt->count()) settings.theta = theta_flag;
        if (measure_opt->count()) {
            auto measure = parse_measure(measure_flag);
            if (!measure) throw_config("unknown measure: " + measure_flag);
            settings.similarity.measure = *measure;
        }
        if (policy_opt->count()) {
            auto policy = parse_missing_policy(policy_flag);
            if (!policy) throw_config("unknown missing policy: " + policy_flag);
            settings.similarity.policy = *policy;
        }
        if (backend_opt->count()) {
            if (backend_flag.rfind("http://", 0) == 0 ||
                backend_flag.rfind("https://", 0) == 0) {
                settings.backend.kind = BackendEndpoint::Kind::Http;
            } else {
                settings.backend.kind = BackendEndpoint::Kind::Fixture;
            }
            settings.backend.location = backend_flag;
        }
        if (timeout_opt->count()) settings.backend.timeout_seconds = timeout_flag;

        if (acquire_cmd->parsed()) return do_acquire(settings, acquire_args, out);
        if (sim_cmd->parsed()) return do_sim(settings, w1, w2, explain, out);
        if (nearest_cmd->parsed()) return do_nearest(settings, nearest_word, k, out);
        if (induce_cmd->parsed()) return do_induce(settings, out_dot, out_lattice, out);
        if (typesigs_cmd->parsed()) return do_typesigs(settings, out);
        if (eval_cmd->parsed()) return do_eval(settings, benchmark_flag, eval_json, out);
        if (generate_cmd->parsed())
            return do_generate(settings, template_flag, template_name, seed, count, out);
        if (nominalize_cmd->parsed()) return do_nominalize(settings, sentence, out);
        err << "error: no subcommand\n";
        return 2;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return e.exit_code();
    } catch (const fs::filesystem_error& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
}

}  // namespace symvec::cli

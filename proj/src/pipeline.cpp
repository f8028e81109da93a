#include "lattica/pipeline.hpp"

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <functional>
#include <ostream>

#include <CLI11.hpp>
#include <json.hpp>

#include "lattica/corpus.hpp"
#include "lattica/error.hpp"
#include "lattica/io.hpp"
#include "lattica/motifs.hpp"
#include "lattica/reduction.hpp"
#include "lattica/render.hpp"
#include "lattica/rules.hpp"
#include "lattica/temporal.hpp"

namespace lattica {

namespace {

std::string fixed(double v, int places) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*f", places, v);
    return buf;
}

}  // namespace

std::vector<ReportRow> entity_report(const WeightMatrix& dt, const EntityIndex& index,
                                     const std::vector<std::string>& entities, double delta, std::size_t p,
                                     std::size_t q, const Rational& minsupp, const EnumerationOptions& opts) {
    validate_entity_index(index, dt.row_labels());
    std::vector<ReportRow> rows;
    for (const auto& name : entities) {
        auto it = index.entities.find(name);
        if (it == index.entities.end()) throw InputError("unknown entity '" + name + "'");
        auto ctx = threshold_scale(dt.restrict_rows(it->second), delta);
        ReportRow r;
        r.entity = name;
        r.objects = ctx.object_count();
        r.attributes = ctx.attribute_count();
        r.density = ctx.density();
        r.concepts = count_concepts(ctx, opts);
        r.core_concepts = count_concepts(pq_core(ctx, p, q).core, opts);
        r.view_concepts = titanic_iceberg(ctx, minsupp, opts).size();
        rows.push_back(std::move(r));
    }
    return rows;
}

std::string report_to_tsv(const std::vector<ReportRow>& rows) {
    std::string out = "entity\tobjects\tattributes\tdensity\tconcepts\tcore_concepts\tview_concepts\n";
    for (const auto& r : rows)
        out += r.entity + "\t" + std::to_string(r.objects) + "\t" + std::to_string(r.attributes) + "\t" +
               fixed(r.density, 3) + "\t" + std::to_string(r.concepts) + "\t" + std::to_string(r.core_concepts) +
               "\t" + std::to_string(r.view_concepts) + "\n";
    return out;
}

// ---------------------------------------------------------------------------
// Command line

namespace {

struct Run {
    PipelineConfig cfg;
    std::ostream& out;

    EnumerationOptions enum_opts() const {
        EnumerationOptions o;
        o.max_concepts = cfg.max_concepts;
        return o;
    }
    MotifSearchOptions motif_opts() const {
        MotifSearchOptions o;
        o.max_attributes = cfg.max_motif_attributes;
        return o;
    }

    std::string path(const std::string& name) const { return (std::filesystem::path(cfg.out) / name).string(); }

    void write(const std::string& name, const std::string& contents) const {
        write_file_atomic(path(name), contents);
        out << "wrote " << path(name) << "\n";
    }
    void finish() const { write_file_atomic(path("config.toml"), emit_config(cfg)); }

    WeightMatrix load_matrix(const std::string& p) const {
        auto m = parse_matrix_csv(read_file(p));
        return cfg.normalize ? m.normalized_l1() : m;
    }

    EntityIndex load_index() const {
        if (cfg.entities.empty()) throw InputError("an entity index is required (--entities)");
        return parse_entity_index(read_file(cfg.entities));
    }

    /// Document-topic matrix, restricted to --entity when given.
    WeightMatrix doc_matrix() const {
        auto m = load_matrix(cfg.matrix);
        if (cfg.entity.empty()) return m;
        auto idx = load_index();
        validate_entity_index(idx, m.row_labels());
        auto it = idx.entities.find(cfg.entity);
        if (it == idx.entities.end()) throw InputError("unknown entity '" + cfg.entity + "'");
        return m.restrict_rows(it->second);
    }

    FormalContext context() const {
        if (!cfg.context.empty()) {
            auto ctx = load_context(cfg.context);
            if (cfg.entity.empty()) return ctx;
            return entity_subcontext(ctx, load_index(), cfg.entity);
        }
        if (!cfg.matrix.empty()) return threshold_scale(doc_matrix(), cfg.delta);
        if (!cfg.terms.empty()) return topn_scale(load_matrix(cfg.terms), cfg.topn);
        throw InputError("no input given: use --context, --matrix or --terms");
    }
};

std::vector<std::string> names_of(const std::vector<std::string>& labels, const Bitset& s) {
    std::vector<std::string> v;
    s.for_each([&](std::size_t i) { v.push_back(labels[i]); });
    return v;
}

void cmd_vectorize(const Run& r) {
    if (r.cfg.corpus.empty()) throw InputError("vectorize needs --corpus");
    auto corpus = parse_corpus_jsonl(read_file(r.cfg.corpus));
    r.write("tfidf.csv", emit_matrix_csv(corpus.tfidf_matrix()));
    nlohmann::ordered_json years = nlohmann::ordered_json::object();
    for (const auto& d : corpus.documents())
        if (d.year) years[d.id] = *d.year;
    if (!years.empty()) {
        nlohmann::ordered_json idx;
        idx["entities"] = nlohmann::ordered_json::object();
        idx["years"] = std::move(years);
        r.write("years.json", idx.dump(2) + "\n");
    }
}

void cmd_scale(const Run& r) {
    auto ctx = r.context();
    r.write("context.cxt", emit_cxt(ctx));
    r.out << ctx.object_count() << " objects, " << ctx.attribute_count() << " attributes";
    if (ctx.object_count() && ctx.attribute_count()) r.out << ", density " << fixed(ctx.density(), 3);
    r.out << "\n";
}

void cmd_sweep(const Run& r) {
    if (!r.cfg.matrix.empty()) {
        auto deltas = r.cfg.deltas;
        if (deltas.empty()) deltas = {0.1, 0.2, 0.25, 0.3, 0.4, 0.5};
        std::string tsv = "delta\tdensity\tconcepts\n";
        for (const auto& row : density_sweep(r.doc_matrix(), deltas, r.enum_opts())) {
            char buf[64];
            std::snprintf(buf, sizeof buf, "%g", row.delta);
            tsv += std::string(buf) + "\t" + fixed(row.density, 3) + "\t" + std::to_string(row.concepts) + "\n";
        }
        r.write("sweep.tsv", tsv);
        return;
    }
    if (!r.cfg.terms.empty()) {
        auto ns = r.cfg.ns;
        if (ns.empty()) ns = {5, 10, 15, 20, 25, 30};
        std::string tsv = "n\tconcepts\n";
        for (const auto& pt : topn_concept_curve(r.load_matrix(r.cfg.terms), ns, r.enum_opts()))
            tsv += std::to_string(pt.n) + "\t" + std::to_string(pt.concepts) + "\n";
        r.write("curve.tsv", tsv);
        return;
    }
    throw InputError("sweep needs --matrix (threshold sweep) or --terms (top-n curve)");
}

void cmd_lattice(const Run& r) {
    auto ctx = r.context();
    auto lat = enumerate_concepts(ctx, r.enum_opts());
    r.write("lattice.json", lattice_to_json(lat, ctx));
    r.out << lat.size() << " concepts";
    if (lat.size() > 0 && lat.size() <= 20000) r.out << ", width " << width(lat);
    r.out << "\n";
}

void cmd_core(const Run& r) {
    auto ctx = r.context();
    auto core = pq_core(ctx, r.cfg.p, r.cfg.q);
    auto n = count_concepts(core.core, r.enum_opts());
    nlohmann::ordered_json j;
    j["p"] = r.cfg.p;
    j["q"] = r.cfg.q;
    j["objects"] = names_of(ctx.objects(), core.objects);
    j["attributes"] = names_of(ctx.attributes(), core.attributes);
    j["concepts"] = n;
    r.write("core.cxt", emit_cxt(core.core));
    r.write("core.json", j.dump(2) + "\n");
    r.out << core.core.object_count() << " objects, " << core.core.attribute_count() << " attributes, " << n
          << " concepts\n";
}

void cmd_iceberg(const Run& r) {
    auto ctx = r.context();
    auto ice = titanic_iceberg(ctx, r.cfg.minsupp, r.enum_opts());
    r.write("iceberg.json", iceberg_to_json(ice, ctx));
    r.out << ice.size() << " frequent intents\n";
}

void cmd_rules(const Run& r) {
    auto ctx = r.context();
    auto basis = luxenburger_basis(ctx, r.cfg.minsupp, r.cfg.minconf, r.enum_opts());
    r.write("rules.tsv", rules_to_tsv(basis, ctx));
    r.write("rules.json", rules_to_json(basis, ctx));
    r.out << basis.rules.size() << " rules\n";
}

std::vector<MotifFamily> families_of(const PipelineConfig& cfg) {
    if (cfg.families.empty()) return all_motif_families();
    std::vector<MotifFamily> fs;
    for (const auto& f : cfg.families) fs.push_back(parse_motif_family(f));
    return fs;
}

void cmd_motifs(const Run& r) {
    auto ctx = r.context();
    auto gs = geometric_structure(ctx, families_of(r.cfg), r.motif_opts());
    r.write("motifs.json", geometric_structure_to_json(gs));

    nlohmann::ordered_json diag;
    auto dups = nlohmann::ordered_json::array();
    for (const auto& group : duplicate_attributes(ctx)) {
        auto g = nlohmann::ordered_json::array();
        for (auto m : group) g.push_back(ctx.attributes()[m]);
        dups.push_back(std::move(g));
    }
    diag["duplicate_attributes"] = std::move(dups);
    // attribute triples that one or two inserted incidences would turn contranominal
    auto near = nlohmann::ordered_json::array();
    const std::size_t nm = ctx.attribute_count();
    if (nm <= r.cfg.max_motif_attributes) {
        for (std::size_t a = 0; a < nm; ++a)
            for (std::size_t b = a + 1; b < nm; ++b)
                for (std::size_t c = b + 1; c < nm; ++c) {
                    AttributeSet s(nm, {a, b, c});
                    auto d = contranominal_insertion_distance(ctx, s);
                    if (!d || *d == 0 || *d > 2) continue;
                    nlohmann::ordered_json e;
                    e["attributes"] = names_of(ctx.attributes(), s);
                    e["insertions"] = *d;
                    near.push_back(std::move(e));
                }
    }
    diag["near_contranominal"] = std::move(near);
    r.write("diagnostics.json", diag.dump(2) + "\n");
}

void cmd_temporal(const Run& r) {
    if (r.cfg.periods.empty()) throw InputError("temporal needs --periods");
    auto ctx = r.context();
    auto idx = r.load_index();
    auto intents = enumerate_intents(ctx, r.enum_opts());
    auto views = temporal_view(ctx, idx.years, intents, parse_periods(r.cfg.periods));
    r.write("temporal.json", temporal_to_json(views, ctx));
}

void cmd_zoom(const Run& r) {
    if (r.cfg.attribute.empty()) throw InputError("zoom needs --attribute");
    auto ctx = r.context();
    auto lat = enumerate_concepts(ctx, r.enum_opts());
    auto z = zoom(lat, ctx.attribute_index(r.cfg.attribute));
    r.write("zoom.json", zoom_to_json(z, lat, ctx));
    r.out << z.concept_ids.size() << " of " << lat.size() << " concepts contain " << r.cfg.attribute << "\n";
}

void cmd_draw(const Run& r) {
    auto ctx = r.context();
    LabelMap labels;
    if (!r.cfg.labels.empty()) labels = parse_label_map(read_file(r.cfg.labels));
    SvgOptions svg{r.cfg.width, r.cfg.height};
    if (r.cfg.kind == "hasse") {
        auto lat = enumerate_concepts(ctx, r.enum_opts());
        LatticeDrawOptions o;
        o.omit_bottom = r.cfg.omit_bottom;
        o.tulip = r.cfg.tulip || !r.cfg.tulip_attributes.empty();
        o.tulip_attributes = r.cfg.tulip_attributes;
        o.labels = labels;
        auto scene = draw_lattice(lat, ctx, o);
        if (r.cfg.format == "dot") r.write("lattice.dot", emit_dot(scene));
        else if (r.cfg.format == "svg") r.write("lattice.svg", emit_svg(scene, svg));
        else throw InputError("unknown format '" + r.cfg.format + "' (svg or dot)");
    } else if (r.cfg.kind == "geometric") {
        if (r.cfg.format != "svg") throw InputError("geometric drawings are emitted as SVG only");
        auto gs = geometric_structure(ctx, families_of(r.cfg), r.motif_opts());
        GeometricDrawOptions o;
        o.seed = r.cfg.seed;
        o.labels = labels;
        r.write("geometric.svg", emit_svg(draw_geometric(gs, o), svg));
    } else {
        throw InputError("unknown drawing kind '" + r.cfg.kind + "' (hasse or geometric)");
    }
}

void cmd_report(const Run& r) {
    if (r.cfg.matrix.empty()) throw InputError("report needs --matrix");
    auto m = r.load_matrix(r.cfg.matrix);
    auto idx = r.load_index();
    auto names = r.cfg.report_entities;
    if (names.empty())
        for (const auto& [name, docs] : idx.entities) names.push_back(name);
    auto rows = entity_report(m, idx, names, r.cfg.delta, r.cfg.p, r.cfg.q, r.cfg.minsupp, r.enum_opts());
    auto tsv = report_to_tsv(rows);
    r.write("report.tsv", tsv);
    r.out << tsv;
}

}  // namespace

int cli_main(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Conceptual views of topic models: scaling, concept lattices, reductions, rules and motifs",
                 "lattica"};
    app.require_subcommand(1);

    PipelineConfig flags;
    std::string config_path, minsupp_s, minconf_s;
    std::vector<std::pair<CLI::Option*, std::function<void(PipelineConfig&)>>> bindings;

    auto bind = [&](CLI::App* sub, const std::string& name, auto PipelineConfig::*field, const std::string& desc) {
        auto* opt = sub->add_option(name, flags.*field, desc);
        bindings.emplace_back(opt, [field, &flags](PipelineConfig& c) { c.*field = flags.*field; });
        return opt;
    };
    auto bind_flag = [&](CLI::App* sub, const std::string& name, bool PipelineConfig::*field,
                         const std::string& desc) {
        auto* opt = sub->add_flag(name, flags.*field, desc);
        bindings.emplace_back(opt, [field, &flags](PipelineConfig& c) { c.*field = flags.*field; });
    };
    auto bind_rational = [&](CLI::App* sub, const std::string& name, std::string& holder, Rational PipelineConfig::*field,
                             const std::string& desc) {
        auto* opt = sub->add_option(name, holder, desc);
        bindings.emplace_back(opt, [&holder, field](PipelineConfig& c) { c.*field = Rational::parse(holder); });
    };

    auto common = [&](CLI::App* sub) {
        sub->add_option("--config", config_path, "TOML-style config file; flags override its values");
        bind(sub, "--out,-o", &PipelineConfig::out, "Output directory");
        bind(sub, "--max-concepts", &PipelineConfig::max_concepts,
             "Concept enumeration ceiling (also LATTICA_MAX_CONCEPTS)");
    };
    auto inputs = [&](CLI::App* sub) {
        bind(sub, "--context", &PipelineConfig::context, "Formal context (.cxt or .json)");
        bind(sub, "--matrix", &PipelineConfig::matrix, "Document-topic weight matrix (CSV)");
        bind(sub, "--terms", &PipelineConfig::terms, "Term-topic weight matrix (CSV)");
        bind(sub, "--entities", &PipelineConfig::entities, "Entity index JSON (documents per entity, years)");
        bind(sub, "--entity", &PipelineConfig::entity, "Restrict to the documents of one entity");
        bind(sub, "--delta", &PipelineConfig::delta, "Threshold for document-topic scaling (default 0.25)");
        bind(sub, "--topn", &PipelineConfig::topn, "Top-n for term-topic scaling (default 10)");
        bind_flag(sub, "--normalize", &PipelineConfig::normalize, "Row-normalize weights (l1) before scaling");
    };

    std::vector<std::pair<CLI::App*, std::function<void(const Run&)>>> commands;
    auto command = [&](const std::string& name, const std::string& desc, std::function<void(const Run&)> fn,
                       bool with_inputs = true) {
        auto* sub = app.add_subcommand(name, desc);
        common(sub);
        if (with_inputs) inputs(sub);
        commands.emplace_back(sub, std::move(fn));
        return sub;
    };

    auto* vec = command("vectorize", "tf-idf matrix from a JSON-lines corpus", cmd_vectorize, false);
    bind(vec, "--corpus", &PipelineConfig::corpus, "JSON-lines corpus");

    command("scale", "Scale a weight matrix into a formal context (context.cxt)", cmd_scale);

    auto* sweep = command("sweep", "Density/concept counts over thresholds, or concept counts over top-n", cmd_sweep);
    bind(sweep, "--deltas", &PipelineConfig::deltas, "Thresholds, comma separated")->delimiter(',');
    bind(sweep, "--ns", &PipelineConfig::ns, "Top-n values, comma separated")->delimiter(',');

    command("lattice", "All formal concepts with covers (lattice.json)", cmd_lattice);

    auto* core = command("core", "(p,q)-core of the context", cmd_core);
    bind(core, "--p", &PipelineConfig::p, "Minimum attributes per object (default 2)");
    bind(core, "--q", &PipelineConfig::q, "Minimum objects per attribute (default 8)");

    auto* ice = command("iceberg", "Frequent closed intents (iceberg.json)", cmd_iceberg);
    bind_rational(ice, "--minsupp", minsupp_s, &PipelineConfig::minsupp, "Minimum support, e.g. 0.03 or 3/100");

    auto* rules = command("rules", "Luxenburger rule basis (rules.tsv, rules.json)", cmd_rules);
    bind_rational(rules, "--minsupp", minsupp_s, &PipelineConfig::minsupp, "Minimum support (default 3/100)");
    bind_rational(rules, "--minconf", minconf_s, &PipelineConfig::minconf, "Minimum confidence (default 1/2)");

    auto* motifs = command("motifs", "Maximal ordinal motifs as a geometric structure (motifs.json)", cmd_motifs);
    bind(motifs, "--families", &PipelineConfig::families,
         "nominal,nominal_plus,contranominal,crown,ordinal,interordinal")
        ->delimiter(',');
    bind(motifs, "--max-motif-attributes", &PipelineConfig::max_motif_attributes,
         "Refuse exhaustive motif search above this many attributes (default 40)");

    auto* temporal = command("temporal", "Per-period supports and closedness of all intents", cmd_temporal);
    bind(temporal, "--periods", &PipelineConfig::periods, "e.g. early:1987-1999,mid:2000-2008,late:2009-2020");

    auto* zoom_cmd = command("zoom", "Concepts whose intent contains one attribute", cmd_zoom);
    bind(zoom_cmd, "--attribute", &PipelineConfig::attribute, "Attribute to zoom into");

    auto* draw = command("draw", "Hasse diagram (SVG/DOT) or geometric drawing (SVG)", cmd_draw);
    bind(draw, "--kind", &PipelineConfig::kind, "hasse or geometric");
    bind(draw, "--format", &PipelineConfig::format, "svg or dot (hasse only)");
    bind_flag(draw, "--tulip", &PipelineConfig::tulip, "Crossing-free placement of a contranominal part");
    bind(draw, "--tulip-attributes", &PipelineConfig::tulip_attributes, "Attributes for the tulip layout")
        ->delimiter(',');
    bind_flag(draw, "--omit-bottom", &PipelineConfig::omit_bottom, "Hide an unsupported bottom concept");
    bind(draw, "--families", &PipelineConfig::families, "Motif families for geometric drawings")->delimiter(',');
    bind(draw, "--seed", &PipelineConfig::seed, "Layout seed (default 1)");
    bind(draw, "--width", &PipelineConfig::width, "SVG width");
    bind(draw, "--height", &PipelineConfig::height, "SVG height");
    bind(draw, "--labels", &PipelineConfig::labels, "Label abbreviations, lines 'label = abbreviation'");
    bind(draw, "--max-motif-attributes", &PipelineConfig::max_motif_attributes,
         "Refuse exhaustive motif search above this many attributes (default 40)");

    auto* report = command("report", "Per-entity objects, attributes, density and concept counts", cmd_report);
    bind(report, "--names", &PipelineConfig::report_entities, "Entities to report, comma separated (default all)")
        ->delimiter(',');
    bind(report, "--p", &PipelineConfig::p, "Core parameter p (default 2)");
    bind(report, "--q", &PipelineConfig::q, "Core parameter q (default 8)");
    bind_rational(report, "--minsupp", minsupp_s, &PipelineConfig::minsupp, "Iceberg minimum support (default 3/100)");

    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? exit_ok : exit_input_error;
    }

    try {
        PipelineConfig cfg;
        if (!config_path.empty()) cfg = parse_config(read_file(config_path));
        if (const char* env = std::getenv("LATTICA_MAX_CONCEPTS")) {
            try {
                std::size_t used = 0;
                auto v = std::stoull(env, &used);
                if (used != std::string(env).size()) throw std::invalid_argument("trailing");
                cfg.max_concepts = static_cast<std::size_t>(v);
            } catch (const std::exception&) {
                throw InputError("LATTICA_MAX_CONCEPTS must be a non-negative integer");
            }
        }
        for (auto& [opt, apply] : bindings)
            if (opt->count() > 0) apply(cfg);
        if (!(cfg.delta >= 0.0 && cfg.delta <= 1.0)) throw InputError("--delta must lie in [0,1]");
        if (cfg.topn == 0) throw InputError("--topn must be at least 1");
        if (cfg.minsupp > Rational(1, 1)) throw InputError("--minsupp must lie in [0,1]");
        if (cfg.minconf > Rational(1, 1)) throw InputError("--minconf must lie in [0,1]");
        for (auto& [sub, fn] : commands) {
            if (!sub->parsed()) continue;
            Run run{cfg, out};
            fn(run);
            run.finish();
        }
        return exit_ok;
    } catch (const CeilingError& e) {
        err << "error: " << e.what() << " (raise the limit with --max-concepts or LATTICA_MAX_CONCEPTS)\n";
        return exit_ceiling;
    } catch (const InputError& e) {
        err << "error: " << e.what() << "\n";
        return exit_input_error;
    } catch (const std::filesystem::filesystem_error& e) {
        err << "error: " << e.what() << "\n";
        return exit_input_error;
    }
}

}  // namespace lattica

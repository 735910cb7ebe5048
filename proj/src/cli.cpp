#include "cyclic_stab/cli.hpp"

#include <CLI11.hpp>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>

#include "cyclic_stab/error.hpp"
#include "cyclic_stab/examples.hpp"
#include "cyclic_stab/io.hpp"
#include "cyclic_stab/plot.hpp"

namespace cstab {

namespace {

namespace fs = std::filesystem;

struct Config {
    int bound = 8;
    Rat rcharge_scale = 2;
    int window = 2;
};

Config load_config(const std::string& path) {
    Config cfg;
    if (!path.empty()) {
        json j = read_json_file(path);
        try {
            if (j.contains("bound")) cfg.bound = j.at("bound").get<int>();
            if (j.contains("rcharge_scale"))
                cfg.rcharge_scale = j.at("rcharge_scale").is_string()
                                        ? parse_rat(j.at("rcharge_scale").get<std::string>())
                                        : Rat(j.at("rcharge_scale").get<long>());
            if (j.contains("window")) cfg.window = j.at("window").get<int>();
        } catch (const std::exception& e) {
            throw Error(Errc::DocumentError, path + ": " + e.what());
        }
    }
    if (std::getenv("CYCLIC_STAB_BOUND")) cfg.bound = default_bound();
    return cfg;
}

std::string pf(bool b) { return b ? "pass" : "fail"; }

std::string signed_rat(const Rat& r) { return sgn(r) > 0 ? "+" + rat_str(r) : rat_str(r); }

void report(std::ostream& out, const std::string& key, const ConditionResult& r) {
    out << key << "=" << pf(r.pass) << "\n";
    for (const auto& v : r.violations) out << "# " << key << ": " << v << "\n";
}

CategoryPresentation load_presentation(const std::string& dir) {
    return presentation_from_json(read_json_file((fs::path(dir) / "presentation.json").string()));
}

ChargeTriple load_charge(const std::string& dir) {
    return triple_from_json(read_json_file((fs::path(dir) / "charge.json").string()));
}

StabilityCondition load_stability(const std::string& dir, const CategoryPresentation& c) {
    return stability_from_json(read_json_file((fs::path(dir) / "stability.json").string()), c);
}

int cmd_build(const std::string& example, const std::string& outdir, const Config& cfg, std::ostream& out) {
    ExampleDocs d = build_example(example, cfg.bound, cfg.rcharge_scale);
    fs::create_directories(outdir);
    auto write = [&](const std::string& name, const json& j) {
        write_json_file((fs::path(outdir) / name).string(), j);
        out << "wrote=" << name << "\n";
    };
    out << "# " << example << ": " << d.presentation.objects.size() << " objects, "
        << d.presentation.arrows.size() << " arrows\n";
    write("presentation.json", to_json(d.presentation));
    if (d.triple) write("charge.json", to_json(*d.triple));
    if (d.stability) write("stability.json", to_json(*d.stability));
    if (example == "a2-z3-walcher") {
        write("loops.json", loops_to_json(generator_loops()));
        write("path-left.json", path_to_json(left_path()));
    }
    out << "objects=" << d.presentation.objects.size() << "\n";
    out << "arrows=" << d.presentation.arrows.size() << "\n";
    out << "triangles=" << d.presentation.triangles.size() << "\n";
    return 0;
}

int check_maslov(const CategoryPresentation& c, const ChargeTriple& r, bool need_zero, std::ostream& out) {
    bool ok = true;
    for (const auto& e : maslov_indices(c, r)) {
        out << "maslov." << e.loop.triangle.f << "=" << rat_str(e.index) << "\n";
        bool bad = need_zero ? sgn(e.index) != 0 : sgn(e.index) < 0;
        if (bad) {
            if (ok) out << "witness=" << path_str(e.loop.witness) << "\n";
            out << "# loop " << path_str(e.loop.witness) << " has Maslov index " << rat_str(e.index) << "\n";
            ok = false;
        }
    }
    return ok ? 0 : 1;
}

int cmd_check(const std::string& kind, const std::string& dir, const Config& cfg, std::ostream& out) {
    CategoryPresentation c = load_presentation(dir);
    int code = 0;
    if (kind == "triple" || kind == "liftable" || kind == "maslov") {
        ChargeTriple r = load_charge(dir);
        check_ids(r, c);
        if (kind == "triple") {
            TripleReport t = validate_triple(r, c);
            report(out, "condition1", t.c1);
            report(out, "condition2", t.c2);
            report(out, "condition3", t.c3);
            report(out, "shift_degree", t.shift_degree);
            code = t.pass() ? 0 : 1;
        } else if (kind == "maslov") {
            code = check_maslov(c, r, false, out);
        } else {
            TripleReport t = validate_triple(r, c);
            if (!t.pass()) {
                out << "# triple does not validate\n";
                code = 1;
            } else {
                code = check_maslov(c, r, true, out);
            }
            out << "liftable=" << (code == 0 ? "true" : "false") << "\n";
        }
    } else if (kind == "stability") {
        StabilityCondition s = load_stability(dir, c);
        check_ids(s.triple, c);
        StabilityReport rep = validate_stability(s, c);
        for (int i = 0; i < 7; ++i) report(out, "condition" + std::to_string(i + 1), rep.c[i]);
        code = rep.pass() ? 0 : 1;
    } else if (kind == "bridgeland") {
        StabilityCondition s = load_stability(dir, c);
        check_ids(s.triple, c);
        LiftedCategory l = build_z_lift(c, s.triple, cfg.window);
        BridgelandReport rep = check_bridgeland(l, lift_stability(s, l));
        out << "lifted_objects=" << l.objects.size() << "\n";
        out << "lifted_triangles=" << l.lifted_triangles << "\n";
        report(out, "clause_a", rep.a);
        report(out, "clause_b", rep.b);
        report(out, "clause_c", rep.c);
        report(out, "clause_d", rep.d);
        code = rep.pass() ? 0 : 1;
    } else {
        throw Error(Errc::DocumentError, "unknown check kind " + kind);
    }
    out << "result=" << pf(code == 0) << "\n";
    return code;
}

int cmd_plot(const std::string& dir, const std::string& svg, const std::string& path_doc, std::ostream& out) {
    CategoryPresentation c = presentation_from_json(read_json_file((fs::path(dir) / "presentation.json").string()),
                                                    false);
    std::optional<ChargeTriple> r;
    fs::path charge = fs::path(dir) / "charge.json";
    if (fs::exists(charge)) {
        json j = read_json_file(charge.string());
        if (!j.empty()) r = triple_from_json(j);
    }
    std::optional<ChargePath> p;
    if (!path_doc.empty()) p = path_from_json(read_json_file(path_doc));
    std::string text = render_svg(&c, r ? &*r : nullptr, p ? &*p : nullptr);
    std::ofstream f(svg, std::ios::binary);
    if (!f || !(f << text)) throw Error(Errc::DocumentError, "cannot write " + svg);
    out << "wrote=" << svg << "\n";
    return 0;
}

int cmd_monodromy(const std::string& dir, const std::string& loops_doc, std::ostream& out) {
    CategoryPresentation c = load_presentation(dir);
    StabilityCondition s = load_stability(dir, c);
    std::string lp = loops_doc.empty() ? (fs::path(dir) / "loops.json").string() : loops_doc;
    auto loops = loops_from_json(read_json_file(lp));
    MonodromyResult m = monodromy_word(s, c, loops);
    for (size_t i = 0; i < m.loops.size(); ++i) {
        std::string k = "loop" + std::to_string(i + 1);
        out << "# " << k << "\n";
        for (const auto& [o, off] : m.loops[i].offset) out << k << ".offset." << o << "=" << signed_rat(off) << "\n";
        out << k << ".relabeling=" << (m.loops[i].base_identity ? "identity" : "non-identity") << "\n";
    }
    for (const auto& [o, off] : m.composite.offset) out << "composite.offset." << o << "=" << signed_rat(off) << "\n";
    out << "composite=" << (m.composite.base_identity ? "identity" : "non-identity") << "\n";
    out << "lifted_offset=" << (m.lifted_offset ? signed_rat(*m.lifted_offset) : std::string("none")) << "\n";
    return 0;
}

int cmd_deform(const std::string& dir, const std::string& path_doc, const std::string& outdoc, std::ostream& out) {
    CategoryPresentation c = load_presentation(dir);
    StabilityCondition s = load_stability(dir, c);
    DeformResult d = deform_along_path(s, c, path_from_json(read_json_file(path_doc)));
    out << "# sample_index, object, event\n";
    for (const auto& e : d.events) out << "event=" << event_line(e) << "\n";
    for (const auto& [o, u] : d.unwrapped) out << "unwrapped." << o << "=" << signed_rat(u) << "\n";
    if (!outdoc.empty()) {
        write_json_file(outdoc, to_json(d.end));
        out << "wrote=" << outdoc << "\n";
    }
    StabilityReport rep = validate_stability(d.end, c);
    out << "result=" << pf(rep.pass()) << "\n";
    return rep.pass() ? 0 : 1;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Stability conditions on cyclic categories", "cyclic-stab"};
    app.require_subcommand(1);
    std::string config;
    app.add_option("--config", config, "JSON config with bound, rcharge_scale, window");

    std::string example, outdir;
    auto* build = app.add_subcommand("build", "Build an example category and its documents");
    build->add_option("example", example, "a2-z3-walcher, a2-z3-mirror or an-zd:<n>,<d>")->required();
    build->add_option("--out", outdir, "Output directory")->required();

    std::string kind, dir;
    auto* check = app.add_subcommand("check", "Run a check on a document directory");
    check->add_option("kind", kind, "triple|liftable|maslov|stability|bridgeland")->required();
    check->add_option("dir", dir, "Document directory")->required();

    std::string svg, path_doc;
    auto* plot = app.add_subcommand("plot", "Render the charge plane as SVG");
    plot->add_option("dir", dir, "Document directory")->required();
    plot->add_option("--out", svg, "SVG file")->required();
    plot->add_option("--path", path_doc, "Path document to overlay");

    std::string loops_doc;
    auto* mono = app.add_subcommand("monodromy", "Compose deformation loops");
    mono->add_option("dir", dir, "Document directory")->required();
    mono->add_option("--loops", loops_doc, "Loops document (default <dir>/loops.json)");

    std::string outdoc;
    auto* deform = app.add_subcommand("deform", "Deform a stability condition along a path");
    deform->add_option("dir", dir, "Document directory")->required();
    deform->add_option("--path", path_doc, "Path document")->required();
    deform->add_option("--out", outdoc, "Write the endpoint stability document");

    std::vector<std::string> rev(args.rbegin(), args.rend());
    try {
        app.parse(rev);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
    try {
        Config cfg = load_config(config);
        if (*build) return cmd_build(example, outdir, cfg, out);
        if (*check) return cmd_check(kind, dir, cfg, out);
        if (*plot) return cmd_plot(dir, svg, path_doc, out);
        if (*mono) return cmd_monodromy(dir, loops_doc, out);
        if (*deform) return cmd_deform(dir, path_doc, outdoc, out);
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        bool doc = e.code() == Errc::DocumentError || e.code() == Errc::UnknownExample ||
                   e.code() == Errc::IdMismatch;
        if (!doc) out << "result=fail\nerror=" << errc_name(e.code()) << "\n";
        return doc ? 2 : 1;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}

}  // namespace cstab

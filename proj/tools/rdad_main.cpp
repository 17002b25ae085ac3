#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <random>
#include <string>
#include <variant>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "rdad/bootstrap.hpp"
#include "rdad/bottleneck.hpp"
#include "rdad/cubical.hpp"
#include "rdad/errors.hpp"
#include "rdad/filtration.hpp"
#include "rdad/io.hpp"
#include "rdad/presets.hpp"
#include "rdad/synthgen.hpp"

namespace {

using nlohmann::json;
using namespace rdad;

std::uint64_t pick_seed(std::optional<std::uint64_t> requested) {
    if (requested) return *requested;
    std::random_device rd;
    const std::uint64_t seed =
        (static_cast<std::uint64_t>(rd()) << 32) ^ static_cast<std::uint64_t>(rd());
    std::cerr << "seed: " << seed << "\n";
    return seed;
}

Rect rect_from_values(const std::vector<double>& v) {
    if (v.size() != 4) throw ConfigError("--rect/--box expects xmin,xmax,ymin,ymax");
    Rect r{v[0], v[1], v[2], v[3]};
    if (!(r.xmax > r.xmin) || !(r.ymax > r.ymin))
        throw ConfigError("rectangle must satisfy xmin < xmax and ymin < ymax");
    return r;
}

json params_to_json(const TwoSquareParams& p) {
    json j;
    j["type"] = "two-square";
    j["n_points"] = p.n_points;
    j["masses"] = p.masses;
    j["n_outliers"] = p.n_outliers;
    if (!p.noise_sigma.empty()) j["noise_sigma"] = p.noise_sigma;
    json annuli = json::array();
    for (const auto& a : p.annuli)
        annuli.push_back({{"center", a.center},
                          {"inner_radius", a.inner_radius},
                          {"outer_radius", a.outer_radius}});
    j["annuli"] = annuli;
    return j;
}

json params_to_json(const VoronoiParams& p) {
    json j;
    j["type"] = "voronoi";
    j["n_sites"] = p.n_sites;
    j["n_super"] = p.n_super;
    j["outlier_fraction"] = p.outlier_fraction;
    j["lambda"] = p.scale_lambda;
    j["strip_half_height"] = p.strip_half_height;
    j["sigma0"] = p.sigma0;
    j["crop"] = {p.crop.xmin, p.crop.xmax, p.crop.ymin, p.crop.ymax};
    return j;
}

PointCloud generate_from_preset(const DatasetPreset& preset, std::uint64_t seed) {
    Rng rng(seed);
    if (const auto* two = std::get_if<TwoSquareParams>(&preset.generator))
        return gen_two_square(*two, rng);
    if (const auto* vor = std::get_if<VoronoiParams>(&preset.generator))
        return gen_voronoi(*vor, rng);
    throw ConfigError("preset '" + preset.name + "' has no generator (point data only)");
}

json provenance_json(const DatasetPreset& preset, std::uint64_t seed) {
    json j;
    j["preset"] = preset.name;
    j["seed"] = seed;
    std::visit(
        [&j](const auto& params) {
            if constexpr (!std::is_same_v<std::decay_t<decltype(params)>, std::monostate>)
                j["params"] = params_to_json(params);
        },
        preset.generator);
    return j;
}

// Uniform pre-jitter of 1e-9 times the bounding-box diagonal, for clouds
// with coincident points. Off by default.
void apply_jitter(PointCloud& cloud, std::uint64_t seed) {
    const Rect box = cloud.bounding_box();
    const double diag = std::hypot(box.width(), box.height());
    const double magnitude = 1e-9 * diag;
    if (magnitude == 0.0) return;
    Rng rng(derive_seed(seed, 0x6a697474ULL));
    for (auto& c : cloud.coords) c += rng.uniform(-magnitude, magnitude);
}

struct GridOptions {
    std::vector<double> rect;
    std::optional<double> delta_x;
    std::optional<double> padding;
    std::string preset_name;

    const DatasetPreset* preset() const {
        return preset_name.empty() ? nullptr : &find_preset(preset_name);
    }

    double resolved_delta_x() const {
        if (delta_x) return *delta_x;
        if (const auto* p = preset()) return p->delta_x;
        return 0.02;
    }

    GridSpec resolve(const PointCloud& cloud) const {
        const double dx = resolved_delta_x();
        if (!rect.empty()) return grid_from_rect(rect_from_values(rect), dx);
        if (const auto* p = preset(); p && p->grid_rect && !delta_x && !padding)
            return grid_from_rect(*p->grid_rect, p->delta_x);
        double pad = padding ? *padding : (preset() ? preset()->padding : 0.05);
        return make_grid(cloud, dx, pad);
    }
};

void add_grid_options(CLI::App* cmd, GridOptions& opts) {
    cmd->add_option("--rect", opts.rect,
                    "explicit evaluation rectangle xmin xmax ymin ymax")
        ->expected(4);
    cmd->add_option("--delta-x,--delta_x", opts.delta_x, "grid cell side length");
    cmd->add_option("--padding", opts.padding,
                    "bounding-box padding fraction per side (default 0.05)");
}

struct FiltrationOptions {
    std::string kind = "rdad";
    int k_den = 0;
    int k_dtm = 0;
    double m_dtm = 0.002;

    FiltrationSpec resolve() const {
        FiltrationSpec spec;
        spec.kind = parse_filtration_kind(kind);
        spec.k_den = k_den;
        spec.k_dtm = k_dtm;
        spec.m_dtm = m_dtm;
        return spec;
    }
};

void add_filtration_options(CLI::App* cmd, FiltrationOptions& opts) {
    cmd->add_option("--kind", opts.kind, "filtration kind: distance|dtm|dad|rdad")
        ->check(CLI::IsMember({"distance", "dtm", "dad", "rdad"}));
    cmd->add_option("--k-den,--k_den", opts.k_den, "density neighbor count (0 = ceil((log10 N)^2))");
    cmd->add_option("--k-dtm,--k_dtm", opts.k_dtm, "DTM neighbor count (0 = derive from m_dtm)");
    cmd->add_option("--m-dtm,--m_dtm", opts.m_dtm, "DTM mass fraction (default 0.002)");
}

// Flat key=value configuration file. Keys are option names without the
// leading dashes (k_den, m_dtm, delta_x, B, alpha, ...); values given on the
// command line win over file values.
void apply_config_file(CLI::App* cmd, const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open config file: " + path);
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        const auto eq = line.find('=');
        if (eq == std::string::npos) {
            if (line.find_first_not_of(" \t\r") != std::string::npos)
                throw ConfigError(path + ":" + std::to_string(line_no) + ": expected key=value");
            continue;
        }
        auto trim = [](std::string s) {
            const auto b = s.find_first_not_of(" \t\r");
            const auto e = s.find_last_not_of(" \t\r");
            return b == std::string::npos ? std::string{} : s.substr(b, e - b + 1);
        };
        const std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));
        CLI::Option* op = cmd->get_option_no_throw("--" + key);
        if (op == nullptr)
            throw ConfigError(path + ": unknown key '" + key + "' for subcommand " +
                              cmd->get_name());
        if (op->count() > 0) continue;  // explicit flag wins
        op->add_result(value);
        op->run_callback();
    }
}

void add_config_option(CLI::App* cmd, std::string& storage) {
    cmd->add_option("--config", storage, "flat key=value configuration file");
}

std::uint64_t fnv1a(const std::string& text) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : text) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    return h;
}

std::string hex64(std::uint64_t v) {
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(v));
    return buf;
}

// ---------------------------------------------------------------------------
// subcommand bodies (shared between the staged commands and `run`)
// ---------------------------------------------------------------------------

void do_generate(const DatasetPreset& preset, std::uint64_t seed, const std::string& out_points,
                 const std::string& out_provenance) {
    const PointCloud cloud = generate_from_preset(preset, seed);
    write_points_csv(out_points, cloud);
    if (!out_provenance.empty()) {
        std::ofstream out(out_provenance);
        if (!out) throw DataError("cannot open for writing: " + out_provenance);
        out << provenance_json(preset, seed).dump(2) << '\n';
    }
    std::cerr << "generate: " << cloud.size() << " points -> " << out_points << "\n";
}

ScalarField do_field(const PointCloud& cloud, const FiltrationSpec& spec, const GridSpec& grid,
                     int threads, const std::string& out_field) {
    const ScalarField field = build_field(cloud, spec, grid, threads);
    write_field_json(out_field, field);
    std::cerr << "field: N=" << cloud.size() << " kind=" << filtration_kind_name(spec.kind);
    if (field.spec.k_den > 0) std::cerr << " k_den=" << field.spec.k_den;
    if (field.spec.k_dtm > 0) std::cerr << " k_dtm=" << field.spec.k_dtm;
    std::cerr << " grid=" << grid.counts[0] << "x" << grid.counts[1] << " -> " << out_field << "\n";
    return field;
}

PersistenceDiagram do_persist(const ScalarField& field, int p, bool indices,
                              const std::string& out_diagram) {
    const PersistenceDiagram diagram = persistence(build_complex(field), p);
    write_diagram_csv(out_diagram, diagram, field.grid, indices);
    std::cerr << "persist: " << diagram.points.size() << " points (p=" << p << ") -> "
              << out_diagram << "\n";
    return diagram;
}

DatasetSampler sampler_for(const DatasetPreset& preset) {
    if (const auto* two = std::get_if<TwoSquareParams>(&preset.generator)) {
        const TwoSquareParams params = *two;
        return [params](Rng& rng) { return gen_two_square(params, rng); };
    }
    if (const auto* vor = std::get_if<VoronoiParams>(&preset.generator)) {
        const VoronoiParams params = *vor;
        return [params](Rng& rng) { return gen_voronoi(params, rng); };
    }
    throw ConfigError("oracle bootstrap needs a preset with a generator");
}

BootstrapResult do_bootstrap(const PointCloud& cloud, const FieldPipeline& pipeline,
                             const BootstrapConfig& cfg, int threads,
                             const DatasetSampler& sampler, const std::string& out_json,
                             const std::string& out_significant) {
    const BootstrapResult result =
        cfg.mode == BootstrapMode::Oracle
            ? oracle_bootstrap(cloud, sampler, pipeline, cfg, threads)
            : subsample_bootstrap(cloud, pipeline, cfg, threads);
    write_bootstrap_json(out_json, result);
    const auto significant = significant_points(result.empirical, cfg.dim, result.radius);
    write_significant_csv(out_significant, significant, pipeline.grid);
    std::cerr << "bootstrap: mode="
              << (cfg.mode == BootstrapMode::Oracle ? "oracle" : "subsample")
              << " B=" << cfg.B << " radius=" << result.radius << " significant="
              << significant.size() << " -> " << out_json << "\n";
    return result;
}

void do_ingest(const std::string& in_path, const std::string& x_col, const std::string& y_col,
               const Rect& box, const std::string& out_path) {
    const CsvTable table = read_csv_table(in_path);
    const int xi = table.column(x_col);
    const int yi = table.column(y_col);
    if (xi < 0 || yi < 0)
        throw DataError("ingest: columns '" + x_col + "'/'" + y_col + "' not found in " + in_path);

    PointCloud cloud;
    cloud.dim = 2;
    std::size_t dropped = 0;
    for (const auto& row : table.rows) {
        if (static_cast<int>(row.size()) <= std::max(xi, yi))
            throw DataError("ingest: short row in " + in_path);
        double x, y;
        try {
            x = std::stod(row[static_cast<std::size_t>(xi)]);
            y = std::stod(row[static_cast<std::size_t>(yi)]);
        } catch (const std::exception&) {
            throw DataError("ingest: non-numeric coordinate in " + in_path);
        }
        if (!box.contains(x, y)) {
            ++dropped;
            continue;
        }
        const double p[2] = {x, y};
        cloud.append(p);
    }
    std::cerr << "ingest: kept " << cloud.size() << " rows, dropped " << dropped << "\n";
    if (cloud.size() == 0) {
        std::cerr << "warning: crop produced an empty point set\n";
        std::ofstream out(out_path, std::ios::binary);
        if (!out) throw DataError("cannot open for writing: " + out_path);
        out << "x,y\n";
        return;
    }
    write_points_csv(out_path, cloud);
}

// ---------------------------------------------------------------------------

int run_cli(int argc, char** argv) {
    CLI::App app{"Robust density-aware distance (RDAD) filtration pipeline"};
    app.require_subcommand(1);

    // ---- generate ----
    auto* gen = app.add_subcommand("generate", "sample a synthetic dataset preset");
    struct {
        std::string preset;
        std::optional<std::uint64_t> seed;
        std::string out;
        std::string provenance;
        std::string config;
    } g;
    add_config_option(gen, g.config);
    gen->add_option("--preset", g.preset, "david-goliath|antman|antman-noisy|antman-outliers|voronoi-noisy")
        ->required();
    gen->add_option("--seed", g.seed, "root RNG seed (omit for entropy)");
    gen->add_option("--out", g.out, "output points CSV")->required();
    gen->add_option("--provenance", g.provenance, "provenance JSON path (default <out>.provenance.json)");
    gen->callback([&] {
        if (!g.config.empty()) apply_config_file(gen, g.config);
        const auto seed = pick_seed(g.seed);
        const std::string prov =
            g.provenance.empty() ? g.out + ".provenance.json" : g.provenance;
        do_generate(find_preset(g.preset), seed, g.out, prov);
    });

    // ---- field ----
    auto* fld = app.add_subcommand("field", "evaluate a filtration function on a grid");
    struct {
        std::string points;
        FiltrationOptions filtration;
        GridOptions grid;
        int threads = 0;
        bool jitter = false;
        std::optional<std::uint64_t> seed;
        std::string out;
        std::string config;
    } f;
    add_config_option(fld, f.config);
    fld->add_option("--points", f.points, "input points CSV")->required();
    add_filtration_options(fld, f.filtration);
    add_grid_options(fld, f.grid);
    fld->add_option("--preset", f.grid.preset_name, "preset supplying grid defaults");
    fld->add_option("--threads", f.threads, "worker thread cap (0 = all cores)");
    fld->add_flag("--jitter", f.jitter, "pre-jitter points by 1e-9 x bbox diagonal");
    fld->add_option("--seed", f.seed, "seed (only used by --jitter)");
    fld->add_option("--out", f.out, "output field JSON")->required();
    fld->callback([&] {
        if (!f.config.empty()) apply_config_file(fld, f.config);
        PointCloud cloud = read_points_csv(f.points);
        if (f.jitter) apply_jitter(cloud, pick_seed(f.seed));
        do_field(cloud, f.filtration.resolve(), f.grid.resolve(cloud), f.threads, f.out);
    });

    // ---- persist ----
    auto* per = app.add_subcommand("persist", "cubical sublevel persistence of a field");
    struct {
        std::string field;
        int p = 11;
        bool indices = false;
        std::string out;
        std::string config;
    } pe;
    add_config_option(per, pe.config);
    per->add_option("--field", pe.field, "input field JSON")->required();
    per->add_option("--p", pe.p, "coefficient field characteristic (prime, default 11)");
    per->add_flag("--indices", pe.indices, "append integer death-pixel indices");
    per->add_option("--out", pe.out, "output diagram CSV")->required();
    per->callback([&] {
        if (!pe.config.empty()) apply_config_file(per, pe.config);
        do_persist(read_field_json(pe.field), pe.p, pe.indices, pe.out);
    });

    // ---- bootstrap ----
    auto* boo = app.add_subcommand("bootstrap", "confidence radius and significant loops");
    struct {
        std::string points;
        std::string mode = "subsample";
        std::string preset;
        FiltrationOptions filtration;
        GridOptions grid;
        int B = 100;
        double alpha = 0.05;
        int dim = 1;
        int p = 11;
        int threads = 0;
        bool jitter = false;
        std::optional<std::uint64_t> seed;
        std::string out_json;
        std::string out_significant;
        std::string config;
    } b;
    add_config_option(boo, b.config);
    boo->add_option("--points", b.points, "input points CSV (omit to generate from --preset)");
    boo->add_option("--mode", b.mode, "subsample|oracle")
        ->check(CLI::IsMember({"subsample", "oracle"}));
    boo->add_option("--preset", b.preset, "generator preset (oracle replicates, grid defaults)");
    add_filtration_options(boo, b.filtration);
    add_grid_options(boo, b.grid);
    boo->add_option("--B", b.B, "replicate count (default 100)");
    boo->add_option("--alpha", b.alpha, "significance level (default 0.05)");
    boo->add_option("--dim", b.dim, "homology dimension compared (default 1)");
    boo->add_option("--p", b.p, "coefficient field characteristic");
    boo->add_option("--threads", b.threads, "worker thread cap (0 = all cores)");
    boo->add_flag("--jitter", b.jitter, "pre-jitter points by 1e-9 x bbox diagonal");
    boo->add_option("--seed", b.seed, "root RNG seed (omit for entropy)");
    boo->add_option("--out-json", b.out_json, "bootstrap result JSON")->required();
    boo->add_option("--out-significant", b.out_significant, "significant loops CSV")->required();
    boo->callback([&] {
        if (!b.config.empty()) apply_config_file(boo, b.config);
        const auto seed = pick_seed(b.seed);
        b.grid.preset_name = b.preset;
        PointCloud cloud;
        if (!b.points.empty()) {
            cloud = read_points_csv(b.points);
        } else if (!b.preset.empty()) {
            cloud = generate_from_preset(find_preset(b.preset), seed);
        } else {
            throw ConfigError("bootstrap: need --points or --preset");
        }
        if (b.jitter) apply_jitter(cloud, seed);

        FieldPipeline pipeline;
        pipeline.filtration = b.filtration.resolve();
        pipeline.grid = b.grid.resolve(cloud);
        pipeline.field_char = b.p;

        BootstrapConfig cfg;
        cfg.B = b.B;
        cfg.alpha = b.alpha;
        cfg.dim = b.dim;
        cfg.seed = seed;
        cfg.mode = b.mode == "oracle" ? BootstrapMode::Oracle : BootstrapMode::Subsample;

        DatasetSampler sampler;
        if (cfg.mode == BootstrapMode::Oracle) sampler = sampler_for(find_preset(b.preset));
        do_bootstrap(cloud, pipeline, cfg, b.threads, sampler, b.out_json, b.out_significant);
    });

    // ---- ingest ----
    auto* ing = app.add_subcommand("ingest", "crop a foreign point table to a bounding box");
    struct {
        std::string in;
        std::string x_col = "x";
        std::string y_col = "y";
        std::vector<double> box;
        std::string preset;
        std::string out;
        std::string config;
    } i;
    add_config_option(ing, i.config);
    ing->add_option("--in", i.in, "input CSV")->required();
    ing->add_option("--x-col,--x_col", i.x_col, "x column name (default x)");
    ing->add_option("--y-col,--y_col", i.y_col, "y column name (default y)");
    ing->add_option("--box", i.box, "crop box xmin xmax ymin ymax")->expected(4);
    ing->add_option("--preset", i.preset, "preset supplying the crop box (e.g. towers)");
    ing->add_option("--out", i.out, "output points CSV")->required();
    ing->callback([&] {
        if (!i.config.empty()) apply_config_file(ing, i.config);
        Rect box;
        if (!i.box.empty()) {
            box = rect_from_values(i.box);
        } else if (!i.preset.empty()) {
            const auto& preset = find_preset(i.preset);
            if (!preset.ingest_box)
                throw ConfigError("preset '" + i.preset + "' has no ingest box");
            box = *preset.ingest_box;
        } else {
            throw ConfigError("ingest: need --box or --preset");
        }
        do_ingest(i.in, i.x_col, i.y_col, box, i.out);
    });

    // ---- run ----
    auto* run = app.add_subcommand("run", "full pipeline into an output directory");
    struct {
        std::string preset;
        std::string points;
        std::string mode = "subsample";
        FiltrationOptions filtration;
        GridOptions grid;
        int B = 100;
        double alpha = 0.05;
        int dim = 1;
        int p = 11;
        int threads = 0;
        bool jitter = false;
        std::optional<std::uint64_t> seed;
        std::string out_dir;
        std::string config;
    } r;
    add_config_option(run, r.config);
    run->add_option("--preset", r.preset, "dataset preset (generator and grid defaults)");
    run->add_option("--points", r.points, "use an existing points CSV instead of generating");
    run->add_option("--mode", r.mode, "subsample|oracle")
        ->check(CLI::IsMember({"subsample", "oracle"}));
    add_filtration_options(run, r.filtration);
    add_grid_options(run, r.grid);
    run->add_option("--B", r.B, "replicate count");
    run->add_option("--alpha", r.alpha, "significance level");
    run->add_option("--dim", r.dim, "homology dimension");
    run->add_option("--p", r.p, "coefficient field characteristic");
    run->add_option("--threads", r.threads, "worker thread cap");
    run->add_flag("--jitter", r.jitter, "pre-jitter points");
    run->add_option("--seed", r.seed, "root RNG seed (omit for entropy)");
    run->add_option("--out", r.out_dir, "output directory")->required();
    run->callback([&] {
        if (!r.config.empty()) apply_config_file(run, r.config);
        const auto seed = pick_seed(r.seed);
        namespace fs = std::filesystem;
        fs::create_directories(r.out_dir);
        auto path = [&](const std::string& name) { return (fs::path(r.out_dir) / name).string(); };

        r.grid.preset_name = r.preset;
        std::vector<std::string> artifacts;

        PointCloud cloud;
        if (!r.points.empty()) {
            cloud = read_points_csv(r.points);
            write_points_csv(path("points.csv"), cloud);
        } else if (!r.preset.empty()) {
            do_generate(find_preset(r.preset), seed, path("points.csv"),
                        path("provenance.json"));
            cloud = read_points_csv(path("points.csv"));
            artifacts.push_back("provenance.json");
        } else {
            throw ConfigError("run: need --preset or --points");
        }
        artifacts.insert(artifacts.begin(), "points.csv");
        if (r.jitter) apply_jitter(cloud, seed);

        const FiltrationSpec spec = r.filtration.resolve();
        const GridSpec grid = r.grid.resolve(cloud);
        const ScalarField field = do_field(cloud, spec, grid, r.threads, path("field.json"));
        artifacts.push_back("field.json");

        do_persist(field, r.p, false, path("diagram.csv"));
        artifacts.push_back("diagram.csv");

        FieldPipeline pipeline{spec, grid, r.p};
        BootstrapConfig cfg;
        cfg.B = r.B;
        cfg.alpha = r.alpha;
        cfg.dim = r.dim;
        cfg.seed = seed;
        cfg.mode = r.mode == "oracle" ? BootstrapMode::Oracle : BootstrapMode::Subsample;
        DatasetSampler sampler;
        if (cfg.mode == BootstrapMode::Oracle) sampler = sampler_for(find_preset(r.preset));
        do_bootstrap(cloud, pipeline, cfg, r.threads, sampler, path("bootstrap.json"),
                     path("significant.csv"));
        artifacts.push_back("bootstrap.json");
        artifacts.push_back("significant.csv");

        json config;
        config["preset"] = r.preset;
        config["kind"] = filtration_kind_name(spec.kind);
        config["k_den"] = field.spec.k_den;
        config["k_dtm"] = field.spec.k_dtm;
        config["m_dtm"] = spec.m_dtm;
        config["delta_x"] = grid.delta_x;
        config["B"] = r.B;
        config["alpha"] = r.alpha;
        config["dim"] = r.dim;
        config["p"] = r.p;
        config["mode"] = r.mode;
        config["seed"] = seed;

        json manifest;
        manifest["artifacts"] = artifacts;
        manifest["config"] = config;
        manifest["config_hash"] = hex64(fnv1a(config.dump()));
        std::ofstream out(path("manifest.json"));
        if (!out) throw DataError("cannot open for writing: " + path("manifest.json"));
        out << manifest.dump(2) << '\n';
        std::cerr << "run: artifacts in " << r.out_dir << "\n";
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run_cli(argc, argv);
    } catch (const ConfigError& e) {
        std::cerr << "configuration error: " << e.what() << "\n";
        return 2;
    } catch (const DataError& e) {
        std::cerr << "data error: " << e.what() << "\n";
        return 3;
    } catch (const NumericalError& e) {
        std::cerr << "numerical error: " << e.what() << "\n";
        return 4;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}

// Command-line front end: every reported figure is reproducible by a
// single deterministic command writing plain JSON/CSV artifacts.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <set>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "golayks/bases.hpp"
#include "golayks/codes.hpp"
#include "golayks/io.hpp"
#include "golayks/kscheck.hpp"
#include "golayks/rays.hpp"

namespace gk = golayks;
namespace fs = std::filesystem;
using nlohmann::json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitNotProved = 1;
constexpr int kExitInputError = 2;
constexpr int kExitBudget = 3;

struct Options {
    std::string code;
    std::string out_dir = ".";
    std::uint64_t budget = gk::kDefaultSearchBudget;
    std::uint64_t oracle_budget = 1'000'000;
    int threads = 1;
    bool override_expensive = false;
    int puncture = -1;
    int weight = -1;
    std::vector<int> restrict_labels;
    std::string mode;
    std::string bases_json;
    bool emit_matrix = false;
};

gk::GeneratorMatrix load_code(const Options& opt) {
    static const std::set<std::string> builtin{"golay24", "golay12", "qr48", "hamming8"};
    gk::GeneratorMatrix G = builtin.count(opt.code)
                                ? gk::code_by_name(opt.code)
                                : gk::io::matrix_from_file(opt.code);
    if (opt.puncture >= 0) G = gk::puncture(G, opt.puncture);
    return G;
}

gk::RaySystem build_system(const gk::GeneratorMatrix& G, const Options& opt) {
    gk::RaySystem rs = gk::build_ray_system(G);
    if (opt.weight >= 0) rs = gk::filter_rays_by_weight(rs, opt.weight);
    if (!opt.restrict_labels.empty()) rs = gk::restrict_system(rs, opt.restrict_labels);
    return rs;
}

fs::path out_path(const Options& opt, const std::string& file) {
    fs::create_directories(opt.out_dir);
    return fs::path(opt.out_dir) / file;
}

void require_desk_scale(const gk::RaySystem& rs, const Options& opt) {
    // Full fixed-size clique enumeration over the 2048-ray binary system
    // is far beyond desk scale; make it an explicit opt-in.
    if (rs.size() > 1024 && !opt.override_expensive)
        throw std::invalid_argument("enumerating all bases of " + std::to_string(rs.size()) +
                                    " rays needs --override-expensive");
}

gk::BasisSystem make_basis_system(const gk::GeneratorMatrix& G, const gk::RaySystem& rs,
                                  const Options& opt) {
    std::string mode = opt.mode;
    if (mode.empty())
        mode = (G.field_order == 2 && opt.weight < 0 && opt.restrict_labels.empty())
                   ? "translate"
                   : "enumerate";
    if (mode == "translate") {
        gk::SeedResult seed = gk::find_seed_basis(rs, opt.budget);
        if (seed.outcome == gk::SeedOutcome::exhausted)
            throw gk::BudgetExhaustedError("seed-basis search exhausted its budget");
        if (seed.outcome == gk::SeedOutcome::proven_absent)
            throw std::invalid_argument("no seed basis exists in system " + rs.id());
        return gk::generate_translated_system(*seed.basis, rs);
    }
    if (mode == "enumerate") {
        require_desk_scale(rs, opt);
        return gk::enumerate_all_bases(rs, rs.basis_size(), opt.budget);
    }
    throw std::invalid_argument("unknown mode: " + mode);
}

int cmd_code(const Options& opt) {
    gk::GeneratorMatrix G = load_code(opt);
    gk::io::matrix_to_file(G, out_path(opt, "generator.txt"));
    const auto dist = gk::weight_distribution(G);
    const int d = gk::min_distance(G);

    json j;
    j["name"] = G.name;
    j["length"] = G.length();
    j["dimension"] = G.dimension();
    j["field_order"] = G.field_order;
    j["codewords"] = G.codeword_count();
    j["min_distance"] = d;
    json wd = json::object();
    for (const auto& [w, n] : dist) wd[std::to_string(w)] = n;
    j["weight_distribution"] = std::move(wd);
    std::ofstream(out_path(opt, "code_summary.json")) << j.dump(2) << "\n";

    if (opt.emit_matrix) std::cout << gk::io::matrix_to_text(G);
    std::cout << G.name << ": [" << G.length() << "," << G.dimension() << "," << d << "], "
              << G.codeword_count() << " codewords\n";
    return kExitOk;
}

int cmd_rays(const Options& opt) {
    gk::GeneratorMatrix G = load_code(opt);
    gk::RaySystem rs = build_system(G, opt);
    gk::io::rays_to_file(rs, out_path(opt, "rays.csv"));

    json j;
    j["system"] = rs.id();
    j["rays"] = rs.size();
    j["dimension"] = rs.dimension();
    j["basis_size"] = rs.basis_size();
    j["orthogonal_pairs"] = rs.orthogonal_pair_count();
    json hist = json::object();
    for (const auto& [deg, n] : rs.degree_histogram()) hist[std::to_string(deg)] = n;
    j["degree_histogram"] = std::move(hist);
    std::ofstream(out_path(opt, "rays_summary.json")) << j.dump(2) << "\n";

    std::cout << rs.id() << ": " << rs.size() << " rays, " << rs.orthogonal_pair_count()
              << " orthogonal pairs\n";
    return kExitOk;
}

int cmd_bases(const Options& opt) {
    gk::GeneratorMatrix G = load_code(opt);
    gk::RaySystem rs = build_system(G, opt);
    gk::BasisSystem bs = make_basis_system(G, rs, opt);
    bs.verify(rs);
    gk::io::bases_to_file(bs, out_path(opt, "bases.json"));
    std::cout << bs.system_id << ": " << bs.bases.size() << " bases of size " << bs.basis_size
              << "\n";
    return kExitOk;
}

int cmd_ks(const Options& opt) {
    gk::KSCertificate cert;
    if (!opt.bases_json.empty()) {
        cert = gk::ks_certificate(gk::io::bases_from_file(opt.bases_json), opt.oracle_budget);
    } else {
        gk::GeneratorMatrix G = load_code(opt);
        gk::RaySystem rs = build_system(G, opt);
        gk::BasisSystem bs = make_basis_system(G, rs, opt);
        bs.verify(rs);
        cert = gk::ks_certificate(bs, opt.oracle_budget);
    }
    gk::io::certificate_to_file(cert, out_path(opt, "certificate.json"));
    const std::string summary = gk::io::certificate_summary(cert);
    std::ofstream(out_path(opt, "summary.txt")) << summary;
    std::cout << summary;
    if (cert.ks_proved) return kExitOk;
    return cert.oracle_verdict == gk::OracleVerdict::unknown ? kExitBudget : kExitNotProved;
}

int cmd_pipeline(const Options& opt, bool budget_set) {
    gk::GeneratorMatrix G = load_code(opt);
    std::uint64_t budget = opt.budget;
    if (G.field_order == 2 && G.codeword_count() / 2 > (1ull << 13)) {
        // Large codes search packed codewords; keep the default run at
        // desk scale and make long hunts an explicit opt-in.
        if (!budget_set) budget = 100'000;
        if (budget > 10'000'000 && !opt.override_expensive)
            throw std::invalid_argument("seed search with budget above 1e7 on a code this large "
                                        "needs --override-expensive");
    }
    gk::PipelineReport rep = gk::generic_binary_pipeline(G, budget, opt.oracle_budget);
    gk::io::pipeline_to_file(rep, out_path(opt, "pipeline.json"));
    std::cout << rep.code_name << ": [" << rep.length << "," << rep.dimension << "], "
              << rep.ray_count << " rays, divisibility "
              << (rep.divisibility_ok ? "favorable" : "fails") << ", seed "
              << (rep.seed_outcome == gk::SeedOutcome::found
                      ? "found"
                      : rep.seed_outcome == gk::SeedOutcome::exhausted ? "exhausted"
                                                                       : "proven-absent")
              << (rep.certificate && rep.certificate->ks_proved ? ", ks_proved" : "") << "\n";
    return kExitOk;
}

void add_common(CLI::App* sub, Options& opt, bool with_code = true) {
    if (with_code)
        sub->add_option("code", opt.code, "Built-in code name (golay24, golay12, qr48, hamming8) "
                                          "or a generator-matrix file")
            ->required();
    sub->add_option("--out", opt.out_dir, "Output directory")->capture_default_str();
    sub->add_option("--budget", opt.budget, "Node budget for clique search/enumeration")
        ->capture_default_str();
    sub->add_option("--oracle-budget", opt.oracle_budget,
                    "Node budget for the exact-cover oracle")
        ->capture_default_str();
    sub->add_option("--threads", opt.threads, "Worker count (results are identical for any value)")
        ->capture_default_str();
    sub->add_flag("--override-expensive", opt.override_expensive,
                  "Allow enumeration passes beyond desk scale");
    sub->add_option("--puncture", opt.puncture, "Delete this column before anything else");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Golay-code Kochen-Specker toolkit"};
    app.require_subcommand(1);
    Options opt;

    CLI::App* code = app.add_subcommand("code", "Construct a code and report its parameters");
    add_common(code, opt);
    code->add_flag("--emit-matrix", opt.emit_matrix, "Print the generator matrix to stdout");

    CLI::App* rays = app.add_subcommand("rays", "Build the ray system and orthogonality summary");
    add_common(rays, opt);
    rays->add_option("--weight", opt.weight, "Keep only rays of this codeword weight");
    rays->add_option("--restrict", opt.restrict_labels,
                     "Keep only rays orthogonal to these mutually orthogonal anchors");

    CLI::App* bases = app.add_subcommand("bases", "Generate a basis system");
    add_common(bases, opt);
    bases->add_option("--mode", opt.mode, "translate | enumerate");
    bases->add_option("--weight", opt.weight, "Keep only rays of this codeword weight");
    bases->add_option("--restrict", opt.restrict_labels,
                      "Keep only rays orthogonal to these mutually orthogonal anchors");

    CLI::App* ks = app.add_subcommand("ks", "Emit a KS certificate for a basis system");
    ks->add_option("code", opt.code, "Code name or generator-matrix file");
    ks->add_option("--bases-json", opt.bases_json, "Check a previously written bases JSON");
    ks->add_option("--out", opt.out_dir, "Output directory")->capture_default_str();
    ks->add_option("--budget", opt.budget, "Node budget for clique search/enumeration")
        ->capture_default_str();
    ks->add_option("--oracle-budget", opt.oracle_budget, "Node budget for the exact-cover oracle")
        ->capture_default_str();
    ks->add_option("--threads", opt.threads, "Worker count (results are identical for any value)")
        ->capture_default_str();
    ks->add_flag("--override-expensive", opt.override_expensive,
                 "Allow enumeration passes beyond desk scale");
    ks->add_option("--puncture", opt.puncture, "Delete this column before anything else");
    ks->add_option("--mode", opt.mode, "translate | enumerate");
    ks->add_option("--weight", opt.weight, "Keep only rays of this codeword weight");
    ks->add_option("--restrict", opt.restrict_labels,
                   "Keep only rays orthogonal to these mutually orthogonal anchors");

    CLI::App* pipeline =
        app.add_subcommand("pipeline", "Run the generic binary-code KS construction");
    add_common(pipeline, opt);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) ? kExitInputError : kExitOk;
    }

    try {
        if (code->parsed()) return cmd_code(opt);
        if (rays->parsed()) return cmd_rays(opt);
        if (bases->parsed()) return cmd_bases(opt);
        if (ks->parsed()) {
            if (opt.code.empty() && opt.bases_json.empty())
                throw std::invalid_argument("ks: need a code name or --bases-json");
            return cmd_ks(opt);
        }
        if (pipeline->parsed()) return cmd_pipeline(opt, pipeline->count("--budget") > 0);
    } catch (const gk::BudgetExhaustedError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitBudget;
    } catch (const gk::EnumerationLimitError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInputError;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInputError;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kExitInputError;
    }
    return kExitInputError;
}

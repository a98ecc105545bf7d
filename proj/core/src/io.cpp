#include "golayks/io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

namespace golayks::io {

namespace {

using nlohmann::json;

void write_text(const std::filesystem::path& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open for writing: " + path.string());
    out << text;
    if (!out) throw std::runtime_error("write failed: " + path.string());
}

json certificate_json(const KSCertificate& cert) {
    json j;
    j["system"] = cert.system_id;
    json classes = json::array();
    for (const auto& c : cert.symbol.classes)
        classes.push_back(json::array({c.ray_count, c.occurrence}));
    j["symbol"] = {{"classes", classes},
                   {"bases", cert.symbol.total_bases},
                   {"size", cert.symbol.basis_size}};
    j["equation"] = {{"coeffs", cert.instance.coefficients},
                     {"bounds", cert.instance.bounds},
                     {"target", cert.instance.target}};
    j["diophantine_feasible"] = cert.diophantine_feasible;
    j["witness"] = cert.diophantine_feasible ? json(cert.witness) : json(nullptr);
    j["oracle"] = to_string(cert.oracle_verdict);
    j["ks_proved"] = cert.ks_proved;
    return j;
}

}  // namespace

std::string matrix_to_text(const GeneratorMatrix& G) {
    std::ostringstream os;
    os << "field " << G.field_order << " length " << G.length() << " dim " << G.dimension()
       << "\n";
    for (const auto& row : G.rows) {
        for (std::size_t j = 0; j < row.size(); ++j) {
            if (j) os << ' ';
            os << static_cast<int>(row[j]);
        }
        os << "\n";
    }
    return os.str();
}

GeneratorMatrix matrix_from_text(std::istream& in, const std::string& name) {
    std::string kw_field, kw_length, kw_dim;
    int q = 0, n = 0, k = 0;
    if (!(in >> kw_field >> q >> kw_length >> n >> kw_dim >> k) || kw_field != "field" ||
        kw_length != "length" || kw_dim != "dim")
        throw std::invalid_argument("matrix text: malformed header");
    GeneratorMatrix G;
    G.field_order = q;
    G.name = name;
    for (int i = 0; i < k; ++i) {
        DigitVec row;
        for (int j = 0; j < n; ++j) {
            int d = 0;
            if (!(in >> d)) throw std::invalid_argument("matrix text: truncated rows");
            if (d == -1) d = 2;
            if (d < 0 || d >= q) throw std::invalid_argument("matrix text: digit out of range");
            row.push_back(static_cast<Digit>(d));
        }
        G.rows.push_back(std::move(row));
    }
    G.validate();
    return G;
}

GeneratorMatrix matrix_from_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot read matrix file: " + path.string());
    return matrix_from_text(in, path.stem().string());
}

void matrix_to_file(const GeneratorMatrix& G, const std::filesystem::path& path) {
    write_text(path, matrix_to_text(G));
}

std::string rays_to_csv(const RaySystem& rs) {
    std::ostringstream os;
    os << "label,dim,entries\n";
    for (const Ray& r : rs.rays()) {
        os << r.label << ',' << r.dimension() << ',';
        for (std::size_t i = 0; i < r.entries.size(); ++i) {
            if (i) os << ' ';
            os << static_cast<int>(r.entries[i]);
        }
        os << "\n";
    }
    return os.str();
}

void rays_to_file(const RaySystem& rs, const std::filesystem::path& path) {
    write_text(path, rays_to_csv(rs));
}

std::string bases_to_json(const BasisSystem& bs) {
    json j;
    j["ray_system"] = bs.system_id;
    j["dimension"] = bs.basis_size;
    json bases = json::array();
    for (const Basis& b : bs.bases) bases.push_back(b.ray_labels);
    j["bases"] = std::move(bases);
    json occ = json::object();
    for (const auto& [label, n] : bs.occurrence) occ[std::to_string(label)] = n;
    j["occurrence"] = std::move(occ);
    j["ordering"] = bs.ordering;
    if (bs.ordering == "translation-table") {
        json matrix = json::array();
        for (const auto& row : bs.matrix) matrix.push_back(row);
        j["matrix"] = std::move(matrix);
    }
    return j.dump(2) + "\n";
}

void bases_to_file(const BasisSystem& bs, const std::filesystem::path& path) {
    write_text(path, bases_to_json(bs));
}

BasisSystem bases_from_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot read bases file: " + path.string());
    json j;
    try {
        in >> j;
    } catch (const json::exception& e) {
        throw std::invalid_argument("bases JSON: " + std::string(e.what()));
    }
    BasisSystem bs;
    try {
        bs.system_id = j.at("ray_system").get<std::string>();
        bs.basis_size = j.at("dimension").get<int>();
        bs.ordering = j.value("ordering", "canonical");
        for (const auto& b : j.at("bases")) {
            Basis basis;
            for (const auto& l : b) basis.ray_labels.push_back(l.get<int>());
            bs.bases.push_back(std::move(basis));
        }
        for (const auto& [key, value] : j.at("occurrence").items())
            bs.occurrence[std::stoi(key)] = value.get<std::uint64_t>();
        if (j.contains("matrix"))
            for (const auto& row : j.at("matrix"))
                bs.matrix.push_back(row.get<std::vector<int>>());
    } catch (const json::exception& e) {
        throw std::invalid_argument("bases JSON: " + std::string(e.what()));
    }
    bs.ray_total = bs.occurrence.size();
    return bs;
}

std::string certificate_to_json(const KSCertificate& cert) {
    return certificate_json(cert).dump(2) + "\n";
}

void certificate_to_file(const KSCertificate& cert, const std::filesystem::path& path) {
    write_text(path, certificate_to_json(cert));
}

std::string certificate_summary(const KSCertificate& cert) {
    std::ostringstream os;
    os << "system:      " << cert.system_id << "\n";
    os << "rays-bases:  " << cert.symbol.to_string() << "\n";
    os << "equation:    " << cert.instance.to_string() << "\n";
    os << "diophantine: " << (cert.diophantine_feasible ? "feasible" : "infeasible") << "\n";
    os << "oracle:      " << to_string(cert.oracle_verdict) << "\n";
    os << "ks_proved:   " << (cert.ks_proved ? "yes" : "no") << "\n";
    return os.str();
}

std::string pipeline_to_json(const PipelineReport& rep) {
    json j;
    j["code"] = rep.code_name;
    j["length"] = rep.length;
    j["dimension"] = rep.dimension;
    j["ray_count"] = rep.ray_count;
    j["divisibility_ok"] = rep.divisibility_ok;
    switch (rep.seed_outcome) {
        case SeedOutcome::found: j["seed_outcome"] = "found"; break;
        case SeedOutcome::exhausted: j["seed_outcome"] = "exhausted"; break;
        case SeedOutcome::proven_absent: j["seed_outcome"] = "proven-absent"; break;
    }
    j["seed_basis"] = rep.seed_basis ? json(rep.seed_basis->ray_labels) : json(nullptr);
    j["seed_nodes"] = rep.seed_nodes;
    j["certificate"] = rep.certificate ? certificate_json(*rep.certificate) : json(nullptr);
    return j.dump(2) + "\n";
}

void pipeline_to_file(const PipelineReport& rep, const std::filesystem::path& path) {
    write_text(path, pipeline_to_json(rep));
}

}  // namespace golayks::io

#include "qcohom/descriptors.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>

#include "json.hpp"

namespace qcohom {

namespace {

using nlohmann::json;

json load_json(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw MalformedInput("cannot open " + path);
    json j;
    try {
        in >> j;
    } catch (const std::exception& e) {
        throw MalformedInput(path + ": " + e.what());
    }
    return j;
}

IntMatrix parse_matrix(const json& j, int rank, const std::string& where) {
    if (!j.is_array() || int(j.size()) != rank)
        throw MalformedInput(where + ": matrix must be " + std::to_string(rank) + " rows");
    IntMatrix m(rank, rank);
    for (int i = 0; i < rank; ++i) {
        if (!j[i].is_array() || int(j[i].size()) != rank)
            throw MalformedInput(where + ": row " + std::to_string(i) + " has wrong length");
        for (int k = 0; k < rank; ++k) {
            if (!j[i][k].is_number_integer())
                throw MalformedInput(where + ": non-integer entry");
            m(i, k) = j[i][k].get<long long>();
        }
    }
    return m;
}

Rat parse_rat(const json& j, const std::string& where) {
    if (j.is_number_integer()) return Rat(j.get<long long>());
    if (j.is_string()) {
        std::string s = j.get<std::string>();
        auto slash = s.find('/');
        try {
            if (slash == std::string::npos) return Rat(Int(s));
            return Rat(Int(s.substr(0, slash)), Int(s.substr(slash + 1)));
        } catch (const std::exception&) {
            throw MalformedInput(where + ": bad rational '" + s + "'");
        }
    }
    throw MalformedInput(where + ": expected integer or \"p/q\" string");
}

struct GeneratorList {
    std::vector<std::string> labels;
    std::vector<IntMatrix> mats;
};

GeneratorList parse_generators(const json& j, int rank, const std::string& path) {
    if (!j.contains("generators") || !j["generators"].is_array() || j["generators"].empty())
        throw MalformedInput(path + ": missing generators");
    GeneratorList g;
    for (auto& e : j["generators"]) {
        if (!e.contains("label") || !e.contains("matrix"))
            throw MalformedInput(path + ": generator needs label and matrix");
        g.labels.push_back(e["label"].get<std::string>());
        g.mats.push_back(parse_matrix(e["matrix"], rank, path));
    }
    return g;
}

LatticeModule lattice_from_json(const json& j, const std::string& path) {
    if (!j.contains("rank") || !j["rank"].is_number_integer())
        throw MalformedInput(path + ": missing rank");
    int rank = j["rank"].get<int>();
    if (rank < 1) throw MalformedInput(path + ": rank must be positive");
    auto gens = parse_generators(j, rank, path);

    LatticeModule l;
    l.group = PointGroup::from_generators(gens.labels, gens.mats);
    if (j.value("action_space", "fourier") == std::string("direct"))
        l = dual_action(l);
    l.name = j.value("name", std::filesystem::path(path).stem().string());
    l.cyclotomic_n = j.value("cyclotomic_n", 0);

    if (j.contains("embedding")) {
        auto& emb = j["embedding"];
        if (!emb.is_array() || int(emb.size()) != rank)
            throw MalformedInput(path + ": embedding needs one row per basis vector");
        for (auto& row : emb) {
            std::vector<Rat> r;
            for (auto& x : row) r.push_back(parse_rat(x, path));
            if (!l.embedding.empty() && l.embedding[0].size() != r.size())
                throw MalformedInput(path + ": ragged embedding");
            l.embedding.push_back(std::move(r));
        }
    }
    return l;
}

}  // namespace

std::string preset_directory() {
    if (const char* env = std::getenv("QCOHOM_PRESET_DIR"); env && *env) return env;
    return QCOHOM_DEFAULT_PRESET_DIR;
}

PointGroup load_group_file(const std::string& path) {
    json j = load_json(path);
    if (!j.contains("rank") || !j["rank"].is_number_integer())
        throw MalformedInput(path + ": missing rank");
    int rank = j["rank"].get<int>();
    auto gens = parse_generators(j, rank, path);
    // relations_check defaults to true; construction always verifies, the
    // flag only gates the redundant round-trip below
    auto g = PointGroup::from_generators(gens.labels, gens.mats);
    if (j.value("relations_check", true)) {
        for (size_t i = 0; i < gens.mats.size(); ++i)
            if (!(g.rep(g.index_of(gens.labels[i])) == gens.mats[i]))
                throw MalformedInput(path + ": generator mismatch after closure");
    }
    return g;
}

LatticeModule load_lattice_file(const std::string& path) {
    return lattice_from_json(load_json(path), path);
}

LatticeModule preset_lattice(const std::string& name) {
    namespace fs = std::filesystem;
    fs::path file = fs::path(preset_directory()) / (name + ".json");
    if (fs::exists(file)) return load_lattice_file(file.string());

    // C<N> and D<N> are generated on the fly from the cyclotomic data
    if (name.size() >= 2 && (name[0] == 'C' || name[0] == 'D')) {
        bool digits = true;
        for (size_t i = 1; i < name.size(); ++i) digits &= bool(isdigit(name[i]));
        if (digits) {
            int n = std::stoi(name.substr(1));
            if (n >= 2) return cyclotomic_lattice(n, name[0] == 'D');
        }
    }
    throw UnknownPreset("no preset named '" + name + "' in " + preset_directory());
}

}  // namespace qcohom

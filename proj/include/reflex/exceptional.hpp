#pragma once

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <memory>
#include <sstream>

#include <json.hpp>

#include "reflex/exceptional_data.hpp"
#include "reflex/matgroup.hpp"
#include "reflex/reflection_group.hpp"
#include "reflex/rootsys.hpp"

namespace reflex {

namespace detail {

struct ExcInfo {
    const char* name;
    long order;
    // hyperplane orbit labels with (reflection count, hyperplane count)
    std::vector<std::pair<char, std::pair<int, int>>> orbit_sig;
};

inline const std::vector<ExcInfo>& exceptional_info() {
    static const std::vector<ExcInfo> table = {
        {"G4", 24, {{'t', {8, 4}}}},
        {"G5", 72, {{'s', {8, 4}}, {'t', {8, 4}}}},
        {"G6", 48, {{'s', {6, 6}}, {'t', {8, 4}}}},
        {"G7", 144, {{'s', {6, 6}}, {'t', {8, 4}}, {'u', {8, 4}}}},
        {"G9", 192, {{'s', {12, 12}}, {'t', {18, 6}}}},
        {"G10", 288, {{'s', {16, 8}}, {'t', {18, 6}}}},
        {"G11", 576, {{'s', {12, 12}}, {'t', {16, 8}}, {'u', {18, 6}}}},
        {"G13", 96, {{'s', {6, 6}}, {'t', {12, 12}}}},
        {"G14", 144, {{'s', {12, 12}}, {'t', {16, 8}}}},
        {"G15", 288, {{'s', {12, 12}}, {'t', {16, 8}}, {'u', {6, 6}}}},
        {"G17", 1200, {{'s', {30, 30}}, {'t', {48, 12}}}},
        {"G18", 1800, {{'s', {40, 20}}, {'t', {48, 12}}}},
        {"G19", 3600, {{'s', {30, 30}}, {'t', {40, 20}}, {'u', {48, 12}}}},
        {"G21", 720, {{'s', {30, 30}}, {'t', {40, 20}}}},
        {"G23", 120, {{'t', {15, 15}}}},
        {"G26", 1296, {{'s', {9, 9}}, {'t', {24, 12}}}},
        {"G28", 1152, {{'s', {12, 12}}, {'t', {12, 12}}}},
    };
    return table;
}

inline const ExcInfo& exceptional_info(const std::string& name) {
    for (const auto& e : exceptional_info())
        if (name == e.name) return e;
    throw std::invalid_argument("unknown exceptional group " + name);
}

/// H3 geometric representation over Q(zeta_5); cos(pi/5) = (1+z5+z5^4)/2.
inline std::vector<CycMatrix> g23_generators() {
    Cyclo c = (Cyclo(1) + Cyclo::root_of_unity(5, 1) + Cyclo::root_of_unity(5, 4)) *
              Cyclo(rat(1, 2));
    Cyclo twoc = c + c;
    CycMatrix s1 = CycMatrix::identity(3), s2 = CycMatrix::identity(3),
              s3 = CycMatrix::identity(3);
    s1.at(0, 0) = Cyclo(-1);
    s1.at(0, 1) = twoc;
    s2.at(1, 1) = Cyclo(-1);
    s2.at(1, 0) = twoc;
    s2.at(1, 2) = Cyclo(1);
    s3.at(2, 2) = Cyclo(-1);
    s3.at(2, 1) = Cyclo(1);
    return {s1, s2, s3};
}

inline int simple_root_index(const RootSystem& F, int i) {
    for (int j = 0; j < F.num_positive(); ++j)
        if (F.positive(j).height == 1 && F.positive(j).coeff[i] == 1) return j;
    throw std::logic_error("simple root not found");
}

/// W(F4), generated by the reflections through the F4 simple roots. The
/// rootsys module is the single source of the F4 coordinates.
inline std::vector<CycMatrix> g28_generators() {
    RootSystem F = RootSystem::build('F', 4);
    std::vector<CycMatrix> gens;
    for (int i = 0; i < 4; ++i) {
        auto M = F.reflection_matrix(simple_root_index(F, i));
        CycMatrix m(4);
        for (int r = 0; r < 4; ++r)
            for (int c = 0; c < 4; ++c) m.at(r, c) = Cyclo(M[r][c]);
        gens.push_back(std::move(m));
    }
    return gens;
}

inline std::vector<CycMatrix> exceptional_gens_by_name(const std::string& name) {
    if (name == "G23") return g23_generators();
    if (name == "G28") return g28_generators();
    for (const auto& t : kExcGenTables)
        if (name == t.name) return exceptional_generators(t);
    throw std::invalid_argument("unknown exceptional group " + name);
}

// --- cache ----------------------------------------------------------------

inline std::string cyclo_json(const Cyclo& x) {
    std::string s = std::to_string(x.conductor());
    for (const auto& r : x.coeffs()) {
        s += ';';
        s += rat_str(r);
    }
    return s;
}

inline Cyclo cyclo_from_json(const std::string& s) {
    std::istringstream in(s);
    std::string tok;
    if (!std::getline(in, tok, ';')) throw std::runtime_error("bad cyclo string");
    int n = std::stoi(tok);
    std::vector<Rat> c;
    while (std::getline(in, tok, ';')) c.push_back(Rat(tok));
    for (auto& r : c) r.canonicalize();
    return Cyclo::from_coeffs(n, std::move(c));
}

inline nlohmann::json matrix_json(const CycMatrix& m) {
    nlohmann::json a = nlohmann::json::array();
    for (int i = 0; i < m.dim(); ++i)
        for (int j = 0; j < m.dim(); ++j) a.push_back(cyclo_json(m.at(i, j)));
    return a;
}

inline CycMatrix matrix_from_json(const nlohmann::json& a, int dim) {
    CycMatrix m(dim);
    std::size_t k = 0;
    for (int i = 0; i < dim; ++i)
        for (int j = 0; j < dim; ++j) m.at(i, j) = cyclo_from_json(a.at(k++));
    return m;
}

inline std::string generator_hash(const std::vector<CycMatrix>& gens) {
    int cond = 1;
    for (const auto& g : gens) cond = std::lcm(cond, g.common_conductor());
    std::string all;
    for (const auto& g : gens) all += g.encoding(cond);
    // FNV-1a, good enough for a cache key alongside the group name
    unsigned long long h = 1469598103934665603ull;
    for (unsigned char c : all) h = (h ^ c) * 1099511628211ull;
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", h);
    return buf;
}

inline std::filesystem::path cache_dir() {
    if (const char* d = std::getenv("REFLEX_CACHE_DIR")) return d;
    return ".reflex-cache";
}

inline std::shared_ptr<MatGroup> load_or_enumerate(const std::string& name,
                                                   std::vector<CycMatrix> gens,
                                                   std::size_t cap) {
    namespace fs = std::filesystem;
    fs::path file = cache_dir() / (name + "-" + generator_hash(gens) + ".json");
    if (fs::exists(file)) {
        try {
            std::ifstream in(file);
            nlohmann::json j;
            in >> j;
            if (j.at("version") != 1 || j.at("name") != name)
                throw std::runtime_error("cache schema mismatch");
            int dim = gens[0].dim();
            std::size_t N = j.at("count").get<std::size_t>();
            std::vector<CycMatrix> els;
            els.reserve(N);
            for (const auto& e : j.at("elements")) els.push_back(matrix_from_json(e, dim));
            std::vector<std::vector<int>> gp;
            for (const auto& p : j.at("gen_perm"))
                gp.push_back(p.get<std::vector<int>>());
            return std::make_shared<MatGroup>(MatGroup::from_parts(
                std::move(gens), std::move(els),
                j.at("word_parent").get<std::vector<int>>(),
                j.at("word_gen").get<std::vector<int>>(), std::move(gp)));
        } catch (const std::exception&) {
            // fall through to a fresh enumeration on any cache problem
        }
    }
    auto G = std::make_shared<MatGroup>(gens, cap);
    nlohmann::json j;
    j["version"] = 1;
    j["name"] = name;
    j["count"] = G->size();
    j["conductor"] = G->ambient_conductor();
    nlohmann::json els = nlohmann::json::array();
    for (std::size_t e = 0; e < G->size(); ++e) els.push_back(matrix_json(G->mat(e)));
    j["elements"] = std::move(els);
    j["word_parent"] = G->word_parents();
    j["word_gen"] = G->word_gens();
    nlohmann::json gp = nlohmann::json::array();
    for (int k = 0; k < G->num_gens(); ++k) gp.push_back(G->gen_perm(k));
    j["gen_perm"] = std::move(gp);
    std::error_code ec;
    std::filesystem::create_directories(cache_dir(), ec);
    std::ofstream out(file);
    if (out) out << j;
    return G;
}

} // namespace detail

/// Names handled by exceptional_group().
inline std::vector<std::string> exceptional_names() {
    std::vector<std::string> out;
    for (const auto& e : detail::exceptional_info()) out.push_back(e.name);
    return out;
}

/// Build one of the supported exceptional groups by Shephard-Todd name
/// ("G4" ... "G28"). Enumerated groups are cached on disk (REFLEX_CACHE_DIR,
/// default .reflex-cache/). The result is validated against the expected
/// group order and hyperplane orbit signatures.
inline ReflGroup exceptional_group(const std::string& name, std::size_t cap = 100000) {
    const auto& info = detail::exceptional_info(name);
    auto M = detail::load_or_enumerate(name, detail::exceptional_gens_by_name(name), cap);
    if ((long)M->size() != info.order)
        throw std::runtime_error(name + ": wrong group order " + std::to_string(M->size()));
    return ReflGroup::from_matgroup(name, std::move(M), info.orbit_sig);
}

} // namespace reflex

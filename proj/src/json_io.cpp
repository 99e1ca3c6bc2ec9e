#include "skewrack/json_io.hpp"

#include <fstream>

namespace skewrack {

json rack_to_json(const SkewRack& X) {
    json j;
    j["size"] = X.size();
    std::vector<uint16_t> op = X.op_table();
    json rows = json::array();
    for (int a = 0; a < X.size(); ++a) {
        json row = json::array();
        for (int b = 0; b < X.size(); ++b) row.push_back(op[(size_t)a * X.size() + b]);
        rows.push_back(std::move(row));
    }
    j["op"] = std::move(rows);
    j["kappa"] = X.kappa_perm();
    if (auto rho = X.rho_perm()) j["rho"] = *rho;
    return j;
}

SkewRack rack_from_json(const json& j) {
    if (!j.contains("size") || !j.contains("op") || !j.contains("kappa"))
        throw std::invalid_argument("rack json needs size/op/kappa");
    int n = j["size"].get<int>();
    if (n <= 0 || n > SkewRack::kTableCap) throw std::invalid_argument("rack size out of range");
    const json& rows = j["op"];
    if (!rows.is_array() || (int)rows.size() != n)
        throw std::invalid_argument("rack op has wrong row count");
    std::vector<uint16_t> op((size_t)n * n);
    for (int a = 0; a < n; ++a) {
        if (!rows[a].is_array() || (int)rows[a].size() != n)
            throw std::invalid_argument("rack op has ragged rows");
        for (int b = 0; b < n; ++b) {
            long long v = rows[a][b].get<long long>();
            if (v < 0 || v >= n) throw std::invalid_argument("rack op entry out of range");
            op[(size_t)a * n + b] = (uint16_t)v;
        }
    }
    std::vector<int> kappa = j["kappa"].get<std::vector<int>>();
    std::optional<std::vector<int>> rho;
    if (j.contains("rho")) rho = j["rho"].get<std::vector<int>>();
    return SkewRack::from_tables(n, std::move(op), std::move(kappa), std::move(rho));
}

json cocycle_to_json(const BirackCocycle& phi) {
    json j;
    j["coeff"] = phi.coeff.torsion();
    const int n = phi.rack->size();
    json rows = json::array();
    for (int a = 0; a < n; ++a) {
        json row = json::array();
        for (int b = 0; b < n; ++b) row.push_back(phi.coeff.tuple(phi(a, b)));
        rows.push_back(std::move(row));
    }
    j["table"] = std::move(rows);
    return j;
}

BirackCocycle cocycle_from_json(const json& j, const SkewRack& rack) {
    if (!j.contains("coeff") || !j.contains("table"))
        throw std::invalid_argument("cocycle json needs coeff/table");
    BirackCocycle phi;
    phi.rack = &rack;
    phi.coeff = FiniteAbelianGroup(j["coeff"].get<std::vector<int>>());
    const int n = rack.size();
    const json& rows = j["table"];
    if (!rows.is_array() || (int)rows.size() != n)
        throw std::invalid_argument("cocycle table has wrong row count");
    phi.table.assign((size_t)n * n, 0);
    for (int a = 0; a < n; ++a) {
        if ((int)rows[a].size() != n) throw std::invalid_argument("cocycle table ragged");
        for (int b = 0; b < n; ++b)
            phi.table[(size_t)a * n + b] = phi.coeff.index(rows[a][b].get<std::vector<int>>());
    }
    return phi;
}

json group_to_json(const FiniteGroup& G) {
    json j;
    j["size"] = G.order();
    json rows = json::array();
    for (int a = 0; a < G.order(); ++a) {
        json row = json::array();
        for (int b = 0; b < G.order(); ++b) row.push_back(G.mul(a, b));
        rows.push_back(std::move(row));
    }
    j["mult"] = std::move(rows);
    if (!G.labels().empty()) j["labels"] = G.labels();
    return j;
}

FiniteGroup group_from_json(const json& j) {
    int n = j.at("size").get<int>();
    const json& rows = j.at("mult");
    if ((int)rows.size() != n) throw std::invalid_argument("group mult has wrong row count");
    std::vector<uint16_t> mult((size_t)n * n);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            long long v = rows[a][b].get<long long>();
            if (v < 0 || v >= n) throw std::invalid_argument("group entry out of range");
            mult[(size_t)a * n + b] = (uint16_t)v;
        }
    std::vector<std::string> labels;
    if (j.contains("labels")) labels = j["labels"].get<std::vector<std::string>>();
    return FiniteGroup(std::move(mult), std::move(labels));
}

json stats_to_json(const DiagramStats& st) {
    json j;
    j["components"] = st.components;
    j["framings"] = st.framings;
    j["linking"] = st.linking;
    return j;
}

json polynomial_to_json(const WeightPolynomial& P) {
    json j;
    j["ann"] = P.ann_size;
    j["components"] = P.components;
    json coeffs = json::object();
    for (const auto& [a, r] : P.coeffs) coeffs[P.coeff.label(a)] = r.str();
    j["coeffs"] = std::move(coeffs);
    return j;
}

json report_to_json(const CheckReport& r) {
    json j;
    j["passed"] = r.passed;
    if (!r.passed) {
        j["axiom"] = r.axiom;
        j["witness"] = r.witness;
    }
    return j;
}

namespace {
json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open " + path);
    json j;
    in >> j;
    return j;
}
} // namespace

SkewRack load_rack_file(const std::string& path) { return rack_from_json(load_json_file(path)); }

BirackCocycle load_cocycle_file(const std::string& path, const SkewRack& rack) {
    return cocycle_from_json(load_json_file(path), rack);
}

std::string dump_canonical(const json& j) { return j.dump(); }

} // namespace skewrack

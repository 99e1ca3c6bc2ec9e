#include "skewrack/recipes.hpp"

#include <map>

#include "skewrack/json_io.hpp"

namespace skewrack {

namespace {

std::pair<std::string, std::string> split_head(const std::string& text) {
    auto colon = text.find(':');
    if (colon == std::string::npos) throw std::invalid_argument("recipe needs 'kind:'");
    return {text.substr(0, colon), text.substr(colon + 1)};
}

std::map<std::string, std::string> parse_kv(const std::string& body) {
    std::map<std::string, std::string> out;
    size_t pos = 0;
    while (pos < body.size()) {
        size_t comma = body.find(',', pos);
        std::string item = body.substr(pos, comma == std::string::npos ? comma : comma - pos);
        auto eq = item.find('=');
        if (eq == std::string::npos) throw std::invalid_argument("recipe item needs '=': " + item);
        // nested group specs use ':' which never contains '=' or ','
        out[item.substr(0, eq)] = item.substr(eq + 1);
        if (comma == std::string::npos) break;
        pos = comma + 1;
    }
    return out;
}

int parse_int(const std::string& s, const char* what) {
    try {
        size_t used = 0;
        int v = std::stoi(s, &used);
        if (used != s.size()) throw std::invalid_argument(s);
        return v;
    } catch (const std::exception&) {
        throw std::invalid_argument(std::string("bad integer for ") + what + ": '" + s + "'");
    }
}

} // namespace

namespace {

// alternating group reindexed as its own table group
FiniteGroup build_alternating(int k) {
    FiniteGroup sym = build_symmetric(k);
    std::vector<int> alt = alternating_subgroup(sym, k);
    const int m = (int)alt.size();
    std::vector<int> pos(sym.order(), -1);
    for (int i = 0; i < m; ++i) pos[alt[i]] = i;
    std::vector<uint16_t> mult((size_t)m * m);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j)
            mult[(size_t)i * m + j] = (uint16_t)pos[sym.mul(alt[i], alt[j])];
    return FiniteGroup(std::move(mult));
}

} // namespace

FiniteGroup parse_group_spec(const std::string& text) {
    // shorthands s<k>, a<k> for the symmetric / alternating families
    if (text.size() == 2 && (text[0] == 's' || text[0] == 'a') && isdigit((unsigned char)text[1])) {
        int k = text[1] - '0';
        return text[0] == 's' ? build_symmetric(k) : build_alternating(k);
    }
    auto [kind, arg] = split_head(text);
    if (kind == "cyclic") return build_cyclic(parse_int(arg, "cyclic order"));
    if (kind == "sym") return build_symmetric(parse_int(arg, "symmetric degree"));
    if (kind == "alt") return build_alternating(parse_int(arg, "alternating degree"));
    if (kind == "sl2p") return build_sl2p(parse_int(arg, "sl2 prime"));
    throw std::invalid_argument("unknown group spec '" + text + "'");
}

namespace {

// subgroup of K named by a group spec; supports N identical to K,
// alt:<k> inside sym:<k>, and cyclic:<d> inside cyclic:<m>
std::vector<int> parse_subgroup_spec(const FiniteGroup& K, const std::string& k_spec,
                                     const std::string& n_spec) {
    auto all_of = [](const FiniteGroup& G) {
        std::vector<int> v(G.order());
        for (int i = 0; i < G.order(); ++i) v[i] = i;
        return v;
    };
    if (n_spec == k_spec) return all_of(K);

    std::string kind = n_spec, arg;
    auto colon = n_spec.find(':');
    if (colon != std::string::npos) {
        kind = n_spec.substr(0, colon);
        arg = n_spec.substr(colon + 1);
    } else if (n_spec.size() == 2 && n_spec[0] == 'a' && isdigit((unsigned char)n_spec[1])) {
        kind = "alt";
        arg = std::string(1, n_spec[1]);
    }
    if (kind == "alt") {
        int k = parse_int(arg, "alternating degree");
        return alternating_subgroup(K, k);
    }
    if (kind == "cyclic") {
        int d = parse_int(arg, "cyclic suborder");
        return cyclic_subgroup(K, d);
    }
    throw std::invalid_argument("unsupported subgroup spec '" + n_spec + "' in K=" + k_spec);
}

} // namespace

std::shared_ptr<RackRecipe> parse_rack_recipe(const std::string& text) {
    auto out = std::make_shared<RackRecipe>();
    out->text = text;
    auto [kind, body] = split_head(text);

    if (kind == "file") {
        out->rack = load_rack_file(body);
        return out;
    }
    if (kind == "conj") {
        auto kv = parse_kv(body);
        FiniteGroup G = parse_group_spec(kv.at("G"));
        std::string km = kv.count("kappa") ? kv.at("kappa") : "id";
        GroupHom kap = km == "neg" ? negation_hom(G) : identity_hom(G);
        if (km != "id" && km != "neg") throw std::invalid_argument("kappa must be id or neg");
        out->rack = conjugation_rack(G, kap);
        return out;
    }
    if (kind == "product" || kind == "normal_pair") {
        auto kv = parse_kv(body);
        std::string f_spec = kv.count("f") ? kv.at("f") : "id";
        if (f_spec != "id" && f_spec != "neg")
            throw std::invalid_argument("f must be id or neg");
        FiniteGroup K = parse_group_spec(kv.at("K"));
        if (kind == "product") {
            // keep the computed backend for large K
            auto holder = std::make_shared<NormalPairRack>();
            holder->K = std::move(K);
            GroupHom f = f_spec == "neg" ? negation_hom(holder->K) : identity_hom(holder->K);
            out->rack = product_rack(holder->K, f);
            out->pair = nullptr;
            if ((long long)holder->K.order() * holder->K.order() <=
                FiniteGroup::kOrderCap) {
                std::vector<int> all(holder->K.order());
                for (int i = 0; i < holder->K.order(); ++i) all[i] = i;
                *holder = normal_pair_rack(holder->K, all, f);
                out->pair = holder;
            }
            return out;
        }
        auto holder = std::make_shared<NormalPairRack>();
        std::vector<int> N = parse_subgroup_spec(K, kv.at("K"), kv.at("N"));
        GroupHom f = f_spec == "neg" ? negation_hom(K) : identity_hom(K);
        *holder = normal_pair_rack(K, N, f);
        out->pair = holder;
        out->rack = holder->rack;
        return out;
    }
    throw std::invalid_argument("unknown rack recipe '" + kind + "'");
}

std::shared_ptr<CocycleRecipe> parse_cocycle_recipe(const std::string& text,
                                                    std::shared_ptr<RackRecipe> rack) {
    auto out = std::make_shared<CocycleRecipe>();
    out->text = text;
    auto [kind, body] = split_head(text);

    if (kind == "prop28") {
        auto kv = parse_kv(body);
        int p = parse_int(kv.at("p"), "prop28 p");
        std::string es = kv.count("eps") ? kv.at("eps") : "1";
        int eps = (es == "1" || es == "+1") ? 1 : (es == "-1" ? -1 : 0);
        if (eps == 0) throw std::invalid_argument("eps must be +1 or -1");
        out->mod_p = mod_p_symmetric_cocycle(p, eps);
        out->phi = out->mod_p->phi;
        if (rack && !rack->rack.same_tables(*out->phi.rack))
            throw std::invalid_argument("cocycle recipe does not match the given rack");
        return out;
    }
    if (kind == "z2") {
        // positional k1,k2,k3
        std::vector<int> ks;
        size_t pos = 0;
        while (pos <= body.size()) {
            size_t comma = body.find(',', pos);
            ks.push_back(parse_int(
                body.substr(pos, comma == std::string::npos ? comma : comma - pos), "z2 k"));
            if (comma == std::string::npos) break;
            pos = comma + 1;
        }
        if (ks.size() != 3) throw std::invalid_argument("z2 needs k1,k2,k3");
        out->z2 = bilinear_z2_cocycle(ks[0], ks[1], ks[2]);
        out->phi = out->z2->phi;
        if (rack && !rack->rack.same_tables(*out->phi.rack))
            throw std::invalid_argument("cocycle recipe does not match the given rack");
        return out;
    }
    if (kind == "file") {
        if (!rack) throw std::invalid_argument("file cocycle needs a rack");
        out->file_rack = rack;
        out->phi = load_cocycle_file(body, rack->rack);
        return out;
    }
    throw std::invalid_argument("unknown cocycle recipe '" + kind + "'");
}

} // namespace skewrack

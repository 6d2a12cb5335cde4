#include "tg/io.hpp"

#include <fstream>
#include <json.hpp>

namespace tg {

namespace {

using nlohmann::json;
using ordered_json = nlohmann::ordered_json;

Int int_from_json(const json& j)
{
    if (j.is_string()) return Int(j.get<std::string>());
    if (j.is_number_integer()) return Int(j.get<long long>());
    throw validation_error("expected an integer or a decimal string, got: " + j.dump());
}

IntVector vec_from_json(const json& j)
{
    if (!j.is_array()) throw validation_error("expected an array of integers");
    IntVector v;
    for (const auto& x : j) v.push_back(int_from_json(x));
    return v;
}

ordered_json vec_to_json(const IntVector& v)
{
    ordered_json a = ordered_json::array();
    for (const Int& x : v) a.push_back(x.str());
    return a;
}

std::string slurp(const std::string& path)
{
    std::ifstream in(path);
    if (!in) throw validation_error("cannot open '" + path + "'");
    return std::string(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
}

void spit(const std::string& path, const std::string& text)
{
    std::ofstream out(path);
    if (!out) throw validation_error("cannot write '" + path + "'");
    out << text;
}

json parse(const std::string& text)
{
    json j = json::parse(text, nullptr, false);
    if (j.is_discarded()) throw validation_error("malformed JSON input");
    return j;
}

}  // namespace

SimplicialPoset poset_from_json_text(const std::string& text)
{
    json j = parse(text);
    if (!j.contains("rank_max") || !j.contains("elements"))
        throw validation_error("poset file needs 'rank_max' and 'elements'");
    int rank_max = int(int_from_json(j["rank_max"]));
    std::vector<SimplicialPoset::Elem> elems;
    std::map<std::string, int> index;
    for (const auto& e : j["elements"]) {
        SimplicialPoset::Elem el;
        el.id = e.at("id").get<std::string>();
        el.rank = int(int_from_json(e.at("rank")));
        index[el.id] = int(elems.size());
        elems.push_back(std::move(el));
    }
    int i = 0;
    for (const auto& e : j["elements"]) {
        for (const auto& c : e.value("covers", json::array())) {
            std::string cid = c.get<std::string>();
            auto it = index.find(cid);
            if (it == index.end())
                throw validation_error("poset: element '" + elems[i].id +
                                       "' covers unknown id '" + cid + "'");
            elems[i].covers.push_back(it->second);
        }
        ++i;
    }
    return SimplicialPoset::validate(rank_max, std::move(elems));
}

std::string poset_to_json_text(const SimplicialPoset& P)
{
    ordered_json j;
    j["rank_max"] = P.rank_max();
    ordered_json arr = ordered_json::array();
    // canonical order: by (rank, id)
    std::vector<int> order(P.size());
    for (int i = 0; i < P.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        return std::make_pair(P.elem(a).rank, P.elem(a).id) <
               std::make_pair(P.elem(b).rank, P.elem(b).id);
    });
    for (int i : order) {
        ordered_json e;
        e["id"] = P.elem(i).id;
        e["rank"] = P.elem(i).rank;
        std::vector<std::string> covers;
        for (int c : P.elem(i).covers) covers.push_back(P.elem(c).id);
        std::sort(covers.begin(), covers.end());
        e["covers"] = covers;
        arr.push_back(std::move(e));
    }
    j["elements"] = std::move(arr);
    return j.dump(2) + "\n";
}

SimplicialPoset load_poset(const std::string& path)
{
    return poset_from_json_text(slurp(path));
}

void save_poset(const SimplicialPoset& P, const std::string& path)
{
    spit(path, poset_to_json_text(P));
}

TorusGraph graph_from_json_text(const std::string& text)
{
    json j = parse(text);
    if (!j.contains("n") || !j.contains("vertices") || !j.contains("edges"))
        throw validation_error("graph file needs 'n', 'vertices' and 'edges'");
    RawGraph raw;
    raw.n = int(int_from_json(j["n"]));
    for (const auto& v : j["vertices"]) raw.vertex_ids.push_back(v.get<std::string>());
    for (const auto& e : j["edges"]) {
        RawGraph::RawEdge re;
        re.id = e.at("id").get<std::string>();
        const auto& ends = e.at("ends");
        if (!ends.is_array() || ends.size() != 2)
            throw validation_error("graph: edge '" + re.id + "' needs two ends");
        re.from = ends[0].get<std::string>();
        re.to = ends[1].get<std::string>();
        re.alpha_from = vec_from_json(e.at("alpha_from_first"));
        re.alpha_to = vec_from_json(e.at("alpha_from_second"));
        raw.edges.push_back(std::move(re));
    }
    return TorusGraph::validate(raw);
}

std::string graph_to_json_text(const TorusGraph& G)
{
    RawGraph raw = G.to_raw();
    ordered_json j;
    j["n"] = raw.n;
    j["vertices"] = raw.vertex_ids;
    ordered_json arr = ordered_json::array();
    for (const auto& e : raw.edges) {
        ordered_json je;
        je["id"] = e.id;
        je["ends"] = {e.from, e.to};
        je["alpha_from_first"] = vec_to_json(e.alpha_from);
        je["alpha_from_second"] = vec_to_json(e.alpha_to);
        arr.push_back(std::move(je));
    }
    j["edges"] = std::move(arr);
    return j.dump(2) + "\n";
}

TorusGraph load_graph(const std::string& path)
{
    return graph_from_json_text(slurp(path));
}

void save_graph(const TorusGraph& G, const std::string& path)
{
    spit(path, graph_to_json_text(G));
}

}  // namespace tg

#include "carc/io.hpp"

#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <vector>

namespace carc {

namespace {

int parse_int(const std::string& tok, const std::string& where) {
    size_t used = 0;
    int v;
    try {
        v = std::stoi(tok, &used);
    } catch (const std::exception&) {
        throw ParseError(where + ": expected integer, got '" + tok + "'");
    }
    if (used != tok.size()) throw ParseError(where + ": trailing junk in '" + tok + "'");
    return v;
}

} // namespace

CircularArcModel parse_model(std::istream& in) {
    std::string line;
    if (!std::getline(in, line)) throw ParseError("line 1: missing arc count");
    int n = parse_int(line, "line 1");
    if (n < 0) throw ParseError("line 1: negative arc count");
    if (!std::getline(in, line)) {
        if (n == 0) return CircularArcModel(std::vector<Extreme>{});
        throw ParseError("line 2: missing extreme list");
    }
    std::istringstream ss(line);
    std::string tok;
    std::vector<Extreme> order;
    std::vector<int> seen_s(n, 0), seen_t(n, 0);
    int idx = 0;
    while (ss >> tok) {
        idx++;
        std::string where = "line 2, token " + std::to_string(idx);
        if (tok.size() < 2 || (tok[0] != 's' && tok[0] != 't'))
            throw ParseError(where + ": expected s<i> or t<i>, got '" + tok + "'");
        int id = parse_int(tok.substr(1), where);
        if (id < 0 || id >= n) throw ParseError(where + ": arc id " + std::to_string(id) + " out of range [0," + std::to_string(n) + ")");
        bool beg = tok[0] == 's';
        int& seen = beg ? seen_s[id] : seen_t[id];
        if (seen) throw ParseError(where + ": duplicate extreme " + tok);
        seen = 1;
        order.push_back({id, beg ? ExtremeKind::Beginning : ExtremeKind::Ending});
    }
    if ((int)order.size() != 2 * n)
        throw ParseError("line 2: expected " + std::to_string(2 * n) + " extremes, got " + std::to_string(order.size()));
    for (int a = 0; a < n; a++) {
        if (!seen_s[a]) throw ParseError("line 2: missing beginning s" + std::to_string(a));
        if (!seen_t[a]) throw ParseError("line 2: missing ending t" + std::to_string(a));
    }
    return CircularArcModel(std::move(order));
}

void write_model(std::ostream& out, const CircularArcModel& m) {
    out << m.arc_count() << "\n" << m.to_string() << "\n";
}

Graph parse_graph(std::istream& in) {
    std::string line;
    if (!std::getline(in, line)) throw ParseError("line 1: missing header");
    std::istringstream hd(line);
    std::string t1, t2, extra;
    if (!(hd >> t1 >> t2)) throw ParseError("line 1: expected 'n m'");
    if (hd >> extra) throw ParseError("line 1: trailing junk");
    int n = parse_int(t1, "line 1");
    int mm = parse_int(t2, "line 1");
    if (n < 0 || mm < 0) throw ParseError("line 1: negative counts");
    Graph g(n);
    for (int e = 0; e < mm; e++) {
        std::string where = "line " + std::to_string(e + 2);
        if (!std::getline(in, line)) throw ParseError(where + ": missing edge");
        std::istringstream es(line);
        if (!(es >> t1 >> t2)) throw ParseError(where + ": expected 'u v'");
        int u = parse_int(t1, where), v = parse_int(t2, where);
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw ParseError(where + ": vertex out of range [0," + std::to_string(n) + ")");
        if (u == v) throw ParseError(where + ": self-loop");
        g.add_edge(u, v);
    }
    return g;
}

void write_graph(std::ostream& out, const Graph& g) {
    out << g.vertex_count() << " " << g.edge_count() << "\n";
    for (int u = 0; u < g.vertex_count(); u++)
        for (int v = u + 1; v < g.vertex_count(); v++)
            if (g.adjacent(u, v)) out << u << " " << v << "\n";
}

CircularArcModel load_model(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw ParseError("cannot open " + path);
    return parse_model(f);
}

Graph load_graph(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw ParseError("cannot open " + path);
    return parse_graph(f);
}

} // namespace carc

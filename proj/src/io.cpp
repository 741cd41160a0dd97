#include "obstra/io.hpp"

#include "obstra/error.hpp"

#include <fstream>
#include <sstream>

namespace obstra::io {

namespace {

struct Lines {
    std::vector<std::vector<std::string>> tokens; // per line, blank lines skipped
    std::vector<int> numbers;                     // original 1-based line number
    size_t pos = 0;

    explicit Lines(const std::string& text) {
        std::istringstream in(text);
        std::string line;
        int no = 0;
        while (std::getline(in, line)) {
            ++no;
            std::istringstream ls(line);
            std::vector<std::string> toks;
            std::string t;
            while (ls >> t) toks.push_back(t);
            if (toks.empty()) continue;
            tokens.push_back(std::move(toks));
            numbers.push_back(no);
        }
    }

    bool done() const { return pos == tokens.size(); }
    int line_no() const { return done() ? (numbers.empty() ? 1 : numbers.back() + 1) : numbers[pos]; }
    const std::vector<std::string>& peek() const {
        if (done()) fail(ErrorKind::parse, "line " + std::to_string(line_no()) + ": unexpected end of input");
        return tokens[pos];
    }
    std::vector<std::string> next() {
        auto t = peek();
        ++pos;
        return t;
    }
    [[noreturn]] void err(const std::string& msg) const {
        fail(ErrorKind::parse, "line " + std::to_string(line_no()) + ": " + msg);
    }
};

long parse_count(Lines& in, const std::string& tok, const std::string& what) {
    try {
        size_t used = 0;
        long v = std::stol(tok, &used);
        if (used != tok.size() || v < 0) throw std::invalid_argument(tok);
        return v;
    } catch (const std::exception&) {
        in.err("expected nonnegative " + what + ", got '" + tok + "'");
    }
}

Rat parse_coord(Lines& in, const std::string& tok) {
    try {
        return Rat::parse(tok);
    } catch (const Error& e) {
        in.err(e.what());
    }
}

std::vector<Edge> parse_edge_lines(Lines& in, long m, long n) {
    std::vector<Edge> edges;
    for (long i = 0; i < m; ++i) {
        auto t = in.peek();
        if (t.size() != 3 || t[0] != "e") in.err("expected 'e <u> <v>'");
        long u = parse_count(in, t[1], "vertex id");
        long v = parse_count(in, t[2], "vertex id");
        if (u >= v) in.err("edge endpoints must satisfy u < v");
        if (v >= n) in.err("edge endpoint out of range");
        edges.push_back({int(u), int(v)});
        in.next();
    }
    return edges;
}

Graph parse_graph_block(Lines& in) {
    auto t = in.peek();
    if (t.size() != 3 || t[0] != "graph") in.err("expected 'graph <n> <m>'");
    long n = parse_count(in, t[1], "vertex count");
    long m = parse_count(in, t[2], "edge count");
    in.next();
    return Graph(int(n), parse_edge_lines(in, m, n));
}

Drawing parse_drawing_block(Lines& in) {
    auto t = in.peek();
    if (t.size() != 3 || t[0] != "drawing") in.err("expected 'drawing <n> <m>'");
    long n = parse_count(in, t[1], "vertex count");
    long m = parse_count(in, t[2], "edge count");
    in.next();
    std::vector<Point> pts(n);
    std::vector<char> placed(n, 0);
    for (long i = 0; i < n; ++i) {
        auto v = in.peek();
        if (v.size() != 4 || v[0] != "v") in.err("expected 'v <id> <x> <y>'");
        long id = parse_count(in, v[1], "vertex id");
        if (id >= n) in.err("vertex id out of range");
        if (placed[id]) in.err("vertex id repeated");
        placed[id] = 1;
        pts[id] = {parse_coord(in, v[2]), parse_coord(in, v[3])};
        in.next();
    }
    auto edges = parse_edge_lines(in, m, n);
    return Drawing(Graph(int(n), std::move(edges)), std::move(pts));
}

std::vector<Point> parse_corner_lines(Lines& in, long k) {
    std::vector<Point> pts;
    for (long i = 0; i < k; ++i) {
        auto c = in.peek();
        if (c.size() != 2) in.err("expected '<x> <y>'");
        pts.push_back({parse_coord(in, c[0]), parse_coord(in, c[1])});
        in.next();
    }
    return pts;
}

} // namespace

Graph parse_graph(const std::string& text) {
    Lines in(text);
    Graph g = parse_graph_block(in);
    if (!in.done()) in.err("trailing content after graph block");
    return g;
}

Drawing parse_drawing(const std::string& text) {
    Lines in(text);
    Drawing d = parse_drawing_block(in);
    if (!in.done()) in.err("trailing content after drawing block");
    return d;
}

Scene parse_scene(const std::string& text) {
    Lines in(text);
    Drawing d = parse_drawing_block(in);
    int enclosure = 0;
    if (!in.done() && in.peek()[0] == "enclosure") {
        auto t = in.peek();
        if (t.size() != 2) in.err("expected 'enclosure <k>'");
        enclosure = int(parse_count(in, t[1], "enclosure count"));
        in.next();
    }
    std::vector<Polygon> obstacles;
    while (!in.done()) {
        auto t = in.peek();
        if (t.size() != 2 || t[0] != "obstacle") in.err("expected 'obstacle <k>'");
        long k = parse_count(in, t[1], "corner count");
        if (k < 3) in.err("obstacle needs at least 3 corners");
        in.next();
        obstacles.push_back(parse_corner_lines(in, k));
    }
    return Scene(std::move(d), std::move(obstacles), enclosure);
}

Polygon parse_polygon(const std::string& text) {
    Lines in(text);
    auto t = in.peek();
    if (t.size() != 2 || t[0] != "polygon") in.err("expected 'polygon <k>'");
    long k = parse_count(in, t[1], "corner count");
    if (k < 3) in.err("polygon needs at least 3 corners");
    in.next();
    Polygon p = parse_corner_lines(in, k);
    if (!in.done()) in.err("trailing content after polygon block");
    return p;
}

namespace {

void append_edges(std::string& out, const std::vector<Edge>& edges) {
    for (const auto& [u, v] : edges)
        out += "e " + std::to_string(u) + " " + std::to_string(v) + "\n";
}

void append_corners(std::string& out, const Polygon& poly) {
    for (const auto& p : poly) out += p.x.str() + " " + p.y.str() + "\n";
}

} // namespace

std::string serialize_graph(const Graph& g) {
    std::string out = "graph " + std::to_string(g.n) + " " + std::to_string(g.m()) + "\n";
    append_edges(out, g.edges);
    return out;
}

std::string serialize_drawing(const Drawing& d) {
    std::string out =
        "drawing " + std::to_string(d.graph.n) + " " + std::to_string(d.graph.m()) + "\n";
    for (int i = 0; i < d.graph.n; ++i)
        out += "v " + std::to_string(i) + " " + d.points[i].x.str() + " " +
               d.points[i].y.str() + "\n";
    append_edges(out, d.graph.edges);
    return out;
}

std::string serialize_scene(const Scene& s) {
    std::string out = serialize_drawing(s.drawing);
    if (s.enclosure > 0) out += "enclosure " + std::to_string(s.enclosure) + "\n";
    for (const auto& poly : s.obstacles) {
        out += "obstacle " + std::to_string(poly.size()) + "\n";
        append_corners(out, poly);
    }
    return out;
}

std::string serialize_polygon(const Polygon& p) {
    std::string out = "polygon " + std::to_string(p.size()) + "\n";
    append_corners(out, p);
    return out;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) fail(ErrorKind::parse, "cannot open file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) fail(ErrorKind::internal, "cannot write file: " + path);
    out << text;
    if (!out.flush()) fail(ErrorKind::internal, "failed writing file: " + path);
}

} // namespace obstra::io

#include "dircuts/io.hpp"

#include <algorithm>
#include <charconv>
#include <map>
#include <sstream>
#include <utility>

#include "dircuts/errors.hpp"

namespace dircuts {

namespace {

struct Record {
    int line = 0;
    std::vector<std::string> tokens;  // tokens[0] is the keyword
};

[[noreturn]] void fail(int line, const std::string& message) {
    throw InputError("line " + std::to_string(line) + ": " + message);
}

// Splits into comment-stripped whitespace-token records, keeping line numbers.
std::vector<Record> tokenize(const std::string& text) {
    std::vector<Record> records;
    int line = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t end = text.find('\n', pos);
        if (end == std::string::npos) end = text.size();
        ++line;
        std::string raw = text.substr(pos, end - pos);
        pos = end + 1;
        if (std::size_t hash = raw.find('#'); hash != std::string::npos) raw.resize(hash);
        Record rec{line, {}};
        std::istringstream words(raw);
        std::string word;
        while (words >> word) rec.tokens.push_back(word);
        if (!rec.tokens.empty()) records.push_back(std::move(rec));
        if (end == text.size()) break;
    }
    return records;
}

long long parse_int(const Record& rec, std::size_t index, long long lo, long long hi,
                    const char* what) {
    if (index >= rec.tokens.size())
        fail(rec.line, std::string("missing ") + what);
    const std::string& tok = rec.tokens[index];
    long long value = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
    if (ec != std::errc() || ptr != tok.data() + tok.size())
        fail(rec.line, "expected an integer " + std::string(what) + ", got '" + tok + "'");
    if (value < lo || value > hi)
        fail(rec.line, std::string(what) + " " + tok + " out of range [" + std::to_string(lo) +
                           ", " + std::to_string(hi) + "]");
    return value;
}

void expect_tokens(const Record& rec, std::size_t count) {
    if (rec.tokens.size() != count)
        fail(rec.line, "record '" + rec.tokens[0] + "' takes " + std::to_string(count - 1) +
                           " fields, got " + std::to_string(rec.tokens.size() - 1));
}

const Record& header_record(const std::vector<Record>& records, const char* kind) {
    if (records.empty()) throw InputError(std::string("empty file, expected a ") + kind + " header");
    if (records.front().tokens[0] != kind)
        fail(records.front().line,
             std::string("expected header '") + kind + "', got '" + records.front().tokens[0] + "'");
    return records.front();
}

// Splits "a:b" at the colon; both halves parsed by the caller.
std::pair<std::string, std::string> split_colon(const Record& rec, const std::string& tok) {
    std::size_t colon = tok.find(':');
    if (colon == std::string::npos || colon == 0 || colon + 1 == tok.size())
        fail(rec.line, "expected <left>:<right>, got '" + tok + "'");
    return {tok.substr(0, colon), tok.substr(colon + 1)};
}

long long parse_plain_int(const Record& rec, const std::string& tok, long long lo, long long hi,
                          const char* what) {
    long long value = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
    if (ec != std::errc() || ptr != tok.data() + tok.size())
        fail(rec.line, "expected an integer " + std::string(what) + ", got '" + tok + "'");
    if (value < lo || value > hi)
        fail(rec.line, std::string(what) + " " + tok + " out of range");
    return value;
}

// The single-record witness formats share this shape check.
const Record& single_record(const std::vector<Record>& records, const char* keyword) {
    if (records.empty())
        throw InputError(std::string("empty file, expected a '") + keyword + "' record");
    if (records.front().tokens[0] != keyword)
        fail(records.front().line, std::string("expected '") + keyword + "', got '" +
                                       records.front().tokens[0] + "'");
    if (records.size() > 1)
        fail(records[1].line, "unexpected record after the '" + std::string(keyword) + "' line");
    return records.front();
}

}  // namespace

PsiInstance parse_psi(const std::string& text) {
    std::vector<Record> records = tokenize(text);
    const Record& header = header_record(records, "psi");
    expect_tokens(header, 4);
    PsiInstance inst;
    inst.class_size = static_cast<int>(parse_int(header, 1, 0, 1'000'000, "class size"));
    inst.pattern_vertex_count =
        static_cast<int>(parse_int(header, 2, 0, 1'000'000, "pattern vertex count"));
    long long edge_count = parse_int(header, 3, 0, 1'000'000, "pattern edge count");
    inst.classes.resize(static_cast<std::size_t>(inst.pattern_vertex_count));

    std::vector<int> class_line(static_cast<std::size_t>(inst.pattern_vertex_count), 0);
    std::map<Arc, int> hedge_line;
    std::map<Arc, int> gedge_line;
    for (std::size_t r = 1; r < records.size(); ++r) {
        const Record& rec = records[r];
        const std::string& kind = rec.tokens[0];
        if (kind == "hclass") {
            if (rec.tokens.size() < 2) fail(rec.line, "hclass needs a pattern vertex");
            int i = static_cast<int>(
                parse_int(rec, 1, 1, inst.pattern_vertex_count, "pattern vertex"));
            if (class_line[static_cast<std::size_t>(i - 1)] != 0)
                fail(rec.line, "class " + std::to_string(i) + " already given on line " +
                                   std::to_string(class_line[static_cast<std::size_t>(i - 1)]));
            class_line[static_cast<std::size_t>(i - 1)] = rec.line;
            for (std::size_t f = 2; f < rec.tokens.size(); ++f) {
                inst.classes[static_cast<std::size_t>(i - 1)].push_back(static_cast<int>(
                    parse_int(rec, f, 0, 1'000'000'000, "host vertex")));
            }
            if (static_cast<int>(inst.classes[static_cast<std::size_t>(i - 1)].size()) !=
                inst.class_size)
                fail(rec.line, "class " + std::to_string(i) + " must list exactly " +
                                   std::to_string(inst.class_size) + " host vertices");
        } else if (kind == "hedge") {
            expect_tokens(rec, 3);
            int i = static_cast<int>(
                parse_int(rec, 1, 1, inst.pattern_vertex_count, "pattern vertex"));
            int j = static_cast<int>(
                parse_int(rec, 2, 1, inst.pattern_vertex_count, "pattern vertex"));
            if (i == j) fail(rec.line, "pattern edge endpoints must differ");
            Arc e{std::min(i, j), std::max(i, j)};
            if (auto it = hedge_line.find(e); it != hedge_line.end())
                fail(rec.line, "pattern edge already given on line " + std::to_string(it->second));
            hedge_line[e] = rec.line;
        } else if (kind == "gedge") {
            expect_tokens(rec, 3);
            int u = static_cast<int>(parse_int(rec, 1, 0, 1'000'000'000, "host vertex"));
            int v = static_cast<int>(parse_int(rec, 2, 0, 1'000'000'000, "host vertex"));
            if (u == v) fail(rec.line, "host edge endpoints must differ");
            Arc e{std::min(u, v), std::max(u, v)};
            if (auto it = gedge_line.find(e); it != gedge_line.end())
                fail(rec.line, "host edge already given on line " + std::to_string(it->second));
            gedge_line[e] = rec.line;
        } else {
            fail(rec.line, "unknown record '" + kind + "' in a psi file");
        }
    }
    for (int i = 1; i <= inst.pattern_vertex_count; ++i) {
        if (class_line[static_cast<std::size_t>(i - 1)] == 0)
            throw InputError("missing hclass record for pattern vertex " + std::to_string(i));
    }
    for (const auto& [edge, line] : hedge_line) inst.pattern_edges.push_back(edge);
    for (const auto& [edge, line] : gedge_line) inst.host_edges.push_back(edge);
    if (static_cast<long long>(inst.pattern_edges.size()) != edge_count)
        throw InputError("header announces " + std::to_string(edge_count) +
                         " pattern edges, file has " + std::to_string(inst.pattern_edges.size()));
    validate_psi(inst);
    if (!is_normalized(inst))
        throw InputError("psi files must hold normalized instances "
                         "(equal class sizes, no isolated pattern vertex)");
    return inst;
}

std::string serialize_psi(const PsiInstance& inst) {
    std::ostringstream out;
    out << "psi " << inst.class_size << ' ' << inst.pattern_vertex_count << ' '
        << inst.pattern_edges.size() << '\n';
    for (int i = 1; i <= inst.pattern_vertex_count; ++i) {
        out << "hclass " << i;
        for (int v : inst.classes[static_cast<std::size_t>(i - 1)]) out << ' ' << v;
        out << '\n';
    }
    for (const Arc& e : inst.pattern_edges) out << "hedge " << e.first << ' ' << e.second << '\n';
    for (const Arc& e : inst.host_edges) out << "gedge " << e.first << ' ' << e.second << '\n';
    return out.str();
}

DirMcInstance parse_dirmc(const std::string& text) {
    std::vector<Record> records = tokenize(text);
    const Record& header = header_record(records, "dirmc");
    expect_tokens(header, 4);
    int vertices = static_cast<int>(parse_int(header, 1, 0, 10'000'000, "vertex count"));
    long long pairs = parse_int(header, 2, 0, 1'000'000, "pair count");
    long long budget = parse_int(header, 3, 0, 1'000'000'000'000LL, "budget");

    DirMcInstance inst;
    inst.graph = Digraph(vertices);
    inst.budget = budget;
    inst.weight.assign(static_cast<std::size_t>(vertices), 0);
    std::vector<int> weight_line(static_cast<std::size_t>(vertices), 0);

    for (std::size_t r = 1; r < records.size(); ++r) {
        const Record& rec = records[r];
        const std::string& kind = rec.tokens[0];
        if (kind == "term") {
            expect_tokens(rec, 3);
            int s = static_cast<int>(parse_int(rec, 1, 0, vertices - 1, "terminal"));
            int t = static_cast<int>(parse_int(rec, 2, 0, vertices - 1, "terminal"));
            inst.terminal_pairs.emplace_back(s, t);
        } else if (kind == "w") {
            expect_tokens(rec, 3);
            int v = static_cast<int>(parse_int(rec, 1, 0, vertices - 1, "vertex"));
            long long w = parse_int(rec, 2, 1, budget + 1, "weight");
            if (weight_line[static_cast<std::size_t>(v)] != 0)
                fail(rec.line, "vertex " + std::to_string(v) + " already weighted on line " +
                                   std::to_string(weight_line[static_cast<std::size_t>(v)]));
            weight_line[static_cast<std::size_t>(v)] = rec.line;
            inst.weight[static_cast<std::size_t>(v)] = w;
        } else if (kind == "arc") {
            expect_tokens(rec, 3);
            int u = static_cast<int>(parse_int(rec, 1, 0, vertices - 1, "vertex"));
            int v = static_cast<int>(parse_int(rec, 2, 0, vertices - 1, "vertex"));
            if (u == v) fail(rec.line, "self-loop arc");
            inst.graph.add_arc(u, v);
        } else if (kind == "label") {
            expect_tokens(rec, 3);
            int v = static_cast<int>(parse_int(rec, 1, 0, vertices - 1, "vertex"));
            if (!inst.graph.label(v).empty())
                fail(rec.line, "vertex " + std::to_string(v) + " already labeled");
            inst.graph.set_label(v, rec.tokens[2]);
        } else {
            fail(rec.line, "unknown record '" + kind + "' in a dirmc file");
        }
    }
    if (static_cast<long long>(inst.terminal_pairs.size()) != pairs)
        throw InputError("header announces " + std::to_string(pairs) + " terminal pairs, file has " +
                         std::to_string(inst.terminal_pairs.size()));
    std::vector<bool> terminal = inst.terminal_mask();
    for (int v = 0; v < vertices; ++v) {
        bool weighted = weight_line[static_cast<std::size_t>(v)] != 0;
        if (terminal[static_cast<std::size_t>(v)] && weighted)
            fail(weight_line[static_cast<std::size_t>(v)],
                 "terminal " + std::to_string(v) + " must not carry a weight");
        if (!terminal[static_cast<std::size_t>(v)] && !weighted)
            throw InputError("missing w record for non-terminal vertex " + std::to_string(v));
    }
    validate_dirmc(inst);
    return inst;
}

std::string serialize_dirmc(const DirMcInstance& inst) {
    std::ostringstream out;
    out << "dirmc " << inst.graph.vertex_count() << ' ' << inst.terminal_pairs.size() << ' '
        << inst.budget << '\n';
    for (const Arc& p : inst.terminal_pairs) out << "term " << p.first << ' ' << p.second << '\n';
    std::vector<bool> terminal = inst.terminal_mask();
    for (int v = 0; v < inst.graph.vertex_count(); ++v) {
        if (!terminal[static_cast<std::size_t>(v)])
            out << "w " << v << ' ' << inst.weight[static_cast<std::size_t>(v)] << '\n';
    }
    ArcSet arcs = inst.graph.arcs();
    std::sort(arcs.begin(), arcs.end());
    for (const Arc& a : arcs) out << "arc " << a.first << ' ' << a.second << '\n';
    for (int v = 0; v < inst.graph.vertex_count(); ++v) {
        if (!inst.graph.label(v).empty()) out << "label " << v << ' ' << inst.graph.label(v) << '\n';
    }
    return out.str();
}

StorInstance parse_stor(const std::string& text) {
    std::vector<Record> records = tokenize(text);
    const Record& header = header_record(records, "stor");
    expect_tokens(header, 3);
    int vertices = static_cast<int>(parse_int(header, 1, 0, 10'000'000, "vertex count"));
    long long pairs = parse_int(header, 2, 0, 1'000'000, "pair count");

    StorInstance inst;
    inst.graph = MixedGraph(vertices);
    for (std::size_t r = 1; r < records.size(); ++r) {
        const Record& rec = records[r];
        const std::string& kind = rec.tokens[0];
        if (kind == "term") {
            expect_tokens(rec, 3);
            int s = static_cast<int>(parse_int(rec, 1, 0, vertices - 1, "terminal"));
            int t = static_cast<int>(parse_int(rec, 2, 0, vertices - 1, "terminal"));
            inst.terminal_pairs.emplace_back(s, t);
        } else if (kind == "arc" || kind == "edge") {
            expect_tokens(rec, 3);
            int u = static_cast<int>(parse_int(rec, 1, 0, vertices - 1, "vertex"));
            int v = static_cast<int>(parse_int(rec, 2, 0, vertices - 1, "vertex"));
            try {
                if (kind == "arc")
                    inst.graph.add_arc(u, v);
                else
                    inst.graph.add_edge(u, v);
            } catch (const InputError& e) {
                fail(rec.line, e.what());
            }
        } else if (kind == "label") {
            expect_tokens(rec, 3);
            int v = static_cast<int>(parse_int(rec, 1, 0, vertices - 1, "vertex"));
            if (!inst.graph.label(v).empty())
                fail(rec.line, "vertex " + std::to_string(v) + " already labeled");
            inst.graph.set_label(v, rec.tokens[2]);
        } else {
            fail(rec.line, "unknown record '" + kind + "' in a stor file");
        }
    }
    if (static_cast<long long>(inst.terminal_pairs.size()) != pairs)
        throw InputError("header announces " + std::to_string(pairs) + " terminal pairs, file has " +
                         std::to_string(inst.terminal_pairs.size()));
    validate_stor(inst);
    return inst;
}

std::string serialize_stor(const StorInstance& inst) {
    std::ostringstream out;
    out << "stor " << inst.graph.vertex_count() << ' ' << inst.terminal_pairs.size() << '\n';
    for (const Arc& p : inst.terminal_pairs) out << "term " << p.first << ' ' << p.second << '\n';
    ArcSet arcs = inst.graph.arcs();
    std::sort(arcs.begin(), arcs.end());
    for (const Arc& a : arcs) out << "arc " << a.first << ' ' << a.second << '\n';
    // Edge records stay in index order: orientation witnesses refer to it.
    for (const UndirectedEdge& e : inst.graph.edges()) out << "edge " << e.u << ' ' << e.v << '\n';
    for (int v = 0; v < inst.graph.vertex_count(); ++v) {
        if (!inst.graph.label(v).empty()) out << "label " << v << ' ' << inst.graph.label(v) << '\n';
    }
    return out.str();
}

Homomorphism parse_hom(const std::string& text) {
    std::vector<Record> records = tokenize(text);
    const Record& rec = single_record(records, "hom");
    std::map<int, int> by_vertex;
    for (std::size_t f = 1; f < rec.tokens.size(); ++f) {
        auto [left, right] = split_colon(rec, rec.tokens[f]);
        int i = static_cast<int>(parse_plain_int(rec, left, 1, 1'000'000, "pattern vertex"));
        int a = static_cast<int>(parse_plain_int(rec, right, 1, 1'000'000'000, "position"));
        if (by_vertex.count(i))
            fail(rec.line, "pattern vertex " + std::to_string(i) + " assigned twice");
        by_vertex[i] = a;
    }
    Homomorphism h;
    int expect = 1;
    for (const auto& [i, a] : by_vertex) {
        if (i != expect)
            fail(rec.line, "assignments must cover pattern vertices 1..k; missing " +
                               std::to_string(expect));
        h.image.push_back(a);
        ++expect;
    }
    return h;
}

std::string serialize_hom(const Homomorphism& h) {
    std::ostringstream out;
    out << "hom";
    for (std::size_t i = 0; i < h.image.size(); ++i)
        out << ' ' << i + 1 << ':' << h.image[i];
    out << '\n';
    return out.str();
}

Cutset parse_cutset(const std::string& text) {
    std::vector<Record> records = tokenize(text);
    const Record& rec = single_record(records, "cut");
    Cutset cut;
    for (std::size_t f = 1; f < rec.tokens.size(); ++f)
        cut.vertices.push_back(static_cast<int>(parse_int(rec, f, 0, 1'000'000'000, "vertex")));
    return cut;
}

std::string serialize_cutset(const Cutset& cut) {
    std::ostringstream out;
    out << "cut";
    for (int v : cut.vertices) out << ' ' << v;
    out << '\n';
    return out.str();
}

Orientation parse_orientation(const std::string& text) {
    std::vector<Record> records = tokenize(text);
    const Record& rec = single_record(records, "orient");
    std::map<int, EdgeDir> by_index;
    for (std::size_t f = 1; f < rec.tokens.size(); ++f) {
        auto [left, right] = split_colon(rec, rec.tokens[f]);
        int index = static_cast<int>(parse_plain_int(rec, left, 0, 1'000'000'000, "edge index"));
        EdgeDir dir;
        if (right == "F")
            dir = EdgeDir::Forward;
        else if (right == "B")
            dir = EdgeDir::Backward;
        else
            fail(rec.line, "edge direction must be F or B, got '" + right + "'");
        if (by_index.count(index))
            fail(rec.line, "edge " + std::to_string(index) + " oriented twice");
        by_index[index] = dir;
    }
    Orientation o;
    int expect = 0;
    for (const auto& [index, dir] : by_index) {
        if (index != expect)
            fail(rec.line, "orientations must cover edge indices 0..count-1; missing " +
                               std::to_string(expect));
        o.dir.push_back(dir);
        ++expect;
    }
    return o;
}

std::string serialize_orientation(const Orientation& o) {
    std::ostringstream out;
    out << "orient";
    for (std::size_t i = 0; i < o.dir.size(); ++i)
        out << ' ' << i << ':' << (o.dir[i] == EdgeDir::Forward ? 'F' : 'B');
    out << '\n';
    return out.str();
}

DirectedPathDecomposition parse_decomposition(const std::string& text) {
    std::vector<Record> records = tokenize(text);
    if (records.empty()) throw InputError("empty file, expected a 'dpw' record");
    if (records.front().tokens[0] != "dpw")
        fail(records.front().line,
             "expected 'dpw', got '" + records.front().tokens[0] + "'");
    expect_tokens(records.front(), 1);
    DirectedPathDecomposition d;
    for (std::size_t r = 1; r < records.size(); ++r) {
        const Record& rec = records[r];
        if (rec.tokens[0] != "dpw" && rec.tokens[0] != "bag")
            fail(rec.line, "expected a 'bag' record, got '" + rec.tokens[0] + "'");
        if (rec.tokens[0] == "dpw") fail(rec.line, "second 'dpw' record");
        std::vector<int> bag;
        for (std::size_t f = 1; f < rec.tokens.size(); ++f)
            bag.push_back(static_cast<int>(parse_int(rec, f, 0, 1'000'000'000, "vertex")));
        d.bags.push_back(std::move(bag));
    }
    return d;
}

std::string serialize_decomposition(const DirectedPathDecomposition& d) {
    std::ostringstream out;
    out << "dpw\n";
    for (const auto& bag : d.bags) {
        out << "bag";
        for (int v : bag) out << ' ' << v;
        out << '\n';
    }
    return out.str();
}

}  // namespace dircuts

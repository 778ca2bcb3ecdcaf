#include "hcrev/instance.hpp"

#include <algorithm>
#include <istream>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

#include "hcrev/rng.hpp"

namespace hcrev {

SimilarityGraph::SimilarityGraph(int n, std::vector<Edge> edges) : n_(n), edges_(std::move(edges)) {
    if (n_ < 1) throw std::invalid_argument("graph needs at least one data point");
    for (auto& e : edges_) {
        if (e.u > e.v) std::swap(e.u, e.v);
        if (e.u < 1 || e.v > n_ || e.u == e.v)
            throw std::invalid_argument("edge endpoints must satisfy 1 <= i < j <= n");
        if (e.w.sign() < 0) throw std::invalid_argument("edge weights must be nonnegative");
    }
    std::sort(edges_.begin(), edges_.end(),
              [](const Edge& a, const Edge& b) { return a.u != b.u ? a.u < b.u : a.v < b.v; });
    for (size_t i = 1; i < edges_.size(); ++i)
        if (edges_[i - 1].u == edges_[i].u && edges_[i - 1].v == edges_[i].v)
            throw std::invalid_argument("duplicate edge (" + std::to_string(edges_[i].u) + "," +
                                        std::to_string(edges_[i].v) + ")");
    // Drop explicit zero-weight edges; they carry no information.
    std::erase_if(edges_, [](const Edge& e) { return e.w.is_zero(); });
}

ScaledWeights scale_weights(const SimilarityGraph& g) {
    std::int64_t den = 1;
    for (const auto& e : g.edges()) {
        auto d = (std::int64_t)e.w.den();
        den = std::lcm(den, d);
    }
    ScaledWeights sw;
    sw.den = den;
    sw.num.reserve(g.edges().size());
    for (const auto& e : g.edges()) {
        int128 scaled = e.w.num() * (den / (std::int64_t)e.w.den());
        if (scaled > INT64_MAX) throw std::overflow_error("edge weight too large for scaled arithmetic");
        sw.num.push_back((std::int64_t)scaled);
    }
    return sw;
}

namespace {

[[noreturn]] void parse_fail(int line_no, const std::string& what) {
    throw std::invalid_argument("line " + std::to_string(line_no) + ": " + what);
}

bool next_content_line(std::istream& in, std::string& line, int& line_no) {
    while (std::getline(in, line)) {
        ++line_no;
        size_t first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos) continue;
        if (line[first] == '#') continue;
        return true;
    }
    return false;
}

}  // namespace

SimilarityGraph parse_graph(std::istream& in) {
    std::string line;
    int line_no = 0;
    if (!next_content_line(in, line, line_no)) throw std::invalid_argument("empty input, expected header 'n m'");
    int header_line = line_no;
    std::istringstream header(line);
    long long n = 0, m = 0;
    std::string extra;
    if (!(header >> n >> m) || (header >> extra)) parse_fail(header_line, "malformed header, expected 'n m'");
    if (n < 1) parse_fail(header_line, "n must be >= 1");
    if (m < 0) parse_fail(header_line, "edge count must be >= 0");

    std::vector<Edge> edges;
    edges.reserve((size_t)m);
    std::set<std::pair<int, int>> seen;
    for (long long k = 0; k < m; ++k) {
        if (!next_content_line(in, line, line_no))
            throw std::invalid_argument("unexpected end of input: expected " + std::to_string(m) +
                                        " edges, got " + std::to_string(k));
        std::istringstream ls(line);
        long long i = 0, j = 0;
        std::string wtext;
        if (!(ls >> i >> j >> wtext) || (ls >> extra)) parse_fail(line_no, "malformed edge line, expected 'i j w'");
        if (i < 1 || i > n || j < 1 || j > n) parse_fail(line_no, "endpoint out of range [1," + std::to_string(n) + "]");
        if (i == j) parse_fail(line_no, "self-loop on " + std::to_string(i));
        Rational w;
        try {
            w = Rational::parse_decimal(wtext);
        } catch (const std::invalid_argument& ex) {
            parse_fail(line_no, ex.what());
        }
        if (w.sign() < 0) parse_fail(line_no, "negative weight " + wtext);
        int u = (int)std::min(i, j), v = (int)std::max(i, j);
        if (!seen.emplace(u, v).second)
            parse_fail(line_no, "duplicate edge (" + std::to_string(u) + "," + std::to_string(v) + ")");
        edges.push_back({u, v, w});
    }
    if (next_content_line(in, line, line_no)) parse_fail(line_no, "trailing content after the declared edges");
    return SimilarityGraph((int)n, std::move(edges));
}

SimilarityGraph parse_graph(const std::string& text) {
    std::istringstream in(text);
    return parse_graph(in);
}

std::string serialize_graph(const SimilarityGraph& g) {
    std::ostringstream out;
    out << g.n() << ' ' << g.edges().size() << '\n';
    for (const auto& e : g.edges()) out << e.u << ' ' << e.v << ' ' << e.w.to_string() << '\n';
    return out.str();
}

SimilarityGraph gen_matching(int n) {
    if (n < 2 || n % 2 != 0) throw std::invalid_argument("matching instance needs even n >= 2");
    std::vector<Edge> edges;
    edges.reserve(n / 2);
    for (int k = 1; k <= n / 2; ++k) edges.push_back({2 * k - 1, 2 * k, Rational(1)});
    return SimilarityGraph(n, std::move(edges));
}

SimilarityGraph gen_random(int n, double density, std::int64_t max_weight, std::uint64_t seed) {
    if (density < 0.0 || density > 1.0) throw std::invalid_argument("density must be in [0, 1]");
    if (max_weight < 1) throw std::invalid_argument("max_weight must be >= 1");
    Rng rng(seed);
    bool always = density >= 1.0;
    std::uint64_t threshold = always ? 0 : (std::uint64_t)(density * 18446744073709551616.0);
    std::vector<Edge> edges;
    for (int i = 1; i < n; ++i) {
        for (int j = i + 1; j <= n; ++j) {
            bool keep = always || rng.next() < threshold;
            if (!keep) continue;
            auto w = (std::int64_t)(1 + rng.below((std::uint64_t)max_weight));
            edges.push_back({i, j, Rational(w)});
        }
    }
    return SimilarityGraph(n, std::move(edges));
}

Rational total_weight(const SimilarityGraph& g) {
    Rational sum;
    for (const auto& e : g.edges()) sum += e.w;
    return sum;
}

}  // namespace hcrev

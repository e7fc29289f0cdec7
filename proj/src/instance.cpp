#include "pdbep/instance.hpp"

#include <algorithm>
#include <istream>
#include <sstream>

#include "pdbep/errors.hpp"

namespace pdbep {

EdgePacking::EdgePacking(std::vector<EdgeId> ids) : ids_(std::move(ids)) {
  std::sort(ids_.begin(), ids_.end());
  ids_.erase(std::unique(ids_.begin(), ids_.end()), ids_.end());
}

bool EdgePacking::contains(EdgeId e) const {
  return std::binary_search(ids_.begin(), ids_.end(), e);
}

Instance Instance::create(std::size_t n, std::vector<Edge> edges,
                          std::vector<long long> bounds,
                          std::optional<std::vector<Rational>> weights) {
  if (bounds.size() != n) {
    throw ParameterError("bounds size " + std::to_string(bounds.size()) +
                         " does not match vertex count " + std::to_string(n));
  }
  if (weights && weights->size() != edges.size()) {
    throw ParameterError("weights size does not match edge count");
  }
  Instance inst;
  inst.incident_.resize(n);
  for (EdgeId e = 0; e < edges.size(); ++e) {
    const Edge& ed = edges[e];
    if (ed.u >= n || ed.v >= n) {
      throw ParameterError("edge " + std::to_string(e) +
                           " references vertex outside range");
    }
    if (ed.u == ed.v) {
      throw ParameterError("edge " + std::to_string(e) + " is a self-loop");
    }
    inst.incident_[ed.u].push_back(e);
    inst.incident_[ed.v].push_back(e);
  }
  for (std::size_t v = 0; v < n; ++v) {
    if (bounds[v] < 0) {
      throw ParameterError("negative bound at vertex " + std::to_string(v));
    }
    bounds[v] =
        std::min(bounds[v], static_cast<long long>(inst.incident_[v].size()));
  }
  if (weights) {
    for (std::size_t e = 0; e < weights->size(); ++e) {
      if ((*weights)[e] < 0) {
        throw ParameterError("negative weight at edge " + std::to_string(e));
      }
    }
    // An edgeless weight vector carries no information and would not
    // survive a serialize/parse round trip.
    if (weights->empty()) weights.reset();
  }
  inst.edges_ = std::move(edges);
  inst.bounds_ = std::move(bounds);
  inst.weights_ = std::move(weights);
  return inst;
}

namespace {

struct Line {
  int number;
  std::vector<std::string> tokens;
};

std::vector<Line> tokenize(std::istream& in) {
  std::vector<Line> lines;
  std::string raw;
  int number = 0;
  while (std::getline(in, raw)) {
    ++number;
    if (auto hash = raw.find('#'); hash != std::string::npos) {
      raw.erase(hash);
    }
    std::istringstream split(raw);
    Line line{number, {}};
    std::string tok;
    while (split >> tok) line.tokens.push_back(tok);
    if (!line.tokens.empty()) lines.push_back(std::move(line));
  }
  return lines;
}

long long parse_count(const Line& line, const std::string& tok,
                      const char* what) {
  try {
    std::size_t used = 0;
    long long value = std::stoll(tok, &used);
    if (used != tok.size() || value < 0) throw std::invalid_argument(tok);
    return value;
  } catch (const std::exception&) {
    throw ParseError(line.number,
                     std::string("bad ") + what + " '" + tok + "'");
  }
}

}  // namespace

Instance Instance::parse(std::istream& in) {
  std::vector<Line> lines = tokenize(in);
  if (lines.empty()) throw ParseError(1, "missing problem line");

  const Line& head = lines.front();
  if (head.tokens.size() != 4 || head.tokens[0] != "p" ||
      head.tokens[1] != "pdbep") {
    throw ParseError(head.number, "expected 'p pdbep <n> <m>'");
  }
  const long long n = parse_count(head, head.tokens[2], "vertex count");
  const long long m = parse_count(head, head.tokens[3], "edge count");

  std::vector<Edge> edges;
  edges.reserve(static_cast<std::size_t>(m));
  std::vector<std::optional<long long>> declared(static_cast<std::size_t>(n));
  std::vector<std::optional<Rational>> edge_weight;
  bool any_weight = false;

  for (std::size_t i = 1; i < lines.size(); ++i) {
    const Line& line = lines[i];
    const std::string& kind = line.tokens[0];
    if (kind == "p") {
      throw ParseError(line.number, "duplicate problem line");
    } else if (kind == "c") {
      if (line.tokens.size() != 3) {
        throw ParseError(line.number, "expected 'c <vertex> <bound>'");
      }
      long long v = parse_count(line, line.tokens[1], "vertex id");
      if (v >= n) {
        throw ParseError(line.number, "vertex " + std::to_string(v) +
                                          " out of range (n=" +
                                          std::to_string(n) + ")");
      }
      if (declared[static_cast<std::size_t>(v)]) {
        throw ParseError(line.number,
                         "duplicate bound for vertex " + std::to_string(v));
      }
      declared[static_cast<std::size_t>(v)] =
          parse_count(line, line.tokens[2], "bound");
    } else if (kind == "e") {
      if (line.tokens.size() != 3 && line.tokens.size() != 4) {
        throw ParseError(line.number, "expected 'e <u> <v> [weight]'");
      }
      long long u = parse_count(line, line.tokens[1], "vertex id");
      long long v = parse_count(line, line.tokens[2], "vertex id");
      if (u >= n || v >= n) {
        throw ParseError(line.number, "edge endpoint out of range (n=" +
                                          std::to_string(n) + ")");
      }
      if (u == v) {
        throw ParseError(line.number, "self-loop at vertex " +
                                          std::to_string(u));
      }
      edge_weight.emplace_back();
      if (line.tokens.size() == 4) {
        Rational w;
        try {
          w = parse_rational(line.tokens[3]);
        } catch (const std::invalid_argument& ex) {
          throw ParseError(line.number, ex.what());
        }
        if (w < 0) throw ParseError(line.number, "negative weight");
        edge_weight.back() = w;
        any_weight = true;
      }
      edges.push_back(
          {static_cast<VertexId>(u), static_cast<VertexId>(v)});
    } else {
      throw ParseError(line.number, "unknown line kind '" + kind + "'");
    }
  }

  if (static_cast<long long>(edges.size()) != m) {
    throw ParseError(lines.back().number,
                     "problem line declares " + std::to_string(m) +
                         " edges but " + std::to_string(edges.size()) +
                         " were given");
  }

  // Bounds default to the vertex degree; compute degrees first.
  std::vector<long long> degree(static_cast<std::size_t>(n), 0);
  for (const Edge& e : edges) {
    ++degree[e.u];
    ++degree[e.v];
  }
  std::vector<long long> bounds(static_cast<std::size_t>(n));
  for (std::size_t v = 0; v < bounds.size(); ++v) {
    bounds[v] = declared[v].value_or(degree[v]);
  }

  std::optional<std::vector<Rational>> weights;
  if (any_weight) {
    weights.emplace(edges.size(), Rational(1));
    for (std::size_t e = 0; e < edges.size(); ++e) {
      if (edge_weight[e]) (*weights)[e] = *edge_weight[e];
    }
  }
  return create(static_cast<std::size_t>(n), std::move(edges),
                std::move(bounds), std::move(weights));
}

Instance Instance::parse(const std::string& text) {
  std::istringstream in(text);
  return parse(in);
}

std::string Instance::serialize() const {
  std::ostringstream out;
  out << "p pdbep " << vertex_count() << " " << edge_count() << "\n";
  for (std::size_t v = 0; v < vertex_count(); ++v) {
    out << "c " << v << " " << bounds_[v] << "\n";
  }
  for (EdgeId e = 0; e < edges_.size(); ++e) {
    out << "e " << edges_[e].u << " " << edges_[e].v;
    if (weights_) out << " " << format_rational((*weights_)[e]);
    out << "\n";
  }
  return out.str();
}

bool Instance::operator==(const Instance& other) const {
  return edges_ == other.edges_ && bounds_ == other.bounds_ &&
         weights_ == other.weights_;
}

std::vector<long long> packing_degrees(const Instance& inst,
                                       const EdgePacking& p) {
  std::vector<long long> deg(inst.vertex_count(), 0);
  for (EdgeId e : p) {
    if (e >= inst.edge_count()) {
      throw ParameterError("packing references edge " + std::to_string(e) +
                           " outside instance");
    }
    ++deg[inst.edge(e).u];
    ++deg[inst.edge(e).v];
  }
  return deg;
}

bool is_feasible(const Instance& inst, const EdgePacking& p) {
  std::vector<long long> deg = packing_degrees(inst, p);
  for (EdgeId e : p) {
    const Edge& ed = inst.edge(e);
    if (deg[ed.u] > inst.bound(ed.u) && deg[ed.v] > inst.bound(ed.v)) {
      return false;
    }
  }
  return true;
}

long long upper_bound(const Instance& inst) {
  long long total = 0;
  for (std::size_t v = 0; v < inst.vertex_count(); ++v) {
    total += inst.bound(v);
  }
  return total;
}

Rational packing_weight(const Instance& inst, const EdgePacking& p) {
  if (!p.empty() && p.ids().back() >= inst.edge_count()) {
    throw ParameterError("packing references edge " +
                         std::to_string(p.ids().back()) +
                         " outside instance");
  }
  if (!inst.weighted()) return Rational(static_cast<long long>(p.size()));
  Rational total = 0;
  for (EdgeId e : p) total += inst.weight(e);
  return total;
}

}  // namespace pdbep

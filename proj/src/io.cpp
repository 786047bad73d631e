#include "qform/io.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <optional>
#include <set>
#include <sstream>

#include "qform/errors.hpp"

namespace qform {

namespace {

struct Token {
  std::string text;
  long col = 0;  // 1-based
};

struct Line {
  long number = 0;
  std::vector<Token> tokens;
};

std::vector<Line> tokenize(const std::string& text) {
  std::vector<Line> lines;
  std::istringstream in(text);
  std::string raw;
  long number = 0;
  while (std::getline(in, raw)) {
    ++number;
    if (auto hash = raw.find('#'); hash != std::string::npos) raw.resize(hash);
    Line line{number, {}};
    std::size_t i = 0;
    while (i < raw.size()) {
      while (i < raw.size() && std::isspace(static_cast<unsigned char>(raw[i]))) ++i;
      std::size_t start = i;
      while (i < raw.size() && !std::isspace(static_cast<unsigned char>(raw[i]))) ++i;
      if (i > start)
        line.tokens.push_back({raw.substr(start, i - start), static_cast<long>(start + 1)});
    }
    if (!line.tokens.empty()) lines.push_back(std::move(line));
  }
  return lines;
}

[[noreturn]] void fail(const std::string& file, const Line& line, const Token& tok,
                       const std::string& msg) {
  throw ParseError(file, line.number, tok.col, msg, tok.text);
}

[[noreturn]] void fail(const std::string& file, const Line& line, const std::string& msg) {
  throw ParseError(file, line.number, line.tokens.empty() ? 1 : line.tokens.front().col, msg,
                   line.tokens.empty() ? "" : line.tokens.front().text);
}

Int parse_int(const std::string& file, const Line& line, const Token& tok,
              const std::string& value) {
  std::size_t i = value.size() && (value[0] == '-' || value[0] == '+') ? 1 : 0;
  if (i == value.size()) fail(file, line, tok, "expected an integer");
  for (; i < value.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(value[i])))
      fail(file, line, tok, "expected an integer");
  return Int(value);
}

// key=value decorations after the positional tokens
std::map<std::string, std::pair<std::string, Token>> decorations(
    const std::string& file, const Line& line, std::size_t first,
    const std::set<std::string>& allowed) {
  std::map<std::string, std::pair<std::string, Token>> out;
  for (std::size_t i = first; i < line.tokens.size(); ++i) {
    const Token& tok = line.tokens[i];
    auto eq = tok.text.find('=');
    if (eq == std::string::npos || eq == 0 || eq + 1 >= tok.text.size())
      fail(file, line, tok, "expected key=value");
    std::string key = tok.text.substr(0, eq);
    if (!allowed.count(key)) fail(file, line, tok, "unknown decoration '" + key + "'");
    if (out.count(key)) fail(file, line, tok, "repeated decoration '" + key + "'");
    out[key] = {tok.text.substr(eq + 1), tok};
  }
  return out;
}

const Line& header(const std::string& file, const std::vector<Line>& lines,
                   const char* expect) {
  if (lines.empty()) throw ParseError(file, 1, 1, "empty file", "");
  const Line& first = lines.front();
  if (first.tokens.size() != 2 || first.tokens[0].text != "format")
    fail(file, first, "expected 'format " + std::string(expect) + "' header");
  if (first.tokens[1].text != expect)
    fail(file, first, first.tokens[1],
         std::string("expected format '") + expect + "', got '" + first.tokens[1].text + "'");
  return first;
}

}  // namespace

FileFormat sniff_format(const std::string& text, const std::string& filename) {
  auto lines = tokenize(text);
  if (lines.empty()) throw ParseError(filename, 1, 1, "empty file", "");
  const Line& first = lines.front();
  if (first.tokens.size() != 2 || first.tokens[0].text != "format")
    fail(filename, first, "expected a 'format rg1|nt1|chain1' header");
  const std::string& f = first.tokens[1].text;
  if (f == "rg1") return FileFormat::rg1;
  if (f == "nt1") return FileFormat::nt1;
  if (f == "chain1") return FileFormat::chain1;
  fail(filename, first, first.tokens[1], "unknown format '" + f + "'");
}

ResolutionGraph parse_resolution(const std::string& text, const std::string& filename) {
  auto lines = tokenize(text);
  header(filename, lines, "rg1");

  std::vector<RVertex> vertices;
  std::vector<REdge> edges;
  std::vector<RArrow> arrows;
  std::map<std::string, long> declared;  // id -> line
  std::vector<std::pair<Line, Token>> endpoint_refs;

  for (std::size_t li = 1; li < lines.size(); ++li) {
    const Line& line = lines[li];
    const std::string& kw = line.tokens[0].text;
    if (kw == "vertex") {
      if (line.tokens.size() < 2) fail(filename, line, "vertex needs an id");
      const Token& id = line.tokens[1];
      if (declared.count(id.text)) fail(filename, line, id, "duplicate id '" + id.text + "'");
      declared[id.text] = line.number;
      auto dec = decorations(filename, line, 2, {"genus", "euler", "mult"});
      if (!dec.count("genus")) fail(filename, line, "vertex needs genus=<int>");
      RVertex v;
      v.id = id.text;
      v.genus = parse_int(filename, line, dec["genus"].second, dec["genus"].first);
      if (dec.count("euler"))
        v.euler = parse_int(filename, line, dec["euler"].second, dec["euler"].first);
      if (dec.count("mult"))
        v.mult = parse_int(filename, line, dec["mult"].second, dec["mult"].first);
      vertices.push_back(std::move(v));
    } else if (kw == "edge") {
      if (line.tokens.size() != 3) fail(filename, line, "edge needs two vertex ids");
      edges.push_back({line.tokens[1].text, line.tokens[2].text});
      endpoint_refs.push_back({line, line.tokens[1]});
      endpoint_refs.push_back({line, line.tokens[2]});
    } else if (kw == "arrow") {
      if (line.tokens.size() < 3) fail(filename, line, "arrow needs an id and a vertex id");
      const Token& id = line.tokens[1];
      if (declared.count(id.text)) fail(filename, line, id, "duplicate id '" + id.text + "'");
      declared[id.text] = line.number;
      auto dec = decorations(filename, line, 3, {"mult"});
      RArrow a;
      a.id = id.text;
      a.vertex = line.tokens[2].text;
      if (dec.count("mult"))
        a.mult = parse_int(filename, line, dec["mult"].second, dec["mult"].first);
      endpoint_refs.push_back({line, line.tokens[2]});
      arrows.push_back(std::move(a));
    } else {
      fail(filename, line, line.tokens[0], "unknown keyword '" + kw + "'");
    }
  }

  std::set<std::string> vertex_ids;
  for (const RVertex& v : vertices) vertex_ids.insert(v.id);
  for (const auto& [line, tok] : endpoint_refs)
    if (!vertex_ids.count(tok.text))
      fail(filename, line, tok, "endpoint '" + tok.text + "' is not a declared vertex");

  // decoration mix is a parse-level rejection with a line number: report
  // the first vertex that kills the last surviving decoration scheme
  bool still_euler = true, still_mult = true;
  for (const RVertex& v : vertices) {
    still_euler = still_euler && v.euler.has_value();
    still_mult = still_mult && v.mult.has_value();
    if (!still_euler && !still_mult)
      throw ParseError(filename, declared[v.id], 1,
                       "vertex '" + v.id +
                           "' breaks the decoration scheme: vertices must all carry euler "
                           "or all carry mult",
                       v.id);
  }

  return ResolutionGraph(std::move(vertices), std::move(edges), std::move(arrows));
}

NTGraph parse_ntgraph(const std::string& text, const std::string& filename) {
  auto lines = tokenize(text);
  header(filename, lines, "nt1");

  std::vector<Piece> pieces;
  std::vector<NTEdge> edges;
  std::vector<NTArrow> arrows;
  std::set<std::string> declared;

  auto orbit_of = [&](std::map<std::string, std::pair<std::string, Token>>& dec,
                      const Line& line, const std::string& self, std::string& orbit,
                      long long& index) {
    orbit = self;
    index = 0;
    if (dec.count("orbit")) orbit = dec["orbit"].first;
    if (dec.count("index"))
      index = to_longlong(parse_int(filename, line, dec["index"].second, dec["index"].first));
  };

  for (std::size_t li = 1; li < lines.size(); ++li) {
    const Line& line = lines[li];
    const std::string& kw = line.tokens[0].text;
    if (kw == "vertex") {
      if (line.tokens.size() < 2) fail(filename, line, "vertex needs an id");
      const Token& id = line.tokens[1];
      if (!declared.insert(id.text).second)
        fail(filename, line, id, "duplicate id '" + id.text + "'");
      auto dec = decorations(filename, line, 2, {"genus", "orbit", "index"});
      if (!dec.count("genus")) fail(filename, line, "vertex needs genus=<int>");
      Piece p;
      p.id = id.text;
      p.genus = parse_int(filename, line, dec["genus"].second, dec["genus"].first);
      orbit_of(dec, line, p.id, p.orbit, p.index);
      pieces.push_back(std::move(p));
    } else if (kw == "edge") {
      if (line.tokens.size() < 4) fail(filename, line, "edge needs an id and two vertex ids");
      const Token& id = line.tokens[1];
      if (!declared.insert(id.text).second)
        fail(filename, line, id, "duplicate id '" + id.text + "'");
      auto dec = decorations(filename, line, 4, {"screw", "orbit", "index"});
      if (!dec.count("screw")) fail(filename, line, "edge needs screw=<posint>");
      NTEdge e;
      e.id = id.text;
      e.from = line.tokens[2].text;
      e.to = line.tokens[3].text;
      e.screw = parse_int(filename, line, dec["screw"].second, dec["screw"].first);
      orbit_of(dec, line, e.id, e.orbit, e.index);
      edges.push_back(std::move(e));
    } else if (kw == "arrow") {
      if (line.tokens.size() < 3) fail(filename, line, "arrow needs an id and a vertex id");
      const Token& id = line.tokens[1];
      if (!declared.insert(id.text).second)
        fail(filename, line, id, "duplicate id '" + id.text + "'");
      auto dec = decorations(filename, line, 3, {"screw", "orbit", "index"});
      if (!dec.count("screw")) fail(filename, line, "arrow needs screw=<posint>");
      NTArrow a;
      a.id = id.text;
      a.piece = line.tokens[2].text;
      a.screw = parse_int(filename, line, dec["screw"].second, dec["screw"].first);
      orbit_of(dec, line, a.id, a.orbit, a.index);
      arrows.push_back(std::move(a));
    } else {
      fail(filename, line, line.tokens[0], "unknown keyword '" + kw + "'");
    }
  }
  return NTGraph(std::move(pieces), std::move(edges), std::move(arrows));
}

std::vector<std::pair<std::string, OneChain>> parse_chains(const std::string& text,
                                                           const NTGraph& g,
                                                           const std::string& filename) {
  auto lines = tokenize(text);
  header(filename, lines, "chain1");

  std::vector<std::pair<std::string, OneChain>> out;
  std::set<std::string> names;
  for (std::size_t li = 1; li < lines.size(); ++li) {
    const Line& line = lines[li];
    if (line.tokens[0].text != "chain")
      fail(filename, line, line.tokens[0], "unknown keyword '" + line.tokens[0].text + "'");
    if (line.tokens.size() < 3 || line.tokens[2].text != "=")
      fail(filename, line, "expected 'chain <name> = ...'");
    const std::string& name = line.tokens[1].text;
    if (!names.insert(name).second)
      fail(filename, line, line.tokens[1], "duplicate chain name '" + name + "'");

    // normalize glued signs ("-d_l" -> "-", "d_l")
    std::vector<Token> toks;
    for (std::size_t i = 3; i < line.tokens.size(); ++i) {
      const Token& t = line.tokens[i];
      if (t.text.size() > 1 && (t.text[0] == '+' || t.text[0] == '-')) {
        toks.push_back({t.text.substr(0, 1), t.col});
        toks.push_back({t.text.substr(1), t.col + 1});
      } else {
        toks.push_back(t);
      }
    }

    OneChain chain;
    bool first = true;
    std::size_t i = 0;
    while (i < toks.size()) {
      Int sign = 1;
      if (toks[i].text == "+" || toks[i].text == "-") {
        sign = toks[i].text == "-" ? -1 : 1;
        ++i;
        if (i == toks.size()) fail(filename, line, toks[i - 1], "dangling sign");
      } else if (!first) {
        fail(filename, line, toks[i], "expected '+' or '-' between chain terms");
      }
      const Token& id = toks[i];
      if (id.text == "+" || id.text == "-") fail(filename, line, id, "expected an edge id");
      if (!g.is_edge(id.text) && !g.is_arrow(id.text))
        throw Error(ErrorKind::validation, "UnknownEdge",
                    filename + ":" + std::to_string(line.number) + ": chain '" + name +
                        "' references unknown edge or arrow '" + id.text + "'");
      chain.add(id.text, sign);
      ++i;
      first = false;
    }
    out.emplace_back(name, std::move(chain));
  }
  return out;
}

namespace {

std::string int_str(const Int& v) { return v.str(); }

}  // namespace

std::string serialize_resolution(const ResolutionGraph& g) {
  std::ostringstream os;
  os << "format rg1\n";
  for (const RVertex& v : g.vertices()) {
    os << "vertex " << v.id << " genus=" << int_str(v.genus);
    if (v.euler) os << " euler=" << int_str(*v.euler);
    if (v.mult) os << " mult=" << int_str(*v.mult);
    os << "\n";
  }
  for (const REdge& e : g.edges()) os << "edge " << e.a << " " << e.b << "\n";
  for (const RArrow& a : g.arrows()) {
    os << "arrow " << a.id << " " << a.vertex;
    if (a.mult != 1) os << " mult=" << int_str(a.mult);
    os << "\n";
  }
  return os.str();
}

std::string serialize_ntgraph(const NTGraph& g) {
  std::ostringstream os;
  os << "format nt1\n";
  auto orbit_suffix = [&](const std::string& id, const std::string& orbit, long long index) {
    std::ostringstream s;
    if (orbit != id || index != 0) s << " orbit=" << orbit << " index=" << index;
    return s.str();
  };
  for (const Piece& p : g.pieces())
    os << "vertex " << p.id << " genus=" << int_str(p.genus)
       << orbit_suffix(p.id, p.orbit, p.index) << "\n";
  for (const NTEdge& e : g.edges())
    os << "edge " << e.id << " " << e.from << " " << e.to << " screw=" << int_str(e.screw)
       << orbit_suffix(e.id, e.orbit, e.index) << "\n";
  for (const NTArrow& a : g.arrows())
    os << "arrow " << a.id << " " << a.piece << " screw=" << int_str(a.screw)
       << orbit_suffix(a.id, a.orbit, a.index) << "\n";
  return os.str();
}

std::string serialize_chains(const std::vector<std::pair<std::string, OneChain>>& chains) {
  std::ostringstream os;
  os << "format chain1\n";
  for (const auto& [name, chain] : chains) {
    os << "chain " << name << " =";
    bool first = true;
    for (const auto& [id, k] : chain.coeff) {
      Int n = k < 0 ? -k : k;
      for (Int i = 0; i < n; ++i) {
        if (first && k > 0)
          os << " " << id;
        else
          os << (k < 0 ? " - " : " + ") << id;
        first = false;
      }
    }
    os << "\n";
  }
  return os.str();
}

namespace {

std::string quoted(const std::string& s) { return "\"" + s + "\""; }

}  // namespace

std::string to_dot(const ResolutionGraph& g) {
  std::ostringstream os;
  os << "graph resolution {\n";
  std::vector<const RVertex*> vs;
  for (const RVertex& v : g.vertices()) vs.push_back(&v);
  std::sort(vs.begin(), vs.end(),
            [](const RVertex* a, const RVertex* b) { return a->id < b->id; });
  for (const RVertex* v : vs) {
    os << "  " << quoted(v->id) << " [label=\"" << v->id << ":g=" << int_str(v->genus);
    if (v->mult) os << ",m=" << int_str(*v->mult);
    os << "\"];\n";
  }
  std::vector<const RArrow*> as;
  for (const RArrow& a : g.arrows()) as.push_back(&a);
  std::sort(as.begin(), as.end(),
            [](const RArrow* a, const RArrow* b) { return a->id < b->id; });
  for (const RArrow* a : as)
    os << "  " << quoted(a->id) << " [shape=plaintext,label=\"" << a->id << "\"];\n";
  std::vector<std::pair<std::string, std::string>> es;
  for (const REdge& e : g.edges())
    es.push_back({std::min(e.a, e.b), std::max(e.a, e.b)});
  std::sort(es.begin(), es.end());
  for (const auto& [a, b] : es) os << "  " << quoted(a) << " -- " << quoted(b) << ";\n";
  for (const RArrow* a : as)
    os << "  " << quoted(a->vertex) << " -- " << quoted(a->id) << " [dir=forward];\n";
  os << "}\n";
  return os.str();
}

std::string to_dot(const NTGraph& g) {
  std::ostringstream os;
  os << "graph semistable {\n";
  std::vector<const Piece*> ps;
  for (const Piece& p : g.pieces()) ps.push_back(&p);
  std::sort(ps.begin(), ps.end(), [](const Piece* a, const Piece* b) { return a->id < b->id; });
  for (const Piece* p : ps)
    os << "  " << quoted(p->id) << " [label=\"" << p->id << ":g=" << int_str(p->genus)
       << "\"];\n";
  std::vector<const NTArrow*> as;
  for (const NTArrow& a : g.arrows()) as.push_back(&a);
  std::sort(as.begin(), as.end(),
            [](const NTArrow* a, const NTArrow* b) { return a->id < b->id; });
  for (const NTArrow* a : as)
    os << "  " << quoted(a->id) << " [shape=plaintext,label=\"" << a->id << "\"];\n";
  std::vector<const NTEdge*> es;
  for (const NTEdge& e : g.edges()) es.push_back(&e);
  std::sort(es.begin(), es.end(),
            [](const NTEdge* a, const NTEdge* b) { return a->id < b->id; });
  for (const NTEdge* e : es)
    os << "  " << quoted(e->from) << " -- " << quoted(e->to) << " [label=\"s="
       << int_str(e->screw) << "\"];\n";
  for (const NTArrow* a : as)
    os << "  " << quoted(a->piece) << " -- " << quoted(a->id) << " [dir=forward,label=\"s="
       << int_str(a->screw) << "\"];\n";
  os << "}\n";
  return os.str();
}

}  // namespace qform

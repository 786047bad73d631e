#include "qform/cli.hpp"

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "qform/charpoly.hpp"
#include "qform/errors.hpp"
#include "qform/io.hpp"
#include "qform/multiplicity.hpp"
#include "qform/quadform.hpp"
#include "qform/screw.hpp"
#include "qform/semistable.hpp"

namespace qform::cli {

namespace {

using json = nlohmann::ordered_json;

json json_int(const Int& v) {
  if (fits_json_number(v)) return json(to_longlong(v));
  return json(v.str());  // exact decimal string beyond 53-bit safety
}

json json_int_list(const std::vector<Int>& v) {
  json a = json::array();
  for (const Int& x : v) a.push_back(json_int(x));
  return a;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) validation_error("NoSuchFile", "cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

struct Input {
  std::string path;
  FileFormat format;
  std::optional<ResolutionGraph> rg;
  std::optional<NTGraph> nt;
};

Input load_graph(const std::string& path) {
  Input in;
  in.path = path;
  std::string text = read_file(path);
  in.format = sniff_format(text, path);
  switch (in.format) {
    case FileFormat::rg1:
      in.rg = parse_resolution(text, path);
      break;
    case FileFormat::nt1:
      in.nt = parse_ntgraph(text, path);
      break;
    default:
      validation_error("WrongFormat", "'" + path + "' is a chain file, expected rg1 or nt1");
  }
  return in;
}

const ResolutionGraph& need_rg(const Input& in, const char* op) {
  if (!in.rg)
    validation_error("WrongFormat",
                     std::string(op) + " needs an rg1 resolution graph, got nt1 input");
  return *in.rg;
}

NTGraph to_nt(const Input& in) {
  if (in.nt) return *in.nt;
  return semistable_reduction(*in.rg);
}

// ---- per-command rendering ------------------------------------------------

struct Ctx {
  bool json_mode = false;
  bool absolute = false;
  bool expanded = false;
  std::string basis_path;
  std::string dot_path;
};

json screws_json(const ScrewData& s) {
  json doc;
  doc["e"] = json_int(s.e);
  json arr = json::array();
  for (const BambooScrew& b : s.per_bamboo) {
    json e;
    e["id"] = b.bamboo_id;
    e["kind"] = to_string(b.kind);
    e["d"] = json_int(b.d);
    e["scn"] = rat_string(b.scn);
    e["s"] = json_int(b.s);
    arr.push_back(e);
  }
  doc["bamboos"] = arr;
  return doc;
}

json nt_json(const NTGraph& g) {
  json doc;
  json ps = json::array();
  for (const Piece& p : g.pieces())
    ps.push_back({{"id", p.id}, {"genus", json_int(p.genus)}, {"orbit", p.orbit},
                  {"index", p.index}});
  json es = json::array();
  for (const NTEdge& e : g.edges())
    es.push_back({{"id", e.id}, {"from", e.from}, {"to", e.to}, {"screw", json_int(e.screw)},
                  {"orbit", e.orbit}, {"index", e.index}});
  json as = json::array();
  for (const NTArrow& a : g.arrows())
    as.push_back({{"id", a.id}, {"piece", a.piece}, {"screw", json_int(a.screw)},
                  {"orbit", a.orbit}, {"index", a.index}});
  doc["pieces"] = ps;
  doc["edges"] = es;
  doc["arrows"] = as;
  return doc;
}

json gram_json(const GramForm& f) {
  json doc;
  doc["basis"] = f.names;
  json abs = json::array();
  for (bool b : f.absolute) abs.push_back(b);
  doc["absolute"] = abs;
  json rows = json::array();
  for (std::size_t i = 0; i < f.q.rows(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < f.q.cols(); ++j) row.push_back(json_int(f.q(i, j)));
    rows.push_back(row);
  }
  doc["matrix"] = rows;
  return doc;
}

json inv_json(const FormInvariants& v) {
  json doc;
  doc["dimension"] = v.dimension;
  doc["rank"] = v.rank;
  doc["det"] = json_int(v.det);
  doc["det_squarefree"] = json_int(v.det_squarefree);
  doc["snf"] = json_int_list(v.snf);
  doc["positive_definite"] = v.positive_definite;
  doc["even"] = v.even;
  doc["absolute_dimension"] = v.absolute_dimension;
  doc["even_absolute"] = v.even_absolute;
  doc["absolute_det"] = json_int(v.absolute_det);
  doc["absolute_det_squarefree"] = json_int(v.absolute_det_squarefree);
  doc["absolute_snf"] = json_int_list(v.absolute_snf);
  return doc;
}

json cyclo_json(const FactoredCyclo& f) {
  json doc;
  json factors = json::array();
  for (auto it = f.factors().rbegin(); it != f.factors().rend(); ++it)
    factors.push_back(json::array({json_int(it->first), json_int(it->second)}));
  doc["factors"] = factors;
  doc["string"] = f.str();
  doc["degree"] = json_int(f.degree());
  return doc;
}

std::string inv_text(const FormInvariants& v) {
  std::ostringstream os;
  os << "dimension=" << v.dimension << " rank=" << v.rank << " det=" << v.det
     << " det_squarefree=" << v.det_squarefree << " snf=[";
  for (std::size_t i = 0; i < v.snf.size(); ++i) os << (i ? "," : "") << v.snf[i];
  os << "] positive_definite=" << (v.positive_definite ? "true" : "false")
     << " even=" << (v.even ? "true" : "false")
     << " absolute_dimension=" << v.absolute_dimension
     << " even_absolute=" << (v.even_absolute ? "true" : "false")
     << " absolute_det=" << v.absolute_det
     << " absolute_det_squarefree=" << v.absolute_det_squarefree << " absolute_snf=[";
  for (std::size_t i = 0; i < v.absolute_snf.size(); ++i)
    os << (i ? "," : "") << v.absolute_snf[i];
  os << "]";
  return os.str();
}

void write_dot(const Ctx& ctx, const std::string& dot) {
  std::ofstream out(ctx.dot_path, std::ios::binary);
  if (!out) validation_error("NoSuchFile", "cannot write '" + ctx.dot_path + "'");
  out << dot;
}

GramForm gram_for(const Input& in, const Ctx& ctx) {
  NTGraph nt = to_nt(in);
  ChainBasis basis;
  if (!ctx.basis_path.empty())
    basis = make_basis(nt, parse_chains(read_file(ctx.basis_path), nt, ctx.basis_path));
  else
    basis = default_basis(nt);
  GramForm f = gram(nt, basis);
  return ctx.absolute ? absolute_block(f) : f;
}

json run_validate(const Input& in, const Ctx& ctx, std::string& text) {
  json doc;
  doc["file"] = in.path;
  if (in.rg) {
    doc["format"] = "rg1";
    doc["vertices"] = in.rg->vertices().size();
    doc["edges"] = in.rg->edges().size();
    doc["arrows"] = in.rg->arrows().size();
    std::ostringstream os;
    os << "valid rg1 vertices=" << in.rg->vertices().size() << " edges=" << in.rg->edges().size()
       << " arrows=" << in.rg->arrows().size() << "\n";
    text = os.str();
    if (!ctx.dot_path.empty()) write_dot(ctx, to_dot(*in.rg));
  } else {
    doc["format"] = "nt1";
    doc["pieces"] = in.nt->pieces().size();
    doc["edges"] = in.nt->edges().size();
    doc["arrows"] = in.nt->arrows().size();
    std::ostringstream os;
    os << "valid nt1 pieces=" << in.nt->pieces().size() << " edges=" << in.nt->edges().size()
       << " arrows=" << in.nt->arrows().size() << "\n";
    text = os.str();
    if (!ctx.dot_path.empty()) write_dot(ctx, to_dot(*in.nt));
  }
  doc["valid"] = true;
  return doc;
}

json run_mult(const Input& in, const Ctx&, std::string& text) {
  const ResolutionGraph& g = need_rg(in, "mult");
  auto m = solve_multiplicities(g);
  json vals;
  std::ostringstream os;
  for (const RVertex& v : g.vertices()) {
    vals[v.id] = json_int(m.at(v.id));
    os << "mult " << v.id << " " << m.at(v.id) << "\n";
  }
  text = os.str();
  json doc;
  doc["file"] = in.path;
  doc["multiplicities"] = vals;
  return doc;
}

json run_screw(const Input& in, const Ctx&, std::string& text) {
  const ResolutionGraph& g = need_rg(in, "screw");
  auto m = multiplicities(g);
  ScrewData s = compute_screws(g, m);
  std::ostringstream os;
  os << "e " << s.e << "\n";
  for (const BambooScrew& b : s.per_bamboo)
    os << "screw " << b.bamboo_id << " d=" << b.d << " scn=" << rat_string(b.scn)
       << " s=" << b.s << " kind=" << to_string(b.kind) << "\n";
  text = os.str();
  json doc;
  doc["file"] = in.path;
  doc.update(screws_json(s));
  return doc;
}

json run_ssred(const Input& in, const Ctx& ctx, std::string& text) {
  NTGraph nt = semistable_reduction(need_rg(in, "ssred"));
  text = serialize_ntgraph(nt);
  if (!ctx.dot_path.empty()) write_dot(ctx, to_dot(nt));
  json doc;
  doc["file"] = in.path;
  doc["semistable"] = nt_json(nt);
  return doc;
}

json run_gram(const Input& in, const Ctx& ctx, std::string& text) {
  GramForm f = gram_for(in, ctx);
  std::ostringstream os;
  os << "gram " << f.q.rows() << "x" << f.q.cols() << "\n";
  os << "basis";
  for (const std::string& n : f.names) os << " " << n;
  os << "\nabsolute";
  for (std::size_t i = 0; i < f.names.size(); ++i)
    if (f.absolute[i]) os << " " << f.names[i];
  os << "\n";
  for (std::size_t i = 0; i < f.q.rows(); ++i) {
    for (std::size_t j = 0; j < f.q.cols(); ++j) os << (j ? " " : "") << f.q(i, j);
    os << "\n";
  }
  text = os.str();
  json doc;
  doc["file"] = in.path;
  doc.update(gram_json(f));
  return doc;
}

json run_charpoly(const Input& in, const Ctx& ctx, std::string& text) {
  json doc;
  doc["file"] = in.path;
  std::ostringstream os;
  std::optional<NTGraph> nt;
  if (in.rg) {
    auto m = multiplicities(*in.rg);
    FactoredCyclo d = delta(*in.rg, m);
    os << "delta " << d.str() << "\n";
    os << "mu " << d.degree() << "\n";
    doc["delta"] = cyclo_json(d);
    doc["mu"] = json_int(d.degree());
    if (ctx.expanded) {
      os << "delta_expanded";
      json coeffs = json::array();
      for (const Int& c : d.expand()) {
        os << " " << c;
        coeffs.push_back(json_int(c));
      }
      os << "\n";
      doc["delta_expanded"] = coeffs;
    }
    nt = semistable_reduction(*in.rg);
  } else {
    nt = *in.nt;
  }
  FactoredCyclo d2 = delta2(*nt);
  os << "delta2 " << d2.str() << "\n";
  os << "jordan " << jordan_block_count(*nt) << "\n";
  doc["delta2"] = cyclo_json(d2);
  doc["jordan"] = json_int(jordan_block_count(*nt));
  if (ctx.expanded) {
    os << "delta2_expanded";
    json coeffs = json::array();
    for (const Int& c : d2.expand()) {
      os << " " << c;
      coeffs.push_back(json_int(c));
    }
    os << "\n";
    doc["delta2_expanded"] = coeffs;
  }
  text = os.str();
  return doc;
}

json run_invariants(const Input& in, const Ctx&, std::string& text) {
  json doc;
  doc["file"] = in.path;
  doc["format"] = in.rg ? "rg1" : "nt1";
  std::optional<NTGraph> nt;
  if (in.rg) {
    auto m = multiplicities(*in.rg);
    json vals;
    for (const RVertex& v : in.rg->vertices()) vals[v.id] = json_int(m.at(v.id));
    doc["multiplicities"] = vals;
    ScrewData s = compute_screws(*in.rg, m);
    doc["screw"] = screws_json(s);
    nt = build_ntgraph(*in.rg, m, s);
    bool rational = true;
    for (const RVertex& v : in.rg->vertices())
      if (v.genus != 0) rational = false;
    if (rational) {
      FactoredCyclo d = delta(*in.rg, m);
      doc["delta"] = cyclo_json(d);
      doc["mu"] = json_int(d.degree());
    }
  } else {
    nt = *in.nt;
  }
  doc["semistable"] = nt_json(*nt);
  doc["quotient_tree"] = is_quotient_tree(*nt);
  GramForm f = gram(*nt, default_basis(*nt));
  doc["gram"] = gram_json(f);
  doc["form_invariants"] = inv_json(invariants(f));
  doc["delta2"] = cyclo_json(delta2(*nt));
  doc["jordan"] = json_int(jordan_block_count(*nt));
  text = doc.dump(2) + "\n";  // the pipeline report is a JSON document in both modes
  return doc;
}

int run_compare(const std::vector<std::string>& files, const Ctx& ctx, std::ostream& out) {
  GramForm a = gram_for(load_graph(files[0]), ctx);
  GramForm b = gram_for(load_graph(files[1]), ctx);
  CompareReport r = compare(a, b);
  if (ctx.json_mode) {
    json doc;
    doc["left"] = {{"file", files[0]}};
    doc["left"].update(inv_json(r.left));
    doc["right"] = {{"file", files[1]}};
    doc["right"].update(inv_json(r.right));
    doc["distinguished"] = r.distinguished();
    doc["distinguished_by"] = r.distinguished_by;
    out << doc.dump(2) << "\n";
  } else {
    out << "left " << files[0] << ": " << inv_text(r.left) << "\n";
    out << "right " << files[1] << ": " << inv_text(r.right) << "\n";
    if (r.distinguished()) {
      out << "distinguished_by:";
      for (const std::string& s : r.distinguished_by) out << " " << s;
      out << "\n";
    } else {
      out << "not_distinguished\n";
    }
  }
  return 0;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact invariants of curve-germ monodromy from decorated plumbing graphs"};
  app.require_subcommand(1);

  struct Opts {
    std::vector<std::string> files;
    std::string format = "text";
    std::string out_path;
    Ctx ctx;
  };

  std::map<std::string, Opts> opts;
  std::map<std::string, CLI::App*> subs;
  auto add_common = [&](CLI::App* sub, const char* name, std::size_t min_files,
                        std::size_t max_files) {
    Opts& o = opts[name];
    sub->add_option("files", o.files, "input graph files")
        ->required()
        ->expected(static_cast<int>(min_files), static_cast<int>(max_files));
    sub->add_option("--format", o.format, "output format")
        ->check(CLI::IsMember({"text", "json"}));
    sub->add_option("--out", o.out_path, "write results to a file instead of stdout");
    subs[name] = sub;
  };

  add_common(app.add_subcommand("validate", "parse and validate a graph file"), "validate", 1, 1000);
  subs["validate"]->add_option("--dot", opts["validate"].ctx.dot_path, "DOT export path");
  add_common(app.add_subcommand("mult", "solve the multiplicity system"), "mult", 1, 1000);
  add_common(app.add_subcommand("screw", "exponent e and per-bamboo screw numbers"), "screw", 1, 1000);
  add_common(app.add_subcommand("ssred", "semistable reduction graph"), "ssred", 1, 1000);
  subs["ssred"]->add_option("--dot", opts["ssred"].ctx.dot_path, "DOT export path");
  add_common(app.add_subcommand("gram", "Gram matrix of the screw form"), "gram", 1, 1000);
  subs["gram"]->add_option("--basis", opts["gram"].ctx.basis_path, "chain1 basis file");
  subs["gram"]->add_flag("--absolute", opts["gram"].ctx.absolute, "restrict to absolute cycles");
  add_common(app.add_subcommand("charpoly", "characteristic polynomials"), "charpoly", 1, 1000);
  subs["charpoly"]->add_flag("--expanded", opts["charpoly"].ctx.expanded,
                             "also print expanded coefficients");
  add_common(app.add_subcommand("invariants", "full pipeline report (JSON)"), "invariants", 1, 1000);
  add_common(app.add_subcommand("compare", "invariant-level comparison of two forms"), "compare",
             2, 2);
  subs["compare"]->add_option("--basis", opts["compare"].ctx.basis_path, "chain1 basis file");
  subs["compare"]->add_flag("--absolute", opts["compare"].ctx.absolute,
                            "compare absolute blocks only");

  std::vector<std::string> argv = args;
  try {
    app.parse(std::vector<std::string>(argv.rbegin(), argv.rend()));
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }

  const std::string name = app.get_subcommands().front()->get_name();
  Opts& o = opts[name];
  o.ctx.json_mode = o.format == "json";

  std::ostringstream buffer;
  std::ostream* sink = &buffer;

  try {
    if (!o.ctx.dot_path.empty() && o.files.size() != 1)
      validation_error("BadArguments", "--dot needs exactly one input file");
    if (!o.ctx.basis_path.empty() && name == "gram" && o.files.size() != 1)
      validation_error("BadArguments", "--basis needs exactly one input file");

    if (name == "compare") {
      run_compare(o.files, o.ctx, *sink);
    } else {
      json batch = json::array();
      for (std::size_t i = 0; i < o.files.size(); ++i) {
        Input in = load_graph(o.files[i]);
        std::string text;
        json doc;
        if (name == "validate") doc = run_validate(in, o.ctx, text);
        else if (name == "mult") doc = run_mult(in, o.ctx, text);
        else if (name == "screw") doc = run_screw(in, o.ctx, text);
        else if (name == "ssred") doc = run_ssred(in, o.ctx, text);
        else if (name == "gram") doc = run_gram(in, o.ctx, text);
        else if (name == "charpoly") doc = run_charpoly(in, o.ctx, text);
        else if (name == "invariants") doc = run_invariants(in, o.ctx, text);
        if (o.ctx.json_mode || name == "invariants") {
          batch.push_back(doc);
        } else {
          if (o.files.size() > 1) *sink << "file " << o.files[i] << "\n";
          *sink << text;
          if (o.files.size() > 1 && i + 1 < o.files.size()) *sink << "\n";
        }
      }
      if (o.ctx.json_mode || name == "invariants") {
        if (o.files.size() == 1)
          *sink << batch.front().dump(2) << "\n";
        else
          *sink << batch.dump(2) << "\n";
      }
    }
  } catch (const ParseError& e) {
    err << e.file() << ":" << e.line() << ":" << e.column() << ": error: ParseError: "
        << e.what();
    if (!e.token().empty()) err << " near '" << e.token() << "'";
    err << "\n";
    return 1;
  } catch (const Error& e) {
    err << "error: " << e.code() << ": " << e.what() << "\n";
    return e.kind() == ErrorKind::invariant ? 2 : 1;
  } catch (const std::exception& e) {
    err << "error: Internal: " << e.what() << "\n";
    return 1;
  }

  if (!o.out_path.empty()) {
    std::ofstream f(o.out_path, std::ios::binary);
    if (!f) {
      err << "error: NoSuchFile: cannot write '" << o.out_path << "'\n";
      return 1;
    }
    f << buffer.str();
  } else {
    out << buffer.str();
  }
  return 0;
}

}  // namespace qform::cli

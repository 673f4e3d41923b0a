#include "gitstate/cli.hpp"

#include <chrono>
#include <fstream>
#include <limits>
#include <sstream>

#include "CLI11.hpp"

#include "gitstate/json_io.hpp"
#include "gitstate/poly_parse.hpp"

namespace gitstate {

using nlohmann::json;

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw UsageError("cannot write " + path);
  out << content;
}

struct Options {
  std::string verb;
  std::string system_path, instance_path, ideal_path, point_path, out_path;
  std::string polynomial_text;
  std::string order = "lex";
  std::string output = "json";
  int degree = -1;
  int rank = 0;  // 0 = infer from the generators
  int jobs = 1;
  double timeout = 0;
  bool stats = false;
};

int inferred_rank(const std::vector<Polynomial>& gens, int requested) {
  if (requested > 0) return requested;
  int r = 0;
  for (const auto& f : gens) r = std::max(r, f.max_x_index());
  if (r == 0) throw UsageError("cannot infer the rank from constant generators; pass --rank");
  return r;
}

json weights_json(const std::set<Character>& st) {
  json arr = json::array();
  for (auto it = st.rbegin(); it != st.rend(); ++it) arr.push_back(*it);
  return arr;
}

std::string join_scalars(const json& arr) {
  std::string line;
  for (const auto& e : arr) {
    if (!line.empty()) line += ' ';
    if (e.is_string())
      line += e.get<std::string>();
    else
      line += e.dump();
  }
  return line;
}

void payload_text(const std::string& verb, const json& payload, std::ostringstream& out) {
  if (payload.contains("error")) {
    out << "error: " << payload.at("error").get<std::string>() << "\n";
    return;
  }
  if (verb == "reduce" || verb == "hilbert-point") {
    out << "r: " << payload.at("r") << "\n";
    out << "d: " << payload.at("d") << "\n";
    out << "b: " << payload.at("b") << "\n";
    if (payload.contains("character"))
      out << "character: " << join_scalars(payload.at("character")) << "\n";
    for (const auto& entry : payload.at("coords")) {
      std::string wedge;
      for (const auto& f : entry.at("wedge")) {
        if (!wedge.empty()) wedge += " ^ ";
        wedge += join_scalars(f);
      }
      out << "coord [" << wedge << "]: " << entry.at("coeff").get<std::string>() << "\n";
    }
  } else if (verb == "solve-sc" || verb == "solve-esc") {
    out << "solvable: " << (payload.at("solvable").get<bool>() ? "true" : "false") << "\n";
    for (const auto& p : payload.at("groebner"))
      out << "groebner: " << p.get<std::string>() << "\n";
  } else if (verb == "groebner") {
    out << "order: " << payload.at("order").get<std::string>() << "\n";
    for (const auto& p : payload.at("basis")) out << "basis: " << p.get<std::string>() << "\n";
  } else if (verb == "state") {
    for (const auto& w : payload.at("weights")) out << "weight: " << join_scalars(w) << "\n";
  } else if (verb == "hull") {
    out << "contains_xi: " << (payload.at("contains_xi").get<bool>() ? "true" : "false") << "\n";
  } else if (verb == "semistable") {
    bool ss = payload.at("semistable").get<bool>();
    out << "semistable: " << (ss ? "true" : "false") << "\n";
    const json& cert = payload.at("certificate");
    if (ss) {
      out << "checked_pairs: " << cert.at("checked_pairs") << "\n";
    } else {
      out << "q: " << join_scalars(cert.at("q")) << "\n";
      out << "omega: " << join_scalars(cert.at("omega")) << "\n";
      for (const auto& p : cert.at("groebner"))
        out << "groebner: " << p.get<std::string>() << "\n";
    }
  } else if (verb == "gotzmann") {
    out << "gotzmann: " << payload.at("gotzmann") << "\n";
    if (payload.contains("q_of_d")) out << "q_of_d: " << payload.at("q_of_d") << "\n";
  } else {
    out << payload.dump(2) << "\n";
  }
}

struct RunOutcome {
  json payload;
  std::string out_file_body;  // written to --out when nonempty
};

RunOutcome dispatch(const Options& opt, std::map<std::string, std::string>& digests,
                    const Deadline& deadline) {
  RunOutcome rc;
  if (opt.verb == "reduce") {
    std::string text = read_file(opt.system_path);
    digests["system"] = fnv1a64_hex(text);
    PolySystem sys = system_from_json(parse_json(text));
    SCInstance inst = reduce_sysal_to_sc(sys);
    rc.payload = sc_to_json(inst);
    rc.out_file_body = rc.payload.dump(2) + "\n";
  } else if (opt.verb == "solve-sc") {
    std::string text = read_file(opt.instance_path);
    digests["instance"] = fnv1a64_hex(text);
    SCInstance inst = sc_from_json(parse_json(text));
    SolveResult res = solve_sc(inst, deadline);
    json basis = json::array();
    for (const auto& p : res.basis.polys) basis.push_back(p.str());
    rc.payload = json{{"solvable", res.solvable}, {"groebner", std::move(basis)}};
  } else if (opt.verb == "solve-esc") {
    std::string text = read_file(opt.instance_path);
    digests["instance"] = fnv1a64_hex(text);
    ESCInstance inst = esc_from_json(parse_json(text));
    SolveResult res = solve_esc(inst, deadline);
    json basis = json::array();
    for (const auto& p : res.basis.polys) basis.push_back(p.str());
    rc.payload = json{{"solvable", res.solvable}, {"groebner", std::move(basis)}};
  } else if (opt.verb == "groebner") {
    std::string text = read_file(opt.ideal_path);
    digests["ideal"] = fnv1a64_hex(text);
    Ideal ideal(parse_ideal_lines(text));
    MonomialOrder ord =
        opt.order == "grevlex" ? MonomialOrder::GrevLex : MonomialOrder::Lex;
    GroebnerBasis gb = buchberger(ideal, ord, deadline);
    json basis = json::array();
    for (const auto& p : gb.polys) basis.push_back(p.str());
    rc.payload = json{{"order", opt.order}, {"basis", std::move(basis)}};
  } else if (opt.verb == "state") {
    std::string text = read_file(opt.point_path);
    digests["point"] = fnv1a64_hex(text);
    ExteriorVector v = exterior_from_json(parse_json(text));
    rc.payload = json{{"weights", weights_json(state(v))}};
  } else if (opt.verb == "hull") {
    std::string text = read_file(opt.point_path);
    digests["point"] = fnv1a64_hex(text);
    ExteriorVector v = exterior_from_json(parse_json(text));
    bool inside = delta_contains_xi(v, MatrixElement(v.r()));
    rc.payload = json{{"contains_xi", inside}};
  } else if (opt.verb == "hilbert-point") {
    std::string text = read_file(opt.ideal_path);
    digests["ideal"] = fnv1a64_hex(text);
    auto gens = parse_ideal_lines(text);
    if (opt.degree < 0) throw UsageError("hilbert-point needs --degree");
    ExteriorVector v = hilbert_point(gens, inferred_rank(gens, opt.rank), opt.degree);
    rc.payload = exterior_to_json(v);
    rc.out_file_body = rc.payload.dump(2) + "\n";
  } else if (opt.verb == "semistable") {
    if (!opt.point_path.empty() && !opt.ideal_path.empty())
      throw UsageError("semistable takes --point or --ideal, not both");
    ExteriorVector v(1, 1, 1);
    if (!opt.point_path.empty()) {
      std::string text = read_file(opt.point_path);
      digests["point"] = fnv1a64_hex(text);
      v = exterior_from_json(parse_json(text));
    } else if (!opt.ideal_path.empty()) {
      std::string text = read_file(opt.ideal_path);
      digests["ideal"] = fnv1a64_hex(text);
      auto gens = parse_ideal_lines(text);
      if (opt.degree < 0) throw UsageError("semistable with --ideal needs --degree");
      v = hilbert_point(gens, inferred_rank(gens, opt.rank), opt.degree);
    } else {
      throw UsageError("semistable needs --point or --ideal");
    }
    Verdict verdict = is_semistable(v, opt.jobs, deadline);
    rc.payload = verdict_to_json(verdict);
  } else if (opt.verb == "gotzmann") {
    digests["polynomial"] = fnv1a64_hex(opt.polynomial_text);
    UniPoly P = parse_unipoly(opt.polynomial_text);
    rc.payload = json{{"gotzmann", gotzmann_number(P)}};
    if (opt.rank > 0 || opt.degree >= 0) {
      if (opt.rank <= 0 || opt.degree < 0)
        throw UsageError("q_of_d needs both --rank and --degree");
      Int q = q_of_d(P, opt.rank, opt.degree);
      rc.payload["q_of_d"] = q.convert_to<long long>();
    }
  } else {
    throw UsageError("unknown verb");
  }
  return rc;
}

}  // namespace

CliResult run_cli(const std::vector<std::string>& args) {
  Options opt;
  CLI::App app{"exterior-algebra semistability toolkit"};
  app.require_subcommand(1);
  app.fallthrough(false);

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--output", opt.output, "json or text")
        ->check(CLI::IsMember({"json", "text"}));
    sub->add_option("--timeout", opt.timeout, "seconds before aborting basis computations");
    sub->add_flag("--stats", opt.stats, "append wall time to the report");
  };

  CLI::App* reduce = app.add_subcommand("reduce", "turn a polynomial system into an instance");
  reduce->add_option("--system", opt.system_path, "system JSON file")->required();
  reduce->add_option("--out", opt.out_path, "write the instance JSON here");
  add_common(reduce);

  CLI::App* ssc = app.add_subcommand("solve-sc", "decide a single-character instance");
  ssc->add_option("--instance", opt.instance_path, "instance JSON file")->required();
  add_common(ssc);

  CLI::App* sesc = app.add_subcommand("solve-esc", "decide a character-set instance");
  sesc->add_option("--instance", opt.instance_path, "instance JSON file")->required();
  add_common(sesc);

  CLI::App* gb = app.add_subcommand("groebner", "reduced basis of an ideal");
  gb->add_option("--ideal", opt.ideal_path, "one polynomial per line")->required();
  gb->add_option("--order", opt.order, "lex or grevlex")
      ->check(CLI::IsMember({"lex", "grevlex"}));
  add_common(gb);

  CLI::App* st = app.add_subcommand("state", "weights of the nonzero coordinates");
  st->add_option("--point", opt.point_path, "point JSON file")->required();
  add_common(st);

  CLI::App* hull = app.add_subcommand("hull", "does the balanced point lie in the state hull");
  hull->add_option("--point", opt.point_path, "point JSON file")->required();
  add_common(hull);

  CLI::App* hp = app.add_subcommand("hilbert-point", "wedge of a degree piece of an ideal");
  hp->add_option("--ideal", opt.ideal_path, "one polynomial per line")->required();
  hp->add_option("--degree", opt.degree, "degree of the piece")->required();
  hp->add_option("--rank", opt.rank, "number of variables (default: inferred)");
  hp->add_option("--out", opt.out_path, "write the point JSON here");
  add_common(hp);

  CLI::App* ss = app.add_subcommand("semistable", "decide semistability of a point");
  ss->add_option("--point", opt.point_path, "point JSON file");
  ss->add_option("--ideal", opt.ideal_path, "one polynomial per line");
  ss->add_option("--degree", opt.degree, "degree of the piece (with --ideal)");
  ss->add_option("--rank", opt.rank, "number of variables (default: inferred)");
  ss->add_option("--jobs", opt.jobs, "parallel search width")
      ->check(CLI::Range(1, std::numeric_limits<int>::max()).description("a positive integer"));
  add_common(ss);

  CLI::App* gz = app.add_subcommand("gotzmann", "regularity bound of a Hilbert polynomial");
  gz->add_option("--polynomial", opt.polynomial_text, "polynomial in t, e.g. \"6*t - 8\"")
      ->required();
  gz->add_option("--rank", opt.rank, "with --degree, also report the piece dimension");
  gz->add_option("--degree", opt.degree, "with --rank, also report the piece dimension");
  add_common(gz);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    return CliResult{app.help(), "", 0};
  } catch (const CLI::ParseError& e) {
    return CliResult{"", std::string(e.what()) + "\n", 2};
  }
  opt.verb = app.get_subcommands().front()->get_name();

  Deadline deadline;
  if (opt.timeout > 0)
    deadline = std::chrono::steady_clock::now() +
               std::chrono::milliseconds(static_cast<long long>(opt.timeout * 1000));

  auto start = std::chrono::steady_clock::now();
  std::map<std::string, std::string> digests;
  json payload;
  int exit_code = 0;
  try {
    RunOutcome rc = dispatch(opt, digests, deadline);
    payload = std::move(rc.payload);
    if (!opt.out_path.empty() && !rc.out_file_body.empty())
      write_file(opt.out_path, rc.out_file_body);
  } catch (const TimeoutError&) {
    payload = json{{"error", "timeout"}};
    exit_code = 1;
  } catch (const UsageError& e) {
    return CliResult{"", std::string(e.what()) + "\n", 2};
  } catch (const std::exception& e) {
    return CliResult{"", std::string(e.what()) + "\n", 1};
  }
  auto wall_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                     std::chrono::steady_clock::now() - start)
                     .count();

  std::ostringstream out;
  if (opt.output == "json") {
    json inputs = json::object();
    for (const auto& [k, v] : digests) inputs[k] = v;
    json report{{"verb", opt.verb}, {"inputs", std::move(inputs)}, {"result", payload}};
    if (opt.stats) report["wall_ms"] = wall_ms;
    out << report.dump(2) << "\n";
  } else {
    out << "verb: " << opt.verb << "\n";
    for (const auto& [k, v] : digests) out << "input " << k << ": " << v << "\n";
    payload_text(opt.verb, payload, out);
    if (opt.stats) out << "wall_ms: " << wall_ms << "\n";
  }
  return CliResult{out.str(), "", exit_code};
}

}  // namespace gitstate

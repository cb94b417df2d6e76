// Copyright 2026 The pstkit Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "pstkit/cli.hpp"

#include <algorithm>
#include <atomic>
#include <cctype>
#include <cmath>
#include <condition_variable>
#include <cstdlib>
#include <exception>
#include <fstream>
#include <iostream>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <thread>
#include <utility>

#include <CLI11.hpp>

#include "pstkit/error.hpp"
#include "pstkit/oracle.hpp"
#include "pstkit/pst.hpp"
#include "pstkit/report.hpp"
#include "pstkit/switching.hpp"
#include "pstkit/tensor.hpp"

namespace pstkit {

namespace {

// Recursive-descent parser for graph expressions.
class ExpressionParser {
 public:
  explicit ExpressionParser(std::string_view text) {
    for (char c : text)
      if (!std::isspace(static_cast<unsigned char>(c))) s_.push_back(c);
  }

  Graph parse() {
    auto [g, name] = expr();
    if (pos_ != s_.size()) fail("trailing input");
    return Graph(g.adjacency(), g.labels(), name);
  }

 private:
  [[noreturn]] void fail(const std::string &what) const {
    throw ParseError("graph expression '" + s_ + "': " + what + " at position " + std::to_string(pos_));
  }

  bool accept(char c) {
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }

  std::string word() {
    const std::size_t start = pos_;
    while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) ++pos_;
    if (pos_ == start) fail("expected a name");
    return s_.substr(start, pos_ - start);
  }

  std::size_t number() {
    const std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (pos_ == start || pos_ - start > 6) fail("expected a small non-negative integer");
    return std::stoul(s_.substr(start, pos_ - start));
  }

  std::pair<Graph, std::string> expr() {
    const std::string head = word();
    if (head == "g6" && accept(':')) {
      // graph6 characters never include ',' or ')'.
      const std::size_t start = pos_;
      while (pos_ < s_.size() && s_[pos_] != ',' && s_[pos_] != ')') ++pos_;
      const std::string code = s_.substr(start, pos_ - start);
      return {parse_graph6(code), "g6:" + code};
    }
    if (accept(':')) {
      const std::size_t k = number();
      return {make_named(parse_family(head), k), head + ":" + std::to_string(k)};
    }
    expect('(');
    auto [a, an] = expr();
    if (head == "complement") {
      expect(')');
      return {complement(a), "complement(" + an + ")"};
    }
    expect(',');
    if (head == "power") {
      const std::size_t k = number();
      expect(')');
      if (k == 0) fail("power needs k >= 1");
      return {cartesian_power(a, k), "power(" + an + "," + std::to_string(k) + ")"};
    }
    auto [b, bn] = expr();
    expect(')');
    if (head == "cartesian") return {cartesian(a, b), "cartesian(" + an + "," + bn + ")"};
    if (head == "tensor") return {tensor(a, b), "tensor(" + an + "," + bn + ")"};
    fail("unknown operation '" + head + "'");
  }

  std::string s_;
  std::size_t pos_ = 0;
};

struct GraphArgs {
  std::string named;
  std::string g6;
};

void add_graph_options(CLI::App *cmd, GraphArgs &g) {
  cmd->add_option("--named", g.named, "graph expression, e.g. path:3 or cartesian(complete:4,complete:4)");
  cmd->add_option("--g6", g.g6, "graph in graph6 format");
}

Graph select_graph(const GraphArgs &g) {
  if (g.named.empty() == g.g6.empty()) throw InvalidParameterError("give exactly one of --named and --g6");
  if (!g.named.empty()) return parse_graph_expression(g.named);
  const Graph parsed = parse_graph6(g.g6);
  return Graph(parsed.adjacency(), parsed.labels(), "g6:" + g.g6);
}

void emit(std::ostream &out, const Json &doc) { out << doc.dump() << '\n'; }

int cmd_spectrum(const Graph &g, std::ostream &out, std::ostream &err) {
  const SpectralDecomposition d = decompose(g);
  emit(out, spectrum_json(g, d));
  err << g.name() << ": " << d.size() << " distinct eigenvalues" << (d.complete() ? "" : " (not all recognized)")
      << '\n';
  return kExitOk;
}

int cmd_certify(const Graph &g, std::size_t u, std::size_t v, std::ostream &out, std::ostream &err) {
  const PSTResult r = certify_pst(g, u, v);
  emit(out, pst_json(r, g, u, v));
  if (r.ok())
    err << g.name() << ": PST " << u << " -> " << v << " at " << r.certificate->tau0.str() << '\n';
  else
    err << g.name() << ": no PST " << u << " -> " << v << " (condition fails: " << r.failure->witness << ")\n";
  return kExitOk;
}

struct TensorArgs {
  std::string x, y;
  std::size_t w = 0, u = 0, v = 1;
  std::optional<std::size_t> z;
  bool min_power = false;
};

int cmd_tensor(const TensorArgs &a, std::ostream &out, std::ostream &err) {
  const Graph x = parse_graph_expression(a.x);
  const Graph y = parse_graph_expression(a.y);
  const std::size_t z = a.z.value_or(a.w);
  if (a.w >= x.order() || z >= x.order()) throw InvalidParameterError("--w/--z out of range for X");
  const std::optional<YCertificate> yc = y_certificate(y, a.u, a.v);
  if (!yc) {
    // No transfer in Y: report the factor-level obstruction instead.
    const TensorNecessaryResult nec = tensor_necessary(x, y, {a.w, a.u}, {z, a.v});
    emit(out, tensor_necessary_json(nec, "tensor(" + x.name() + "," + y.name() + ")"));
    err << "no transfer " << a.u << " -> " << a.v << " in " << y.name() << ", so none in the tensor product\n";
    return kExitOk;
  }
  if (a.min_power) {
    const SpectralDecomposition dx = decompose(x);
    const auto res = min_cartesian_power(dx, a.w, z, *yc);
    if (!res) {
      const Graph host = tensor(x, y);
      Json doc;
      doc["type"] = "min_power";
      doc["graph"] = "tensor(" + x.name() + "," + y.name() + ")";
      doc["graph6"] = write_graph6(host);
      doc["nx"] = x.order();
      doc["k0"] = nullptr;
      doc["pass"] = false;
      emit(out, doc);
      err << "no Cartesian power of " << y.name() << " gives transfer\n";
      return kExitOk;
    }
    const Graph power = cartesian_power(y, res->k0);
    const Graph host(tensor(x, power).adjacency(), {},
                     "tensor(" + x.name() + ",power(" + y.name() + "," + std::to_string(res->k0) + "))");
    emit(out, tensor_json(res->report, host, x.order(), res->k0));
    err << "least power k0 = " << res->k0 << ", transfer at " << res->report.tau->str() << '\n';
    return kExitOk;
  }
  const TensorPSTReport r = tensor_pst_check(x, a.w, z, *yc);
  const Graph host(tensor(x, y).adjacency(), {}, "tensor(" + x.name() + "," + y.name() + ")");
  emit(out, tensor_json(r, host, x.order()));
  if (r.pass())
    err << host.name() << ": PST at " << r.tau->str() << '\n';
  else
    err << host.name() << ": no PST (" << r.conditions[static_cast<std::size_t>(r.failed_condition)].witness << ")\n";
  return kExitOk;
}

struct SwitchingArgs {
  std::string x, y;
  bool complement = false;
  bool matching = false;
};

void summarize(const std::vector<SwitchingReport> &reports, const std::string &name, std::ostream &err) {
  for (const SwitchingReport &r : reports) {
    if (r.kind == SwitchingCase::none)
      err << name << ": no transfer (" << r.reason << ")\n";
    else
      err << name << ": case " << to_string(r.kind) << " at " << r.tau->str() << ", " << r.pairs.size()
          << " pairs\n";
  }
}

int cmd_switching(const SwitchingArgs &a, std::ostream &out, std::ostream &err) {
  const int modes = int(a.complement) + int(a.matching) + int(!a.y.empty());
  if (modes != 1) throw InvalidParameterError("give exactly one of --complement, --y and --matching");
  const Graph x = parse_graph_expression(a.x);
  if (a.complement) {
    const ComplementReport r = complement_switching_check(x);
    const Graph host(switching_pair(x, complement(x)).adjacency(), {}, "switching(" + x.name() + ",complement)");
    emit(out, complement_json(r, host));
    summarize(r.pass ? r.reports : std::vector<SwitchingReport>{}, host.name(), err);
    if (!r.pass) err << host.name() << ": no transfer (" << r.reason << ")\n";
    return kExitOk;
  }
  if (a.matching) {
    const Graph host(matching_cover(x).adjacency(), {}, "matching(" + x.name() + ")");
    const auto reports = matching_pst_check(x);
    emit(out, switching_json(reports, host));
    summarize(reports, host.name(), err);
    return kExitOk;
  }
  const Graph y = parse_graph_expression(a.y);
  const Graph host(switching_pair(x, y).adjacency(), {}, "switching(" + x.name() + "," + y.name() + ")");
  const auto reports = switching_pst_check(x, y);
  emit(out, switching_json(reports, host));
  summarize(reports, host.name(), err);
  return kExitOk;
}

int cmd_scan(const Graph &g, std::size_t u, std::size_t v, double t_max, double step, std::ostream &out,
             std::ostream &err) {
  const ScanResult r = scan(g, u, v, t_max, step);
  emit(out, scan_json(r, g, u, v));
  err << g.name() << ": best fidelity " << r.best_fidelity << " at t = " << r.best_t << '\n';
  return kExitOk;
}

struct VerifyArgs {
  std::string input;
  std::string tau;
  std::string phase;
};

int verify_claims(const std::vector<TransferClaim> &claims, std::ostream &out, std::ostream &err) {
  const double tol = oracle_tolerance();
  std::map<std::string, std::unique_ptr<WalkSpectrum>> cache;
  std::size_t passed = 0;
  for (const TransferClaim &c : claims) {
    auto &walk = cache[c.graph6];
    if (!walk) walk = std::make_unique<WalkSpectrum>(parse_graph6(c.graph6));
    const VerifyResult r = verify_transfer(*walk, c.u, c.v, c.tau, c.phase, tol, kPhaseTolerance);
    if (r.pass) ++passed;
    emit(out, verify_json(r, Graph(parse_graph6(c.graph6).adjacency(), {}, "g6:" + c.graph6), c.u, c.v, c.tau,
                          c.phase));
  }
  err << passed << " of " << claims.size() << " transfer claims verified\n";
  return kExitOk;
}

int cmd_verify_file(const std::string &path, std::ostream &out, std::ostream &err) {
  std::ifstream file;
  std::istream *in = &std::cin;
  if (path != "-") {
    file.open(path);
    if (!file) throw ParseError("cannot open '" + path + "'");
    in = &file;
  }
  std::vector<TransferClaim> claims;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(*in, line)) {
    ++lineno;
    if (std::all_of(line.begin(), line.end(), [](unsigned char c) { return std::isspace(c); })) continue;
    Json doc;
    try {
      doc = Json::parse(line);
    } catch (const Json::parse_error &e) {
      throw ParseError("line " + std::to_string(lineno) + ": " + e.what());
    }
    for (TransferClaim &c : transfer_claims(doc)) claims.push_back(std::move(c));
  }
  return verify_claims(claims, out, err);
}

Json search_one(const Graph &g) {
  const SpectralDecomposition d = decompose(g);
  Json doc;
  doc["type"] = "search";
  doc["graph6"] = write_graph6(g);
  doc["n"] = g.order();
  doc["complete"] = d.complete();
  Json pairs = Json::array();
  for (std::size_t u = 0; u < g.order(); ++u) {
    for (std::size_t v = u + 1; v < g.order(); ++v) {
      const PSTResult r = certify_pst(d, u, v);
      if (!r.ok()) continue;
      Json p;
      p["u"] = u;
      p["v"] = v;
      p["tau0"] = r.certificate->tau0.str();
      p["phase"] = r.certificate->phase.str();
      pairs.push_back(std::move(p));
    }
  }
  doc["pairs"] = std::move(pairs);
  return doc;
}

int cmd_search(const std::string &path, std::size_t jobs, std::ostream &out, std::ostream &err) {
  std::vector<Graph> graphs;
  if (path == "-") {
    graphs = read_graph6_stream(std::cin);
  } else {
    std::ifstream file(path);
    if (!file) throw ParseError("cannot open '" + path + "'");
    graphs = read_graph6_stream(file);
  }
  const std::size_t n = graphs.size();
  jobs = std::max<std::size_t>(1, std::min(jobs, std::max<std::size_t>(n, 1)));

  // Workers analyse graphs independently; this thread is the only writer and
  // emits documents in input order.
  std::vector<std::optional<std::string>> done(n);
  std::mutex mu;
  std::condition_variable ready;
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  auto worker = [&] {
    for (std::size_t i = next++; i < n; i = next++) {
      std::string line;
      try {
        line = search_one(graphs[i]).dump();
      } catch (...) {
        std::lock_guard<std::mutex> lock(mu);
        if (!failure) failure = std::current_exception();
      }
      {
        std::lock_guard<std::mutex> lock(mu);
        done[i] = std::move(line);
      }
      ready.notify_all();
    }
  };
  std::vector<std::thread> pool;
  for (std::size_t j = 0; j < jobs; ++j) pool.emplace_back(worker);
  std::size_t with_pairs = 0;
  for (std::size_t i = 0; i < n; ++i) {
    std::unique_lock<std::mutex> lock(mu);
    ready.wait(lock, [&] { return done[i].has_value(); });
    const std::string line = std::move(*done[i]);
    const bool ok = !failure;
    lock.unlock();
    if (!ok) continue;
    if (line.find("\"pairs\":[]") == std::string::npos) ++with_pairs;
    out << line << '\n';
  }
  for (std::thread &t : pool) t.join();
  if (failure) std::rethrow_exception(failure);
  err << n << " graphs searched, " << with_pairs << " with perfect state transfer\n";
  return kExitOk;
}

}  // namespace

Graph parse_graph_expression(std::string_view text) { return ExpressionParser(text).parse(); }

double oracle_tolerance() {
  if (const char *env = std::getenv("PSTKIT_TOL")) {
    char *end = nullptr;
    const double v = std::strtod(env, &end);
    if (end != env && *end == '\0' && std::isfinite(v) && v > 0) return v;
  }
  return kOracleTolerance;
}

int run_cli(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
  CLI::App app{"Exact perfect state transfer analysis for graph walks", "pstkit"};
  app.require_subcommand(1);

  GraphArgs graph;
  std::size_t u = 0, v = 1;
  auto add_pair = [&](CLI::App *cmd) {
    cmd->add_option("--u", u, "source vertex")->required();
    cmd->add_option("--v", v, "target vertex")->required();
  };

  CLI::App *spectrum = app.add_subcommand("spectrum", "exact spectral decomposition and vertex supports");
  add_graph_options(spectrum, graph);

  CLI::App *certify = app.add_subcommand("certify", "decide perfect state transfer between two vertices");
  add_graph_options(certify, graph);
  add_pair(certify);

  TensorArgs targs;
  CLI::App *tens = app.add_subcommand("tensor", "transfer in the tensor product X x Y");
  tens->add_option("--x", targs.x, "graph expression for X")->required();
  tens->add_option("--y", targs.y, "graph expression for Y")->required();
  tens->add_option("--w", targs.w, "X vertex of the source");
  tens->add_option("--z", targs.z, "X vertex of the target (default: w)");
  tens->add_option("--u", targs.u, "Y vertex of the source")->required();
  tens->add_option("--v", targs.v, "Y vertex of the target")->required();
  tens->add_flag("--min-power", targs.min_power, "least k with transfer in X x Y^k (Cartesian power)");

  SwitchingArgs sargs;
  CLI::App *sw = app.add_subcommand("switching", "transfer in the layered graph [[A(X), A(Y)], [A(Y), A(X)]]");
  sw->add_option("--x", sargs.x, "graph expression for X")->required();
  sw->add_flag("--complement", sargs.complement, "Y is the complement of X");
  sw->add_option("--y", sargs.y, "graph expression for Y");
  sw->add_flag("--matching", sargs.matching, "Y is a perfect matching between the layers");

  double t_max = 20.0, step = 1e-3;
  CLI::App *sc = app.add_subcommand("scan", "numerical fidelity scan over a time grid");
  add_graph_options(sc, graph);
  add_pair(sc);
  sc->add_option("--t-max", t_max, "end of the time grid");
  sc->add_option("--step", step, "grid step");

  VerifyArgs vargs;
  CLI::App *ver = app.add_subcommand("verify", "check transfer claims against the numerical oracle");
  ver->add_option("--input", vargs.input, "JSON Lines file of reports ('-' for stdin)");
  add_graph_options(ver, graph);
  ver->add_option("--u", u, "source vertex");
  ver->add_option("--v", v, "target vertex");
  ver->add_option("--tau", vargs.tau, "time, e.g. 1/2*pi/sqrt(1)");
  ver->add_option("--phase", vargs.phase, "phase, e.g. exp(i*pi*1/2)");

  std::string corpus;
  std::size_t jobs = 1;
  CLI::App *search = app.add_subcommand("search", "certify every vertex pair of every graph in a graph6 file");
  search->add_option("--input", corpus, "graph6 file, one graph per line ('-' for stdin)")->required();
  search->add_option("--jobs", jobs, "worker threads")->check(CLI::PositiveNumber);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp &e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp &e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError &e) {
    app.exit(e, out, err);
    return kExitUsage;
  }

  try {
    if (spectrum->parsed()) return cmd_spectrum(select_graph(graph), out, err);
    if (certify->parsed()) return cmd_certify(select_graph(graph), u, v, out, err);
    if (tens->parsed()) return cmd_tensor(targs, out, err);
    if (sw->parsed()) return cmd_switching(sargs, out, err);
    if (sc->parsed()) return cmd_scan(select_graph(graph), u, v, t_max, step, out, err);
    if (ver->parsed()) {
      if (!vargs.input.empty()) return cmd_verify_file(vargs.input, out, err);
      if (vargs.tau.empty() || vargs.phase.empty())
        throw InvalidParameterError("verify needs --input, or a graph with --u, --v, --tau and --phase");
      const Graph g = select_graph(graph);
      return verify_claims({{write_graph6(g), u, v, ExactTime::parse(vargs.tau), Phase::parse(vargs.phase)}}, out,
                           err);
    }
    if (search->parsed()) return cmd_search(corpus, jobs, out, err);
  } catch (const ParseError &e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const InvalidParameterError &e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const SizeMismatchError &e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const UnsupportedSpectrumError &e) {
    err << "unsupported: " << e.what() << '\n';
    return kExitUnsupported;
  } catch (const std::exception &e) {
    err << "internal error: " << e.what() << '\n';
    return kExitUnsupported;
  }
  return kExitUsage;
}

}  // namespace pstkit

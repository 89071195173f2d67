// Copyright 2026 The Octa Authors.
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

// Command-line front end. Exit status: 0 success, 2 bad input, 3 a checked
// invariant failed.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "octa/error.hpp"
#include "octa/graph.hpp"
#include "octa/graph_io.hpp"
#include "octa/lattice.hpp"
#include "octa/matching.hpp"
#include "octa/recurrence.hpp"
#include "octa/sampler.hpp"
#include "octa/suite.hpp"
#include "octa/verify.hpp"

namespace {

constexpr int kExitUser = 2;
constexpr int kExitInvariant = 3;

struct Options {
  std::string height = "aztec";
  std::vector<int> apex;
  std::string format = "text";
  std::string output;
  std::uint64_t seed = 1;
  std::size_t count = 1;
  std::size_t index = 0;
  std::string method = "enumerate";
  // somos
  int k = 4, a = 1, b = 2, n = 10;
  long r = 1, s = 1;
  // verify
  std::string family = "all";
  std::size_t max_cone = 10;
  int radius = 2;
  std::size_t perturbations = 50;
  std::size_t instances = 100;
  std::size_t draws = 20000;
  int depth = 4;
};

octa::LatticePoint apex_of(const Options& o) {
  if (o.apex.size() != 3) octa::fail(octa::Errc::BadParameters, "--apex needs three integers N I J");
  return octa::make_point(o.apex[0], o.apex[1], o.apex[2]);
}

void emit(const Options& o, const std::string& text) {
  if (o.output.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(o.output, std::ios::binary);
  if (!f) octa::fail(octa::Errc::BadParameters, "cannot write " + o.output);
  f << text;
}

std::string dump(const nlohmann::json& j) { return j.dump(2) + "\n"; }

void require_format(const Options& o, std::initializer_list<const char*> allowed) {
  for (const char* f : allowed) {
    if (o.format == f) return;
  }
  octa::fail(octa::Errc::BadParameters, "format '" + o.format + "' is not available for this command");
}

void cmd_eval(const Options& o) {
  require_format(o, {"text", "json"});
  octa::HeightFunction h = octa::resolve_height(o.height);
  octa::LatticePoint apex = apex_of(o);
  octa::EvalContext ctx(h);
  octa::LaurentPoly f = octa::eval_f(ctx, apex);
  if (o.format == "json") {
    emit(o, dump({{"apex", {apex.n, apex.i, apex.j}}, {"terms", f.term_count()}, {"value", f.to_json()}}));
  } else {
    emit(o, f.to_text() + "\n");
  }
}

bool on_surface(const octa::HeightFunction& h, const octa::LatticePoint& apex) {
  if (h(apex.i, apex.j) > apex.n) {
    octa::fail(octa::Errc::PointBelowSurface, to_string(apex) + " lies below the initial surface");
  }
  return h(apex.i, apex.j) == apex.n;
}

void cmd_count(const Options& o) {
  require_format(o, {"text", "json"});
  octa::HeightFunction h = octa::resolve_height(o.height);
  octa::LatticePoint apex = apex_of(o);
  octa::Integer count = 1;
  if (on_surface(h, apex)) {
    count = 1;
  } else if (o.method == "enumerate") {
    count = static_cast<unsigned long>(octa::count_matchings(octa::build_subgraph(h, apex)));
  } else if (o.method == "recurrence") {
    count = octa::count_all_ones(h, apex);
  } else {
    octa::fail(octa::Errc::BadParameters, "unknown method " + o.method);
  }
  if (o.format == "json") {
    emit(o, dump({{"apex", {apex.n, apex.i, apex.j}}, {"matchings", count.get_str()}}));
  } else {
    emit(o, count.get_str() + "\n");
  }
}

void cmd_enumerate(const Options& o) {
  require_format(o, {"text", "json", "svg"});
  octa::HeightFunction h = octa::resolve_height(o.height);
  octa::LatticePoint apex = apex_of(o);
  octa::Graph g = octa::build_subgraph(h, apex);
  std::vector<octa::Matching> all = octa::enumerate_matchings(g);
  if (o.format == "svg") {
    if (o.index >= all.size()) octa::fail(octa::Errc::BadParameters, "--index is past the last matching");
    emit(o, octa::graph_to_svg(g, all[o.index]));
  } else if (o.format == "json") {
    nlohmann::json out = nlohmann::json::array();
    for (const octa::Matching& m : all) out.push_back(octa::matching_to_json(g, m));
    emit(o, dump(out));
  } else {
    std::ostringstream text;
    for (const octa::Matching& m : all) {
      for (std::size_t k = 0; k < m.size(); ++k) text << (k ? " " : "") << m[k];
      text << "\n";
    }
    emit(o, text.str());
  }
}

void cmd_graph(const Options& o) {
  octa::HeightFunction h = octa::resolve_height(o.height);
  octa::Graph g = octa::build_subgraph(h, apex_of(o));
  if (o.format == "svg") {
    emit(o, octa::graph_to_svg(g));
  } else if (o.format == "dot") {
    emit(o, octa::graph_to_dot(g));
  } else if (o.format == "json") {
    emit(o, dump(octa::graph_to_json(g)));
  } else {
    octa::GraphReport rep = octa::check_graph(g);
    std::ostringstream text;
    text << "vertices " << g.vertices.size() << "\nedges " << g.edges.size() << "\nclosed faces "
         << g.closed_face_count() << "\nopen faces " << g.open_face_count() << "\ncheck "
         << (rep.ok ? "ok" : "failed") << "\n";
    for (const auto& p : rep.problems) text << "  " << p << "\n";
    emit(o, text.str());
    if (!rep.ok) octa::fail(octa::Errc::InvariantViolation, "graph check failed");
  }
}

void cmd_sample(const Options& o) {
  require_format(o, {"text", "json", "svg"});
  octa::HeightFunction h = octa::resolve_height(o.height);
  octa::LatticePoint apex = apex_of(o);
  if (on_surface(h, apex)) {
    // G is empty; every draw is the empty matching.
    emit(o, o.format == "json" ? dump(nlohmann::json::array()) : std::string());
    return;
  }
  octa::Sampler sampler(h, apex);
  std::mt19937_64 rng(o.seed);
  if (o.format == "svg") {
    if (o.count != 1) octa::fail(octa::Errc::BadParameters, "svg output holds a single sample; use --count 1");
    octa::Graph g = octa::build_subgraph(h, apex);
    emit(o, octa::graph_to_svg(g, octa::complete_matching(g, sampler.draw(rng))));
    return;
  }
  nlohmann::json out = nlohmann::json::array();
  std::ostringstream text;
  for (std::size_t k = 0; k < o.count; ++k) {
    std::vector<octa::EdgeLabel> labels = sampler.draw(rng);
    out.push_back(octa::labels_to_json(labels));
    for (std::size_t t = 0; t < labels.size(); ++t) text << (t ? " " : "") << octa::to_string(labels[t]);
    text << "\n";
  }
  emit(o, o.format == "json" ? dump(out) : text.str());
}

void cmd_somos(const Options& o) {
  require_format(o, {"text", "json"});
  std::vector<octa::Integer> seq = octa::gale_robinson_sequence(o.k, o.a, o.b, o.r, o.s, o.n);
  if (o.format == "json") {
    nlohmann::json out = nlohmann::json::array();
    for (const auto& v : seq) out.push_back(v.get_str());
    emit(o, dump(out));
    return;
  }
  std::string text;
  for (std::size_t t = 0; t < seq.size(); ++t) text += (t ? " " : "") + seq[t].get_str();
  emit(o, text + "\n");
}

std::vector<octa::NamedHeight> selected_heights(const Options& o) {
  if (o.family == "all") return octa::standard_heights();
  for (const octa::NamedHeight& nh : octa::standard_heights()) {
    if (nh.name == o.family) return {nh};
  }
  return {octa::NamedHeight{o.family, octa::resolve_height(o.family)}};
}

std::vector<octa::SuiteCase> selected_cases(const Options& o) {
  std::vector<octa::SuiteCase> cases;
  for (const octa::NamedHeight& nh : selected_heights(o)) {
    auto more = octa::apex_cases(nh, o.radius, o.max_cone);
    cases.insert(cases.end(), more.begin(), more.end());
  }
  if (o.family == "all" && o.perturbations > 0) {
    auto more = octa::perturbed_suite(o.perturbations, o.seed, o.max_cone);
    cases.insert(cases.end(), more.begin(), more.end());
  }
  return cases;
}

void report(const Options& o, const octa::VerifyReport& rep) {
  emit(o, o.format == "json" ? dump(rep.to_json()) : rep.to_text());
  if (!rep.pass()) {
    octa::fail(octa::Errc::IdentityViolated, rep.title + ": " + std::to_string(rep.failures()) + " failures");
  }
}

int run(int argc, char** argv) {
  Options o;
  CLI::App app{"Octahedron recurrence values and their crosses-and-wrenches graphs"};
  app.require_subcommand(1);

  auto add_height = [&](CLI::App* c) {
    c->add_option("--height", o.height, "height function: builtin name, 'running', or JSON file");
  };
  auto add_apex = [&](CLI::App* c) { c->add_option("--apex", o.apex, "apex N I J")->expected(3)->required(); };
  auto add_io = [&](CLI::App* c) {
    c->add_option("--format", o.format, "output format")->check(CLI::IsMember({"text", "json", "svg", "dot"}));
    c->add_option("--output", o.output, "write output to a file");
  };

  CLI::App* eval = app.add_subcommand("eval", "value of f at the apex as a Laurent polynomial");
  add_height(eval), add_apex(eval), add_io(eval);
  CLI::App* count = app.add_subcommand("count", "number of perfect matchings of G(apex)");
  add_height(count), add_apex(count), add_io(count);
  count->add_option("--method", o.method, "enumerate or recurrence")
      ->check(CLI::IsMember({"enumerate", "recurrence"}));
  CLI::App* enumerate = app.add_subcommand("enumerate", "list every perfect matching of G(apex)");
  add_height(enumerate), add_apex(enumerate), add_io(enumerate);
  enumerate->add_option("--index", o.index, "matching to draw with --format svg");
  CLI::App* graph = app.add_subcommand("graph", "the graph G(apex)");
  add_height(graph), add_apex(graph), add_io(graph);
  CLI::App* sample = app.add_subcommand("sample", "uniformly random matchings of G(apex)");
  add_height(sample), add_apex(sample), add_io(sample);
  sample->add_option("--seed", o.seed, "random seed");
  sample->add_option("--count", o.count, "number of samples");
  CLI::App* somos = app.add_subcommand("somos", "integer Gale-Robinson sequence");
  somos->add_option("--k", o.k);
  somos->add_option("--a", o.a);
  somos->add_option("--b", o.b);
  somos->add_option("--n", o.n, "number of terms");
  somos->add_option("--r", o.r, "coefficient of the a-term");
  somos->add_option("--s", o.s, "coefficient of the b-term");
  add_io(somos);

  CLI::App* verify = app.add_subcommand("verify", "run a verification suite");
  verify->require_subcommand(1);
  auto add_suite = [&](CLI::App* c) {
    c->add_option("--family", o.family, "builtin name, 'all', 'running', or JSON file");
    c->add_option("--max-cone", o.max_cone, "largest |U ∩ C| per apex");
    c->add_option("--radius", o.radius, "apex positions |i|,|j| <= radius");
    c->add_option("--perturbations", o.perturbations, "perturbed heights added with --family all");
    c->add_option("--seed", o.seed, "random seed");
    add_io(c);
  };
  CLI::App* v_main = verify->add_subcommand("main-theorem", "matching polynomial equals f");
  add_suite(v_main);
  CLI::App* v_renewal = verify->add_subcommand("renewal", "split and renewal invariance");
  add_suite(v_renewal);
  v_renewal->add_option("--instances", o.instances, "instances per transform");
  CLI::App* v_cond = verify->add_subcommand("condensation", "Kuo condensation identity");
  add_suite(v_cond);
  v_cond->add_option("--depth", o.depth, "n - h at the apex");
  CLI::App* v_rec = verify->add_subcommand("recovery", "edge exponents from face exponents");
  add_suite(v_rec);
  CLI::App* v_heights = verify->add_subcommand("heights", "height function bijection");
  add_suite(v_heights);
  CLI::App* v_sampler = verify->add_subcommand("sampler", "chi-squared test of the sampler");
  add_suite(v_sampler);
  v_sampler->add_option("--draws", o.draws, "draws per graph");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kExitUser;
  }

  if (eval->parsed()) cmd_eval(o);
  else if (count->parsed()) cmd_count(o);
  else if (enumerate->parsed()) cmd_enumerate(o);
  else if (graph->parsed()) cmd_graph(o);
  else if (sample->parsed()) cmd_sample(o);
  else if (somos->parsed()) cmd_somos(o);
  else if (v_main->parsed()) report(o, octa::verify_main_theorem(selected_cases(o)));
  else if (v_renewal->parsed()) report(o, octa::verify_renewal(selected_cases(o), o.instances, o.seed));
  else if (v_cond->parsed()) {
    report(o, octa::verify_condensation_suite(octa::depth_suite(selected_heights(o), o.radius, o.depth)));
  } else if (v_rec->parsed()) report(o, octa::verify_recovery(selected_cases(o)));
  else if (v_heights->parsed()) report(o, octa::verify_heights(selected_cases(o)));
  else if (v_sampler->parsed()) {
    octa::SamplerCheckOptions so;
    so.draws = o.draws;
    so.seed = o.seed;
    report(o, octa::verify_sampler(selected_cases(o), so));
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const octa::Error& e) {
    std::cerr << "octa: " << e.what() << "\n";
    return octa::is_invariant_violation(e.code()) ? kExitInvariant : kExitUser;
  } catch (const std::exception& e) {
    std::cerr << "octa: " << e.what() << "\n";
    return kExitUser;
  }
}

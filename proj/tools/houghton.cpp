// houghton: decision queries over words in Houghton groups and their
// normalizers. Exit status 0 on a verdict, 2 on bad input, 3 when a search
// budget runs out.

#include "houghton/centralizer.hpp"
#include "houghton/conjugacy.hpp"
#include "houghton/errors.hpp"
#include "houghton/fsym.hpp"
#include "houghton/json_io.hpp"
#include "houghton/orbits.hpp"
#include "houghton/subgroup.hpp"
#include "houghton/word.hpp"

#include <CLI11.hpp>

#include <iostream>
#include <optional>
#include <string>
#include <vector>

namespace {

using namespace houghton;

struct Query {
  std::string command;
  int n = 0;
  int p = 0;
  std::string phi;
  std::string esigma;
  bool json = false;
  std::size_t maxCandidates = 1000000;
  std::uint64_t seed = 0;
  std::vector<std::string> words;
};

std::string read_stdin_word() {
  std::string line;
  if (!std::getline(std::cin, line)) throw InputError("expected a word on standard input");
  return line;
}

std::vector<Element> parse_inputs(const Query& q, std::size_t expected) {
  if (q.words.size() != expected)
    throw InputError(q.command + " expects " + std::to_string(expected) + " word(s), got " +
                     std::to_string(q.words.size()));
  std::vector<Element> out;
  for (const std::string& w : q.words) out.push_back(element_from_text(w == "-" ? read_stdin_word() : w, q.n));
  return out;
}

// Splits on commas outside square brackets, so "r[2,1],r[1,2]" has two items.
std::vector<std::string> split_top_level(const std::string& s) {
  std::vector<std::string> items;
  std::string cur;
  int depth = 0;
  for (char ch : s) {
    if (ch == '[' || ch == '(') ++depth;
    if (ch == ']' || ch == ')') --depth;
    if (ch == ',' && depth == 0) {
      items.push_back(cur);
      cur.clear();
    } else {
      cur += ch;
    }
  }
  if (!cur.empty() || !items.empty()) items.push_back(cur);
  return items;
}

std::vector<RayPermutation> parse_esigma(const Query& q) {
  std::vector<RayPermutation> gens;
  for (const std::string& item : split_top_level(q.esigma)) {
    const Element e = element_from_text(item, q.n);
    if (e != ray_permutation_element(e.sigma()))
      throw InputError("--esigma entries must be ray permutations: " + item);
    gens.push_back(e.sigma());
  }
  return gens;
}

std::string word_of(const Element& g) { return print_word(word_for_element(g)); }

void print_decision(const Query& q, const Decision& d) {
  if (q.json) {
    std::cout << decision_to_json(d).dump() << "\n";
    return;
  }
  if (!d.conjugate) {
    std::cout << "NOT-CONJUGATE\n";
    return;
  }
  std::cout << "CONJUGATE witness=" << word_of(d.witness->x);
  if (d.witness->rayPerm) std::cout << " rayPerm=" << word_of(ray_permutation_element(*d.witness->rayPerm));
  std::cout << "\n";
}

Decision from_optional(const std::optional<Element>& x) {
  Decision d;
  if (x) {
    d.conjugate = true;
    d.witness = Witness{*x, true, {}};
  }
  return d;
}

void run_wp(const Query& q) {
  const Element g = parse_inputs(q, 1)[0];
  if (q.json) {
    Json o;
    o["identity"] = g.is_identity();
    o["element"] = element_to_json(g);
    std::cout << o.dump() << "\n";
  } else if (g.is_identity()) {
    std::cout << "IDENTITY\n";
  } else {
    std::cout << "NOT-IDENTITY normal=" << word_of(g) << "\n";
  }
}

void run_orbits(const Query& q) {
  const Element g = parse_inputs(q, 1)[0];
  OrbitAnalyzer an(g);
  std::vector<OrbitDescriptor> orbits;
  for (const Point& p : an.infinite_orbit_representatives()) orbits.push_back(an.describe(p));
  for (const auto& cyc : an.finite_orbits_in_region())
    if (cyc.size() > 1) orbits.push_back(an.describe(cyc.front()));
  if (q.json) {
    Json arr = Json::array();
    for (const auto& o : orbits) arr.push_back(orbit_to_json(o));
    std::cout << arr.dump() << "\n";
    return;
  }
  for (const auto& o : orbits) {
    if (o.is_finite()) {
      std::cout << "finite";
      for (const Point& p : o.points) std::cout << " " << to_string(p);
    } else {
      std::cout << "infinite forward";
      for (const auto& s : o.forward)
        std::cout << " " << s.ray << ":" << to_string(s.residue) << "+" << to_string(s.modulus)
                  << "k>=" << to_string(s.minDepth);
      std::cout << " backward";
      for (const auto& s : o.backward)
        std::cout << " " << s.ray << ":" << to_string(s.residue) << "+" << to_string(s.modulus)
                  << "k>=" << to_string(s.minDepth);
      if (!o.exceptional.empty()) {
        std::cout << " exceptional";
        for (const Point& p : o.exceptional) std::cout << " " << to_string(p);
      }
    }
    std::cout << "\n";
  }
}

void run_centralizer(const Query& q) {
  const Element a = parse_inputs(q, 1)[0];
  if (!a.in_hn()) throw InputError("centralizer generators are computed for elements of H_n");
  const CentralizerLatticeGens gens = centralizer_translation_lattice(a);
  const auto odd = odd_centralizer_element(a);
  if (q.json) {
    Json o, gam = Json::array(), th = Json::object();
    for (const Element& g : gens.gammas) gam.push_back(element_to_json(g));
    for (const auto& [r, list] : gens.thetas) {
      Json arr = Json::array();
      for (const Element& g : list) arr.push_back(element_to_json(g));
      th[std::to_string(r)] = std::move(arr);
    }
    o["gammas"] = std::move(gam);
    o["thetas"] = std::move(th);
    o["odd"] = odd ? element_to_json(*odd) : Json(nullptr);
    std::cout << o.dump() << "\n";
    return;
  }
  for (const Element& g : gens.gammas) std::cout << "gamma " << word_of(g) << "\n";
  for (const auto& [r, list] : gens.thetas)
    for (const Element& g : list) std::cout << "theta[" << r << "] " << word_of(g) << "\n";
  std::cout << "odd " << (odd ? word_of(*odd) : std::string("none")) << "\n";
}

void run(const Query& q) {
  if (q.n < 2) throw InputError("-n must be at least 2");
  HnOptions opts;
  opts.maxCandidates = q.maxCandidates;
  const std::string& c = q.command;
  if (c == "wp") return run_wp(q);
  if (c == "orbits") return run_orbits(q);
  if (c == "centralizer") return run_centralizer(q);
  if (c == "cp") {
    const auto e = parse_inputs(q, 2);
    return print_decision(q, conjugate_in_hn(e[0], e[1], opts));
  }
  if (c == "tcp") {
    if (q.phi.empty()) throw InputError("tcp needs --phi");
    const Element phi = element_from_text(q.phi, q.n);
    const auto e = parse_inputs(q, 2);
    return print_decision(q, twisted_conjugate(phi, e[0], e[1], opts));
  }
  if (c == "fsym-cp") {
    const auto e = parse_inputs(q, 2);
    return print_decision(q, from_optional(conjugate_in_fsym(e[0], e[1], opts.fsym)));
  }
  if (c == "up-cp") {
    if (q.p < 1) throw InputError("up-cp needs -p with p >= 1");
    const auto e = parse_inputs(q, 2);
    return print_decision(q, conjugate_in_up(e[0], e[1], UpParams{q.n, q.p}, opts));
  }
  if (c == "ext-cp") {
    const auto gens = parse_esigma(q);
    const auto e = parse_inputs(q, 2);
    return print_decision(q, conjugate_in_extension(e[0], e[1], gens, opts));
  }
  throw InputError("unknown command " + c);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Decision procedures for Houghton groups"};
  app.require_subcommand(1);
  Query q;
  const std::vector<std::pair<std::string, std::string>> commands = {
      {"wp", "word problem: is the word the identity"},
      {"cp", "conjugacy in H_n"},
      {"tcp", "twisted conjugacy under conjugation by --phi"},
      {"fsym-cp", "conjugacy by a finitary permutation"},
      {"up-cp", "conjugacy in the subgroup U_p"},
      {"ext-cp", "conjugacy in H_n extended by the ray permutations --esigma"},
      {"orbits", "orbit decomposition"},
      {"centralizer", "centralizer generators"},
  };
  for (const auto& [name, help] : commands) {
    CLI::App* sub = app.add_subcommand(name, help);
    sub->add_option("-n", q.n, "arity of the group")->required();
    sub->add_option("words", q.words, "input words; - reads one line from stdin");
    sub->add_flag("--json", q.json, "JSON output");
    sub->add_option("--max-candidates", q.maxCandidates, "candidate budget of the H_n search");
    sub->add_option("--seed", q.seed, "accepted for reproducible scripted runs");
    if (name == "up-cp") sub->add_option("-p", q.p, "U_p parameter")->required();
    if (name == "tcp") sub->add_option("--phi", q.phi, "word c; phi is y -> c^-1 y c")->required();
    if (name == "ext-cp")
      sub->add_option("--esigma", q.esigma, "comma-separated ray permutation words")->required();
    sub->callback([&q, name = name]() { q.command = name; });
  }
  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }
  try {
    run(q);
    return 0;
  } catch (const InputError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 2;
  } catch (const ResourceError& e) {
    std::cerr << "resource limit: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 1;
  }
}

// takiff: composition multiplicities for Verma modules over Takiff algebras.

#include "CLI11.hpp"
#include "takiff/acceptance.hpp"
#include "takiff/serialize.hpp"

#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <optional>

namespace fs = std::filesystem;
using namespace takiff;
using nlohmann::json;

namespace {

// Bad command-line input that CLI11 cannot see (type names, weight text).
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

fs::path default_cache_path() {
  if (const char* xdg = std::getenv("XDG_CACHE_HOME"); xdg && *xdg) return fs::path(xdg) / "takiff" / "kl.cache";
  if (const char* home = std::getenv("HOME"); home && *home) return fs::path(home) / ".cache" / "takiff" / "kl.cache";
  return "takiff-kl.cache";
}

struct Options {
  bool json_output = false;
  int height = 12;
  std::string cache_path;
  unsigned threads = 0;
  std::string type;
  std::string lambda, mu, lambda2, mu2, chi, x, w;
  bool explain = false;
  int colours = 1;
  std::string kind = "takiff";
  std::string cache_action;
};

RootSystem root_system(const Options& o) {
  try {
    return RootSystem::from_string(o.type);
  } catch (const ParseError& e) {
    throw UsageError(std::string("--type: ") + e.what());
  }
}

Weight weight_arg(const char* flag, const std::string& text, const RootSystem& rs) {
  try {
    return parse_weight(text, rs);
  } catch (const WeightSyntaxError& e) {
    throw UsageError(std::string(flag) + " '" + text + "': " + e.what() + " at column " +
                     std::to_string(e.position() + 1));
  }
}

std::vector<int> word_arg(const char* flag, const std::string& text, std::size_t rank) {
  try {
    return parse_word(text, rank);
  } catch (const ParseError& e) {
    throw UsageError(std::string(flag) + ": " + e.what());
  }
}

void emit(const Options& o, const json& doc, const std::string& human) {
  if (o.json_output)
    std::cout << render(doc);
  else
    std::cout << human;
}

std::string character_lines(const Character& c) {
  std::string out;
  for (const auto& [off, d] : c.dims) out += off.str() + "\t" + std::to_string(d) + "\n";
  return out;
}

void run_mult(const Options& o, KLCache& cache) {
  RootSystem rs = root_system(o);
  Weight lam = weight_arg("--lambda", o.lambda, rs), mu = weight_arg("--mu", o.mu, rs);
  Weight lam2 = weight_arg("--lambda2", o.lambda2, rs);
  Weight mu2 = o.mu2.empty() ? mu : weight_arg("--mu2", o.mu2, rs);
  auto r = takiff_mult(lam, mu, lam2, mu2, rs, cache);
  std::string human = std::to_string(r.value) + "\n";
  if (o.explain) {
    human += "w = " + r.w_used.word_str() + "\n";
    human += "levi = " + r.levi.type_name() + (r.levi.is_standard ? "" : " (non-standard)") + "\n";
    if (mu == mu2) human += "w.2 lambda = " + r.nu.str() + "\nw.2 lambda2 = " + r.nu2.str() + "\n";
    human += "chi\tp\tlevi_mult\n";
    for (const auto& t : r.terms)
      human += t.chi.str() + "\t" + std::to_string(t.p) + "\t" + std::to_string(t.levi_mult) + "\n";
  }
  json doc = to_json(r);
  doc["type"] = rs.type().str();
  emit(o, doc, human);
}

void run_series(const Options& o, KLCache& cache) {
  RootSystem rs = root_system(o);
  Weight lam = weight_arg("--lambda", o.lambda, rs), mu = weight_arg("--mu", o.mu, rs);
  auto entries = takiff_mult_series(lam, mu, o.height, rs, cache, o.threads);
  json list = json::array();
  std::string human;
  for (const auto& e : entries) {
    list.push_back({{"lambda2", to_json(e.lambda2)}, {"offset", to_json(e.offset)}, {"value", e.value}});
    human += weight_text(e.lambda2) + "\t" + std::to_string(e.value) + "\n";
  }
  emit(o, {{"type", rs.type().str()}, {"lambda", to_json(lam)}, {"mu", to_json(mu)}, {"H", o.height}, {"series", list}},
       human);
}

void run_char(const Options& o, KLCache& cache) {
  RootSystem rs = root_system(o);
  Weight lam = weight_arg("--lambda", o.lambda, rs);
  Character c;
  if (o.kind == "verma")
    c = verma_character(lam, o.height, rs);
  else if (o.kind == "takiff")
    c = takiff_verma_character(lam, o.height, rs);
  else if (o.kind == "simple")
    c = simple_character_bgg(lam, o.height, rs, cache);
  else
    c = weyl_character_formula(lam, o.height, rs);
  json doc = to_json(c);
  doc["kind"] = o.kind;
  emit(o, doc, character_lines(c));
}

void run_kl(const Options& o, KLCache& cache) {
  RootSystem rs = root_system(o);
  CoxeterGroup group(rs.cartan_matrix());
  WeylElement x = group.from_word(word_arg("--x", o.x, rs.rank()));
  WeylElement w = group.from_word(word_arg("--w", o.w, rs.rank()));
  auto p = kl_polynomial(group, x, w, cache);
  emit(o,
       {{"type", rs.type().str()}, {"x", x.word_str()}, {"w", w.word_str()}, {"coefficients", to_json(p)},
        {"polynomial", p.str()}},
       p.str() + "\n");
}

void run_partition(const Options& o) {
  RootSystem rs = root_system(o);
  RootVector chi;
  try {
    chi = parse_root_vector(o.chi, rs.rank());
  } catch (const WeightSyntaxError& e) {
    throw UsageError("--chi '" + o.chi + "': " + e.what() + " at column " + std::to_string(e.position() + 1));
  }
  const std::int64_t value = o.colours == 1 ? kostant_p(chi, rs) : kostant_p2(chi, rs);
  emit(o, {{"type", rs.type().str()}, {"chi", to_json(chi)}, {"colours", o.colours}, {"value", value}},
       std::to_string(value) + "\n");
}

void run_reduce(const Options& o) {
  RootSystem rs = root_system(o);
  Weight mu = weight_arg("--mu", o.mu, rs);
  auto red = minimal_levi_reduction(mu, rs);
  std::string human = "w = " + red.w.word_str() + "\nw(mu) = " + red.mu_prime.str() + "\nlevi = " +
                      red.levi.type_name() + "\n";
  emit(o,
       {{"type", rs.type().str()},
        {"mu", to_json(mu)},
        {"w", red.w.word_str()},
        {"length", red.w.length()},
        {"mu_prime", to_json(red.mu_prime)},
        {"levi", to_json(red.levi)}},
       human);
}

int run_selftest(const Options& o, KLCache& cache) {
  json list = json::array();
  bool all = true;
  run_acceptance(cache, [&](const CriterionResult& r) {
    all = all && r.passed;
    if (!o.json_output) std::cout << format_result(r) << std::endl;
    list.push_back({{"id", r.id},
                    {"name", r.name},
                    {"passed", r.passed},
                    {"detail", r.detail},
                    {"budget_seconds", r.budget_seconds},
                    {"seconds", r.seconds}});
  });
  if (o.json_output) std::cout << render({{"criteria", list}, {"passed", all}});
  return all ? 0 : 1;
}

void run_cache(const Options& o, KLCache& cache, const fs::path& path) {
  if (o.cache_action == "clear") {
    const bool existed = fs::remove(path);
    cache.clear();
    emit(o, {{"path", path.string()}, {"removed", existed}}, (existed ? "removed " : "no cache at ") + path.string() + "\n");
    return;
  }
  const auto bytes = fs::exists(path) ? static_cast<std::int64_t>(fs::file_size(path)) : 0;
  emit(o, {{"path", path.string()}, {"records", cache.size()}, {"bytes", bytes}},
       "path\t" + path.string() + "\nrecords\t" + std::to_string(cache.size()) + "\nbytes\t" + std::to_string(bytes) + "\n");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Composition multiplicities of Verma modules over Takiff Lie algebras"};
  Options o;
  app.require_subcommand(1);
  app.fallthrough();
  app.add_flag("--json", o.json_output, "Emit a single JSON document");
  app.add_option("--height", o.height, "Truncation height")->envname("TAKIFF_HEIGHT")->check(CLI::NonNegativeNumber);
  app.add_option("--cache", o.cache_path, "KL cache file")->envname("TAKIFF_CACHE");
  app.add_option("--threads", o.threads, "Worker threads for series (0 = all cores)");

  auto type_opt = [&](CLI::App* sub) { sub->add_option("--type", o.type, "Cartan type, e.g. A2, B3+T1")->required(); };

  auto* mult = app.add_subcommand("mult", "[M(lambda,mu) : L(lambda2,mu2)]");
  type_opt(mult);
  mult->add_option("--lambda", o.lambda)->required();
  mult->add_option("--mu", o.mu)->required();
  mult->add_option("--lambda2", o.lambda2)->required();
  mult->add_option("--mu2", o.mu2, "Defaults to --mu");
  mult->add_flag("--explain", o.explain, "Show w, the Levi and the term table");

  auto* series = app.add_subcommand("series", "All nonzero multiplicities down to the truncation height");
  type_opt(series);
  series->add_option("--lambda", o.lambda)->required();
  series->add_option("--mu", o.mu)->required();

  auto* chr = app.add_subcommand("char", "Truncated formal characters");
  type_opt(chr);
  chr->add_option("--lambda", o.lambda)->required();
  chr->add_option("--kind", o.kind, "takiff, verma, simple or weyl")
      ->check(CLI::IsMember({"takiff", "verma", "simple", "weyl"}));

  auto* kl = app.add_subcommand("kl", "Kazhdan-Lusztig polynomial P_{x,w}");
  type_opt(kl);
  kl->add_option("--x", o.x, "Reduced word, 1-based, or e")->required();
  kl->add_option("--w", o.w, "Reduced word, 1-based, or e")->required();

  auto* part = app.add_subcommand("partition", "Kostant partition function");
  type_opt(part);
  part->add_option("--chi", o.chi, "Simple-root coordinates, e.g. -1,-1")->required();
  part->add_option("--colours", o.colours, "1 for p, 2 for p*p")->check(CLI::IsMember({1, 2}));

  auto* reduce = app.add_subcommand("reduce", "Minimal w with Phi_{w(mu)} standard");
  type_opt(reduce);
  reduce->add_option("--mu", o.mu)->required();

  auto* selftest = app.add_subcommand("selftest", "Run the acceptance suite");

  auto* cache_cmd = app.add_subcommand("cache", "KL cache maintenance");
  cache_cmd->add_option("action", o.cache_action)->required()->check(CLI::IsMember({"stats", "clear"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  const fs::path cache_path = o.cache_path.empty() ? default_cache_path() : fs::path(o.cache_path);
  KLCache cache;
  int status = 0;
  try {
    cache.load(cache_path);
    if (*mult) run_mult(o, cache);
    else if (*series) run_series(o, cache);
    else if (*chr) run_char(o, cache);
    else if (*kl) run_kl(o, cache);
    else if (*part) run_partition(o);
    else if (*reduce) run_reduce(o);
    else if (*selftest) status = run_selftest(o, cache);
    else if (*cache_cmd) {
      run_cache(o, cache, cache_path);
      return 0;
    }
  } catch (const UsageError& e) {
    std::cerr << "takiff: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "takiff: " << e.what() << "\n";
    return 1;
  }

  if (cache.unsaved() > 0) {
    try {
      fs::create_directories(cache_path.parent_path().empty() ? fs::path(".") : cache_path.parent_path());
      cache.append_new(cache_path);
    } catch (const std::exception& e) {
      std::cerr << "takiff: warning: could not write cache " << cache_path << ": " << e.what() << "\n";
    }
  }
  return status;
}

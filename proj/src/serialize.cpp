#include "takiff/serialize.hpp"

namespace takiff {

namespace {

struct Token {
  std::string_view text;
  std::size_t pos;
};

std::vector<Token> split(std::string_view s, std::size_t offset) {
  std::vector<Token> out;
  if (s.empty()) return out;
  std::size_t start = 0;
  while (true) {
    auto comma = s.find(',', start);
    out.push_back({s.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start),
                   offset + start});
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

std::vector<Rational> parse_tokens(const std::vector<Token>& tokens) {
  std::vector<Rational> out;
  for (const auto& t : tokens) {
    try {
      out.push_back(Rational::parse(t.text));
    } catch (const std::exception&) {
      throw WeightSyntaxError(t.pos, "not a rational number: '" + std::string(t.text) + "'");
    }
  }
  return out;
}

}  // namespace

Weight parse_weight(std::string_view text, const RootSystem& rs) {
  auto semi = text.find(';');
  std::string_view head = text.substr(0, semi);
  std::string_view tail = semi == std::string_view::npos ? std::string_view{} : text.substr(semi + 1);
  if (tail.find(';') != std::string_view::npos)
    throw WeightSyntaxError(semi + 1 + tail.find(';'), "more than one ';' in weight");
  auto coroot_tokens = split(head, 0);
  auto central_tokens = split(tail, semi + 1);
  if (coroot_tokens.size() != rs.rank()) {
    const std::size_t pos = coroot_tokens.size() > rs.rank() ? coroot_tokens[rs.rank()].pos : head.size();
    throw WeightSyntaxError(pos, "expected " + std::to_string(rs.rank()) + " coroot coordinates, got " +
                                     std::to_string(coroot_tokens.size()));
  }
  if (central_tokens.size() != rs.torus_rank()) {
    const std::size_t pos =
        central_tokens.size() > rs.torus_rank() ? central_tokens[rs.torus_rank()].pos : text.size();
    throw WeightSyntaxError(pos, "expected " + std::to_string(rs.torus_rank()) + " central coordinates, got " +
                                     std::to_string(central_tokens.size()));
  }
  return Weight(parse_tokens(coroot_tokens), parse_tokens(central_tokens));
}

RootVector parse_root_vector(std::string_view text, std::size_t rank) {
  auto tokens = split(text, 0);
  if (tokens.size() != rank)
    throw WeightSyntaxError(tokens.size() > rank ? tokens[rank].pos : text.size(),
                            "expected " + std::to_string(rank) + " root coordinates, got " +
                                std::to_string(tokens.size()));
  RootVector v(rank);
  auto values = parse_tokens(tokens);
  for (std::size_t i = 0; i < rank; ++i) {
    if (!values[i].is_integer())
      throw WeightSyntaxError(tokens[i].pos, "root coordinates must be integers: '" + std::string(tokens[i].text) + "'");
    v[i] = values[i].to_integer();
  }
  return v;
}

std::string weight_text(const Weight& w) {
  std::string out;
  for (std::size_t i = 0; i < w.rank(); ++i) out += (i ? "," : "") + w[i].str();
  if (w.torus_rank() > 0) {
    out += ";";
    for (std::size_t i = 0; i < w.torus_rank(); ++i) out += (i ? "," : "") + w.central()[i].str();
  }
  return out;
}

nlohmann::json to_json(const Rational& q) { return q.str(); }

nlohmann::json to_json(const Weight& w) {
  auto out = nlohmann::json::array();
  for (const auto& c : w.coroot()) out.push_back(to_json(c));
  for (const auto& c : w.central()) out.push_back(to_json(c));
  return out;
}

nlohmann::json to_json(const RootVector& v) { return v.coeffs(); }

nlohmann::json to_json(const Character& c) {
  auto entries = nlohmann::json::array();
  for (const auto& [off, d] : c.dims) entries.push_back({{"offset", to_json(off)}, {"dim", d}});
  return {{"base", to_json(c.base)}, {"H", c.height}, {"entries", entries}};
}

nlohmann::json to_json(const LeviDatum& levi) {
  auto pos = nlohmann::json::array();
  for (const auto& r : levi.positive_roots) pos.push_back(to_json(r));
  auto simple = nlohmann::json::array();
  for (const auto& r : levi.simple_roots) simple.push_back(to_json(r));
  return {{"type", levi.type_name()}, {"standard", levi.is_standard}, {"simple_roots", simple},
          {"positive_roots", pos}};
}

nlohmann::json to_json(const MultiplicityReport& r) {
  auto terms = nlohmann::json::array();
  for (const auto& t : r.terms) terms.push_back({{"chi", to_json(t.chi)}, {"p", t.p}, {"levi_mult", t.levi_mult}});
  return {{"value", r.value},
          {"w_used", r.w_used.word_str()},
          {"levi", to_json(r.levi)},
          {"nu", to_json(r.nu)},
          {"nu2", to_json(r.nu2)},
          {"terms", terms}};
}

nlohmann::json to_json(const KLPolynomial& p) { return p.coeffs(); }

std::string render(const nlohmann::json& doc) { return doc.dump(2) + "\n"; }

}  // namespace takiff

#include "facloc/instances.hpp"

#include <cctype>
#include <charconv>
#include <limits>
#include <random>
#include <sstream>
#include <stdexcept>
#include <vector>

namespace facloc {

namespace {

using Int = boost::multiprecision::cpp_int;

// Grid index spans and categorical resolutions must fit a single 64-bit
// draw; 1e12 leaves ample headroom.
constexpr std::int64_t kMaxDrawRange = 1'000'000'000'000;

Int floor_int(const Rational& x) { return x.floor(); }

Int ceil_int(const Rational& x) { return -(-x).floor(); }

// Uniform over [0, range) by rejection, independent of library-specific
// distribution implementations so streams are portable.
std::uint64_t bounded(std::mt19937_64& rng, std::uint64_t range) {
  if (range <= 1) return 0;
  constexpr std::uint64_t kMax = std::numeric_limits<std::uint64_t>::max();
  std::uint64_t overhang = (kMax % range + 1) % range;
  std::uint64_t v = rng();
  if (overhang != 0) {
    while (v >= std::uint64_t{0} - overhang) v = rng();
  }
  return v % range;
}

std::int64_t bounded_int(std::mt19937_64& rng, std::int64_t lo, std::int64_t hi) {
  return lo + static_cast<std::int64_t>(
                  bounded(rng, static_cast<std::uint64_t>(hi - lo) + 1));
}

struct GridSpan {
  Int lo;
  std::uint64_t size = 0;
};

GridSpan grid_span(const GeneratorConfig& config) {
  GridSpan span;
  span.lo = ceil_int(config.location_min * Rational(config.grid_denominator));
  Int hi = floor_int(config.location_max * Rational(config.grid_denominator));
  if (hi < span.lo) {
    throw std::invalid_argument("location range contains no grid point");
  }
  Int count = hi - span.lo + 1;
  if (count > kMaxDrawRange) {
    throw std::invalid_argument("location grid has too many points to sample");
  }
  span.size = count.convert_to<std::uint64_t>();
  return span;
}

// Common denominator for exact categorical preference sampling.
std::uint64_t preference_resolution(const GeneratorConfig& config) {
  Int l = boost::multiprecision::lcm(config.pref_f1.denominator(),
                                     config.pref_f2.denominator());
  l = boost::multiprecision::lcm(l, config.pref_both.denominator());
  if (l > kMaxDrawRange) {
    throw std::invalid_argument("preference probabilities are too fine-grained");
  }
  return l.convert_to<std::uint64_t>();
}

[[noreturn]] void parse_fail(std::size_t line, const std::string& what) {
  throw std::invalid_argument("line " + std::to_string(line) + ": " + what);
}

std::vector<std::string> tokenize(const std::string& line) {
  std::vector<std::string> tokens;
  std::istringstream in(line);
  std::string tok;
  while (in >> tok) tokens.push_back(tok);
  return tokens;
}

std::int64_t parse_int64(const std::string& tok, std::size_t line,
                         const std::string& what) {
  std::int64_t value = 0;
  const char* begin = tok.data();
  const char* end = begin + tok.size();
  auto [ptr, ec] = std::from_chars(begin, end, value);
  if (ec != std::errc() || ptr != end) parse_fail(line, "invalid " + what + " '" + tok + "'");
  return value;
}

Preference parse_preference(const std::string& tok, int k, std::size_t line) {
  if (tok == "-") parse_fail(line, "empty preference set");
  std::uint32_t mask = 0;
  std::size_t i = 0;
  while (i < tok.size()) {
    if (tok[i] != 'F') parse_fail(line, "malformed preference '" + tok + "'");
    ++i;
    std::size_t start = i;
    while (i < tok.size() && std::isdigit(static_cast<unsigned char>(tok[i]))) ++i;
    if (start == i) parse_fail(line, "malformed preference '" + tok + "'");
    int idx = static_cast<int>(parse_int64(tok.substr(start, i - start), line, "facility index"));
    if (idx < 1 || idx > k) {
      parse_fail(line, "facility index out of range in '" + tok + "'");
    }
    std::uint32_t bit = std::uint32_t{1} << (idx - 1);
    if (mask & bit) parse_fail(line, "duplicate facility in '" + tok + "'");
    mask |= bit;
    if (i < tok.size() && tok[i] == '+') {
      ++i;
      if (i == tok.size()) parse_fail(line, "malformed preference '" + tok + "'");
    }
  }
  return Preference(mask);
}

std::string preference_token(const Preference& pref, int k) {
  if (k == 2 && pref.mask() == 0b11) return "F1F2";
  std::string out;
  for (int f = 1; f <= k; ++f) {
    if (!pref.accepts(f)) continue;
    if (!out.empty()) out += '+';
    out += 'F';
    out += std::to_string(f);
  }
  return out;
}

}  // namespace

void GeneratorConfig::validate() const {
  if (n_min < 1 || n_min > n_max) {
    throw std::invalid_argument("agent count range must satisfy 1 <= n_min <= n_max");
  }
  if (location_min > location_max) {
    throw std::invalid_argument("location range is empty");
  }
  if (grid_denominator < 1) {
    throw std::invalid_argument("grid denominator must be >= 1");
  }
  if (weight_min < 1 || weight_min > weight_max) {
    throw std::invalid_argument("weight range must satisfy 1 <= weight_min <= weight_max");
  }
  if (pref_f1.sign() < 0 || pref_f2.sign() < 0 || pref_both.sign() < 0 ||
      pref_f1 + pref_f2 + pref_both != Rational(1)) {
    throw std::invalid_argument("preference probabilities must be non-negative and sum to 1");
  }
  if (k < 1 || k > Preference::kMaxFacilities) {
    throw std::invalid_argument("facility count out of range");
  }
  grid_span(*this);
  preference_resolution(*this);
}

Rational default_sqrt2_approx() { return Rational(141421356, 100000000); }

Instance lower_bound_family(std::int64_t n, std::int64_t w, const Rational& r) {
  if (n < 1) throw std::invalid_argument("N must be >= 1");
  if (r.sign() <= 0) throw std::invalid_argument("r must be positive");
  if (n > std::numeric_limits<std::int64_t>::max() / 1000 || w < 1000 * n) {
    throw std::invalid_argument("W must be at least 1000*N");
  }
  Int middle = ((Rational(1) + r) * Rational(n)).floor();
  if (middle > std::numeric_limits<Weight>::max() / 8) {
    throw std::invalid_argument("N too large for integer weights");
  }
  std::vector<Agent> agents;
  agents.push_back({Rational(0), Preference({1}), n});
  agents.push_back({Rational(1), Preference({1}), middle.convert_to<Weight>()});
  agents.push_back({r, Preference({2}), w});
  return Instance(std::move(agents), 2);
}

Instance k3_counterexample(const Rational& l1, const Rational& l2, Weight w) {
  if (!(Rational(2) * l2 < l1 && l1 < Rational(3) * l2)) {
    throw std::invalid_argument("parameters must satisfy 2*l2 < l1 < 3*l2 strictly");
  }
  if (w < 5000) {
    throw std::invalid_argument("W must be at least 1000x the small-group weight (>= 5000)");
  }
  std::vector<Agent> agents;
  agents.push_back({Rational(0), Preference({2}), 2});
  agents.push_back({l1 - l2, Preference({2}), 1});
  agents.push_back({l1, Preference({2}), 1});
  agents.push_back({l1 + l2, Preference({2, 3}), 1});
  agents.push_back({Rational(0), Preference({1}), w});
  agents.push_back({Rational(2) * l1 + l2, Preference({3}), w});
  return Instance(std::move(agents), 3);
}

Instance random_instance(const GeneratorConfig& config, std::uint64_t seed) {
  config.validate();
  GridSpan span = grid_span(config);
  std::uint64_t resolution = preference_resolution(config);
  std::uint64_t cut_f1 =
      (config.pref_f1 * Rational(static_cast<std::int64_t>(resolution)))
          .numerator()
          .convert_to<std::uint64_t>();
  std::uint64_t cut_f2 =
      cut_f1 + (config.pref_f2 * Rational(static_cast<std::int64_t>(resolution)))
                   .numerator()
                   .convert_to<std::uint64_t>();

  std::mt19937_64 rng(seed);
  int n = static_cast<int>(bounded_int(rng, config.n_min, config.n_max));
  std::vector<Agent> agents;
  agents.reserve(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    Int numerator = span.lo + static_cast<std::int64_t>(bounded(rng, span.size));
    Rational location(numerator, Int(config.grid_denominator));
    Weight weight = bounded_int(rng, config.weight_min, config.weight_max);
    Preference pref = Preference({1});
    if (config.k == 2) {
      std::uint64_t t = bounded(rng, resolution);
      pref = t < cut_f1 ? Preference({1}) : t < cut_f2 ? Preference({2}) : Preference({1, 2});
    } else if (config.k > 1) {
      std::uint64_t masks = (std::uint64_t{1} << config.k) - 1;
      pref = Preference(static_cast<std::uint32_t>(1 + bounded(rng, masks)));
    }
    agents.push_back({std::move(location), pref, weight});
  }
  return Instance(std::move(agents), config.k);
}

std::uint64_t derive_seed(std::uint64_t base, std::uint64_t index) {
  // splitmix64 over a golden-ratio stride; distinct indices land in
  // decorrelated states even for adjacent bases.
  std::uint64_t z = base + 0x9E3779B97F4A7C15ULL * (index + 1);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

Instance parse_instance(std::string_view text) {
  std::vector<std::pair<std::size_t, std::string>> lines;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t nl = text.find('\n', pos);
    std::size_t end = nl == std::string_view::npos ? text.size() : nl;
    ++line_no;
    std::string line(text.substr(pos, end - pos));
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.find_first_not_of(" \t") != std::string::npos) {
      lines.emplace_back(line_no, std::move(line));
    }
    if (nl == std::string_view::npos) break;
    pos = nl + 1;
  }

  if (lines.empty()) throw std::invalid_argument("line 1: missing 'n k' header");
  std::vector<std::string> header = tokenize(lines[0].second);
  if (header.size() != 2) parse_fail(lines[0].first, "header must be 'n k'");
  std::int64_t n = parse_int64(header[0], lines[0].first, "agent count");
  std::int64_t k = parse_int64(header[1], lines[0].first, "facility count");
  if (n < 1) parse_fail(lines[0].first, "agent count must be >= 1");
  if (k < 1 || k > Preference::kMaxFacilities) {
    parse_fail(lines[0].first, "facility count out of range");
  }
  if (static_cast<std::int64_t>(lines.size()) - 1 != n) {
    throw std::invalid_argument(
        "expected " + std::to_string(n) + " agent lines, found " +
        std::to_string(lines.size() - 1));
  }

  std::vector<Agent> agents;
  agents.reserve(static_cast<std::size_t>(n));
  for (std::size_t li = 1; li < lines.size(); ++li) {
    const auto& [no, line] = lines[li];
    std::vector<std::string> tokens = tokenize(line);
    if (tokens.size() != 3) parse_fail(no, "expected 'location weight prefs'");
    Rational location;
    try {
      location = Rational::parse(tokens[0]);
    } catch (const std::exception&) {
      parse_fail(no, "invalid location '" + tokens[0] + "'");
    }
    std::int64_t weight = parse_int64(tokens[1], no, "weight");
    if (weight < 1) parse_fail(no, "weight must be a positive integer");
    Preference pref = parse_preference(tokens[2], static_cast<int>(k), no);
    agents.push_back({std::move(location), pref, weight});
  }
  return Instance(std::move(agents), static_cast<int>(k));
}

std::string serialize_instance(const Instance& instance) {
  std::string out = std::to_string(instance.agents().size());
  out += ' ';
  out += std::to_string(instance.k());
  out += '\n';
  for (const Agent& agent : instance.agents()) {
    out += agent.location.str();
    out += ' ';
    out += std::to_string(agent.weight);
    out += ' ';
    out += preference_token(agent.preference, instance.k());
    out += '\n';
  }
  return out;
}

}  // namespace facloc

#include "edim/spec_io.hpp"

#include <cctype>
#include <charconv>
#include <sstream>

#include "json.hpp"

namespace edim::spec_io {

using abelian::Character;
using abelian::Coords;
using abelian::GroupElement;
using catalog::GroupSpec;
using catalog::SimpleFactor;
using engine::EdReport;
using json = nlohmann::ordered_json;

namespace {

constexpr std::int64_t kMaxRepeat = 256;

class Parser {
 public:
  explicit Parser(std::string_view src) : src_(src) {}

  GroupSpec group() {
    GroupSpec spec;
    spec.factors = product();
    skip_ws();
    if (peek() == '/') {
      ++pos_;
      spec.mu_generators = mu(spec.factors);
    }
    expect_end();
    return spec;
  }

  GroupElement element(const std::vector<SimpleFactor>& factors) {
    auto x = tuple(factors);
    expect_end();
    return x;
  }

 private:
  std::string_view src_;
  std::size_t pos_ = 0;

  [[noreturn]] void syntax(const std::string& what) const {
    throw Error(ErrorKind::SyntaxError, what, pos_);
  }

  void skip_ws() {
    while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) ++pos_;
  }

  char peek() const { return pos_ < src_.size() ? src_[pos_] : '\0'; }

  void expect(char c) {
    skip_ws();
    if (peek() != c) syntax(std::string("expected '") + c + "'");
    ++pos_;
  }

  void expect_end() {
    skip_ws();
    if (pos_ != src_.size()) syntax("unexpected trailing input");
  }

  bool keyword(std::string_view word) {
    skip_ws();
    if (src_.substr(pos_, word.size()) != word) return false;
    pos_ += word.size();
    return true;
  }

  std::int64_t integer() {
    skip_ws();
    const std::size_t start = pos_;
    if (peek() == '-' || peek() == '+') ++pos_;
    if (!std::isdigit(static_cast<unsigned char>(peek()))) syntax("expected an integer");
    while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    std::int64_t v = 0;
    const char* first = src_.data() + start + (src_[start] == '+' ? 1 : 0);
    auto [ptr, ec] = std::from_chars(first, src_.data() + pos_, v);
    if (ec != std::errc() || ptr != src_.data() + pos_)
      throw Error(ErrorKind::ValueOutOfRange, "integer does not fit in 64 bits", start);
    return v;
  }

  SimpleFactor factor_head() {
    skip_ws();
    const std::size_t start = pos_;
    auto parenthesized = [&] {
      expect('(');
      const std::size_t at = pos_;
      const auto v = integer();
      expect(')');
      return std::pair{v, at};
    };
    try {
      if (keyword("Spin")) {
        auto [n, at] = parenthesized();
        return guarded(at, [n] { return SimpleFactor::spin(n); });
      }
      if (keyword("Sp")) {
        auto [n, at] = parenthesized();
        if (n % 2 != 0) throw Error(ErrorKind::ValueOutOfRange, "Sp(N) needs even N", at);
        return guarded(at, [n] { return SimpleFactor::sp(n / 2); });
      }
      if (keyword("SL")) {
        auto [q, at] = parenthesized();
        return guarded(at, [q] { return SimpleFactor::sl_order(q); });
      }
      if (keyword("E6")) return SimpleFactor::e6();
    } catch (const Error& e) {
      if (e.kind() == ErrorKind::SyntaxError || e.kind() == ErrorKind::ValueOutOfRange) throw;
      throw Error(ErrorKind::ValueOutOfRange, e.detail(), start);
    }
    syntax("expected Spin(n), Sp(n), SL(n) or E6");
  }

  template <class Make>
  static SimpleFactor guarded(std::size_t at, Make make) {
    try {
      return make();
    } catch (const Error& e) {
      throw Error(ErrorKind::ValueOutOfRange, e.detail(), at);
    }
  }

  std::vector<SimpleFactor> product() {
    std::vector<SimpleFactor> out;
    for (;;) {
      const SimpleFactor f = factor_head();
      std::int64_t count = 1;
      skip_ws();
      while (peek() == '^') {
        ++pos_;
        skip_ws();
        const std::size_t at = pos_;
        const auto e = integer();
        if (e < 1 || count * e > kMaxRepeat)
          throw Error(ErrorKind::ValueOutOfRange, "exponent must be between 1 and " + std::to_string(kMaxRepeat), at);
        count *= e;
        skip_ws();
      }
      out.insert(out.end(), static_cast<std::size_t>(count), f);
      skip_ws();
      if (peek() != '*') break;
      ++pos_;
    }
    return out;
  }

  std::vector<GroupElement> mu(const std::vector<SimpleFactor>& factors) {
    std::vector<GroupElement> out;
    expect('[');
    out.push_back(tuple(factors));
    skip_ws();
    while (peek() == ',') {
      ++pos_;
      out.push_back(tuple(factors));
      skip_ws();
    }
    expect(']');
    return out;
  }

  std::int64_t bounded(std::int64_t order) {
    skip_ws();
    const std::size_t at = pos_;
    const auto v = integer();
    if (v < 0 || v >= order)
      throw Error(ErrorKind::ValueOutOfRange,
                  std::to_string(v) + " is outside 0.." + std::to_string(order - 1), at);
    return v;
  }

  GroupElement tuple(const std::vector<SimpleFactor>& factors) {
    skip_ws();
    const std::size_t start = pos_;
    expect('(');
    GroupElement x;
    std::size_t entries = 0;
    skip_ws();
    if (peek() != ')') {
      for (;;) {
        skip_ws();
        const std::size_t at = pos_;
        if (entries >= factors.size())
          throw Error(ErrorKind::ArityMismatch,
                      "tuple has more than " + std::to_string(factors.size()) + " entries", at);
        const auto orders = factors[entries].center_orders();
        const bool nested = peek() == '(';
        if (nested != (orders.size() == 2))
          throw Error(ErrorKind::ArityMismatch,
                      factors[entries].name() + (orders.size() == 2 ? " needs a pair (a,b)" : " needs a single integer"),
                      at);
        if (nested) {
          ++pos_;
          x.coords.push_back(bounded(orders[0]));
          expect(',');
          x.coords.push_back(bounded(orders[1]));
          expect(')');
        } else {
          x.coords.push_back(bounded(orders[0]));
        }
        ++entries;
        skip_ws();
        if (peek() != ',') break;
        ++pos_;
      }
    }
    expect(')');
    if (entries != factors.size())
      throw Error(ErrorKind::ArityMismatch,
                  "tuple has " + std::to_string(entries) + " entries for " + std::to_string(factors.size()) + " factors",
                  start);
    return x;
  }
};

std::string factor_text(const SimpleFactor& f) { return f.name(); }

// ---------------------------------------------------------------------------
// JSON helpers
// ---------------------------------------------------------------------------

[[noreturn]] void malformed(const std::string& what) { throw Error(ErrorKind::MalformedReport, what); }

json big(const BigInt& v) { return to_decimal(v); }
json opt_big(const std::optional<BigInt>& v) { return v ? big(*v) : json(nullptr); }

const json& field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) malformed(std::string("missing field '") + key + "'");
  return j.at(key);
}

BigInt read_big(const json& j, const char* key) {
  const auto& v = field(j, key);
  BigInt out;
  if (!v.is_string() || !parse_decimal(v.get<std::string>(), out)) malformed(std::string("'") + key + "' is not a decimal string");
  return out;
}

std::optional<BigInt> read_opt_big(const json& j, const char* key) {
  if (field(j, key).is_null()) return std::nullopt;
  return read_big(j, key);
}

bool read_bool(const json& j, const char* key) {
  const auto& v = field(j, key);
  if (!v.is_boolean()) malformed(std::string("'") + key + "' is not a boolean");
  return v.get<bool>();
}

std::int64_t read_int(const json& j, const char* key) {
  const auto& v = field(j, key);
  if (!v.is_number_integer()) malformed(std::string("'") + key + "' is not an integer");
  return v.get<std::int64_t>();
}

std::string read_string(const json& j, const char* key) {
  const auto& v = field(j, key);
  if (!v.is_string()) malformed(std::string("'") + key + "' is not a string");
  return v.get<std::string>();
}

template <class T>
std::vector<T> read_array(const json& j, const char* key) {
  const auto& v = field(j, key);
  if (!v.is_array()) malformed(std::string("'") + key + "' is not an array");
  std::vector<T> out;
  for (const auto& x : v) {
    if constexpr (std::is_same_v<T, std::string>) {
      if (!x.is_string()) malformed(std::string("'") + key + "' holds a non-string");
    } else {
      if (!x.is_number_integer()) malformed(std::string("'") + key + "' holds a non-integer");
    }
    out.push_back(x.get<T>());
  }
  return out;
}

const char* reason_name(freeness::Reason r) {
  switch (r) {
    case freeness::Reason::NotInTable: return "not_in_table";
    case freeness::Reason::TableRow: return "table_row";
    case freeness::Reason::TypeCCriterion: return "type_c_criterion";
    case freeness::Reason::TypeACriterion: return "type_a_criterion";
    case freeness::Reason::E6Criterion: return "e6_criterion";
    case freeness::Reason::CriterionFailed: return "criterion_failed";
  }
  return "?";
}

freeness::Reason reason_from(const std::string& s) {
  for (auto r : {freeness::Reason::NotInTable, freeness::Reason::TableRow, freeness::Reason::TypeCCriterion,
                 freeness::Reason::TypeACriterion, freeness::Reason::E6Criterion, freeness::Reason::CriterionFailed})
    if (s == reason_name(r)) return r;
  malformed("unknown verdict reason '" + s + "'");
}

catalog::FamilyTag family_from(const std::string& s) {
  for (auto f : {catalog::FamilyTag::BD, catalog::FamilyTag::C, catalog::FamilyTag::A, catalog::FamilyTag::E6})
    if (s == catalog::to_string(f)) return f;
  malformed("unknown family '" + s + "'");
}

GroupSpec read_spec(const json& j, const char* key) {
  try {
    return parse(read_string(j, key));
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::MalformedReport) throw;
    malformed(std::string("'") + key + "': " + e.what());
  }
}

std::string headline(const std::optional<BigInt>& lower, const std::optional<BigInt>& upper) {
  std::string out;
  if (lower) out += "≥ " + to_decimal(*lower < 0 ? BigInt(0) : *lower);
  if (upper) out += std::string(out.empty() ? "" : ", ") + "≤ " + to_decimal(*upper);
  return out.empty() ? "no bounds" : out;
}

std::string coords_text(const Coords& c) {
  std::string out = "(";
  for (std::size_t i = 0; i < c.size(); ++i) out += (i ? "," : "") + std::to_string(c[i]);
  return out + ")";
}

}  // namespace

GroupSpec parse(std::string_view text) { return Parser(text).group(); }

GroupElement parse_element(std::string_view text, const std::vector<SimpleFactor>& factors) {
  return Parser(text).element(factors);
}

std::string render_element(const GroupElement& x, const std::vector<SimpleFactor>& factors) {
  std::string out = "(";
  std::size_t at = 0;
  for (std::size_t i = 0; i < factors.size(); ++i) {
    if (i) out += ",";
    if (factors[i].center_orders().size() == 2) {
      out += "(" + std::to_string(x.coords[at]) + "," + std::to_string(x.coords[at + 1]) + ")";
      at += 2;
    } else {
      out += std::to_string(x.coords[at++]);
    }
  }
  return out + ")";
}

std::string render(const GroupSpec& spec) {
  std::string out;
  for (std::size_t i = 0; i < spec.factors.size();) {
    std::size_t j = i;
    while (j < spec.factors.size() && spec.factors[j] == spec.factors[i]) ++j;
    if (!out.empty()) out += "*";
    out += factor_text(spec.factors[i]);
    if (j - i > 1) out += "^" + std::to_string(j - i);
    i = j;
  }
  if (!spec.mu_generators.empty()) {
    out += "/[";
    for (std::size_t i = 0; i < spec.mu_generators.size(); ++i)
      out += (i ? "," : "") + render_element(spec.mu_generators[i], spec.factors);
    out += "]";
  }
  return out;
}

// ---------------------------------------------------------------------------
// emit
// ---------------------------------------------------------------------------

namespace {

json to_json(const EdReport& r) {
  json j;
  j["schema_version"] = kSchemaVersion;
  j["group"] = render(r.group);
  j["permutation"] = r.permutation;
  j["family"] = std::string(catalog::to_string(r.family));
  j["prime"] = r.prime;
  j["dim_g"] = big(r.dim_g);
  j["rank_z"] = r.rank_z;
  j["center_structure"] = r.center_structure;
  json basis = json::array();
  for (const auto& e : r.basis) {
    json b;
    b["character"] = e.character.coords;
    b["socle_image"] = e.socle_image.coords;
    b["n_socle"] = big(e.n_socle);
    b["n_socle_exact"] = e.n_socle_exact;
    b["dim_v"] = big(e.dim_v);
    b["reps"] = e.reps;
    b["support"] = e.support;
    b["verdict"] = json{{"free", e.verdict.free},
                        {"reason", reason_name(e.verdict.reason)},
                        {"row", e.verdict.row},
                        {"detail", e.verdict.detail}};
    b["in_b0"] = e.in_b0;
    basis.push_back(std::move(b));
  }
  j["basis"] = std::move(basis);
  j["b0"] = r.b0;
  j["lower"] = opt_big(r.lower);
  j["upper"] = opt_big(r.upper);
  j["exact"] = r.exact;
  j["ed"] = opt_big(r.ed);
  j["ed_red_upper"] = opt_big(r.ed_red_upper);
  j["ed_red_exact"] = r.ed_red_exact;
  j["ed_red"] = opt_big(r.ed_red);
  j["index_minimal_score"] = opt_big(r.index_minimal_score);
  j["caveats"] = r.caveats;
  j["hypothesis_failures"] = r.hypothesis_failures;
  if (r.extension) {
    const auto& x = *r.extension;
    j["extension"] = json{{"nu", x.nu.coords},
                          {"omega", x.omega.coords},
                          {"n_h_omega", big(x.n_h_omega)},
                          {"ed_g", big(x.ed_g)},
                          {"g_spec", render(x.g_spec)}};
  } else {
    j["extension"] = nullptr;
  }
  return j;
}

std::string to_text(const EdReport& r) {
  std::ostringstream os;
  auto row = [&](const std::string& k, const std::string& v) {
    os << k << std::string(k.size() < 14 ? 14 - k.size() : 1, ' ') << v << "\n";
  };
  row("group", render(r.group));
  row("family", std::string(catalog::to_string(r.family)) + " (p = " + std::to_string(r.prime) + ")");
  row("dim G", to_decimal(r.dim_g));
  std::string center;
  for (auto d : r.center_structure) center += (center.empty() ? "Z/" : " + Z/") + std::to_string(d);
  row("Z(G)", (center.empty() ? "trivial" : center) + " (rank " + std::to_string(r.rank_z) + ")");
  if (r.exact)
    row("ed(G)", to_decimal(*r.ed) + " (exact)");
  else
    row("ed(G)", headline(r.lower, r.upper));
  if (r.ed_red_exact)
    row("ed(G_red)", to_decimal(*r.ed_red) + " (exact)");
  else
    row("ed(G_red)", r.ed_red_upper ? "≤ " + to_decimal(*r.ed_red_upper) : "no bounds");
  row("lower (raw)", r.lower ? to_decimal(*r.lower) : "-");
  row("upper", r.upper ? to_decimal(*r.upper) : "-");
  if (r.index_minimal_score) row("min score", to_decimal(*r.index_minimal_score));
  os << "basis:\n";
  for (const auto& e : r.basis) {
    std::string reps;
    for (const auto& s : e.reps) reps += (reps.empty() ? "" : " x ") + s;
    os << "  " << (e.in_b0 ? "* " : "  ") << render_element(GroupElement{e.character.coords}, r.group.factors)
       << "  socle " << coords_text(e.socle_image.coords) << "  n " << to_decimal(e.n_socle)
       << (e.n_socle_exact ? "" : "?") << "  dim V " << to_decimal(e.dim_v) << "  [" << reps << "]  "
       << freeness::to_string(e.verdict) << "\n";
  }
  if (r.extension) {
    const auto& x = *r.extension;
    os << "extension:\n";
    row("  G = H/nu", render(x.g_spec));
    row("  nu", render_element(x.nu, r.group.factors));
    row("  omega", render_element(GroupElement{x.omega.coords}, r.group.factors));
    row("  n_H(omega)", to_decimal(x.n_h_omega));
    row("  ed(G)", to_decimal(x.ed_g));
  }
  if (!r.hypothesis_failures.empty()) {
    os << "hypothesis failures:\n";
    for (const auto& f : r.hypothesis_failures) os << "  - " << f << "\n";
  }
  if (!r.caveats.empty()) {
    os << "caveats:\n";
    for (const auto& c : r.caveats) os << "  - " << c << "\n";
  }
  return os.str();
}

}  // namespace

std::string emit(const EdReport& report, Format format) {
  if (format == Format::Text) return to_text(report);
  return to_json(report).dump(2) + "\n";
}

EdReport parse_report(std::string_view text) {
  json j;
  try {
    j = json::parse(text.begin(), text.end());
  } catch (const json::exception& e) {
    malformed(std::string("invalid JSON: ") + e.what());
  }
  if (read_int(j, "schema_version") != kSchemaVersion) malformed("unsupported schema_version");
  EdReport r;
  try {
    r.group = read_spec(j, "group");
    for (auto i : read_array<std::int64_t>(j, "permutation")) r.permutation.push_back(static_cast<std::size_t>(i));
    r.family = family_from(read_string(j, "family"));
    r.prime = read_int(j, "prime");
    r.dim_g = read_big(j, "dim_g");
    r.rank_z = static_cast<std::size_t>(read_int(j, "rank_z"));
    r.center_structure = read_array<std::int64_t>(j, "center_structure");
    const auto& basis = field(j, "basis");
    if (!basis.is_array()) malformed("'basis' is not an array");
    for (const auto& b : basis) {
      engine::BasisEntry e;
      e.character = Character{read_array<std::int64_t>(b, "character")};
      e.socle_image = Character{read_array<std::int64_t>(b, "socle_image")};
      e.n_socle = read_big(b, "n_socle");
      e.n_socle_exact = read_bool(b, "n_socle_exact");
      e.dim_v = read_big(b, "dim_v");
      e.reps = read_array<std::string>(b, "reps");
      for (auto i : read_array<std::int64_t>(b, "support")) e.support.push_back(static_cast<std::size_t>(i));
      const auto& v = field(b, "verdict");
      e.verdict.free = read_bool(v, "free");
      e.verdict.reason = reason_from(read_string(v, "reason"));
      e.verdict.row = static_cast<int>(read_int(v, "row"));
      e.verdict.detail = read_string(v, "detail");
      e.in_b0 = read_bool(b, "in_b0");
      r.basis.push_back(std::move(e));
    }
    for (auto i : read_array<std::int64_t>(j, "b0")) r.b0.push_back(static_cast<std::size_t>(i));
    r.lower = read_opt_big(j, "lower");
    r.upper = read_opt_big(j, "upper");
    r.exact = read_bool(j, "exact");
    r.ed = read_opt_big(j, "ed");
    r.ed_red_upper = read_opt_big(j, "ed_red_upper");
    r.ed_red_exact = read_bool(j, "ed_red_exact");
    r.ed_red = read_opt_big(j, "ed_red");
    r.index_minimal_score = read_opt_big(j, "index_minimal_score");
    r.caveats = read_array<std::string>(j, "caveats");
    r.hypothesis_failures = read_array<std::string>(j, "hypothesis_failures");
    const auto& x = field(j, "extension");
    if (!x.is_null()) {
      engine::ExtensionInfo info;
      info.nu = GroupElement{read_array<std::int64_t>(x, "nu")};
      info.omega = Character{read_array<std::int64_t>(x, "omega")};
      info.n_h_omega = read_big(x, "n_h_omega");
      info.ed_g = read_big(x, "ed_g");
      info.g_spec = read_spec(x, "g_spec");
      r.extension = std::move(info);
    }
  } catch (const json::exception& e) {
    malformed(e.what());
  }
  return r;
}

}  // namespace edim::spec_io

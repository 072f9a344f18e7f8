#include "stabletrace/groupdef.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <set>
#include <sstream>

#ifndef STABLETRACE_DATA_DIR
#define STABLETRACE_DATA_DIR "data"
#endif

namespace stabletrace {

ParseError::ParseError(std::string source, size_t line, size_t column, const std::string& message)
    : std::runtime_error(source + ":" + std::to_string(line) + ":" + std::to_string(column) + ": " + message),
      source_(std::move(source)),
      line_(line),
      column_(column),
      message_(message) {}

namespace {

// One line of input with a cursor. Columns are 1-based in diagnostics.
class Cursor {
 public:
  Cursor(const std::string& source, const std::string& text, size_t line)
      : source_(source), text_(text), line_(line) {}

  [[noreturn]] void fail(const std::string& msg) const { fail_at(pos_, msg); }
  [[noreturn]] void fail_at(size_t pos, const std::string& msg) const {
    throw ParseError(source_, line_, pos + 1, msg);
  }

  size_t pos() const { return pos_; }
  size_t line() const { return line_; }

  void skip_ws() {
    while (pos_ < text_.size() && (text_[pos_] == ' ' || text_[pos_] == '\t')) ++pos_;
  }

  // End of meaningful input: end of line or a comment.
  bool at_end() {
    skip_ws();
    return pos_ >= text_.size() || text_[pos_] == '#';
  }

  char peek() {
    skip_ws();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  void expect(char c, const std::string& what) {
    if (peek() != c) fail("expected " + what);
    ++pos_;
  }

  std::string word() {
    skip_ws();
    const size_t start = pos_;
    while (pos_ < text_.size()) {
      const char c = text_[pos_];
      if (std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '\'' || c == '-' || c == '/' || c == '+')
        ++pos_;
      else
        break;
    }
    return text_.substr(start, pos_ - start);
  }

  std::string ident(const std::string& what) {
    skip_ws();
    const size_t start = pos_;
    while (pos_ < text_.size() &&
           (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_' || text_[pos_] == '\''))
      ++pos_;
    if (pos_ == start) fail("expected " + what);
    return text_.substr(start, pos_ - start);
  }

  long long integer(const std::string& what) {
    skip_ws();
    const size_t start = pos_;
    const std::string w = word();
    if (w.empty()) fail_at(start, "expected " + what);
    size_t i = (w[0] == '-' || w[0] == '+') ? 1 : 0;
    if (i == w.size() || !std::all_of(w.begin() + static_cast<long>(i), w.end(),
                                      [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
      fail_at(start, "expected " + what + ", got '" + w + "'");
    try {
      return std::stoll(w);
    } catch (const std::out_of_range&) {
      fail_at(start, "integer '" + w + "' is out of range");
    }
  }

  Rat rational(const std::string& what) {
    skip_ws();
    const size_t start = pos_;
    const std::string w = word();
    if (w.empty()) fail_at(start, "expected " + what);
    try {
      return Rat::parse(w);
    } catch (const std::exception& e) {
      fail_at(start, "expected " + what + ", got '" + w + "' (" + e.what() + ")");
    }
  }

  std::string quoted() {
    if (peek() != '"') fail("expected a quoted string");
    const size_t start = pos_++;
    std::string out;
    while (pos_ < text_.size() && text_[pos_] != '"') {
      if (text_[pos_] == '\\') {
        if (pos_ + 1 >= text_.size()) break;
        const char e = text_[pos_ + 1];
        if (e != '"' && e != '\\') fail("unknown escape '\\" + std::string(1, e) + "'");
        out += e;
        pos_ += 2;
      } else {
        out += text_[pos_++];
      }
    }
    if (pos_ >= text_.size()) fail_at(start, "unterminated string");
    ++pos_;
    return out;
  }

  IVec vec() {
    expect('(', "'(' to start a vector");
    IVec v;
    while (peek() != ')') {
      if (at_end()) fail("unterminated vector, expected ')'");
      v.push_back(integer("an integer vector entry"));
    }
    ++pos_;
    return v;
  }

  std::vector<IVec> veclist() {
    std::vector<IVec> out;
    while (!at_end()) out.push_back(vec());
    return out;
  }

  Vec ratvec() {
    expect('(', "'(' to start a row");
    Vec v;
    while (peek() != ')') {
      if (at_end()) fail("unterminated row, expected ')'");
      v.push_back(rational("a rational entry"));
    }
    ++pos_;
    return v;
  }

  void end(const std::string& what) {
    if (!at_end()) fail("unexpected text after " + what);
  }

 private:
  const std::string& source_;
  const std::string& text_;
  size_t line_;
  size_t pos_ = 0;
};

std::string trim(const std::string& s) {
  const size_t b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  const size_t e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

std::vector<size_t> to_indices(const IVec& v, Cursor& c, size_t pos) {
  std::vector<size_t> out;
  for (long long x : v) {
    if (x < 0) c.fail_at(pos, "indices must be non-negative");
    out.push_back(static_cast<size_t>(x));
  }
  return out;
}

enum class Section { none, lattice, roots, profile, levi, endoscopic };

struct Parser {
  const std::string& source;
  GroupDefFile def;
  Section section = Section::none;
  std::set<std::string> seen_keys;
  std::set<std::string> sections_seen;
  std::map<std::string, size_t> levi_lines;
  std::set<std::string> profile_keys;
  size_t profile_line = 0;
  size_t lattice_line = 0;
  // Required keys of the current section, checked when it closes.
  std::vector<std::string> required;
  size_t section_line = 0;
  std::string section_label;
  bool has_exponents = false;
  bool has_omega_r = false;
  IVec chi_omega_r;
  size_t chi_omega_r_line = 0;

  explicit Parser(const std::string& src) : source(src) {}

  void close_section() {
    for (const auto& k : required)
      if (!seen_keys.count(k))
        throw ParseError(source, section_line, 1, "section " + section_label + " is missing key '" + k + "'");
    seen_keys.clear();
    required.clear();
  }

  void open_section(Cursor& c) {
    close_section();
    c.expect('[', "'['");
    const size_t name_pos = c.pos();
    const std::string name = c.ident("a section name");
    std::string arg;
    if (name == "levi" || name == "endoscopic") arg = c.ident("a name after '" + name + "'");
    c.expect(']', "']' to close the section header");
    c.end("the section header");
    section_line = c.line();
    section_label = "[" + name + (arg.empty() ? "" : " " + arg) + "]";
    if (sections_seen.count(section_label)) c.fail_at(name_pos, "duplicate section " + section_label);
    sections_seen.insert(section_label);
    if (name == "lattice") {
      section = Section::lattice;
      def.lattice = Lattice{};
      lattice_line = c.line();
      required = {"rank"};
    } else if (name == "roots") {
      section = Section::roots;
      def.roots = RootsDef{};
      def.roots_line = c.line();
      required = {"roots", "coroots", "simple"};
    } else if (name == "profile") {
      section = Section::profile;
      profile_line = c.line();
      required = {"name", "chi_case"};
    } else if (name == "levi") {
      section = Section::levi;
      LeviProfile l;
      l.levi.name = arg;
      def.profile.levis.push_back(std::move(l));
      required = {"imaginary", "real", "dim_a", "n", "k", "d", "chi"};
    } else if (name == "endoscopic") {
      section = Section::endoscopic;
      EndoscopicProfile e;
      e.group = arg;
      def.profile.endoscopic.push_back(std::move(e));
      required = {"iota", "out"};
    } else {
      c.fail_at(name_pos, "unknown section '" + name + "'");
    }
  }

  void check_arity(Cursor& c, size_t pos, const std::vector<IVec>& vs, const std::string& key) {
    if (!def.lattice) c.fail_at(pos, "'" + key + "' needs a preceding [lattice] section");
    for (const auto& v : vs)
      if (v.size() != def.lattice->rank)
        c.fail_at(pos, "'" + key + "' has a vector of length " + std::to_string(v.size()) + ", expected rank " +
                           std::to_string(def.lattice->rank));
  }

  void entry(Cursor& c) {
    const size_t key_pos = c.pos();
    const std::string key = c.ident("a key");
    c.expect('=', "'=' after key '" + key + "'");
    const size_t value_pos = c.pos();
    if (section == Section::none) c.fail_at(key_pos, "key '" + key + "' outside of any section");
    if (seen_keys.count(key)) c.fail_at(key_pos, "duplicate key '" + key + "' in " + section_label);
    seen_keys.insert(key);
    auto unknown = [&] { c.fail_at(key_pos, "unknown key '" + key + "' in " + section_label); };
    auto positive = [&](const std::string& what) {
      const long long v = c.integer(what);
      if (v <= 0) c.fail_at(value_pos, "'" + key + "' must be positive");
      return static_cast<long>(v);
    };

    switch (section) {
      case Section::lattice: {
        Lattice& lat = *def.lattice;
        if (key == "rank") {
          lat.rank = static_cast<size_t>(positive("an integer rank"));
        } else if (key == "char_relations" || key == "char_kernel" || key == "cochar_kernel" ||
                   key == "cochar_relations") {
          if (!seen_keys.count("rank")) c.fail_at(key_pos, "'rank' must come before '" + key + "'");
          auto vs = c.veclist();
          check_arity(c, value_pos, vs, key);
          if (key == "char_relations") lat.char_relations = std::move(vs);
          if (key == "char_kernel") lat.char_kernel = std::move(vs);
          if (key == "cochar_kernel") lat.cochar_kernel = std::move(vs);
          if (key == "cochar_relations") lat.cochar_relations = std::move(vs);
        } else if (key == "inner") {
          if (!seen_keys.count("rank")) c.fail_at(key_pos, "'rank' must come before 'inner'");
          Mat m;
          while (!c.at_end()) m.push_back(c.ratvec());
          bool square = m.size() == lat.rank;
          for (const auto& row : m) square = square && row.size() == lat.rank;
          if (!square) c.fail_at(value_pos, "'inner' must be a rank x rank matrix");
          lat.inner = std::move(m);
        } else {
          unknown();
        }
        break;
      }
      case Section::roots: {
        RootsDef& r = *def.roots;
        if (key == "roots" || key == "coroots") {
          auto vs = c.veclist();
          check_arity(c, value_pos, vs, key);
          (key == "roots" ? r.roots : r.coroots) = std::move(vs);
        } else if (key == "simple") {
          r.simple = to_indices(c.vec(), c, value_pos);
        } else {
          unknown();
        }
        break;
      }
      case Section::profile: {
        GroupProfile& g = def.profile;
        if (key == "name") {
          g.name = c.ident("a group name");
        } else if (key == "tamagawa") {
          g.tamagawa = c.rational("a rational");
          if (g.tamagawa.sign() <= 0) c.fail_at(value_pos, "'tamagawa' must be positive");
        } else if (key == "k") {
          g.k_const = positive("an integer");
        } else if (key == "d") {
          g.d_const = positive("an integer");
        } else if (key == "omega_r") {
          g.omega_r_order = positive("an integer");
        } else if (key == "real_components") {
          g.real_component_index = positive("an integer");
          g.chi.component_index = g.real_component_index;
        } else if (key == "chi_case") {
          const std::string v = c.ident("a chi case");
          try {
            g.chi.kind = chi_case_from_string(v);
          } catch (const ProfileError& e) {
            c.fail_at(value_pos, e.what());
          }
        } else if (key == "chi_exponents") {
          has_exponents = true;
          for (auto& v : c.veclist()) {
            ChevalleyFactor f;
            for (long long x : v) {
              if (x <= 0) c.fail_at(value_pos, "Weyl exponents must be positive");
              f.exponents.push_back(static_cast<int>(x));
            }
            g.chi.factors.push_back(std::move(f));
          }
        } else if (key == "chi_omega_r") {
          has_omega_r = true;
          chi_omega_r = c.vec();
          chi_omega_r_line = c.line();
        } else if (key == "chi_class_count") {
          g.chi.class_count = positive("an integer");
        } else if (key == "chi_unit_torsion") {
          g.chi.unit_torsion = positive("an integer");
        } else if (key == "chi_kernel") {
          g.chi.kernel_order = positive("an integer");
        } else if (key == "note") {
          g.note = c.quoted();
        } else {
          unknown();
        }
        break;
      }
      case Section::levi: {
        LeviProfile& l = def.profile.levis.back();
        if (key == "imaginary") {
          l.levi.imaginary = to_indices(c.vec(), c, value_pos);
        } else if (key == "real") {
          l.levi.real = to_indices(c.vec(), c, value_pos);
        } else if (key == "dim_a") {
          const long long v = c.integer("an integer");
          if (v < 0) c.fail_at(value_pos, "'dim_a' must be non-negative");
          l.levi.dim_a = static_cast<long>(v);
        } else if (key == "n") {
          l.n_gm = positive("an integer");
        } else if (key == "k") {
          l.k = positive("an integer");
        } else if (key == "d") {
          l.d = positive("an integer");
        } else if (key == "chi") {
          l.chi_k = c.rational("a rational");
        } else if (key == "chi_from") {
          def.chi_from[l.levi.name] = c.ident("a group name");
        } else if (key == "note") {
          l.note = c.quoted();
        } else {
          unknown();
        }
        break;
      }
      case Section::endoscopic: {
        EndoscopicProfile& e = def.profile.endoscopic.back();
        if (key == "iota") {
          e.iota = c.rational("a rational");
        } else if (key == "out") {
          e.out_order = positive("an integer");
        } else if (key == "note") {
          e.note = c.quoted();
        } else {
          unknown();
        }
        break;
      }
      case Section::none:
        break;
    }
    c.end("the value of '" + key + "'");
  }

  void finish(size_t last_line) {
    close_section();
    if (!profile_line) throw ParseError(source, last_line, 1, "missing [profile] section");
    if (def.lattice.has_value() != def.roots.has_value())
      throw ParseError(source, def.lattice ? lattice_line : def.roots_line, 1,
                       "[lattice] and [roots] must appear together");
    auto& chi = def.profile.chi;
    if (has_exponents != has_omega_r)
      throw ParseError(source, profile_line, 1, "'chi_exponents' and 'chi_omega_r' must appear together");
    if (has_omega_r) {
      if (chi_omega_r.size() != chi.factors.size())
        throw ParseError(source, chi_omega_r_line, 1,
                         "'chi_omega_r' has " + std::to_string(chi_omega_r.size()) + " entries for " +
                             std::to_string(chi.factors.size()) + " factors");
      for (size_t i = 0; i < chi_omega_r.size(); ++i) {
        if (chi_omega_r[i] <= 0) throw ParseError(source, chi_omega_r_line, 1, "'chi_omega_r' must be positive");
        chi.factors[i].omega_r = static_cast<long>(chi_omega_r[i]);
      }
    }
    if (def.profile.levis.empty()) throw ParseError(source, profile_line, 1, "at least one [levi] section is required");
    if (def.roots) {
      const auto& r = *def.roots;
      if (r.roots.size() != r.coroots.size())
        throw ParseError(source, def.roots_line, 1, "roots and coroots have different lengths");
      for (const auto& l : def.profile.levis)
        for (const auto* list : {&l.levi.imaginary, &l.levi.real})
          for (size_t i : *list)
            if (i >= r.roots.size())
              throw ParseError(source, def.roots_line, 1,
                               "Levi " + l.levi.name + " refers to root " + std::to_string(i) + " of " +
                                   std::to_string(r.roots.size()));
    }
    if (def.lattice) def.lattice->id = def.profile.name;
  }
};

void emit_veclist(std::ostringstream& out, const std::vector<IVec>& vs) {
  for (size_t i = 0; i < vs.size(); ++i) {
    out << (i ? " (" : "(");
    for (size_t j = 0; j < vs[i].size(); ++j) out << (j ? " " : "") << vs[i][j];
    out << ")";
  }
}

void emit_vec(std::ostringstream& out, const std::vector<size_t>& v) {
  out << "(";
  for (size_t j = 0; j < v.size(); ++j) out << (j ? " " : "") << v[j];
  out << ")";
}

std::string quote(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

}  // namespace

std::optional<BasedRootDatum> GroupDefFile::datum() const {
  if (!lattice || !roots) return std::nullopt;
  try {
    auto lat = std::make_shared<Lattice>(*lattice);
    return BasedRootDatum(profile.name, lat, roots->roots, roots->coroots, roots->simple);
  } catch (const DatumError& e) {
    throw ParseError(profile.name + ".grp", roots_line, 1, std::string("invalid root datum: ") + e.what());
  }
}

GroupDefFile parse_groupdef(const std::string& text, const std::string& source) {
  Parser p(source);
  std::istringstream in(text);
  std::string raw;
  size_t line = 0;
  bool in_header = true;
  while (std::getline(in, raw)) {
    ++line;
    if (!raw.empty() && raw.back() == '\r') raw.pop_back();
    const std::string t = trim(raw);
    if (in_header && (t.empty() || t[0] == '#')) {
      p.def.header.push_back(raw);
      continue;
    }
    Cursor c(source, raw, line);
    if (c.at_end()) continue;
    if (c.peek() == '[') {
      in_header = false;
      p.open_section(c);
    } else {
      if (in_header) c.fail("expected a section header such as [profile]");
      p.entry(c);
    }
  }
  while (!p.def.header.empty() && trim(p.def.header.back()).empty()) p.def.header.pop_back();
  p.finish(line);
  if (p.def.roots) {
    try {
      (void)p.def.datum();
    } catch (const ParseError& e) {
      throw ParseError(source, e.line(), e.column(), e.message());
    }
  }
  return std::move(p.def);
}

GroupDefFile load_groupdef(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError(path.string(), 0, 0, "cannot open file");
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_groupdef(ss.str(), path.string());
}

std::string emit_groupdef(const GroupDefFile& def) {
  std::ostringstream out;
  for (const auto& h : def.header) out << h << "\n";
  bool first = def.header.empty();
  auto section = [&](const std::string& title) {
    if (!first) out << "\n";
    first = false;
    out << "[" << title << "]\n";
  };
  if (def.lattice) {
    const Lattice& l = *def.lattice;
    section("lattice");
    out << "rank = " << l.rank << "\n";
    const std::pair<const char*, const std::vector<IVec>*> lists[] = {{"char_relations", &l.char_relations},
                                                                     {"char_kernel", &l.char_kernel},
                                                                     {"cochar_kernel", &l.cochar_kernel},
                                                                     {"cochar_relations", &l.cochar_relations}};
    for (const auto& [k, v] : lists)
      if (!v->empty()) {
        out << k << " = ";
        emit_veclist(out, *v);
        out << "\n";
      }
    if (!l.inner.empty()) {
      out << "inner =";
      for (const auto& row : l.inner) {
        out << " (";
        for (size_t j = 0; j < row.size(); ++j) out << (j ? " " : "") << row[j].str();
        out << ")";
      }
      out << "\n";
    }
  }
  if (def.roots) {
    section("roots");
    out << "roots = ";
    emit_veclist(out, def.roots->roots);
    out << "\ncoroots = ";
    emit_veclist(out, def.roots->coroots);
    out << "\nsimple = ";
    emit_vec(out, def.roots->simple);
    out << "\n";
  }
  const GroupProfile& g = def.profile;
  section("profile");
  out << "name = " << g.name << "\n";
  out << "tamagawa = " << g.tamagawa.str() << "\n";
  out << "k = " << g.k_const << "\n";
  out << "d = " << g.d_const << "\n";
  out << "omega_r = " << g.omega_r_order << "\n";
  out << "real_components = " << g.real_component_index << "\n";
  out << "chi_case = " << to_string(g.chi.kind) << "\n";
  if (!g.chi.factors.empty()) {
    std::vector<IVec> ex;
    IVec om;
    for (const auto& f : g.chi.factors) {
      ex.emplace_back(f.exponents.begin(), f.exponents.end());
      om.push_back(f.omega_r);
    }
    out << "chi_exponents = ";
    emit_veclist(out, ex);
    out << "\nchi_omega_r = ";
    emit_veclist(out, {om});
    out << "\n";
  }
  out << "chi_class_count = " << g.chi.class_count << "\n";
  out << "chi_unit_torsion = " << g.chi.unit_torsion << "\n";
  out << "chi_kernel = " << g.chi.kernel_order << "\n";
  if (!g.note.empty()) out << "note = " << quote(g.note) << "\n";
  for (const auto& l : g.levis) {
    section("levi " + l.levi.name);
    out << "imaginary = ";
    emit_vec(out, l.levi.imaginary);
    out << "\nreal = ";
    emit_vec(out, l.levi.real);
    out << "\ndim_a = " << l.levi.dim_a << "\n";
    out << "n = " << l.n_gm << "\n";
    out << "k = " << l.k << "\n";
    out << "d = " << l.d << "\n";
    out << "chi = " << l.chi_k.str() << "\n";
    if (auto it = def.chi_from.find(l.levi.name); it != def.chi_from.end())
      out << "chi_from = " << it->second << "\n";
    if (!l.note.empty()) out << "note = " << quote(l.note) << "\n";
  }
  for (const auto& e : g.endoscopic) {
    section("endoscopic " + e.group);
    out << "iota = " << e.iota.str() << "\n";
    out << "out = " << e.out_order << "\n";
    if (!e.note.empty()) out << "note = " << quote(e.note) << "\n";
  }
  return out.str();
}

GroupDefFile groupdef_from_catalog(const GroupCatalog& catalog, const std::string& name) {
  GroupDefFile def;
  def.profile = catalog.profile(name);
  if (catalog.has_datum(name)) {
    const BasedRootDatum& d = catalog.datum(name);
    def.lattice = d.lattice();
    def.roots = RootsDef{d.roots(), d.coroots(), d.simple_roots()};
  }
  return def;
}

std::filesystem::path default_data_dir() {
  if (const char* env = std::getenv("STABLE_TRACE_DATA"); env && *env) return env;
  return STABLETRACE_DATA_DIR;
}

std::vector<std::string> profile_differences(const GroupProfile& a, const GroupProfile& b) {
  std::vector<std::string> out;
  auto diff = [&](const std::string& field, const std::string& x, const std::string& y) {
    if (x != y) out.push_back(a.name + ": " + field + " is " + x + ", reference has " + y);
  };
  auto idx = [](const std::vector<size_t>& v) {
    std::string s = "(";
    for (size_t i = 0; i < v.size(); ++i) s += (i ? " " : "") + std::to_string(v[i]);
    return s + ")";
  };
  diff("name", a.name, b.name);
  diff("tamagawa", a.tamagawa.str(), b.tamagawa.str());
  diff("k", std::to_string(a.k_const), std::to_string(b.k_const));
  diff("d", std::to_string(a.d_const), std::to_string(b.d_const));
  diff("omega_r", std::to_string(a.omega_r_order), std::to_string(b.omega_r_order));
  diff("real_components", std::to_string(a.real_component_index), std::to_string(b.real_component_index));
  diff("chi_case", to_string(a.chi.kind), to_string(b.chi.kind));
  diff("chi_class_count", std::to_string(a.chi.class_count), std::to_string(b.chi.class_count));
  diff("chi_unit_torsion", std::to_string(a.chi.unit_torsion), std::to_string(b.chi.unit_torsion));
  diff("chi_kernel", std::to_string(a.chi.kernel_order), std::to_string(b.chi.kernel_order));
  diff("chi component index", std::to_string(a.chi.component_index), std::to_string(b.chi.component_index));
  diff("chi factor count", std::to_string(a.chi.factors.size()), std::to_string(b.chi.factors.size()));
  for (size_t i = 0; i < std::min(a.chi.factors.size(), b.chi.factors.size()); ++i) {
    const auto& fa = a.chi.factors[i];
    const auto& fb = b.chi.factors[i];
    if (fa.exponents != fb.exponents || fa.omega_r != fb.omega_r)
      out.push_back(a.name + ": chi factor " + std::to_string(i) + " differs from the reference");
  }
  diff("levi count", std::to_string(a.levis.size()), std::to_string(b.levis.size()));
  for (size_t i = 0; i < std::min(a.levis.size(), b.levis.size()); ++i) {
    const auto& x = a.levis[i];
    const auto& y = b.levis[i];
    const std::string p = "levi " + std::to_string(i) + " ";
    diff(p + "name", x.levi.name, y.levi.name);
    diff(p + "imaginary", idx(x.levi.imaginary), idx(y.levi.imaginary));
    diff(p + "real", idx(x.levi.real), idx(y.levi.real));
    diff(p + "dim_a", std::to_string(x.levi.dim_a), std::to_string(y.levi.dim_a));
    diff(p + "n", std::to_string(x.n_gm), std::to_string(y.n_gm));
    diff(p + "k", std::to_string(x.k), std::to_string(y.k));
    diff(p + "d", std::to_string(x.d), std::to_string(y.d));
    diff(p + "chi", x.chi_k.str(), y.chi_k.str());
  }
  diff("endoscopic count", std::to_string(a.endoscopic.size()), std::to_string(b.endoscopic.size()));
  for (size_t i = 0; i < std::min(a.endoscopic.size(), b.endoscopic.size()); ++i) {
    const auto& x = a.endoscopic[i];
    const auto& y = b.endoscopic[i];
    diff("endoscopic group", x.group, y.group);
    diff("endoscopic iota", x.iota.str(), y.iota.str());
    diff("endoscopic out", std::to_string(x.out_order), std::to_string(y.out_order));
  }
  return out;
}

LoadedCatalog load_catalog(const std::filesystem::path& dir) {
  namespace fs = std::filesystem;
  if (!fs::is_directory(dir)) throw ParseError(dir.string(), 0, 0, "data directory does not exist");
  LoadedCatalog out;
  for (const auto& entry : fs::directory_iterator(dir))
    if (entry.is_regular_file() && entry.path().extension() == ".grp") out.files.push_back(entry.path());
  std::sort(out.files.begin(), out.files.end());
  for (const auto& f : out.files) {
    GroupDefFile def = load_groupdef(f);
    const std::string name = def.profile.name;
    if (out.definitions.count(name))
      throw ParseError(f.string(), 0, 0, "group '" + name + "' is defined twice");
    std::optional<BasedRootDatum> datum;
    try {
      datum = def.datum();
    } catch (const ParseError& e) {
      throw ParseError(f.string(), e.line(), e.column(), e.message());
    }
    out.catalog.add(def.profile, std::move(datum));
    out.definitions.emplace(name, std::move(def));
  }
  out.problems = out.catalog.audit();
  for (const auto& [name, def] : out.definitions)
    for (const auto& [levi, from] : def.chi_from) {
      if (!out.catalog.has(from)) {
        out.problems.push_back(name + ": Levi " + levi + " takes chi from unknown group '" + from + "'");
        continue;
      }
      try {
        const Rat expect = chi_k(out.catalog.profile(from));
        const Rat got = def.profile.levi(levi).chi_k;
        if (got != expect)
          out.problems.push_back(name + ": Levi " + levi + " chi " + got.str() + " but chi_K(" + from +
                                 ") = " + expect.str());
      } catch (const ProfileError& e) {
        out.problems.push_back(name + ": Levi " + levi + ": " + e.what());
      }
    }
  const GroupCatalog& ref = GroupCatalog::builtin();
  for (const auto& name : out.catalog.names()) {
    if (!ref.has(name)) continue;
    for (auto& m : profile_differences(out.catalog.profile(name), ref.profile(name))) out.problems.push_back(m);
    if (out.catalog.has_datum(name) != ref.has_datum(name)) {
      out.problems.push_back(name + ": root datum presence differs from the reference");
    } else if (ref.has_datum(name)) {
      const auto& x = out.catalog.datum(name);
      const auto& y = ref.datum(name);
      if (x.roots() != y.roots() || x.coroots() != y.coroots() || x.simple_roots() != y.simple_roots())
        out.problems.push_back(name + ": root datum differs from the reference");
    }
  }
  return out;
}

}  // namespace stabletrace

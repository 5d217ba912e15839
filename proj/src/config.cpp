#include "sgdops/config.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

namespace sgdops {

namespace {

struct LineScanner {
  const std::string& s;
  size_t pos = 0;
  int line;

  [[noreturn]] void fail(const std::string& msg) const {
    throw InputError("config line " + std::to_string(line) + ", column " +
                     std::to_string(pos + 1) + ": " + msg);
  }
  void skip_ws() {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
  }
  bool eat(char c) {
    skip_ws();
    if (pos < s.size() && s[pos] == c) {
      ++pos;
      return true;
    }
    return false;
  }
  long long integer() {
    skip_ws();
    size_t start = pos;
    if (pos < s.size() && (s[pos] == '-' || s[pos] == '+')) ++pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    if (pos == start || (pos == start + 1 && !std::isdigit(static_cast<unsigned char>(s[start]))))
      fail("expected integer");
    return std::stoll(s.substr(start, pos - start));
  }
  std::vector<long long> int_list() {
    if (!eat('[')) fail("expected '['");
    std::vector<long long> out;
    if (eat(']')) return out;
    while (true) {
      out.push_back(integer());
      if (eat(']')) return out;
      if (!eat(',')) fail("expected ',' or ']'");
    }
  }
  std::vector<std::vector<long long>> nested_list() {
    if (!eat('[')) fail("expected '['");
    std::vector<std::vector<long long>> out;
    if (eat(']')) return out;
    while (true) {
      out.push_back(int_list());
      if (eat(']')) return out;
      if (!eat(',')) fail("expected ',' or ']'");
    }
  }
  void expect_end() {
    skip_ws();
    if (pos != s.size()) fail("trailing input");
  }
};

}  // namespace

RingConfig parse_ring_config(const std::string& text) {
  std::istringstream in(text);
  std::string raw;
  int lineno = 0;
  bool have_matrix = false;
  std::vector<std::vector<long long>> matrix_rows;
  RingConfig cfg;

  while (std::getline(in, raw)) {
    ++lineno;
    std::string line = raw.substr(0, raw.find('#'));
    size_t a = line.find_first_not_of(" \t\r");
    if (a == std::string::npos) continue;
    size_t eq = line.find('=');
    std::string key, rest;
    if (eq != std::string::npos) {
      key = line.substr(0, eq);
      rest = line.substr(eq + 1);
    } else {
      size_t sp = line.find_first_of(" \t", a);
      if (sp == std::string::npos)
        throw InputError("config line " + std::to_string(lineno) + ": expected 'key = value'");
      key = line.substr(0, sp);
      rest = line.substr(sp + 1);
    }
    auto trim = [](std::string s) {
      size_t b = s.find_first_not_of(" \t\r");
      size_t e = s.find_last_not_of(" \t\r");
      return b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
    };
    key = trim(key);
    rest = trim(rest);
    LineScanner sc{rest, 0, lineno};

    if (key == "name") {
      cfg.name = rest;
    } else if (key == "matrix") {
      matrix_rows = sc.nested_list();
      sc.expect_end();
      have_matrix = true;
    } else if (key == "ideal") {
      if (rest == "interior") {
        cfg.interior = true;
      } else if (rest.rfind("faces", 0) == 0) {
        sc.pos = 5;
        auto faces = sc.nested_list();
        sc.expect_end();
        cfg.interior = false;
        for (const auto& f : faces) {
          std::vector<int> face;
          for (long long i : f) {
            if (i < 1) sc.fail("facet indices are 1-based");
            face.push_back(static_cast<int>(i));
          }
          cfg.ideal_faces.push_back(std::move(face));
        }
        if (cfg.ideal_faces.empty()) sc.fail("ideal needs at least one face");
      } else {
        sc.fail("ideal must be 'interior' or 'faces [[..],..]'");
      }
    } else if (key == "window") {
      if (rest.find('[') == std::string::npos) {
        long long r = sc.integer();
        sc.expect_end();
        if (r < 1) sc.fail("window radius must be positive");
        cfg.window = Box{};  // resized once the matrix is known
        cfg.window->lo.assign(1, -r);
        cfg.window->hi.assign(1, r);
      } else {
        auto ranges = sc.nested_list();
        sc.expect_end();
        Box b;
        for (const auto& r : ranges) {
          if (r.size() != 2 || r[0] > r[1]) sc.fail("window ranges are [lo,hi]");
          b.lo.push_back(r[0]);
          b.hi.push_back(r[1]);
        }
        cfg.window = b;
      }
    } else if (key == "variables") {
      std::string cur;
      for (char c : rest) {
        if (c == ',') {
          if (!cur.empty()) cfg.variable_names.push_back(cur);
          cur.clear();
        } else if (!std::isspace(static_cast<unsigned char>(c))) {
          cur += c;
        }
      }
      if (!cur.empty()) cfg.variable_names.push_back(cur);
    } else {
      throw InputError("config line " + std::to_string(lineno) + ": unknown key '" + key + "'");
    }
  }

  if (!have_matrix) throw InputError("config is missing the matrix");
  size_t cols = matrix_rows.front().size();
  for (const auto& r : matrix_rows)
    if (r.size() != cols) throw InputError("matrix rows have unequal lengths");
  std::vector<long long> entries;
  for (const auto& r : matrix_rows) entries.insert(entries.end(), r.begin(), r.end());
  cfg.matrix = IntMatrix(static_cast<int>(matrix_rows.size()), static_cast<int>(cols),
                         std::move(entries));
  if (cfg.window && cfg.window->lo.size() == 1 && cfg.matrix.rows() > 1) {
    long long r = cfg.window->hi[0];
    cfg.window = Box::cube(cfg.matrix.rows(), r);
  }
  if (cfg.window && cfg.window->lo.size() != static_cast<size_t>(cfg.matrix.rows()))
    throw InputError("window dimension does not match the matrix");
  return cfg;
}

RingConfig load_ring_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open config file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_ring_config(buf.str());
}

Box RingSession::default_window() const {
  if (config.window) return *config.window;
  return Box::cube(sg->dim(), sg->dim() >= 3 ? 2 : 4);
}

RingSession make_session(RingConfig config) {
  RingSession s;
  s.sg = std::make_unique<SemigroupData>(ConeData(config.matrix));
  if (config.interior) {
    s.ideal = std::make_unique<RadicalMonomialIdeal>(interior_ideal(*s.sg));
  } else {
    std::vector<Face> faces;
    for (const auto& f : config.ideal_faces) {
      std::set<int> idx;
      for (int i : f) {
        if (i > s.sg->cone().num_facets())
          throw InputError("facet index " + std::to_string(i) + " out of range");
        idx.insert(i - 1);
      }
      Face face = s.sg->cone().face_from_facets(idx);
      if (face.dim >= s.sg->dim()) throw InputError("ideal face list names the full cone");
      faces.push_back(face);
    }
    s.ideal = std::make_unique<RadicalMonomialIdeal>(s.sg.get(), std::move(faces), "J");
  }
  s.config = std::move(config);
  return s;
}

}  // namespace sgdops

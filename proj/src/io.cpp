#include "chainprod/io.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <sstream>

namespace chainprod {

ParseError::ParseError(const std::string& what, std::size_t line)
    : std::runtime_error(line ? "line " + std::to_string(line) + ": " + what : what), line_(line) {}

namespace {

class LineReader {
 public:
  explicit LineReader(std::istream& in) : in_(in) {}

  /// Next meaningful line split into tokens; false at end of input.
  bool next(std::vector<std::string>& tokens) {
    std::string line;
    while (std::getline(in_, line)) {
      ++line_no_;
      std::istringstream ss(line);
      tokens.clear();
      for (std::string t; ss >> t;) tokens.push_back(t);
      if (tokens.empty() || tokens[0][0] == '#') continue;
      return true;
    }
    return false;
  }

  std::vector<std::string> expect(const char* what) {
    std::vector<std::string> t;
    if (!next(t)) throw ParseError(std::string("unexpected end of input, expected ") + what, line_no_ + 1);
    return t;
  }

  std::size_t line() const { return line_no_; }

 private:
  std::istream& in_;
  std::size_t line_no_ = 0;
};

std::size_t to_count(const std::string& s, const LineReader& r) {
  std::size_t v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size()) throw ParseError("expected a count, got '" + s + "'", r.line());
  return v;
}

Field to_field(const std::string& s, const LineReader& r) {
  try {
    return Field::parse(s);
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what(), r.line());
  }
}

Mat read_matrix_block(LineReader& r) {
  const auto head = r.expect("matrix header 'q rows cols'");
  if (head.size() != 3) throw ParseError("matrix header needs 'q rows cols'", r.line());
  const Field f = to_field(head[0], r);
  const std::size_t rows = to_count(head[1], r), cols = to_count(head[2], r);
  Mat m(f, rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    const auto t = r.expect("matrix row");
    if (t.size() != cols)
      throw ParseError("row has " + std::to_string(t.size()) + " entries, expected " + std::to_string(cols), r.line());
    for (std::size_t j = 0; j < cols; ++j) {
      const std::size_t v = to_count(t[j], r);
      if (v >= f.q()) throw ParseError("element " + t[j] + " out of range for GF(" + f.tag() + ")", r.line());
      m.set(i, j, static_cast<std::uint8_t>(v));
    }
  }
  return m;
}

void write_matrix_block(std::ostream& out, const Mat& m) {
  out << m.field().tag() << ' ' << m.rows() << ' ' << m.cols() << '\n';
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) out << (j ? " " : "") << unsigned(m.at(i, j));
    out << '\n';
  }
}

template <class Reader>
auto load(const std::string& path, Reader read) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path + "'", 0);
  return read(in);
}

}  // namespace

Mat read_matrix(std::istream& in) {
  LineReader r(in);
  return read_matrix_block(r);
}

void write_matrix(std::ostream& out, const Mat& m) { write_matrix_block(out, m); }

ChainComplex read_complex(std::istream& in) {
  LineReader r(in);
  const auto head = r.expect("complex header 'q l'");
  if (head.size() != 2) throw ParseError("complex header needs 'q l'", r.line());
  const Field f = to_field(head[0], r);
  const std::size_t len = to_count(head[1], r);
  if (len == 0) throw ParseError("a complex needs at least one boundary matrix", r.line());
  std::vector<Mat> bs;
  for (std::size_t j = 0; j < len; ++j) {
    bs.push_back(read_matrix_block(r));
    if (!(bs.back().field() == f)) throw ParseError("block field differs from complex header", r.line());
  }
  try {
    return ChainComplex(std::move(bs));
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what(), r.line());
  }
}

void write_complex(std::ostream& out, const ChainComplex& c) {
  out << c.field().tag() << ' ' << c.length() << '\n';
  for (const Mat& b : c.boundaries()) write_matrix_block(out, b);
}

AnyCode read_code(std::istream& in) {
  LineReader r(in);
  const auto tag = r.expect("'css' or 'subsystem'");
  if (tag.size() != 1 || (tag[0] != "css" && tag[0] != "subsystem"))
    throw ParseError("expected 'css' or 'subsystem'", r.line());
  Mat x = read_matrix_block(r);
  Mat z = read_matrix_block(r);
  if (!(x.field() == z.field())) throw ParseError("X and Z blocks over different fields", r.line());
  if (x.cols() != z.cols()) throw ParseError("X and Z blocks have different column counts", r.line());
  if (tag[0] == "subsystem") return SubsystemCode(std::move(x), std::move(z));
  try {
    return CssCode(std::move(x), std::move(z));
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what(), r.line());
  }
}

void write_code(std::ostream& out, const CssCode& code) {
  out << "css\n";
  write_matrix_block(out, code.hx());
  write_matrix_block(out, code.hz());
}

void write_code(std::ostream& out, const SubsystemCode& code) {
  out << "subsystem\n";
  write_matrix_block(out, code.gx());
  write_matrix_block(out, code.gz());
}

Mat load_matrix(const std::string& path) { return load(path, [](std::istream& in) { return read_matrix(in); }); }
ChainComplex load_complex(const std::string& path) {
  return load(path, [](std::istream& in) { return read_complex(in); });
}
AnyCode load_code(const std::string& path) { return load(path, [](std::istream& in) { return read_code(in); }); }

IndexSet parse_index_set(std::string_view text, std::size_t n) {
  std::vector<std::size_t> one_based;
  std::size_t i = 0;
  while (i < text.size()) {
    if (text[i] == ',' || text[i] == ' ' || text[i] == '\t') {
      ++i;
      continue;
    }
    std::size_t v = 0;
    auto [ptr, ec] = std::from_chars(text.data() + i, text.data() + text.size(), v);
    if (ec != std::errc()) throw ParseError("bad index set '" + std::string(text) + "'", 0);
    i = static_cast<std::size_t>(ptr - text.data());
    one_based.push_back(v);
  }
  try {
    return IndexSet::from_one_based(one_based, n);
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what(), 0);
  }
}

std::string certificate_string(std::span<const std::uint8_t> c, unsigned q) {
  static constexpr char kDigits[] = "0123456789abcdefghijklmnopqrstuvwxyz";
  std::string s;
  if (q <= 36) {
    for (auto v : c) s += kDigits[v];
    return s;
  }
  for (std::size_t i = 0; i < c.size(); ++i) s += (i ? "." : "") + std::to_string(c[i]);
  return s;
}

Vec parse_certificate(std::string_view s, unsigned q) {
  Vec v;
  auto digit = [&](std::size_t pos, unsigned d) {
    if (d >= q) throw ParseError("certificate digit out of range at position " + std::to_string(pos), 0);
    v.push_back(static_cast<std::uint8_t>(d));
  };
  if (q <= 36) {
    for (std::size_t i = 0; i < s.size(); ++i) {
      const char ch = s[i];
      if (ch >= '0' && ch <= '9') digit(i, ch - '0');
      else if (ch >= 'a' && ch <= 'z') digit(i, 10 + (ch - 'a'));
      else throw ParseError("bad certificate character", 0);
    }
    return v;
  }
  std::size_t i = 0;
  while (i <= s.size()) {
    const std::size_t dot = std::min(s.find('.', i), s.size());
    unsigned d = 0;
    auto [ptr, ec] = std::from_chars(s.data() + i, s.data() + dot, d);
    if (ec != std::errc() || ptr != s.data() + dot) throw ParseError("bad certificate entry", 0);
    digit(i, d);
    i = dot + 1;
  }
  return v;
}

nlohmann::json to_json(const DistanceValue& v) {
  if (v.is_infinite()) return "inf";
  if (v.is_integer()) return v.integer();
  return v.to_string();
}

nlohmann::json to_json(const DistanceResult& r, unsigned q) {
  nlohmann::json j;
  j["value"] = to_json(r.value);
  j["certificate"] = r.certificate ? nlohmann::json(certificate_string(*r.certificate, q)) : nlohmann::json(nullptr);
  j["method"] = to_string(r.method);
  j["algorithm"] = r.algorithm;
  j["trials"] = r.trials;
  j["seed"] = r.seed;
  j["exact"] = r.exact;
  j["certifying_bound"] = r.certifying_bound.empty() ? nlohmann::json(nullptr) : nlohmann::json(r.certifying_bound);
  return j;
}

nlohmann::json to_json(const Bound& b) { return {{"value", to_json(b.value)}, {"tag", b.tag}}; }

nlohmann::json to_json(const BoundPair& b) {
  nlohmann::json j;
  j["lower"] = b.lower ? to_json(*b.lower) : nlohmann::json(nullptr);
  j["upper"] = b.upper ? to_json(*b.upper) : nlohmann::json(nullptr);
  j["exact"] = b.exact();
  return j;
}

nlohmann::json to_json(const Mat& m) {
  nlohmann::json rows = nlohmann::json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    std::vector<unsigned> r(m.row(i).begin(), m.row(i).end());
    rows.push_back(r);
  }
  return {{"q", m.field().tag()}, {"rows", m.rows()}, {"cols", m.cols()}, {"data", rows}};
}

}  // namespace chainprod

#include "coarse/io.hpp"

#include <charconv>
#include <fstream>
#include <istream>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>

#include "coarse/error.hpp"

namespace coarse {

namespace {

class Reader {
 public:
  explicit Reader(std::istream& in) : in_(in) {}

  /// Next non-blank, non-comment line; nullopt at end of input.
  std::optional<std::string> next_line() {
    std::string line;
    while (std::getline(in_, line)) {
      ++number_;
      if (!line.empty() && line.back() == '\r') line.pop_back();
      const auto first = line.find_first_not_of(" \t");
      if (first == std::string::npos || line[first] == '#') continue;
      return line;
    }
    return std::nullopt;
  }

  std::vector<std::string> next(const char* context) {
    auto line = next_line();
    if (!line) fail(std::string("unexpected end of input, expected ") + context);
    last_ = *line;
    return split(*line);
  }

  const std::string& last() const { return last_; }

  static std::vector<std::string> split(const std::string& line) {
    std::istringstream ss(line);
    std::vector<std::string> out;
    std::string token;
    while (ss >> token) out.push_back(token);
    return out;
  }

  [[noreturn]] void fail(const std::string& what) const {
    throw InputError("line " + std::to_string(number_) + ": " + what);
  }

  std::uint64_t integer(const std::string& token) const {
    std::uint64_t value = 0;
    const auto* end = token.data() + token.size();
    const auto [ptr, ec] = std::from_chars(token.data(), end, value);
    if (ec != std::errc() || ptr != end) fail("expected a nonnegative integer, got '" + token + "'");
    return value;
  }

  std::int64_t signed_integer(const std::string& token) const {
    std::int64_t value = 0;
    const auto* end = token.data() + token.size();
    const auto [ptr, ec] = std::from_chars(token.data(), end, value);
    if (ec != std::errc() || ptr != end) fail("expected an integer, got '" + token + "'");
    return value;
  }

  Rational rational(const std::string& num, const std::string& den) const {
    try {
      return Rational::from_parts(num, den);
    } catch (const InputError& e) {
      fail(e.what());
    }
  }

  void expect_header(const std::vector<std::string>& tokens, const std::string& type) const {
    if (tokens.size() < 2 || tokens[0] != type) fail("expected '" + type + " 1' header");
    if (tokens[1] != "1") fail("unsupported " + type + " format version " + tokens[1]);
  }

  std::uint64_t keyed(const std::vector<std::string>& tokens, const std::string& key) const {
    if (tokens.size() != 2 || tokens[0] != key) fail("expected '" + key + " <count>'");
    return integer(tokens[1]);
  }

  void expect_end(const char* type) {
    const auto tokens = next("end");
    if (tokens.size() != 1 || tokens[0] != "end") fail(std::string("expected 'end' closing ") + type);
  }

 private:
  std::istream& in_;
  std::size_t number_ = 0;
  std::string last_;
};

void write_elements(std::ostream& out, const std::vector<PointSet>& elements) {
  for (const auto& e : elements) {
    out << 'e';
    for (PointId x : e) out << ' ' << x;
    out << '\n';
  }
}

std::vector<PointSet> read_elements(Reader& r, std::uint64_t count, std::uint64_t points) {
  std::vector<PointSet> elements;
  elements.reserve(count);
  for (std::uint64_t i = 0; i < count; ++i) {
    const auto tokens = r.next("an element line");
    if (tokens.empty() || tokens[0] != "e") r.fail("expected 'e <points...>'");
    std::vector<PointId> ids;
    for (std::size_t j = 1; j < tokens.size(); ++j) {
      const auto id = r.integer(tokens[j]);
      if (id >= points) r.fail("point " + tokens[j] + " out of range");
      ids.push_back(static_cast<PointId>(id));
    }
    elements.emplace_back(std::move(ids));
  }
  return elements;
}

void write_rational(std::ostream& out, const Rational& q) { out << q.numerator() << ' ' << q.denominator(); }

void check_token(const std::string& s, const char* what) {
  if (s.empty() || s.find_first_of(" \t\n\r") != std::string::npos) {
    throw InputError(std::string(what) + " '" + s + "' must be a single token");
  }
}

void write_certificate_block(std::ostream& out, const CertificateDocument& doc) {
  check_token(doc.construction, "construction");
  out << "certificate 1 " << doc.construction << '\n';
  for (const auto& [k, v] : doc.params) {
    check_token(k, "key");
    check_token(v, "parameter value");
    out << "param " << k << ' ' << v << '\n';
  }
  for (const auto& [k, v] : doc.verdicts) {
    check_token(k, "key");
    out << "verdict " << k << ' ' << (v ? "pass" : "fail") << '\n';
  }
  for (const auto& [k, v] : doc.measures) {
    check_token(k, "key");
    out << "measure " << k << ' ';
    if (v.is_infinite()) {
      out << "inf";
    } else {
      write_rational(out, v.value());
    }
    out << '\n';
  }
  for (const auto& [k, v] : doc.witnesses) {
    check_token(k, "key");
    out << "witness " << k;
    for (auto x : v) out << ' ' << x;
    out << '\n';
  }
  for (const auto& c : doc.children) write_certificate_block(out, c);
  out << "end\n";
}

CertificateDocument read_certificate_body(Reader& r, const std::vector<std::string>& header) {
  r.expect_header(header, "certificate");
  if (header.size() != 3) r.fail("expected 'certificate 1 <construction>'");
  CertificateDocument doc;
  doc.construction = header[2];
  for (;;) {
    const auto tokens = r.next("a certificate entry");
    const std::string& kind = tokens[0];
    if (kind == "end") {
      if (tokens.size() != 1) r.fail("trailing tokens after 'end'");
      return doc;
    }
    if (kind == "certificate") {
      doc.children.push_back(read_certificate_body(r, tokens));
    } else if (kind == "param") {
      if (tokens.size() != 3) r.fail("expected 'param <key> <value>'");
      doc.params.emplace_back(tokens[1], tokens[2]);
    } else if (kind == "verdict") {
      if (tokens.size() != 3 || (tokens[2] != "pass" && tokens[2] != "fail")) {
        r.fail("expected 'verdict <key> pass|fail'");
      }
      doc.verdicts.emplace_back(tokens[1], tokens[2] == "pass");
    } else if (kind == "measure") {
      if (tokens.size() == 3 && tokens[2] == "inf") {
        doc.measures.emplace_back(tokens[1], ExtRational::infinity());
      } else if (tokens.size() == 4) {
        doc.measures.emplace_back(tokens[1], r.rational(tokens[2], tokens[3]));
      } else {
        r.fail("expected 'measure <key> <num> <den>' or 'measure <key> inf'");
      }
    } else if (kind == "witness") {
      if (tokens.size() < 2) r.fail("expected 'witness <key> <ints...>'");
      std::vector<std::int64_t> values;
      for (std::size_t j = 2; j < tokens.size(); ++j) values.push_back(r.signed_integer(tokens[j]));
      doc.witnesses.emplace_back(tokens[1], std::move(values));
    } else {
      r.fail("unknown certificate entry '" + kind + "'");
    }
  }
}

template <class T, class F>
T load_file(const std::string& path, F&& read) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open '" + path + "'");
  try {
    return read(in);
  } catch (const InputError& e) {
    throw InputError(path + ": " + e.what());
  }
}

std::string rest_of_line(const std::string& line, const std::string& key) {
  const auto start = line.find(key);
  auto pos = start + key.size();
  while (pos < line.size() && (line[pos] == ' ' || line[pos] == '\t')) ++pos;
  return line.substr(pos);
}

}  // namespace

void write_space(std::ostream& out, const FiniteCoarseSpace& space) {
  out << "space 1\npoints " << space.size() << "\ngauge " << space.gauge().size() << '\n';
  write_elements(out, space.gauge().elements());
  out << "end\n";
}

FiniteCoarseSpace read_space(std::istream& in) {
  Reader r(in);
  r.expect_header(r.next("space header"), "space");
  const auto points = r.keyed(r.next("points"), "points");
  const auto count = r.keyed(r.next("gauge"), "gauge");
  auto elements = read_elements(r, count, points);
  r.expect_end("space");
  return FiniteCoarseSpace(points, Cover(points, std::move(elements)));
}

void write_cover(std::ostream& out, const Cover& cover) {
  out << "cover 1\npoints " << cover.universe_size() << "\nelements " << cover.size() << '\n';
  write_elements(out, cover.elements());
  out << "end\n";
}

Cover read_cover(std::istream& in) {
  Reader r(in);
  r.expect_header(r.next("cover header"), "cover");
  const auto points = r.keyed(r.next("points"), "points");
  const auto count = r.keyed(r.next("elements"), "elements");
  auto elements = read_elements(r, count, points);
  r.expect_end("cover");
  return Cover(points, std::move(elements));
}

void write_pu(std::ostream& out, const PartitionOfUnity& f) {
  out << "pu 1\npoints " << f.size() << "\nvertices " << f.vertex_count() << '\n';
  for (PointId x = 0; x < f.size(); ++x) {
    for (const auto& [v, w] : f[x].entries()) {
      out << "w " << x << ' ' << v << ' ';
      write_rational(out, w);
      out << '\n';
    }
  }
  out << "end\n";
}

PartitionOfUnity read_pu(std::istream& in) {
  Reader r(in);
  r.expect_header(r.next("pu header"), "pu");
  const auto points = r.keyed(r.next("points"), "points");
  const auto vertices = r.keyed(r.next("vertices"), "vertices");
  std::vector<std::vector<BarycentricPoint::Entry>> weights(points);
  for (;;) {
    const auto tokens = r.next("a weight line or 'end'");
    if (tokens.size() == 1 && tokens[0] == "end") break;
    if (tokens.size() != 5 || tokens[0] != "w") r.fail("expected 'w <point> <vertex> <num> <den>'");
    const auto x = r.integer(tokens[1]);
    const auto v = r.integer(tokens[2]);
    if (x >= points) r.fail("point " + tokens[1] + " out of range");
    if (v >= vertices) r.fail("vertex " + tokens[2] + " out of range");
    weights[x].emplace_back(static_cast<VertexId>(v), r.rational(tokens[3], tokens[4]));
  }
  std::vector<BarycentricPoint> values;
  values.reserve(points);
  for (std::size_t x = 0; x < points; ++x) {
    try {
      values.emplace_back(std::move(weights[x]));
    } catch (const InputError& e) {
      throw InputError("point " + std::to_string(x) + ": " + e.what());
    }
  }
  return PartitionOfUnity(vertices, std::move(values));
}

void write_metric(std::ostream& out, const FiniteMetricSpace& m) {
  out << "metric 1\npoints " << m.size() << '\n';
  for (PointId x = 0; x < m.size(); ++x) {
    for (PointId y = x + 1; y < m.size(); ++y) {
      out << "d " << x << ' ' << y << ' ';
      write_rational(out, m.distance(x, y));
      out << '\n';
    }
  }
  out << "end\n";
}

FiniteMetricSpace read_metric(std::istream& in) {
  Reader r(in);
  r.expect_header(r.next("metric header"), "metric");
  const auto n = r.keyed(r.next("points"), "points");
  std::vector<Rational> d(n * n);
  std::vector<char> seen(n * n, 0);
  for (;;) {
    const auto tokens = r.next("a distance line or 'end'");
    if (tokens.size() == 1 && tokens[0] == "end") break;
    if (tokens.size() != 5 || tokens[0] != "d") r.fail("expected 'd <i> <j> <num> <den>'");
    const auto i = r.integer(tokens[1]);
    const auto j = r.integer(tokens[2]);
    if (i >= j || j >= n) r.fail("distance line needs i < j < points");
    if (seen[i * n + j]) r.fail("duplicate distance for pair " + tokens[1] + " " + tokens[2]);
    seen[i * n + j] = 1;
    d[i * n + j] = d[j * n + i] = r.rational(tokens[3], tokens[4]);
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (!seen[i * n + j]) r.fail("missing distance for pair " + std::to_string(i) + " " + std::to_string(j));
    }
  }
  return FiniteMetricSpace(n, std::move(d));
}

void write_certificate(std::ostream& out, const CertificateDocument& doc) { write_certificate_block(out, doc); }

CertificateDocument read_certificate(std::istream& in) {
  Reader r(in);
  return read_certificate_body(r, r.next("certificate header"));
}

void write_error(std::ostream& out, const ErrorDocument& doc) {
  static const char* kinds[] = {"input", "precondition", "internal"};
  auto flat = [](std::string s) {
    for (char& c : s) {
      if (c == '\n' || c == '\r') c = ' ';
    }
    return s;
  };
  out << "error 1\nkind " << kinds[static_cast<int>(doc.kind)] << "\nmessage " << flat(doc.message) << '\n';
  if (!doc.witness.empty()) out << "witness " << flat(doc.witness) << '\n';
  out << "end\n";
}

ErrorDocument read_error(std::istream& in) {
  Reader r(in);
  r.expect_header(r.next("error header"), "error");
  ErrorDocument doc;
  const auto kind = r.next("kind");
  if (kind.size() != 2 || kind[0] != "kind") r.fail("expected 'kind <input|precondition|internal>'");
  static const std::map<std::string, ErrorKind> kinds{
      {"input", ErrorKind::Input}, {"precondition", ErrorKind::Precondition}, {"internal", ErrorKind::Internal}};
  const auto it = kinds.find(kind[1]);
  if (it == kinds.end()) r.fail("unknown error kind '" + kind[1] + "'");
  doc.kind = it->second;
  for (;;) {
    const auto tokens = r.next("an error entry");
    if (tokens[0] == "end" && tokens.size() == 1) return doc;
    if (tokens[0] == "message") {
      doc.message = rest_of_line(r.last(), "message");
    } else if (tokens[0] == "witness") {
      doc.witness = rest_of_line(r.last(), "witness");
    } else {
      r.fail("unknown error entry '" + tokens[0] + "'");
    }
  }
}

std::string to_text(const CertificateDocument& doc) {
  std::ostringstream out;
  write_certificate(out, doc);
  return out.str();
}

CertificateDocument certificate_from_text(const std::string& text) {
  std::istringstream in(text);
  return read_certificate(in);
}

FiniteCoarseSpace load_space(const std::string& path) {
  return load_file<FiniteCoarseSpace>(path, [](std::istream& in) { return read_space(in); });
}
Cover load_cover(const std::string& path) {
  return load_file<Cover>(path, [](std::istream& in) { return read_cover(in); });
}
PartitionOfUnity load_pu(const std::string& path) {
  return load_file<PartitionOfUnity>(path, [](std::istream& in) { return read_pu(in); });
}
FiniteMetricSpace load_metric(const std::string& path) {
  return load_file<FiniteMetricSpace>(path, [](std::istream& in) { return read_metric(in); });
}

}  // namespace coarse

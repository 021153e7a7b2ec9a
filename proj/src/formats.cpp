#include "monotree/formats.hpp"

#include <array>
#include <charconv>
#include <limits>
#include <fstream>
#include <sstream>
#include <vector>

namespace monotree {
namespace {

// Splits text into lines, accepting a trailing newline but not blank lines.
class LineReader {
 public:
  explicit LineReader(std::string_view text) : text_(text) {}

  bool done() const { return pos_ >= text_.size(); }
  std::size_t line_number() const { return line_; }

  std::string_view next() {
    if (done()) fail("unexpected end of input");
    const std::size_t end = text_.find('\n', pos_);
    std::string_view line = text_.substr(
        pos_, end == std::string_view::npos ? std::string_view::npos : end - pos_);
    pos_ = end == std::string_view::npos ? text_.size() : end + 1;
    ++line_;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    return line;
  }

  [[noreturn]] void fail(const std::string& what) const {
    throw FormatError("line " + std::to_string(line_) + ": " + what);
  }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
  std::size_t line_ = 0;
};

// Parses exactly `count` space-separated unsigned integers.
template <std::size_t N>
std::array<std::uint64_t, N> parse_fields(std::string_view line,
                                          const LineReader& reader) {
  std::array<std::uint64_t, N> out{};
  const char* p = line.data();
  const char* end = line.data() + line.size();
  for (std::size_t i = 0; i < N; ++i) {
    if (i > 0) {
      if (p == end || *p != ' ') reader.fail("expected " + std::to_string(N) + " fields");
      ++p;
    }
    const auto [next, ec] = std::from_chars(p, end, out[i]);
    if (ec != std::errc() || next == p) reader.fail("malformed integer");
    p = next;
  }
  if (p != end) reader.fail("trailing characters");
  return out;
}

}  // namespace

std::string format_edge_list(const Graph& g) {
  std::ostringstream out;
  out << g.num_vertices() << ' ' << g.num_edges() << '\n';
  for (const Edge& e : g.edges()) out << e.u << ' ' << e.v << '\n';
  return out.str();
}

Graph parse_edge_list(std::string_view text) {
  LineReader reader(text);
  const auto [n, m] = parse_fields<2>(reader.next(), reader);
  if (n == 0) reader.fail("graph needs at least one vertex");
  if (n > std::numeric_limits<Vertex>::max()) reader.fail("too many vertices");
  if (m > n * (n - 1) / 2) reader.fail("more edges than vertex pairs");
  std::vector<Edge> edges;
  edges.reserve(m);
  for (std::uint64_t i = 0; i < m; ++i) {
    const auto [u, v] = parse_fields<2>(reader.next(), reader);
    if (u >= v) reader.fail("edge must satisfy u < v");
    if (v >= n) reader.fail("endpoint out of range");
    const Edge e{static_cast<Vertex>(u), static_cast<Vertex>(v)};
    if (!edges.empty() && !(edges.back() < e)) reader.fail("edges not in ascending order");
    edges.push_back(e);
  }
  if (!reader.done()) {
    reader.next();
    reader.fail("unexpected content after the last edge");
  }
  return Graph(n, std::move(edges));
}

std::string format_colouring(const EdgeColouring& c) {
  std::ostringstream out;
  out << c.num_colours() << '\n';
  for (Colour colour : c.colours()) out << static_cast<int>(colour) << '\n';
  return out.str();
}

EdgeColouring parse_colouring(std::string_view text, const Graph& g) {
  LineReader reader(text);
  const auto [r] = parse_fields<1>(reader.next(), reader);
  if (r < 2 || r > 255) reader.fail("number of colours must be in 2..255");
  std::vector<Colour> colours;
  colours.reserve(g.num_edges());
  for (std::size_t e = 0; e < g.num_edges(); ++e) {
    const auto [colour] = parse_fields<1>(reader.next(), reader);
    if (colour >= r) reader.fail("colour out of range");
    colours.push_back(static_cast<Colour>(colour));
  }
  if (!reader.done()) {
    reader.next();
    reader.fail("more colours than edges");
  }
  return EdgeColouring(g, std::move(colours), static_cast<int>(r));
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void write_file(const std::filesystem::path& path, std::string_view contents) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out.write(contents.data(), static_cast<std::streamsize>(contents.size()));
  if (!out) throw std::runtime_error("write failed for " + path.string());
}

Graph load_graph(const std::filesystem::path& path) {
  return parse_edge_list(read_file(path));
}

EdgeColouring load_colouring(const std::filesystem::path& path, const Graph& g) {
  return parse_colouring(read_file(path), g);
}

}  // namespace monotree

#include "polycut/facet_io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

#include "polycut/errors.hpp"

namespace polycut {

namespace {

std::string strip_comment(const std::string& line) {
  const auto hash = line.find('#');
  return hash == std::string::npos ? line : line.substr(0, hash);
}

template <typename Int>
Int parse_int(const std::string& token, std::size_t line_no) {
  Int value{};
  const auto* first = token.data();
  const auto* last = token.data() + token.size();
  const auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc{} || ptr != last) {
    throw InvalidInput("line " + std::to_string(line_no) + ": bad integer '" + token + "'");
  }
  return value;
}

}  // namespace

SimplicialComplex parse_facet_list(std::istream& in) {
  std::string line;
  std::size_t line_no = 0;
  std::optional<int> dim;
  std::vector<Facet> facets;
  while (std::getline(in, line)) {
    ++line_no;
    std::istringstream tokens(strip_comment(line));
    std::string token;
    std::vector<std::string> words;
    while (tokens >> token) words.push_back(token);
    if (words.empty()) continue;

    if (!dim) {
      if (words.size() != 2 || words[0] != "dim") {
        throw InvalidInput("line " + std::to_string(line_no) + ": expected 'dim <d>' header");
      }
      dim = parse_int<int>(words[1], line_no);
      if (*dim < 1) throw InvalidInput("dimension must be positive");
      continue;
    }
    std::vector<VertexId> vs;
    vs.reserve(words.size());
    for (const auto& w : words) vs.push_back(parse_int<VertexId>(w, line_no));
    try {
      facets.emplace_back(std::move(vs));
    } catch (const InvalidInput& e) {
      throw InvalidInput("line " + std::to_string(line_no) + ": " + e.what());
    }
  }
  if (!dim) throw InvalidInput("missing 'dim <d>' header");
  return SimplicialComplex(*dim, std::move(facets));
}

SimplicialComplex read_facet_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw InvalidInput("cannot open " + path.string());
  return parse_facet_list(in);
}

std::string serialize_facet_list(const SimplicialComplex& complex) {
  std::ostringstream os;
  os << "dim " << complex.dim() << '\n';
  for (const auto& f : complex.facets()) {
    const auto vs = f.vertices();
    for (std::size_t i = 0; i < vs.size(); ++i) os << (i ? " " : "") << vs[i];
    os << '\n';
  }
  return os.str();
}

void write_facet_file(const std::filesystem::path& path, const SimplicialComplex& complex) {
  std::ofstream out(path);
  if (!out) throw InvalidInput("cannot write " + path.string());
  out << serialize_facet_list(complex);
}

}  // namespace polycut

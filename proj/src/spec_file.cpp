#include <filesystem>
#include <fstream>
#include <istream>
#include <sstream>

#include "nutgraph/construction.hpp"
#include "nutgraph/graph_io.hpp"

namespace nutgraph {
namespace {

std::string resolve(const std::string& path, const std::string& base_dir) {
  std::filesystem::path p(path);
  if (p.is_absolute()) return path;
  return (std::filesystem::path(base_dir) / p).string();
}

std::size_t to_size(const std::string& token, const char* what) {
  std::size_t pos = 0;
  long long v = -1;
  try {
    v = std::stoll(token, &pos);
  } catch (const std::exception&) {
    pos = 0;
  }
  if (pos != token.size() || v < 0) throw SpecError(std::string("bad ") + what + ": '" + token + "'");
  return static_cast<std::size_t>(v);
}

class BuilderParser {
 public:
  BuilderParser(std::string_view expr, const std::string& base_dir) : base_dir_(base_dir) {
    std::istringstream in{std::string(expr)};
    std::string tok;
    while (in >> tok) tokens_.push_back(tok);
  }

  MultiGraph parse_all() {
    MultiGraph g = parse();
    if (pos_ != tokens_.size()) throw SpecError("trailing tokens in builder expression");
    return g;
  }

 private:
  const std::string& next(const char* what) {
    if (pos_ >= tokens_.size()) throw SpecError(std::string("builder expression ended, expected ") + what);
    return tokens_[pos_++];
  }

  MultiGraph parse() {
    const std::string head = next("a builder");
    try {
      if (head.find('|') != std::string::npos) return build_block(parse_factorization(head));
      if (head == "cycle") return cycle(to_size(next("order"), "order"));
      if (head == "complete") return complete(to_size(next("order"), "order"));
      if (head == "loops") return loops(to_size(next("order"), "order"));
      if (head == "subgroup_circulant") {
        auto p = to_size(next("prime"), "prime");
        auto d = to_size(next("valence"), "valence");
        return subgroup_circulant(p, d);
      }
      if (head == "circulant") {
        auto n = to_size(next("order"), "order");
        std::vector<std::int64_t> set;
        std::istringstream items(next("connection set"));
        std::string item;
        while (std::getline(items, item, ',')) {
          std::size_t used = 0;
          long long v = 0;
          try {
            v = std::stoll(item, &used);
          } catch (const std::exception&) {
            used = 0;
          }
          if (used == 0 || used != item.size()) throw SpecError("bad connection set element '" + item + "'");
          set.push_back(v);
        }
        return circulant(n, set);
      }
      if (head == "kron") {
        MultiGraph a = parse();
        MultiGraph b = parse();
        return kronecker(a, b);
      }
      if (head == "file") return read_edge_list_file(resolve(next("path"), base_dir_));
    } catch (const SpecError&) {
      throw;
    } catch (const std::invalid_argument& e) {
      throw SpecError(e.what());
    } catch (const FormatError& e) {
      throw SpecError(e.what());
    }
    throw SpecError("unknown builder '" + head + "'");
  }

  std::vector<std::string> tokens_;
  std::size_t pos_ = 0;
  std::string base_dir_;
};

std::vector<std::pair<std::size_t, std::size_t>> read_arclist(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw SpecError("cannot open arc list " + path);
  std::vector<std::pair<std::size_t, std::size_t>> arcs;
  std::string line;
  while (std::getline(in, line)) {
    auto hash = line.find('#');
    if (hash != std::string::npos) line.resize(hash);
    std::istringstream fields(line);
    std::string a, b, extra;
    if (!(fields >> a)) continue;
    if (!(fields >> b) || (fields >> extra)) throw SpecError("arc list lines must be 'i j'");
    arcs.emplace_back(to_size(a, "arc"), to_size(b, "arc"));
  }
  return arcs;
}

}  // namespace

MultiGraph parse_builder(std::string_view expr, const std::string& base_dir) {
  return BuilderParser(expr, base_dir).parse_all();
}

std::string SpecText::to_text() const {
  std::ostringstream os;
  os << "lambda1 " << lambda1 << '\n'
     << "delta2 " << delta2 << '\n'
     << "delta3 " << delta3 << '\n'
     << "lambda4 " << lambda4 << '\n'
     << "lambda5 " << lambda5 << '\n';
  return os.str();
}

SpecText parse_spec_text(std::istream& in) {
  SpecText spec;
  spec.delta2.clear();
  spec.delta3.clear();
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.resize(hash);
    std::istringstream fields(line);
    std::string key;
    if (!(fields >> key)) continue;
    std::string value;
    std::getline(fields, value);
    auto b = value.find_first_not_of(" \t\r");
    value = b == std::string::npos ? std::string{} : value.substr(b, value.find_last_not_of(" \t\r") - b + 1);
    std::string* slot = nullptr;
    if (key == "lambda1") slot = &spec.lambda1;
    else if (key == "delta2") slot = &spec.delta2;
    else if (key == "delta3") slot = &spec.delta3;
    else if (key == "lambda4") slot = &spec.lambda4;
    else if (key == "lambda5") slot = &spec.lambda5;
    else throw SpecError("line " + std::to_string(line_no) + ": unknown key '" + key + "'");
    if (!slot->empty()) throw SpecError("line " + std::to_string(line_no) + ": duplicate key '" + key + "'");
    if (value.empty()) throw SpecError("line " + std::to_string(line_no) + ": missing value for '" + key + "'");
    *slot = value;
  }
  if (spec.lambda1.empty() || spec.lambda4.empty() || spec.lambda5.empty()) {
    throw SpecError("spec needs lambda1, lambda4 and lambda5");
  }
  if (spec.delta2.empty()) spec.delta2 = "diag";
  if (spec.delta3.empty()) spec.delta3 = "diag";
  return spec;
}

SpecText read_spec_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw SpecError("cannot open spec " + path);
  return parse_spec_text(in);
}

MergeSpec realize(const SpecText& text, const std::string& base_dir) {
  MergeSpec spec;
  spec.lambda1 = parse_builder(text.lambda1, base_dir);
  spec.lambda4 = parse_builder(text.lambda4, base_dir);
  spec.lambda5 = parse_builder(text.lambda5, base_dir);
  if (text.delta2 == "diag") {
    spec.delta2_mode = Delta2Mode::diagonal;
  } else if (text.delta2 == "same") {
    spec.delta2_mode = Delta2Mode::same_as_delta1;
  } else {
    spec.delta2_mode = Delta2Mode::explicit_graph;
    spec.delta2_graph = parse_builder(text.delta2, base_dir);
  }
  if (text.delta3 != "diag") {
    std::istringstream fields(text.delta3);
    std::string keyword, path, extra;
    if (!(fields >> keyword >> path) || keyword != "arclist" || (fields >> extra)) {
      throw SpecError("delta3 must be 'diag' or 'arclist PATH'");
    }
    spec.delta3_arcs = read_arclist(resolve(path, base_dir));
  }
  effective_spec(spec);
  return spec;
}

}  // namespace nutgraph

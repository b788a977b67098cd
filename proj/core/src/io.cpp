#include "ordkit/io.hpp"

#include <fstream>
#include <functional>
#include <sstream>

namespace ordkit {

namespace {

struct Lines {
  std::vector<std::pair<int, std::string>> items;  // (line number, content)
  size_t pos = 0;

  explicit Lines(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    int number = 0;
    while (std::getline(in, line)) {
      ++number;
      auto hash = line.find('#');
      if (hash != std::string::npos) line.erase(hash);
      while (!line.empty() && (line.back() == ' ' || line.back() == '\t' ||
                               line.back() == '\r'))
        line.pop_back();
      size_t start = line.find_first_not_of(" \t");
      if (start == std::string::npos) continue;
      items.emplace_back(number, line.substr(start));
    }
  }

  bool done() const { return pos >= items.size(); }
  int line() const { return done() ? -1 : items[pos].first; }
  const std::string& peek() const { return items[pos].second; }
  std::string next() { return items[pos++].second; }
};

[[noreturn]] void parse_fail(int line, const std::string& what) {
  throw Error(ErrorCode::ParseError,
              "line " + std::to_string(line) + ": " + what);
}

std::vector<std::string> tokens(const std::string& line) {
  std::istringstream in(line);
  std::vector<std::string> out;
  std::string tok;
  while (in >> tok) out.push_back(tok);
  return out;
}

int parse_int(const std::string& tok, int line) {
  try {
    size_t used = 0;
    int v = std::stoi(tok, &used);
    if (used != tok.size()) parse_fail(line, "bad integer '" + tok + "'");
    return v;
  } catch (const std::logic_error&) {
    parse_fail(line, "bad integer '" + tok + "'");
  }
}

}  // namespace

const FiniteSemilattice& ParsedStructure::base() const {
  switch (kind) {
    case StructureKind::Semilattice: return *semilattice;
    case StructureKind::Lattice: return lattice->base();
    case StructureKind::ChainProduct: return product->lattice().base();
  }
  throw Error(ErrorCode::ParseError, "corrupt structure");
}

ParsedStructure parse_structure_text(const std::string& text) {
  Lines in(text);
  if (in.done()) parse_fail(0, "empty structure file");

  auto head = tokens(in.peek());
  if (head.size() != 2 || head[0] != "kind")
    parse_fail(in.line(), "expected 'kind semilattice|lattice|chain-product'");
  in.next();

  ParsedStructure out;
  if (head[1] == "chain-product") {
    out.kind = StructureKind::ChainProduct;
    if (in.done()) parse_fail(-1, "missing 'chains' line");
    auto chainTokens = tokens(in.next());
    if (chainTokens.size() < 2 || chainTokens[0] != "chains")
      parse_fail(in.line(), "expected 'chains <k1> <k2> ...'");
    std::vector<int> arities;
    for (size_t k = 1; k < chainTokens.size(); ++k)
      arities.push_back(parse_int(chainTokens[k], in.line()));
    if (in.done() || in.peek() != "members")
      parse_fail(in.line(), "expected 'members'");
    in.next();
    std::vector<std::vector<int>> members;
    while (!in.done() && in.peek() != "end") {
      int line = in.line();
      auto toks = tokens(in.next());
      std::vector<int> tuple;
      for (const std::string& t : toks) tuple.push_back(parse_int(t, line));
      if (tuple.size() != arities.size())
        parse_fail(line, "tuple arity mismatch");
      for (const auto& m : members)
        if (m == tuple) parse_fail(line, "duplicate member tuple");
      members.push_back(std::move(tuple));
    }
    if (in.done()) parse_fail(-1, "missing 'end'");
    in.next();
    out.product = validate_sublattice(std::move(arities), std::move(members));
    return out;
  }

  if (head[1] != "semilattice" && head[1] != "lattice")
    parse_fail(in.line(), "unknown kind '" + head[1] + "'");
  out.kind = head[1] == "lattice" ? StructureKind::Lattice
                                  : StructureKind::Semilattice;

  if (in.done()) parse_fail(-1, "missing 'elements' line");
  auto elems = tokens(in.next());
  if (elems.size() != 2 || elems[0] != "elements")
    parse_fail(in.line(), "expected 'elements <n>'");
  const int n = parse_int(elems[1], in.line());
  if (n < 1) parse_fail(in.line(), "element count must be positive");

  std::vector<std::string> names;
  if (!in.done() && tokens(in.peek())[0] == "names") {
    int line = in.line();
    auto toks = tokens(in.next());
    names.assign(toks.begin() + 1, toks.end());
    if (static_cast<int>(names.size()) != n)
      parse_fail(line, "names count differs from element count");
    for (size_t a = 0; a < names.size(); ++a)
      for (size_t b = a + 1; b < names.size(); ++b)
        if (names[a] == names[b])
          parse_fail(line, "duplicate element '" + names[a] + "'");
  } else {
    for (int i = 0; i < n; ++i) names.push_back("e" + std::to_string(i));
  }
  auto index_of = [&](const std::string& name, int line) {
    for (int i = 0; i < n; ++i)
      if (names[i] == name) return i;
    parse_fail(line, "unknown element '" + name + "'");
  };

  if (in.done()) parse_fail(-1, "missing 'covers' or 'meet' body");
  std::string body = in.next();
  std::vector<std::pair<int, int>> covers;
  std::vector<int> table;
  if (body == "covers") {
    while (!in.done() && in.peek() != "end") {
      int line = in.line();
      auto toks = tokens(in.next());
      if (toks.size() != 3 || toks[1] != "<")
        parse_fail(line, "expected '<x> < <y>'");
      covers.emplace_back(index_of(toks[0], line), index_of(toks[2], line));
    }
  } else if (body == "meet") {
    table.assign(n * n, 0);
    for (int row = 0; row < n; ++row) {
      if (in.done() || in.peek() == "end")
        parse_fail(in.line(), "meet table row missing");
      int line = in.line();
      auto toks = tokens(in.next());
      if (static_cast<int>(toks.size()) != n)
        parse_fail(line, "meet table row has wrong width");
      for (int col = 0; col < n; ++col)
        table[row * n + col] = index_of(toks[col], line);
    }
  } else {
    parse_fail(in.line(), "expected 'covers' or 'meet'");
  }
  if (in.done() || in.peek() != "end") parse_fail(in.line(), "missing 'end'");
  in.next();

  if (out.kind == StructureKind::Lattice) {
    if (body != "covers")
      parse_fail(-1, "lattice files use a covers body");
    out.lattice = lattice_from_covers(n, covers, names);
  } else if (body == "covers") {
    out.semilattice = semilattice_from_covers(n, covers, names);
  } else {
    int zero = -1;
    for (int z = 0; z < n; ++z) {
      bool absorbs = true;
      for (int x = 0; x < n && absorbs; ++x)
        absorbs = table[z * n + x] == z;
      if (absorbs) zero = z;
    }
    if (zero < 0)
      throw Error(ErrorCode::NoMinimum, "meet table has no absorbing element");
    out.semilattice = validate_semilattice(n, table, zero, names);
  }
  return out;
}

ParsedStructure parse_structure_file(const std::string& path) {
  return parse_structure_text(read_file(path));
}

namespace {

std::string serialize_order(const FiniteSemilattice& K, const char* kind) {
  std::ostringstream out;
  out << "kind " << kind << "\n";
  out << "elements " << K.size() << "\n";
  out << "names";
  for (int i = 0; i < K.size(); ++i) out << " " << K.name(i);
  out << "\ncovers\n";
  for (auto [x, y] : cover_relation(K))
    out << K.name(x) << " < " << K.name(y) << "\n";
  out << "end\n";
  return out.str();
}

}  // namespace

std::string serialize_structure(const FiniteSemilattice& K) {
  return serialize_order(K, "semilattice");
}

std::string serialize_structure(const FiniteDistributiveLattice& L) {
  return serialize_order(L.base(), "lattice");
}

std::string serialize_structure(const ChainProductSublattice& K) {
  std::ostringstream out;
  out << "kind chain-product\nchains";
  for (int i = 0; i < K.coords(); ++i) out << " " << K.arity(i);
  out << "\nmembers\n";
  for (int x = 0; x < K.size(); ++x) {
    for (int i = 0; i < K.coords(); ++i) {
      if (i) out << " ";
      out << K.pi(x, i);
    }
    out << "\n";
  }
  out << "end\n";
  return out.str();
}

std::string serialize_structure(const ParsedStructure& s) {
  switch (s.kind) {
    case StructureKind::Semilattice: return serialize_structure(*s.semilattice);
    case StructureKind::Lattice: return serialize_structure(*s.lattice);
    case StructureKind::ChainProduct: return serialize_structure(*s.product);
  }
  throw Error(ErrorCode::ParseError, "corrupt structure");
}

namespace {

// Shared scaffold for the two function-file modes.
template <typename SetValue>
void parse_function_lines(const std::string& text, const char* mode, int n,
                          const std::function<int(const std::string&, int)>& index_of,
                          SetValue&& set_value) {
  Lines in(text);
  if (in.done()) parse_fail(0, "empty function file");
  auto head = tokens(in.next());
  if (head.size() != 2 || head[0] != "function" || head[1] != mode)
    parse_fail(in.line(), std::string("expected 'function ") + mode + "'");
  std::vector<bool> seen(n, false);
  while (!in.done() && in.peek() != "end") {
    int line = in.line();
    auto toks = tokens(in.next());
    if (toks.size() != 2) parse_fail(line, "expected '<element> <value>'");
    int x = index_of(toks[0], line);
    if (seen[x]) parse_fail(line, "duplicate element '" + toks[0] + "'");
    seen[x] = true;
    set_value(x, toks[1], line);
  }
  if (in.done()) parse_fail(-1, "missing 'end'");
  for (int x = 0; x < n; ++x)
    if (!seen[x]) parse_fail(-1, "function is not total: element " +
                                     std::to_string(x) + " missing");
}

}  // namespace

BinaryFunction parse_binary_function_text(const std::string& text,
                                          const FiniteSemilattice& host) {
  BinaryFunction f{&host, 0};
  auto index_of = [&](const std::string& name, int line) {
    auto idx = host.index_of(name);
    if (!idx) parse_fail(line, "unknown element '" + name + "'");
    return *idx;
  };
  parse_function_lines(text, "binary", host.size(), index_of,
                       [&](int x, const std::string& v, int line) {
                         if (v == "1")
                           f.values |= bit(x);
                         else if (v != "0")
                           parse_fail(line, "binary values are 0 or 1");
                       });
  return f;
}

RealFunction parse_real_function_text(const std::string& text,
                                      const ChainProductSublattice& host) {
  RealFunction f;
  f.host = &host;
  f.values.assign(host.size(), Rational(0));
  auto index_of = [&](const std::string& name, int line) {
    for (int x = 0; x < host.size(); ++x)
      if (host.member_name(x) == name) return x;
    parse_fail(line, "unknown member '" + name + "'");
  };
  parse_function_lines(text, "rational", host.size(), index_of,
                       [&](int x, const std::string& v, int line) {
                         try {
                           f.values[x] = Rational::parse(v);
                         } catch (const std::exception& e) {
                           parse_fail(line, e.what());
                         }
                       });
  return f;
}

BinaryFunction parse_binary_function_file(const std::string& path,
                                          const FiniteSemilattice& host) {
  return parse_binary_function_text(read_file(path), host);
}

RealFunction parse_real_function_file(const std::string& path,
                                      const ChainProductSublattice& host) {
  return parse_real_function_text(read_file(path), host);
}

std::string serialize_function(const BinaryFunction& f) {
  std::ostringstream out;
  out << "function binary\n";
  for (int x = 0; x < f.host->size(); ++x)
    out << f.host->name(x) << " " << f(x) << "\n";
  out << "end\n";
  return out.str();
}

std::string serialize_function(const RealFunction& f) {
  std::ostringstream out;
  out << "function rational\n";
  for (int x = 0; x < f.host->size(); ++x)
    out << f.host->member_name(x) << " " << f(x).to_string() << "\n";
  out << "end\n";
  return out.str();
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in)
    throw Error(ErrorCode::ParseError, "cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out)
    throw Error(ErrorCode::ParseError, "cannot write '" + path + "'");
  out << content;
}

Rational Rational::parse(const std::string& text) {
  auto slash = text.find('/');
  try {
    if (slash == std::string::npos) {
      size_t used = 0;
      long long n = std::stoll(text, &used);
      if (used != text.size()) throw std::invalid_argument(text);
      return Rational(n);
    }
    size_t used_n = 0, used_d = 0;
    long long n = std::stoll(text.substr(0, slash), &used_n);
    long long d = std::stoll(text.substr(slash + 1), &used_d);
    if (used_n != slash || used_d != text.size() - slash - 1)
      throw std::invalid_argument(text);
    return Rational(n, d);
  } catch (const std::logic_error&) {
    throw std::invalid_argument("bad rational '" + text + "'");
  }
}

}  // namespace ordkit

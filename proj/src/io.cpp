#include "qwlab/io.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <map>
#include <sstream>

#include "qwlab/error.hpp"

namespace qwlab {

namespace {

struct Word {
  std::string text;
  std::size_t line;
  std::size_t column;
};

struct Scan {
  std::vector<std::string> header;
  std::vector<Word> words;
};

Scan scan(std::string_view text) {
  Scan s;
  bool in_header = true;
  std::size_t line = 1;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view raw = text.substr(start, end - start);
    if (!raw.empty() && raw.back() == '\r') raw.remove_suffix(1);

    const std::size_t first = raw.find_first_not_of(" \t");
    if (in_header && first != std::string_view::npos && raw[first] == '#') {
      std::string kept(raw.substr(first));
      while (!kept.empty() && (kept.back() == ' ' || kept.back() == '\t')) kept.pop_back();
      s.header.push_back(std::move(kept));
    } else {
      const std::string_view body = raw.substr(0, std::min(raw.find('#'), raw.size()));
      std::size_t i = 0;
      while (i < body.size()) {
        if (body[i] == ' ' || body[i] == '\t') {
          ++i;
          continue;
        }
        std::size_t j = i;
        while (j < body.size() && body[j] != ' ' && body[j] != '\t') ++j;
        s.words.push_back({std::string(body.substr(i, j - i)), line, i + 1});
        in_header = false;
        i = j;
      }
    }
    if (end == text.size()) break;
    start = end + 1;
    ++line;
  }
  return s;
}

[[noreturn]] void fail_at(const Word& w, const std::string& msg) {
  throw ParseError(msg, w.line, w.column);
}

class Reader {
 public:
  explicit Reader(std::vector<Word> words) : w_(std::move(words)) {}

  bool done() const { return k_ >= w_.size(); }
  const Word& peek() const { return w_[k_]; }

  const Word& next(const char* what) {
    if (done()) {
      const std::size_t line = w_.empty() ? 1 : w_.back().line;
      throw ParseError(std::string("unexpected end of file, expected ") + what, line, 1);
    }
    return w_[k_++];
  }

  void expect(const char* literal) {
    const Word& w = next(literal);
    if (w.text != literal) fail_at(w, std::string("expected '") + literal + "', found '" + w.text + "'");
  }

 private:
  std::vector<Word> w_;
  std::size_t k_ = 0;
};

struct Block {
  std::vector<Elem> cells;
  std::vector<Word> at;  // source positions, parallel to cells
};

int parse_size(const Word& w) {
  int n = 0;
  for (char c : w.text) {
    if (c < '0' || c > '9' || n > 100000) fail_at(w, "expected a positive size, found '" + w.text + "'");
    n = n * 10 + (c - '0');
  }
  if (n < 1) fail_at(w, "size must be at least 1");
  return n;
}

void check_declared(const char* table, const Block& b, const std::vector<Elem>& computed,
                    const std::vector<std::string>& names, int n, bool unary) {
  for (std::size_t i = 0; i < computed.size(); ++i) {
    if (b.cells[i] == computed[i]) continue;
    const std::string cell = unary ? "(" + names[i] + ")"
                                   : "(" + names[i / n] + ", " + names[i % n] + ")";
    fail_at(b.at[i], std::string("declared ") + table + " table differs at " + cell +
                         ": file has " + names[b.cells[i]] + ", computed " + names[computed[i]]);
  }
}

std::string pad(const std::string& s, std::size_t width) {
  std::string out = s;
  // Width counts code points so UTF-8 names still align.
  std::size_t cps = 0;
  for (unsigned char c : s) cps += (c & 0xC0) != 0x80;
  if (cps < width) out.append(width - cps, ' ');
  return out;
}

void render_table(std::ostringstream& os, const char* title, int rows, int cols,
                  const std::vector<std::string>& names,
                  const std::function<Elem(Elem, Elem)>& cell) {
  std::size_t width = 0;
  for (const auto& name : names) {
    std::size_t cps = 0;
    for (unsigned char c : name) cps += (c & 0xC0) != 0x80;
    width = std::max(width, cps);
  }
  os << "\ntable " << title << " :\n";
  for (Elem x = 0; x < rows; ++x) {
    std::string line;
    for (Elem y = 0; y < cols; ++y) {
      if (y) line += ' ';
      line += y + 1 < cols ? pad(names[cell(x, y)], width) : names[cell(x, y)];
    }
    os << line << '\n';
  }
}

}  // namespace

AlgebraDocument parse_document(std::string_view text) {
  Scan s = scan(text);
  AlgebraDocument doc;
  doc.header = std::move(s.header);
  Reader r(std::move(s.words));

  std::optional<int> size;
  std::vector<std::string> names;
  std::map<std::string, Elem, std::less<>> index;
  std::optional<Elem> unit, zero;
  std::map<std::string, Block, std::less<>> blocks;

  auto element = [&](const Word& w) -> Elem {
    if (names.empty()) fail_at(w, "element '" + w.text + "' used before 'elements'");
    const auto it = index.find(w.text);
    if (it == index.end()) fail_at(w, "unknown element symbol '" + w.text + "'");
    return it->second;
  };

  while (!r.done()) {
    const Word& d = r.next("a directive");
    if (d.text == "size") {
      if (size) fail_at(d, "duplicate 'size' directive");
      size = parse_size(r.next("a size"));
    } else if (d.text == "elements") {
      if (!size) fail_at(d, "'elements' must follow 'size'");
      if (!names.empty()) fail_at(d, "duplicate 'elements' directive");
      for (int i = 0; i < *size; ++i) {
        const Word& w = r.next("an element name");
        if (!index.emplace(w.text, i).second) fail_at(w, "duplicate element '" + w.text + "'");
        names.push_back(w.text);
      }
    } else if (d.text == "unit" || d.text == "zero") {
      auto& slot = d.text == "unit" ? unit : zero;
      if (slot) fail_at(d, "duplicate '" + d.text + "' directive");
      slot = element(r.next("an element name"));
    } else if (d.text == "table") {
      const Word& kind = r.next("a table kind");
      std::string key = kind.text;
      if (key == "→") key = "->";
      if (key == "⊙") key = "odot";
      if (key == "⋒") key = "meet";
      if (key == "⊔" || key == "⊎") key = "join";
      if (key != "->" && key != "meet" && key != "join" && key != "star" && key != "odot") {
        fail_at(kind, "unknown table kind '" + kind.text + "'");
      }
      if (blocks.count(key)) fail_at(kind, "duplicate table '" + key + "'");
      r.expect(":");
      if (names.empty()) fail_at(kind, "tables must follow 'elements'");
      const int cells = key == "star" ? *size : *size * *size;
      Block b;
      for (int i = 0; i < cells; ++i) {
        const Word& w = r.next("a table entry");
        b.cells.push_back(element(w));
        b.at.push_back(w);
      }
      blocks.emplace(key, std::move(b));
    } else {
      fail_at(d, "unknown directive '" + d.text + "'");
    }
  }

  const Word eof{"", 1, 1};
  if (!size) fail_at(eof, "missing 'size' directive");
  if (names.empty()) fail_at(eof, "missing 'elements' directive");
  if (!unit) fail_at(eof, "missing 'unit' directive");
  if (!zero) fail_at(eof, "missing 'zero' directive");
  const int n = *size;

  auto square = [&](const Block& b) {
    Square<Elem> t(n, 0);
    for (int i = 0; i < n * n; ++i) t(i / n, i % n) = b.cells[i];
    return t;
  };

  const bool has_imp = blocks.count("->") != 0;
  const bool has_prod = blocks.count("odot") != 0;
  if (has_imp == has_prod) {
    fail_at(eof, has_imp ? "a file holds either 'table ->' or 'table odot', not both"
                         : "missing 'table ->' (or 'table odot' with 'table star')");
  }
  if (has_imp) {
    doc.algebra.emplace(names, *unit, *zero, square(blocks.at("->")));
    const DerivedOps ops = derive_ops(*doc.algebra);
    if (auto it = blocks.find("meet"); it != blocks.end()) {
      doc.declares_meet = true;
      check_declared("meet", it->second, ops.meet.cells(), names, n, false);
    }
    if (auto it = blocks.find("join"); it != blocks.end()) {
      doc.declares_join = true;
      check_declared("join", it->second, ops.join.cells(), names, n, false);
    }
    if (auto it = blocks.find("star"); it != blocks.end()) {
      doc.declares_star = true;
      check_declared("star", it->second, ops.star, names, n, true);
    }
  } else {
    if (!blocks.count("star")) fail_at(eof, "a 'table odot' file also needs 'table star'");
    for (const char* k : {"meet", "join"}) {
      if (blocks.count(k)) fail_at(blocks.at(k).at.front(), std::string("'table ") + k +
                                                                 "' is only allowed with 'table ->'");
    }
    doc.declares_star = true;
    doc.product.emplace(names, *unit, *zero, square(blocks.at("odot")), blocks.at("star").cells);
  }
  return doc;
}

std::string render_document(const AlgebraDocument& d) {
  std::ostringstream os;
  for (const auto& h : d.header) os << h << '\n';
  if (!d.header.empty()) os << '\n';

  const auto& names = d.algebra ? d.algebra->names() : d.product->names();
  const int n = static_cast<int>(names.size());
  const Elem unit = d.algebra ? d.algebra->unit() : d.product->unit();
  const Elem zero = d.algebra ? d.algebra->zero() : d.product->zero();
  os << "size " << n << '\n' << "elements";
  for (const auto& name : names) os << ' ' << name;
  os << '\n' << "unit " << names[unit] << '\n' << "zero " << names[zero] << '\n';

  if (d.algebra) {
    const FiniteAlgebra& a = *d.algebra;
    const DerivedOps ops = derive_ops(a);
    render_table(os, "->", n, n, names, [&](Elem x, Elem y) { return a.imp(x, y); });
    if (d.declares_meet) {
      render_table(os, "meet", n, n, names, [&](Elem x, Elem y) { return ops.meet(x, y); });
    }
    if (d.declares_join) {
      render_table(os, "join", n, n, names, [&](Elem x, Elem y) { return ops.join(x, y); });
    }
    if (d.declares_star) {
      render_table(os, "star", 1, n, names, [&](Elem, Elem y) { return ops.star[y]; });
    }
  } else {
    const MBEAlgebra& m = *d.product;
    render_table(os, "odot", n, n, names, [&](Elem x, Elem y) { return m.prod(x, y); });
    render_table(os, "star", 1, n, names, [&](Elem, Elem y) { return m.star(y); });
  }
  return os.str();
}

AlgebraDocument load_document(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ValidationError("cannot open '" + path.string() + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  try {
    return parse_document(buf.str());
  } catch (const ParseError& e) {
    throw ParseError(e.message(), e.line(), e.column(), path.string());
  }
}

void save_document(const AlgebraDocument& d, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ValidationError("cannot write '" + path.string() + "'");
  out << render_document(d);
}

FiniteAlgebra load_algebra(const std::filesystem::path& path) {
  AlgebraDocument d = load_document(path);
  if (!d.algebra) {
    throw ParseError("file holds a product table, not an implication table", 1, 1,
                     path.string());
  }
  return std::move(*d.algebra);
}

void save_algebra(const FiniteAlgebra& a, const std::filesystem::path& path) {
  save_document(document_for(a), path);
}

AlgebraDocument document_for(const FiniteAlgebra& a) {
  AlgebraDocument d;
  d.algebra = a;
  return d;
}

AlgebraDocument document_for(const MBEAlgebra& m) {
  AlgebraDocument d;
  d.product = m;
  d.declares_star = true;
  return d;
}

}  // namespace qwlab

#include "extalg/algebra_io.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

namespace extalg {

namespace {

struct Token {
  enum Kind { Ident, Punct, End } kind = End;
  std::string text;
  int col = 0;
};

// Tokenizes one line.  Idents are [A-Za-z0-9_]+; "->" is a single token;
// '#' starts a comment.
class LineLexer {
public:
  LineLexer(std::string_view line, int lineno) : line_(line), lineno_(lineno) { advance(); }

  const Token& peek() const { return tok_; }
  Token next() {
    Token t = tok_;
    advance();
    return t;
  }
  int lineno() const { return lineno_; }

  [[noreturn]] void fail(const std::string& msg) const {
    throw ParseError(lineno_, tok_.kind == Token::End ? int(line_.size()) + 1 : tok_.col, msg);
  }

  Token expect_ident(const std::string& what) {
    if (tok_.kind != Token::Ident) fail("expected " + what);
    return next();
  }
  void expect_punct(const std::string& p) {
    if (tok_.kind != Token::Punct || tok_.text != p) fail("expected '" + p + "'");
    next();
  }

private:
  void advance() {
    while (pos_ < line_.size() && std::isspace(static_cast<unsigned char>(line_[pos_]))) ++pos_;
    if (pos_ >= line_.size() || line_[pos_] == '#') {
      tok_ = {Token::End, "", static_cast<int>(pos_) + 1};
      return;
    }
    int col = static_cast<int>(pos_) + 1;
    char c = line_[pos_];
    if (c == '-' && pos_ + 1 < line_.size() && line_[pos_ + 1] == '>') {
      pos_ += 2;
      tok_ = {Token::Punct, "->", col};
      return;
    }
    if (std::string(":.*/+->").find(c) != std::string::npos) {
      ++pos_;
      tok_ = {Token::Punct, std::string(1, c), col};
      return;
    }
    if (std::isalnum(static_cast<unsigned char>(c)) || c == '_') {
      size_t start = pos_;
      while (pos_ < line_.size() &&
             (std::isalnum(static_cast<unsigned char>(line_[pos_])) || line_[pos_] == '_'))
        ++pos_;
      tok_ = {Token::Ident, std::string(line_.substr(start, pos_ - start)), col};
      return;
    }
    throw ParseError(lineno_, col, std::string("unexpected character '") + c + "'");
  }

  std::string_view line_;
  int lineno_;
  size_t pos_ = 0;
  Token tok_;
};

bool is_integer(const std::string& s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

Path parse_path(LineLexer& lex, const Quiver& q, int max_path_length) {
  Token first = lex.expect_ident("arrow label");
  int a0 = q.arrow_index(first.text);
  if (a0 < 0) throw ParseError(lex.lineno(), first.col, "unknown arrow '" + first.text + "'");
  Path p = arrow_path(q, a0);
  while (lex.peek().kind == Token::Punct && lex.peek().text == ".") {
    lex.next();
    Token t = lex.expect_ident("arrow label");
    int a = q.arrow_index(t.text);
    if (a < 0) throw ParseError(lex.lineno(), t.col, "unknown arrow '" + t.text + "'");
    if (q.arrow(a).source != path_target(q, p))
      throw ParseError(lex.lineno(), t.col,
                       "arrows do not compose: t(" + q.arrow(p.arrows.back()).label +
                           ") != s(" + t.text + ")");
    p.arrows.push_back(a);
    if (p.length() > max_path_length)
      throw ParseError(lex.lineno(), t.col,
                       "path exceeds maximum length " + std::to_string(max_path_length));
  }
  return p;
}

}  // namespace

AlgebraFile parse_algebra(std::string_view text, int max_path_length) {
  AlgebraFile out;
  std::vector<std::string> vertex_labels;
  std::vector<Arrow> arrows;
  struct PendingArrow {
    std::string label, src, tgt;
    int line, col;
  };
  std::vector<PendingArrow> pending_arrows;
  struct RawLine {
    std::string text;
    int lineno;
  };
  std::vector<RawLine> relation_lines;
  std::vector<RawLine> order_lines;
  bool field_seen = false;

  // Pass 1: structure lines.
  int lineno = 0;
  size_t pos = 0;
  while (pos <= text.size()) {
    size_t eol = text.find('\n', pos);
    std::string_view line = text.substr(pos, eol == std::string_view::npos ? text.size() - pos
                                                                           : eol - pos);
    ++lineno;
    pos = eol == std::string_view::npos ? text.size() + 1 : eol + 1;

    LineLexer lex(line, lineno);
    if (lex.peek().kind == Token::End) continue;
    Token head = lex.expect_ident("directive");
    if (head.text == "FIELD") {
      if (field_seen) lex.fail("duplicate FIELD line");
      field_seen = true;
      Token f = lex.expect_ident("field name");
      if (f.text == "Q") {
        out.field = FieldDesc{true, 0};
      } else if (f.text == "F") {
        Token p = lex.expect_ident("prime");
        if (!is_integer(p.text))
          throw ParseError(lineno, p.col, "prime must be a positive integer");
        long pv = std::stol(p.text);
        if (pv < 2) throw ParseError(lineno, p.col, "prime must be at least 2");
        for (long d = 2; d * d <= pv; ++d)
          if (pv % d == 0) throw ParseError(lineno, p.col, "field order must be prime");
        out.field = FieldDesc{false, static_cast<uint32_t>(pv)};
      } else {
        throw ParseError(lineno, f.col, "unknown field '" + f.text + "'");
      }
      if (lex.peek().kind != Token::End) lex.fail("trailing tokens after FIELD");
    } else if (head.text == "VERTICES") {
      while (lex.peek().kind == Token::Ident) vertex_labels.push_back(lex.next().text);
      if (lex.peek().kind != Token::End) lex.fail("expected vertex label");
    } else if (head.text == "ARROW") {
      Token lbl = lex.expect_ident("arrow label");
      lex.expect_punct(":");
      Token src = lex.expect_ident("source vertex");
      lex.expect_punct("->");
      Token tgt = lex.expect_ident("target vertex");
      if (lex.peek().kind != Token::End) lex.fail("trailing tokens after ARROW");
      pending_arrows.push_back({lbl.text, src.text, tgt.text, lineno, lbl.col});
    } else if (head.text == "RELATION") {
      relation_lines.push_back({std::string(line), lineno});
    } else if (head.text == "ORDER") {
      order_lines.push_back({std::string(line), lineno});
    } else {
      throw ParseError(lineno, head.col, "unknown directive '" + head.text + "'");
    }
  }

  // Build and validate the quiver.
  {
    std::map<std::string, int> vidx;
    for (size_t i = 0; i < vertex_labels.size(); ++i) {
      if (!vidx.emplace(vertex_labels[i], static_cast<int>(i)).second)
        throw ParseError(1, 1, "duplicate vertex label '" + vertex_labels[i] + "'");
    }
    for (const auto& pa : pending_arrows) {
      auto s = vidx.find(pa.src);
      if (s == vidx.end())
        throw ParseError(pa.line, pa.col, "unknown vertex '" + pa.src + "'");
      auto t = vidx.find(pa.tgt);
      if (t == vidx.end())
        throw ParseError(pa.line, pa.col, "unknown vertex '" + pa.tgt + "'");
      arrows.push_back({pa.label, s->second, t->second});
    }
    try {
      out.quiver = Quiver(vertex_labels, arrows);
    } catch (const std::invalid_argument& e) {
      throw ParseError(1, 1, e.what());
    }
  }

  // ORDER ARROWS line.
  out.order = AdmissibleOrder::declaration(out.quiver);
  for (const auto& raw : order_lines) {
    LineLexer lex(raw.text, raw.lineno);
    lex.next();  // ORDER
    Token what = lex.expect_ident("ORDER subject");
    if (what.text != "ARROWS")
      throw ParseError(raw.lineno, what.col, "only 'ORDER ARROWS' is supported");
    std::vector<int> desc;
    for (;;) {
      Token t = lex.expect_ident("arrow label");
      int a = out.quiver.arrow_index(t.text);
      if (a < 0) throw ParseError(raw.lineno, t.col, "unknown arrow '" + t.text + "'");
      desc.push_back(a);
      if (lex.peek().kind == Token::End) break;
      lex.expect_punct(">");
    }
    try {
      out.order = AdmissibleOrder::with_arrow_order(out.quiver, desc);
    } catch (const std::invalid_argument& e) {
      throw ParseError(raw.lineno, 1, e.what());
    }
    out.explicit_order = true;
  }

  // RELATION lines.
  for (const auto& raw : relation_lines) {
    LineLexer lex(raw.text, raw.lineno);
    lex.next();  // RELATION
    ParsedRelation rel;
    rel.line = raw.lineno;
    bool negative = false;
    if (lex.peek().kind == Token::Punct &&
        (lex.peek().text == "-" || lex.peek().text == "+")) {
      negative = lex.next().text == "-";
    }
    for (;;) {
      // optional coefficient: INT [ '/' INT ] '*'
      Rational coeff(1);
      if (lex.peek().kind == Token::Ident && is_integer(lex.peek().text)) {
        // lookahead to distinguish a numeric label from a coefficient
        LineLexer probe = lex;
        Token num = probe.next();
        std::string den = "1";
        bool has_coeff = false;
        if (probe.peek().kind == Token::Punct && probe.peek().text == "/") {
          probe.next();
          Token d = probe.expect_ident("denominator");
          if (!is_integer(d.text))
            throw ParseError(raw.lineno, d.col, "denominator must be an integer");
          den = d.text;
          if (probe.peek().kind == Token::Punct && probe.peek().text == "*") has_coeff = true;
        } else if (probe.peek().kind == Token::Punct && probe.peek().text == "*") {
          has_coeff = true;
        }
        if (has_coeff) {
          probe.next();  // '*'
          coeff = Rational::from_strings(num.text, den);
          lex = probe;
        }
      }
      if (negative) coeff = -coeff;
      Path p = parse_path(lex, out.quiver, max_path_length);
      if (!coeff.is_zero()) rel.terms.push_back({coeff, p});

      if (lex.peek().kind == Token::End) break;
      if (lex.peek().kind == Token::Punct &&
          (lex.peek().text == "+" || lex.peek().text == "-")) {
        negative = lex.next().text == "-";
      } else {
        lex.fail("expected '+', '-' or end of line");
      }
    }
    if (rel.terms.empty())
      throw ParseError(raw.lineno, 1, "relation has no nonzero terms");
    // uniformity
    int s = rel.terms.front().path.source;
    int t = path_target(out.quiver, rel.terms.front().path);
    for (const auto& term : rel.terms) {
      if (term.path.source != s || path_target(out.quiver, term.path) != t)
        throw ParseError(raw.lineno, 1,
                         "NonUniformRelation: terms mix sources or targets");
    }
    out.relations.push_back(std::move(rel));
  }

  return out;
}

AlgebraFile parse_algebra_file(const std::string& filename, int max_path_length) {
  std::ifstream in(filename);
  if (!in) throw std::runtime_error("cannot open '" + filename + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_algebra(ss.str(), max_path_length);
}

std::string serialize_algebra(const AlgebraFile& alg) {
  std::ostringstream os;
  os << "FIELD " << alg.field.str() << "\n";
  os << "VERTICES";
  for (const auto& v : alg.quiver.vertex_labels()) os << ' ' << v;
  os << "\n";
  for (const auto& a : alg.quiver.arrows())
    os << "ARROW " << a.label << " : " << alg.quiver.vertex_label(a.source) << " -> "
       << alg.quiver.vertex_label(a.target) << "\n";
  os << "ORDER ARROWS";
  bool first = true;
  for (int a : alg.order.arrows_descending()) {
    os << (first ? " " : " > ") << alg.quiver.arrow(a).label;
    first = false;
  }
  os << "\n";
  for (const auto& rel : alg.relations) {
    os << "RELATION ";
    bool head = true;
    for (const auto& t : rel.terms) {
      Rational c = t.coeff;
      bool neg = c.is_negative();
      if (neg) c = -c;
      if (head) {
        if (neg) os << "-";
        head = false;
      } else {
        os << (neg ? " - " : " + ");
      }
      if (!c.is_one()) os << c.str() << "*";
      os << path_str(alg.quiver, t.path);
    }
    os << "\n";
  }
  return os.str();
}

}  // namespace extalg

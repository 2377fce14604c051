#include "patlas/parser.hpp"

#include <cctype>
#include <fstream>
#include <map>
#include <sstream>

#include "patlas/errors.hpp"

namespace patlas {

namespace {

enum class Tok { Ident, Number, Punct, End };

struct Token {
  Tok kind = Tok::End;
  std::string text;
  int line = 1;
  int col = 1;
};

std::vector<Token> tokenize(std::string_view s) {
  std::vector<Token> out;
  int line = 1;
  int col = 1;
  std::size_t i = 0;
  auto advance = [&](std::size_t n) {
    for (std::size_t k = 0; k < n; ++k, ++i) {
      if (s[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
  };
  while (i < s.size()) {
    char c = s[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      advance(1);
      continue;
    }
    if (c == '#') {
      while (i < s.size() && s[i] != '\n') advance(1);
      continue;
    }
    Token t;
    t.line = line;
    t.col = col;
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t j = i;
      while (j < s.size() && (std::isalnum(static_cast<unsigned char>(s[j])) || s[j] == '_')) ++j;
      t.kind = Tok::Ident;
      t.text = std::string(s.substr(i, j - i));
      advance(j - i);
    } else if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t j = i;
      while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
      t.kind = Tok::Number;
      t.text = std::string(s.substr(i, j - i));
      advance(j - i);
    } else if (c == '-' && i + 1 < s.size() && s[i + 1] == '>') {
      t.kind = Tok::Punct;
      t.text = "->";
      advance(2);
    } else if (std::string_view("+-*/^()[]{},;=").find(c) != std::string_view::npos) {
      t.kind = Tok::Punct;
      t.text = std::string(1, c);
      advance(1);
    } else {
      throw ParseError(std::string("unexpected character '") + c + "'", line, col);
    }
    out.push_back(std::move(t));
  }
  Token end;
  end.line = line;
  end.col = col;
  out.push_back(end);
  return out;
}

class Parser {
 public:
  explicit Parser(std::string_view text) : toks_(tokenize(text)) {}

  const Token& peek(std::size_t k = 0) const { return toks_[std::min(pos_ + k, toks_.size() - 1)]; }
  bool at_end() const { return peek().kind == Tok::End; }
  Token next() {
    Token t = peek();
    if (pos_ < toks_.size() - 1) ++pos_;
    return t;
  }
  [[noreturn]] void fail(const std::string& msg, const Token& t) const { throw ParseError(msg, t.line, t.col); }
  [[noreturn]] void fail(const std::string& msg) const { fail(msg, peek()); }
  bool is_punct(const char* p, std::size_t k = 0) const { return peek(k).kind == Tok::Punct && peek(k).text == p; }
  bool is_ident(const char* w, std::size_t k = 0) const { return peek(k).kind == Tok::Ident && peek(k).text == w; }
  bool accept(const char* p) {
    if (!is_punct(p)) return false;
    next();
    return true;
  }
  void expect(const char* p) {
    if (!accept(p)) fail(std::string("expected '") + p + "'" + found());
  }
  std::string found() const {
    const Token& t = peek();
    if (t.kind == Tok::End) return " but reached end of input";
    return " but found '" + t.text + "'";
  }
  std::string ident(const char* what) {
    if (peek().kind != Tok::Ident) fail(std::string("expected ") + what + found());
    return next().text;
  }
  void keyword(const char* w) {
    if (!is_ident(w)) fail(std::string("expected '") + w + "'" + found());
    next();
  }
  long integer() {
    if (peek().kind != Tok::Number) fail("expected an integer" + found());
    Token t = next();
    try {
      return std::stol(t.text);
    } catch (const std::exception&) {
      fail("integer out of range", t);
    }
  }

  // Polynomial expressions over the current varset (scalars when vars has no names).
  LaurentPoly expr(const VarSetPtr& vars) {
    LaurentPoly acc(vars);
    bool neg = false;
    if (accept("-")) {
      neg = true;
    } else {
      accept("+");
    }
    acc = term(vars);
    if (neg) acc = -acc;
    while (is_punct("+") || is_punct("-")) {
      bool minus = next().text == "-";
      LaurentPoly t = term(vars);
      acc = minus ? acc - t : acc + t;
    }
    return acc;
  }

  LaurentPoly term(const VarSetPtr& vars) {
    LaurentPoly acc = factor(vars);
    while (is_punct("*") || is_punct("/")) {
      Token op = next();
      Token at = peek();
      LaurentPoly f = factor(vars);
      if (op.text == "*") {
        acc = acc * f;
      } else {
        if (!f.is_constant() || f.is_zero()) fail("division only by a nonzero constant", at);
        acc = acc * f.constant_term().inverse();
      }
    }
    return acc;
  }

  LaurentPoly factor(const VarSetPtr& vars) {
    Token at = peek();
    LaurentPoly b = base(vars);
    if (!accept("^")) return b;
    long e = 0;
    if (accept("(")) {
      bool neg = accept("-");
      e = integer();
      if (neg) e = -e;
      expect(")");
    } else {
      bool neg = accept("-");
      e = integer();
      if (neg) e = -e;
    }
    try {
      return b.pow(static_cast<int>(e));
    } catch (const DomainError&) {
      fail("Laurent violation: negative power of a non-invertible element", at);
    }
  }

  LaurentPoly base(const VarSetPtr& vars) {
    const Token& t = peek();
    if (t.kind == Tok::Number) {
      Token n = next();
      return LaurentPoly::constant(vars, Scalar(Integer(n.text)));
    }
    if (t.kind == Tok::Ident && t.text == "sqrt" && is_punct("(", 1)) {
      next();
      next();
      bool neg = accept("-");
      Token n = peek();
      long v = integer();
      expect(")");
      try {
        return LaurentPoly::constant(vars, Scalar::sqrt(Scalar(neg ? -v : v)));
      } catch (const Error& e) {
        fail(e.what(), n);
      }
    }
    if (t.kind == Tok::Ident) {
      Token n = next();
      auto idx = vars->index_of(n.text);
      if (!idx) fail("unknown variable '" + n.text + "'", n);
      return LaurentPoly::variable(vars, *idx);
    }
    if (accept("(")) {
      LaurentPoly e = expr(vars);
      expect(")");
      return e;
    }
    fail("expected an expression" + found());
  }

  Scalar constant(const VarSetPtr& vars) {
    Token at = peek();
    LaurentPoly p = expr(vars);
    if (!p.is_constant()) fail("expected a constant", at);
    return p.constant_term();
  }

  Point point(const VarSetPtr& vars) {
    expect("(");
    std::vector<Scalar> coords;
    if (!is_punct(")")) {
      coords.push_back(constant(vars));
      while (accept(",")) coords.push_back(constant(vars));
    }
    expect(")");
    return Point(std::move(coords));
  }

  // name list with an optional trailing laurent(...) marker
  std::pair<std::vector<std::string>, std::vector<bool>> var_list(const char* closer) {
    std::vector<std::string> names;
    std::vector<Token> where;
    while (true) {
      if (is_ident("laurent") && is_punct("(", 1)) break;
      where.push_back(peek());
      names.push_back(ident("a variable name"));
      if (!accept(",")) break;
    }
    std::vector<bool> laurent(names.size(), false);
    if (is_ident("laurent")) {
      next();
      expect("(");
      do {
        Token t = peek();
        std::string n = ident("a variable name");
        bool hit = false;
        for (std::size_t i = 0; i < names.size(); ++i) {
          if (names[i] == n) {
            laurent[i] = true;
            hit = true;
          }
        }
        if (!hit) fail("unknown variable '" + n + "'", t);
      } while (accept(","));
      expect(")");
    }
    for (std::size_t i = 0; i < names.size(); ++i) {
      for (std::size_t j = 0; j < i; ++j) {
        if (names[i] == names[j]) fail("duplicate variable '" + names[i] + "'", where[i]);
      }
    }
    if (closer && !is_punct(closer)) fail(std::string("expected '") + closer + "'" + found());
    return {names, laurent};
  }

  Matrix matrix(const VarSetPtr& scalars) {
    Token at = peek();
    expect("[");
    std::vector<Vector> rows;
    do {
      expect("[");
      Vector row;
      row.push_back(constant(scalars));
      while (accept(",")) row.push_back(constant(scalars));
      expect("]");
      rows.push_back(std::move(row));
    } while (accept(","));
    expect("]");
    for (const auto& r : rows) {
      if (r.size() != rows[0].size()) fail("ragged matrix", at);
    }
    if (rows.size() != rows[0].size()) fail("action matrices must be square", at);
    return Matrix::from_rows(rows);
  }

  void end_block() {
    expect("}");
    accept(";");
  }

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
};

struct PendingBracket {
  std::string kind;
  Token at;
  std::optional<LaurentPoly> multiplier;
  std::optional<LaurentPoly> potential;
  std::vector<std::pair<std::pair<std::size_t, std::size_t>, LaurentPoly>> entries;
};

BracketSpec build_bracket(const PendingBracket& b, const VarSetPtr& vars, Parser& p) {
  try {
    if (b.kind == "exact") return BracketSpec::exact(*b.potential);
    if (b.kind == "scaled") return BracketSpec::scaled(*b.multiplier, *b.potential);
    if (b.kind == "table") return BracketSpec::table(vars, b.entries);
    const std::size_t n = vars->size();
    StructureConstants c(n, std::vector<std::vector<Scalar>>(n, std::vector<Scalar>(n)));
    for (const auto& [ij, poly] : b.entries) {
      for (const auto& [e, coeff] : poly.terms()) {
        int deg = 0;
        std::size_t k = 0;
        for (std::size_t t = 0; t < n; ++t) {
          deg += e[t] < 0 ? -e[t] : e[t];
          if (e[t] != 0) k = t;
        }
        if (deg != 1 || e[k] != 1) p.fail("kirillov-kostant entries must be linear", b.at);
        c[ij.first][ij.second][k] += coeff;
        c[ij.second][ij.first][k] -= coeff;
      }
    }
    return BracketSpec::kirillov_kostant(vars, c);
  } catch (const DomainError& e) {
    p.fail(e.what(), b.at);
  }
}

}  // namespace

LaurentPoly parse_polynomial(const VarSetPtr& vars, std::string_view text) {
  Parser p(text);
  LaurentPoly out = p.expr(vars);
  if (!p.at_end()) p.fail("unexpected trailing input");
  return out;
}

Scalar parse_scalar(std::string_view text) {
  auto none = make_varset({});
  Parser p(text);
  Scalar s = p.constant(none);
  if (!p.at_end()) p.fail("unexpected trailing input");
  return s;
}

Point parse_point(const VarSetPtr& vars, std::string_view text) {
  auto none = make_varset({});
  Parser p(text);
  Point pt = p.point(none);
  if (!p.at_end()) p.fail("unexpected trailing input");
  if (pt.size() != vars->size()) throw ParseError("point needs " + std::to_string(vars->size()) + " coordinates", 1, 1);
  try {
    pt.validate(*vars);
  } catch (const DomainError& e) {
    throw ParseError(e.what(), 1, 1);
  }
  return pt;
}

PresentationFile parse_presentation(std::string_view text) {
  Parser p(text);
  auto scalars = make_varset({});
  VarSetPtr vars;
  std::optional<PendingBracket> bracket;
  std::vector<LaurentPoly> relations;
  std::vector<Point> points;
  struct PendingMap {
    std::string name;
    Token at;
    VarSetPtr source;
    std::map<std::string, LaurentPoly> images;
    bool identity_default;
  };
  std::vector<PendingMap> autos;
  std::vector<PendingMap> embeds;
  std::vector<ModuleDecl> modules;
  std::optional<std::string> grading;
  auto need_vars = [&](const Token& t) {
    if (!vars) p.fail("'vars' must come first", t);
  };
  auto map_body = [&](PendingMap& m) {
    p.expect("{");
    while (!p.is_punct("}")) {
      Token t = p.peek();
      std::string v = p.ident("a variable name");
      if (!m.source->index_of(v)) p.fail("unknown variable '" + v + "'", t);
      if (m.images.count(v)) p.fail("duplicate image for '" + v + "'", t);
      p.expect("->");
      m.images.emplace(v, p.expr(vars));
      p.expect(";");
    }
    p.end_block();
  };
  while (!p.at_end()) {
    Token t = p.peek();
    std::string kw = p.ident("a statement keyword");
    if (kw == "vars") {
      if (vars) p.fail("'vars' given twice", t);
      auto [names, laurent] = p.var_list(";");
      p.expect(";");
      if (names.empty()) p.fail("no variables", t);
      vars = make_varset(names, laurent);
    } else if (kw == "bracket") {
      need_vars(t);
      if (bracket) p.fail("'bracket' given twice", t);
      PendingBracket b;
      b.at = p.peek();
      b.kind = p.ident("a bracket kind");
      if (b.kind == "kirillov" && p.is_punct("-") && p.is_ident("kostant", 1)) {
        p.next();
        p.next();
        b.kind = "kirillov-kostant";
      }
      if (b.kind == "exact" || b.kind == "scaled") {
        if (vars->size() != 3) p.fail(b.kind + " brackets need exactly 3 variables", b.at);
        if (b.kind == "scaled") {
          p.ident("a multiplier name");
          p.expect("=");
          b.multiplier = p.expr(vars);
          p.expect(";");
        }
        p.ident("a potential name");
        p.expect("=");
        b.potential = p.expr(vars);
        p.expect(";");
      } else if (b.kind == "table" || b.kind == "kirillov-kostant") {
        p.expect("{");
        std::map<std::pair<std::size_t, std::size_t>, bool> seen;
        while (!p.is_punct("}")) {
          Token at = p.peek();
          p.expect("[");
          Token ti = p.peek();
          std::string a = p.ident("a variable name");
          p.expect(",");
          Token tj = p.peek();
          std::string c = p.ident("a variable name");
          p.expect("]");
          p.expect("=");
          auto i = vars->index_of(a);
          auto j = vars->index_of(c);
          if (!i) p.fail("unknown variable '" + a + "'", ti);
          if (!j) p.fail("unknown variable '" + c + "'", tj);
          if (*i == *j) p.fail("diagonal bracket entry", at);
          LaurentPoly val = p.expr(vars);
          p.expect(";");
          auto key = *i < *j ? std::make_pair(*i, *j) : std::make_pair(*j, *i);
          if (seen[key]) p.fail("bracket entry given twice", at);
          seen[key] = true;
          b.entries.push_back({key, *i < *j ? val : -val});
        }
        p.end_block();
      } else {
        p.fail("unknown bracket kind '" + b.kind + "'", b.at);
      }
      bracket = std::move(b);
    } else if (kw == "relation") {
      need_vars(t);
      relations.push_back(p.expr(vars));
      p.expect(";");
    } else if (kw == "point") {
      need_vars(t);
      Token at = p.peek();
      Point pt = p.point(scalars);
      if (pt.size() != vars->size()) p.fail("point needs " + std::to_string(vars->size()) + " coordinates", at);
      try {
        pt.validate(*vars);
      } catch (const DomainError& e) {
        p.fail(e.what(), at);
      }
      points.push_back(std::move(pt));
      p.expect(";");
    } else if (kw == "auto") {
      need_vars(t);
      PendingMap m{p.ident("an automorphism name"), t, vars, {}, true};
      map_body(m);
      autos.push_back(std::move(m));
    } else if (kw == "embed") {
      need_vars(t);
      PendingMap m{p.ident("an embedding name"), t, nullptr, {}, false};
      p.expect("(");
      auto [names, laurent] = p.var_list(")");
      p.expect(")");
      m.source = make_varset(names, laurent);
      map_body(m);
      embeds.push_back(std::move(m));
    } else if (kw == "module") {
      need_vars(t);
      ModuleDecl m;
      m.name = p.ident("a module name");
      p.keyword("point");
      Token at = p.peek();
      m.point = p.point(scalars);
      if (m.point.size() != vars->size()) p.fail("point needs " + std::to_string(vars->size()) + " coordinates", at);
      p.expect("{");
      std::vector<std::optional<Matrix>> mats(vars->size());
      std::size_t dim = 0;
      while (!p.is_punct("}")) {
        Token vt = p.peek();
        std::string v = p.ident("a variable name");
        auto idx = vars->index_of(v);
        if (!idx) p.fail("unknown variable '" + v + "'", vt);
        p.expect("=");
        Token mt = p.peek();
        Matrix mat = p.matrix(scalars);
        if (dim != 0 && mat.rows() != dim) p.fail("action matrices differ in size", mt);
        dim = mat.rows();
        mats[*idx] = std::move(mat);
        p.expect(";");
      }
      p.end_block();
      if (dim == 0) p.fail("module needs at least one action matrix", t);
      for (auto& mm : mats) m.actions.push_back(mm ? *mm : Matrix(dim, dim));
      modules.push_back(std::move(m));
    } else if (kw == "grading") {
      need_vars(t);
      Token at = p.peek();
      std::string g = p.ident("a variable name");
      if (!vars->index_of(g)) p.fail("unknown variable '" + g + "'", at);
      grading = g;
      p.expect(";");
    } else {
      p.fail("unknown statement '" + kw + "'", t);
    }
  }
  if (!vars) p.fail("missing 'vars'");
  if (!bracket) p.fail("missing 'bracket'");
  BracketSpec spec = build_bracket(*bracket, vars, p);
  auto semantic = [&](const Token& at, auto&& fn) {
    try {
      return fn();
    } catch (const DomainError& e) {
      throw ParseError(e.what(), at.line, at.col);
    }
  };
  PoissonPresentation pres = semantic(bracket->at, [&] { return PoissonPresentation(spec, relations); });
  PresentationFile file{pres, points, {}, {}, {}, grading};
  auto build = [&](const PendingMap& m) {
    std::vector<LaurentPoly> images;
    for (std::size_t i = 0; i < m.source->size(); ++i) {
      auto it = m.images.find(m.source->name(i));
      if (it != m.images.end()) {
        images.push_back(it->second);
      } else if (m.identity_default) {
        images.push_back(LaurentPoly::variable(vars, i));
      } else {
        throw ParseError("no image for '" + m.source->name(i) + "'", m.at.line, m.at.col);
      }
    }
    return semantic(m.at, [&] { return SubstitutionMap(m.source, vars, images); });
  };
  for (const auto& a : autos) file.autos.push_back({a.name, build(a)});
  for (const auto& e : embeds) file.embeds.push_back({e.name, build(e)});
  for (auto& m : modules) {
    semantic(p.peek(), [&] {
      m.point.validate(*vars);
      return 0;
    });
    file.modules.push_back(std::move(m));
  }
  return file;
}

PresentationFile load_presentation(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw DomainError("cannot read " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_presentation(ss.str());
}

namespace {

std::string var_decl(const VarSet& v) {
  std::string s;
  std::string laurent;
  for (std::size_t i = 0; i < v.size(); ++i) {
    s += (i ? ", " : "") + v.name(i);
    if (v.is_laurent(i)) laurent += (laurent.empty() ? "" : ", ") + v.name(i);
  }
  if (!laurent.empty()) s += " laurent(" + laurent + ")";
  return s;
}

std::string table_body(const BracketSpec& spec) {
  const auto& v = *spec.vars();
  std::string s = "{";
  for (std::size_t i = 0; i < v.size(); ++i) {
    for (std::size_t j = i + 1; j < v.size(); ++j) {
      const LaurentPoly& b = spec.generator_bracket(i, j);
      if (b.is_zero()) continue;
      s += " [" + v.name(i) + "," + v.name(j) + "] = " + b.str() + ";";
    }
  }
  return s + " }";
}

}  // namespace

std::string bracket_clause(const BracketSpec& spec) {
  switch (spec.kind()) {
    case BracketKind::Exact:
      return "exact f = " + spec.potential()->str();
    case BracketKind::Scaled:
      return "scaled a = " + spec.multiplier()->str() + "; f = " + spec.potential()->str();
    case BracketKind::Table:
      return "table " + table_body(spec);
    case BracketKind::KirillovKostant:
      return "kirillov-kostant " + table_body(spec);
  }
  return {};
}

std::string serialize(const PresentationFile& file) {
  const auto& pres = file.presentation;
  const auto& v = *pres.vars();
  std::ostringstream out;
  out << "vars " << var_decl(v) << ";\n";
  out << "bracket " << bracket_clause(pres.spec()) << ";\n";
  for (const auto& r : pres.relations()) out << "relation " << r.str() << ";\n";
  for (const auto& pt : file.points) out << "point " << pt.str() << ";\n";
  for (const auto& a : file.autos) {
    out << "auto " << a.name << " {";
    for (std::size_t i = 0; i < v.size(); ++i) out << " " << v.name(i) << " -> " << a.map.images()[i].str() << ";";
    out << " };\n";
  }
  for (const auto& e : file.embeds) {
    const auto& s = *e.map.source();
    out << "embed " << e.name << "(" << var_decl(s) << ") {";
    for (std::size_t i = 0; i < s.size(); ++i) out << " " << s.name(i) << " -> " << e.map.images()[i].str() << ";";
    out << " };\n";
  }
  for (const auto& m : file.modules) {
    out << "module " << m.name << " point " << m.point.str() << " {";
    for (std::size_t i = 0; i < v.size(); ++i) {
      const Matrix& a = m.actions[i];
      if (a.is_zero() && i + 1 < v.size()) continue;
      out << " " << v.name(i) << " = [";
      for (std::size_t r = 0; r < a.rows(); ++r) {
        out << (r ? ", [" : "[");
        for (std::size_t c = 0; c < a.cols(); ++c) out << (c ? ", " : "") << a(r, c).str();
        out << "]";
      }
      out << "];";
    }
    out << " };\n";
  }
  if (file.grading) out << "grading " << *file.grading << ";\n";
  return out.str();
}

}  // namespace patlas

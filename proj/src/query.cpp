#include "ontokg/query.hpp"

#include <algorithm>
#include <cctype>
#include <queue>
#include <set>
#include <unordered_map>
#include <unordered_set>

#include "ontokg/errors.hpp"

namespace ontokg {

namespace {

// ---------------------------------------------------------------- lexer ----

struct Token {
  enum class Kind { Var, Pname, IriRef, Integer, Symbol, Word, End };
  Kind kind = Kind::End;
  std::string text;
  std::size_t line = 1, col = 1;
};

const std::set<std::string> kUnsupportedKeywords = {
    "OPTIONAL", "UNION",  "MINUS",  "ORDER",   "LIMIT",  "OFFSET", "ASK",
    "CONSTRUCT", "DESCRIBE", "INSERT", "DELETE", "BIND",  "VALUES", "SERVICE",
    "GRAPH",    "FROM",   "EXISTS", "NOT",     "REGEX",  "A",      "LANG",
    "DATATYPE", "SAMPLE", "SUM",    "AVG",     "MIN",    "MAX",    "REDUCED"};

class Lexer {
 public:
  explicit Lexer(std::string_view text) : text_(text) {}

  std::vector<Token> run() {
    std::vector<Token> tokens;
    while (true) {
      skip_space_and_comments();
      if (pos_ >= text_.size()) break;
      tokens.push_back(next());
    }
    tokens.push_back({Token::Kind::End, "", line_, col_});
    return tokens;
  }

 private:
  void advance() {
    if (text_[pos_] == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    ++pos_;
  }

  void skip_space_and_comments() {
    while (pos_ < text_.size()) {
      const char c = text_[pos_];
      if (c == '#') {
        while (pos_ < text_.size() && text_[pos_] != '\n') advance();
      } else if (std::isspace(static_cast<unsigned char>(c))) {
        advance();
      } else {
        break;
      }
    }
  }

  static bool word_char(char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '-' || c == ':';
  }

  Token next() {
    const std::size_t line = line_, col = col_;
    const char c = text_[pos_];
    if (c == '?' || c == '$') {
      advance();
      std::string name;
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
        name += text_[pos_];
        advance();
      }
      if (name.empty()) throw QuerySyntaxError(line, col, "variable name after '?'");
      return {Token::Kind::Var, name, line, col};
    }
    if (c == '<') {
      advance();
      std::string iri;
      while (pos_ < text_.size() && text_[pos_] != '>') {
        iri += text_[pos_];
        advance();
      }
      if (pos_ >= text_.size()) throw QuerySyntaxError(line, col, "unterminated IRI");
      advance();
      return {Token::Kind::IriRef, iri, line, col};
    }
    if (c == '"' || c == '\'') throw UnsupportedFeatureError("string literal");
    if (c == '[' || c == ']') throw UnsupportedFeatureError("blank node");
    if (c == '^' || c == '@') throw UnsupportedFeatureError("literal annotation");
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::string digits;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
        digits += text_[pos_];
        advance();
      }
      return {Token::Kind::Integer, digits, line, col};
    }
    if (c == '>' || c == '<' || c == '=' || c == '!') {
      std::string op(1, c);
      advance();
      if (pos_ < text_.size() && text_[pos_] == '=') {
        op += '=';
        advance();
      }
      return {Token::Kind::Symbol, op, line, col};
    }
    if (c == '{' || c == '}' || c == '(' || c == ')' || c == '.' || c == ';' || c == ',' ||
        c == '*') {
      advance();
      return {Token::Kind::Symbol, std::string(1, c), line, col};
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::string word;
      while (pos_ < text_.size() && word_char(text_[pos_])) {
        word += text_[pos_];
        advance();
      }
      if (word.find(':') != std::string::npos) return {Token::Kind::Pname, word, line, col};
      return {Token::Kind::Word, word, line, col};
    }
    throw QuerySyntaxError(line, col, std::string("unexpected character '") + c + "'");
  }

  std::string_view text_;
  std::size_t pos_ = 0, line_ = 1, col_ = 1;
};

// --------------------------------------------------------------- parser ----

std::string upper(std::string s) {
  std::transform(s.begin(), s.end(), s.begin(),
                 [](unsigned char c) { return static_cast<char>(std::toupper(c)); });
  return s;
}

class Parser {
 public:
  explicit Parser(std::vector<Token> tokens) : tokens_(std::move(tokens)) {}

  QueryAst run() {
    while (is_keyword("PREFIX")) parse_prefix();
    expect_keyword("SELECT");
    parse_projection();
    expect_keyword("WHERE");
    expect_symbol("{");
    parse_group_graph_pattern();
    expect_symbol("}");
    if (is_keyword("GROUP")) {
      advance();
      expect_keyword("BY");
      while (peek().kind == Token::Kind::Var) {
        ast_.group_by.push_back(peek().text);
        advance();
      }
      if (ast_.group_by.empty()) throw syntax("variable after GROUP BY");
    }
    if (is_keyword("HAVING")) {
      advance();
      parse_having();
    }
    if (peek().kind == Token::Kind::Word && kUnsupportedKeywords.count(upper(peek().text)))
      throw UnsupportedFeatureError(peek().text);
    if (peek().kind != Token::Kind::End) throw syntax("end of query");
    validate();
    return std::move(ast_);
  }

 private:
  const Token& peek(std::size_t ahead = 0) const {
    return tokens_[std::min(pos_ + ahead, tokens_.size() - 1)];
  }
  void advance() { ++pos_; }

  QuerySyntaxError syntax(const std::string& expected) const {
    return QuerySyntaxError(peek().line, peek().col, "expected " + expected);
  }

  bool is_keyword(const std::string& kw) const {
    return peek().kind == Token::Kind::Word && upper(peek().text) == kw;
  }

  void expect_keyword(const std::string& kw) {
    if (!is_keyword(kw)) {
      if (peek().kind == Token::Kind::Word && kUnsupportedKeywords.count(upper(peek().text)))
        throw UnsupportedFeatureError(peek().text);
      throw syntax(kw);
    }
    advance();
  }

  void expect_symbol(const std::string& sym) {
    if (peek().kind != Token::Kind::Symbol || peek().text != sym) throw syntax("'" + sym + "'");
    advance();
  }

  bool at_symbol(const std::string& sym) const {
    return peek().kind == Token::Kind::Symbol && peek().text == sym;
  }

  void parse_prefix() {
    advance();  // PREFIX
    if (peek().kind != Token::Kind::Pname) throw syntax("prefix name ending in ':'");
    std::string pname = peek().text;
    if (pname.back() != ':') throw syntax("prefix name ending in ':'");
    pname.pop_back();
    advance();
    if (peek().kind != Token::Kind::IriRef) throw syntax("<iri> after prefix name");
    ast_.prefixes[pname] = peek().text;
    advance();
  }

  std::string resolve_pname(const Token& token) const {
    const std::size_t colon = token.text.find(':');
    const std::string prefix = token.text.substr(0, colon);
    const std::string local = token.text.substr(colon + 1);
    auto it = ast_.prefixes.find(prefix);
    if (it == ast_.prefixes.end()) throw UnknownPrefixError(prefix);
    return it->second + local;
  }

  void parse_projection() {
    while (true) {
      if (peek().kind == Token::Kind::Var) {
        ast_.projection.push_back({false, peek().text, ""});
        advance();
      } else if (at_symbol("(")) {
        advance();
        expect_keyword("COUNT");
        expect_symbol("(");
        expect_keyword("DISTINCT");
        if (peek().kind != Token::Kind::Var) throw syntax("variable in COUNT(DISTINCT ...)");
        std::string var = peek().text;
        advance();
        expect_symbol(")");
        expect_keyword("AS");
        if (peek().kind != Token::Kind::Var) throw syntax("alias variable after AS");
        ast_.projection.push_back({true, var, peek().text});
        advance();
        expect_symbol(")");
      } else if (at_symbol("*")) {
        throw UnsupportedFeatureError("SELECT *");
      } else {
        break;
      }
    }
    if (ast_.projection.empty()) throw syntax("projection variable");
  }

  PatternTerm parse_term() {
    if (peek().kind == Token::Kind::Var) {
      PatternTerm t{true, peek().text};
      advance();
      return t;
    }
    if (peek().kind == Token::Kind::Pname) {
      PatternTerm t{false, resolve_pname(peek())};
      advance();
      return t;
    }
    if (peek().kind == Token::Kind::IriRef)
      throw UnsupportedFeatureError("bare <iri> in pattern (declare a PREFIX)");
    if (peek().kind == Token::Kind::Word) {
      if (upper(peek().text) == "A") throw UnsupportedFeatureError("'a' keyword");
      if (kUnsupportedKeywords.count(upper(peek().text)))
        throw UnsupportedFeatureError(peek().text);
    }
    if (peek().kind == Token::Kind::Integer) throw UnsupportedFeatureError("numeric literal");
    throw syntax("variable or prefixed name");
  }

  void parse_group_graph_pattern() {
    while (!at_symbol("}")) {
      if (peek().kind == Token::Kind::End) throw syntax("'}'");
      if (is_keyword("FILTER")) {
        parse_filter();
        continue;
      }
      if (peek().kind == Token::Kind::Word && kUnsupportedKeywords.count(upper(peek().text)))
        throw UnsupportedFeatureError(peek().text);
      parse_triple();
    }
  }

  void parse_triple() {
    PatternTerm subject = parse_term();
    while (true) {
      PatternTerm predicate = parse_term();
      PatternTerm object = parse_term();
      ast_.patterns.push_back({subject, predicate, object});
      if (at_symbol(";")) {
        advance();
        continue;
      }
      break;
    }
    if (at_symbol(".")) advance();
  }

  void parse_filter() {
    advance();  // FILTER
    expect_symbol("(");
    expect_keyword("STRSTARTS");
    expect_symbol("(");
    expect_keyword("STR");
    expect_symbol("(");
    if (peek().kind != Token::Kind::Var) throw syntax("variable in STR(...)");
    std::string var = peek().text;
    advance();
    expect_symbol(")");
    expect_symbol(",");
    expect_keyword("STR");
    expect_symbol("(");
    if (peek().kind != Token::Kind::Pname) throw syntax("prefixed name in STR(...)");
    std::string prefix_iri = resolve_pname(peek());
    advance();
    expect_symbol(")");
    expect_symbol(")");
    expect_symbol(")");
    ast_.filters.push_back({std::move(var), std::move(prefix_iri)});
  }

  void parse_having() {
    expect_symbol("(");
    expect_keyword("COUNT");
    expect_symbol("(");
    expect_keyword("DISTINCT");
    if (peek().kind != Token::Kind::Var) throw syntax("variable in COUNT(DISTINCT ...)");
    HavingClause having;
    having.var = peek().text;
    advance();
    expect_symbol(")");
    if (peek().kind != Token::Kind::Symbol ||
        (peek().text != ">=" && peek().text != ">" && peek().text != "=" &&
         peek().text != "<=" && peek().text != "<" && peek().text != "!="))
      throw syntax("comparator in HAVING");
    having.cmp = peek().text;
    advance();
    if (peek().kind != Token::Kind::Integer) throw syntax("integer in HAVING");
    having.value = std::stoll(peek().text);
    advance();
    expect_symbol(")");
    ast_.having = std::move(having);
  }

  void validate() const {
    std::set<std::string> pattern_vars;
    for (const TriplePattern& p : ast_.patterns)
      for (const PatternTerm* t : {&p.subject, &p.predicate, &p.object})
        if (t->is_var) pattern_vars.insert(t->text);

    auto require = [&](const std::string& var, const char* where) {
      if (!pattern_vars.count(var))
        throw QuerySyntaxError(1, 1, std::string("variable ?") + var + " in " + where +
                                          " does not appear in any pattern");
    };
    bool has_aggregate = false;
    for (const ProjectionItem& item : ast_.projection) {
      require(item.var, item.is_aggregate ? "COUNT" : "SELECT");
      has_aggregate = has_aggregate || item.is_aggregate;
    }
    for (const PrefixFilter& f : ast_.filters) require(f.var, "FILTER");
    for (const std::string& v : ast_.group_by) require(v, "GROUP BY");
    if (ast_.having) {
      require(ast_.having->var, "HAVING");
      if (ast_.group_by.empty() && !has_aggregate)
        throw QuerySyntaxError(1, 1, "HAVING requires GROUP BY or an aggregate");
    }
    if (!ast_.group_by.empty() || has_aggregate) {
      std::set<std::string> keys(ast_.group_by.begin(), ast_.group_by.end());
      for (const ProjectionItem& item : ast_.projection)
        if (!item.is_aggregate && !keys.count(item.var))
          throw QuerySyntaxError(1, 1, "projected variable ?" + item.var +
                                           " must appear in GROUP BY under aggregation");
    }
  }

  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
  QueryAst ast_;
};

// ------------------------------------------------------------ evaluator ----

constexpr std::size_t kNoVar = static_cast<std::size_t>(-1);

struct CompiledTerm {
  bool is_var = false;
  std::size_t var = kNoVar;
  TermId term = kNoTerm;
  bool unknown_iri = false;  // fixed IRI absent from the graph: matches nothing
};

struct CompiledPattern {
  CompiledTerm s, p, o;
  bool subclass = false;  // fixed predicate == rdfs:subClassOf
};

bool subclass_incident(const KnowledgeGraph& kg, TermId term) {
  const TermId subclass_of = kg.registry().subclass_of();
  for (std::uint32_t i : kg.edges_by_subject(term))
    if (kg.edges()[i].relation == subclass_of) return true;
  for (std::uint32_t i : kg.edges_by_object(term))
    if (kg.edges()[i].relation == subclass_of) return true;
  return false;
}

// Reflexive-transitive reach over stored subclass edges, upward (child to
// ancestors) or downward. Reflexivity applies to hierarchy-incident terms
// only, which keeps the match set independent of pattern evaluation order.
std::vector<TermId> subclass_reach(const KnowledgeGraph& kg, TermId start, bool up) {
  const TermId subclass_of = kg.registry().subclass_of();
  std::vector<TermId> out;
  if (!subclass_incident(kg, start)) return out;
  std::unordered_set<TermId> seen;
  std::queue<TermId> queue;
  seen.insert(start);
  queue.push(start);
  while (!queue.empty()) {
    const TermId v = queue.front();
    queue.pop();
    out.push_back(v);
    const auto idxs = up ? kg.edges_by_subject(v) : kg.edges_by_object(v);
    for (std::uint32_t i : idxs) {
      const EdgeRecord& e = kg.edges()[i];
      if (e.relation != subclass_of) continue;
      const TermId next = up ? e.object : e.subject;
      if (seen.insert(next).second) queue.push(next);
    }
  }
  return out;
}

class Evaluator {
 public:
  Evaluator(const KnowledgeGraph& kg, const QueryAst& ast, const EvalOptions& options)
      : kg_(kg), ast_(ast), options_(options) {}

  SolutionTable run() {
    index_variables();
    compile_patterns();
    std::vector<std::vector<TermId>> solutions;
    solutions.emplace_back(var_names_.size(), kNoTerm);
    std::vector<bool> done(patterns_.size(), false);
    std::vector<bool> bound(var_names_.size(), false);
    for (std::size_t step = 0; step < patterns_.size(); ++step) {
      const std::size_t next = pick_next(done, bound);
      done[next] = true;
      solutions = extend(solutions, patterns_[next]);
      for (const CompiledTerm* t : {&patterns_[next].s, &patterns_[next].p, &patterns_[next].o})
        if (t->is_var) bound[t->var] = true;
      if (solutions.empty()) break;
    }
    return project(solutions);
  }

 private:
  void index_variables() {
    auto note = [&](const PatternTerm& t) {
      if (t.is_var && !var_index_.count(t.text)) {
        var_index_[t.text] = var_names_.size();
        var_names_.push_back(t.text);
      }
    };
    for (const TriplePattern& p : ast_.patterns) {
      note(p.subject);
      note(p.predicate);
      note(p.object);
    }
  }

  CompiledTerm compile_term(const PatternTerm& t) {
    CompiledTerm c;
    c.is_var = t.is_var;
    if (t.is_var) {
      c.var = var_index_.at(t.text);
    } else {
      c.term = kg_.interner().find(t.text);
      c.unknown_iri = c.term == kNoTerm;
    }
    return c;
  }

  void compile_patterns() {
    const TermId subclass_of = kg_.registry().subclass_of();
    for (const TriplePattern& p : ast_.patterns) {
      CompiledPattern cp{compile_term(p.subject), compile_term(p.predicate),
                         compile_term(p.object)};
      cp.subclass = !cp.p.is_var && cp.p.term == subclass_of;
      patterns_.push_back(cp);
    }
    for (const PrefixFilter& f : ast_.filters)
      filter_of_var_.emplace(var_index_.at(f.var), f.iri_prefix);
  }

  std::size_t estimate(const CompiledPattern& p, const std::vector<bool>& bound) const {
    auto known = [&](const CompiledTerm& t) { return !t.is_var || bound[t.var]; };
    if (p.s.unknown_iri || p.p.unknown_iri || p.o.unknown_iri) return 0;
    std::size_t best = kg_.edge_count() + 1;
    if (!p.s.is_var) best = std::min(best, kg_.edges_by_subject(p.s.term).size());
    if (!p.o.is_var) best = std::min(best, kg_.edges_by_object(p.o.term).size());
    if (!p.p.is_var) best = std::min(best, kg_.edges_by_relation(p.p.term).size());
    if (known(p.s) || known(p.o)) best = std::min<std::size_t>(best, 8);
    return best;
  }

  std::size_t pick_next(const std::vector<bool>& done, const std::vector<bool>& bound) const {
    std::size_t best = kNoVar, best_cost = 0;
    for (std::size_t i = 0; i < patterns_.size(); ++i) {
      if (done[i]) continue;
      const std::size_t cost = estimate(patterns_[i], bound);
      if (best == kNoVar || cost < best_cost) {
        best = i;
        best_cost = cost;
      }
    }
    return best;
  }

  bool filter_ok(std::size_t var, TermId value) const {
    auto [lo, hi] = filter_of_var_.equal_range(var);
    for (auto it = lo; it != hi; ++it)
      if (!kg_.interner().iri(value).starts_with(it->second)) return false;
    return true;
  }

  // Binds `term` of the pattern against a concrete id; returns false on clash.
  static bool unify(const CompiledTerm& t, TermId value, std::vector<TermId>& binding) {
    if (!t.is_var) return t.term == value;
    if (binding[t.var] == kNoTerm) {
      binding[t.var] = value;
      return true;
    }
    return binding[t.var] == value;
  }

  void emit_match(const std::vector<TermId>& base, const CompiledPattern& p, TermId s, TermId pr,
                  TermId o, std::vector<std::vector<TermId>>& out) const {
    std::vector<TermId> binding = base;
    if (!unify(p.s, s, binding) || !unify(p.p, pr, binding) || !unify(p.o, o, binding)) return;
    for (const CompiledTerm* t : {&p.s, &p.p, &p.o}) {
      if (t->is_var && base[t->var] == kNoTerm && !filter_ok(t->var, binding[t->var])) return;
    }
    out.push_back(std::move(binding));
  }

  std::vector<std::vector<TermId>> extend(const std::vector<std::vector<TermId>>& solutions,
                                          const CompiledPattern& p) const {
    std::vector<std::vector<TermId>> out;
    if (p.s.unknown_iri || p.p.unknown_iri || p.o.unknown_iri) return out;
    for (const std::vector<TermId>& base : solutions) {
      auto value_of = [&](const CompiledTerm& t) {
        return t.is_var ? base[t.var] : t.term;
      };
      const TermId s = value_of(p.s);
      const TermId pr = value_of(p.p);
      const TermId o = value_of(p.o);

      if (p.subclass && options_.transitive_subclass) {
        if (s != kNoTerm) {
          for (TermId anc : subclass_reach(kg_, s, true)) emit_match(base, p, s, pr, anc, out);
        } else if (o != kNoTerm) {
          for (TermId desc : subclass_reach(kg_, o, false)) emit_match(base, p, desc, pr, o, out);
        } else {
          // Both ends free: enumerate over nodes incident to the hierarchy.
          std::set<TermId> incident;
          for (std::uint32_t i : kg_.edges_by_relation(pr)) {
            incident.insert(kg_.edges()[i].subject);
            incident.insert(kg_.edges()[i].object);
          }
          for (TermId x : incident)
            for (TermId anc : subclass_reach(kg_, x, true)) emit_match(base, p, x, pr, anc, out);
        }
        continue;
      }

      // Pick the smallest applicable index.
      std::span<const std::uint32_t> candidates;
      bool chosen = false;
      auto consider = [&](std::span<const std::uint32_t> idx) {
        if (!chosen || idx.size() < candidates.size()) {
          candidates = idx;
          chosen = true;
        }
      };
      if (s != kNoTerm) consider(kg_.edges_by_subject(s));
      if (o != kNoTerm) consider(kg_.edges_by_object(o));
      if (pr != kNoTerm) consider(kg_.edges_by_relation(pr));
      if (chosen) {
        for (std::uint32_t i : candidates) {
          const EdgeRecord& e = kg_.edges()[i];
          emit_match(base, p, e.subject, e.relation, e.object, out);
        }
      } else {
        for (const EdgeRecord& e : kg_.edges())
          emit_match(base, p, e.subject, e.relation, e.object, out);
      }
    }
    return out;
  }

  SolutionTable project(const std::vector<std::vector<TermId>>& solutions) const {
    SolutionTable table;
    for (const ProjectionItem& item : ast_.projection)
      table.columns.push_back(item.is_aggregate ? item.alias : item.var);

    bool has_aggregate = false;
    for (const ProjectionItem& item : ast_.projection) has_aggregate |= item.is_aggregate;

    if (ast_.group_by.empty() && !has_aggregate && !ast_.having) {
      for (const std::vector<TermId>& sol : solutions) {
        std::vector<SolutionValue> row;
        for (const ProjectionItem& item : ast_.projection)
          row.push_back({false, sol[var_index_.at(item.var)], 0});
        table.rows.push_back(std::move(row));
      }
    } else {
      std::map<std::vector<TermId>, std::vector<const std::vector<TermId>*>> groups;
      for (const std::vector<TermId>& sol : solutions) {
        std::vector<TermId> key;
        for (const std::string& var : ast_.group_by) key.push_back(sol[var_index_.at(var)]);
        groups[key].push_back(&sol);
      }
      for (const auto& [key, members] : groups) {
        auto distinct_count = [&](const std::string& var) {
          std::set<TermId> seen;
          for (const auto* sol : members) seen.insert((*sol)[var_index_.at(var)]);
          return static_cast<long long>(seen.size());
        };
        if (ast_.having) {
          const long long count = distinct_count(ast_.having->var);
          const long long v = ast_.having->value;
          const std::string& cmp = ast_.having->cmp;
          bool pass = cmp == ">=" ? count >= v
                      : cmp == ">" ? count > v
                      : cmp == "="  ? count == v
                      : cmp == "<=" ? count <= v
                      : cmp == "<"  ? count < v
                                    : count != v;
          if (!pass) continue;
        }
        std::vector<SolutionValue> row;
        for (const ProjectionItem& item : ast_.projection) {
          if (item.is_aggregate) {
            row.push_back({true, kNoTerm, distinct_count(item.var)});
          } else {
            auto pos = std::find(ast_.group_by.begin(), ast_.group_by.end(), item.var);
            row.push_back({false, key[pos - ast_.group_by.begin()], 0});
          }
        }
        table.rows.push_back(std::move(row));
      }
    }

    std::sort(table.rows.begin(), table.rows.end(),
              [](const std::vector<SolutionValue>& a, const std::vector<SolutionValue>& b) {
                for (std::size_t i = 0; i < a.size(); ++i) {
                  if (a[i].is_count != b[i].is_count) return b[i].is_count;
                  if (a[i].is_count) {
                    if (a[i].count != b[i].count) return a[i].count < b[i].count;
                  } else if (a[i].term != b[i].term) {
                    return a[i].term < b[i].term;
                  }
                }
                return false;
              });
    return table;
  }

  const KnowledgeGraph& kg_;
  const QueryAst& ast_;
  EvalOptions options_;
  std::vector<std::string> var_names_;
  std::map<std::string, std::size_t> var_index_;
  std::vector<CompiledPattern> patterns_;
  std::multimap<std::size_t, std::string> filter_of_var_;
};

}  // namespace

QueryAst parse_query(std::string_view text) {
  Lexer lexer(text);
  Parser parser(lexer.run());
  return parser.run();
}

SolutionTable evaluate(const KnowledgeGraph& kg, const QueryAst& ast, const EvalOptions& options) {
  return Evaluator(kg, ast, options).run();
}

}  // namespace ontokg

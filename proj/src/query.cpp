#include "topicsig/query.hpp"

#include <algorithm>

#include "topicsig/errors.hpp"
#include "topicsig/text.hpp"

namespace topicsig {

QueryNodePtr QueryNode::phrase(std::vector<std::string> words) {
  if (words.empty()) throw error("phrase node needs at least one word");
  auto n = std::make_shared<QueryNode>();
  n->kind = Kind::phrase;
  n->words = std::move(words);
  return n;
}

QueryNodePtr QueryNode::phrase_of(std::string_view text) {
  return phrase(split_words(text));
}

QueryNodePtr QueryNode::and_of(std::vector<QueryNodePtr> children) {
  auto n = std::make_shared<QueryNode>();
  n->kind = Kind::and_;
  n->children = std::move(children);
  return n;
}

QueryNodePtr QueryNode::or_of(std::vector<QueryNodePtr> children) {
  if (children.empty()) throw error("or node needs at least one child");
  auto n = std::make_shared<QueryNode>();
  n->kind = Kind::or_;
  n->children = std::move(children);
  return n;
}

QueryNodePtr QueryNode::not_of(QueryNodePtr child) {
  auto n = std::make_shared<QueryNode>();
  n->kind = Kind::not_;
  n->children = {std::move(child)};
  return n;
}

bool query_tree_equal(const QueryNodePtr& a, const QueryNodePtr& b) {
  if (!a || !b) return a == b;
  if (a->kind != b->kind || a->words != b->words ||
      a->children.size() != b->children.size())
    return false;
  for (std::size_t i = 0; i < a->children.size(); ++i)
    if (!query_tree_equal(a->children[i], b->children[i])) return false;
  return true;
}

BooleanQuery build_query(const CuewordMap& map, const SenseId& target) {
  auto it = map.per_sense.find(target);
  if (it == map.per_sense.end())
    throw lookup_error("target sense not in cueword map: " + target.str());
  if (it->second.empty())
    throw config_error("no cuewords left for " + target.str() +
                       "; query is unbuildable");

  auto or_of_phrases = [](const std::set<std::string>& phrases) {
    std::vector<QueryNodePtr> kids;
    kids.reserve(phrases.size());
    for (const std::string& p : phrases)  // std::set is already sorted
      kids.push_back(QueryNode::phrase_of(p));
    return QueryNode::or_of(std::move(kids));
  };

  std::vector<QueryNodePtr> arms;
  arms.push_back(QueryNode::phrase_of(map.lemma));
  arms.push_back(or_of_phrases(it->second));

  std::set<std::string> negatives;
  for (const auto& [id, cues] : map.per_sense)
    if (id != target) negatives.insert(cues.begin(), cues.end());
  if (!negatives.empty())
    arms.push_back(QueryNode::not_of(or_of_phrases(negatives)));

  BooleanQuery q;
  q.root = QueryNode::and_of(std::move(arms));
  q.target = target;
  return q;
}

namespace {

std::string render_phrase(const QueryNode& n) {
  if (n.words.size() == 1 && n.words[0].front() != '\'') return n.words[0];
  std::string out = "'";
  for (std::size_t i = 0; i < n.words.size(); ++i) {
    if (i) out += ' ';
    out += n.words[i];
  }
  out += '\'';
  return out;
}

std::string render_node(const QueryNode& n);

std::string render_operand(const QueryNode& n) {
  if (n.kind == QueryNode::Kind::phrase) return render_phrase(n);
  return render_node(n);
}

std::string render_node(const QueryNode& n) {
  switch (n.kind) {
    case QueryNode::Kind::phrase:
      return render_phrase(n);
    case QueryNode::Kind::or_: {
      std::string out = "(";
      for (std::size_t i = 0; i < n.children.size(); ++i) {
        if (i) out += " OR ";
        out += render_operand(*n.children[i]);
      }
      return out + ")";
    }
    case QueryNode::Kind::and_: {
      std::string out = "(";
      for (std::size_t i = 0; i < n.children.size(); ++i) {
        if (i) out += " AND ";
        const QueryNode& c = *n.children[i];
        if (c.kind == QueryNode::Kind::not_)
          out += "NOT " + render_operand(*c.children[0]);
        else
          out += render_operand(c);
      }
      return out + ")";
    }
    case QueryNode::Kind::not_:
      return "(NOT " + render_operand(*n.children[0]) + ")";
  }
  throw error("unreachable query node kind");
}

// --- parser (grammar is exactly the render grammar) ---

struct Token {
  enum class Kind { lparen, rparen, word, phrase, kw_and, kw_or, kw_not, end };
  Kind kind;
  std::string text;
};

class Lexer {
 public:
  explicit Lexer(std::string_view s) : s_(s) {}

  Token next() {
    while (pos_ < s_.size() && s_[pos_] == ' ') ++pos_;
    if (pos_ >= s_.size()) return {Token::Kind::end, ""};
    char c = s_[pos_];
    if (c == '(') { ++pos_; return {Token::Kind::lparen, "("}; }
    if (c == ')') { ++pos_; return {Token::Kind::rparen, ")"}; }
    if (c == '\'') return quoted_phrase();
    std::size_t j = pos_;
    while (j < s_.size() && s_[j] != ' ' && s_[j] != '(' && s_[j] != ')') ++j;
    std::string w(s_.substr(pos_, j - pos_));
    pos_ = j;
    if (w == "AND") return {Token::Kind::kw_and, w};
    if (w == "OR") return {Token::Kind::kw_or, w};
    if (w == "NOT") return {Token::Kind::kw_not, w};
    return {Token::Kind::word, w};
  }

 private:
  // A quote closes the phrase only at a token boundary (before space, ')'
  // or end of input), so apostrophes inside words survive unescaped.
  Token quoted_phrase() {
    std::size_t j = pos_ + 1;
    while (j < s_.size()) {
      if (s_[j] == '\'' &&
          (j + 1 == s_.size() || s_[j + 1] == ' ' || s_[j + 1] == ')'))
        break;
      ++j;
    }
    if (j >= s_.size())
      throw format_error("unterminated quoted phrase in query");
    std::string body(s_.substr(pos_ + 1, j - pos_ - 1));
    pos_ = j + 1;
    return {Token::Kind::phrase, body};
  }

  std::string_view s_;
  std::size_t pos_ = 0;
};

class Parser {
 public:
  explicit Parser(std::string_view s) : lex_(s) { advance(); }

  QueryNodePtr parse() {
    QueryNodePtr q = parse_item();
    expect(Token::Kind::end, "trailing input after query");
    return q;
  }

 private:
  void advance() { tok_ = lex_.next(); }

  void expect(Token::Kind k, const char* what) {
    if (tok_.kind != k) throw format_error(std::string("query parse: ") + what);
    // no advance for 'end'
    if (k != Token::Kind::end) advance();
  }

  QueryNodePtr parse_item() {
    if (tok_.kind == Token::Kind::word) {
      auto n = QueryNode::phrase({tok_.text});
      advance();
      return n;
    }
    if (tok_.kind == Token::Kind::phrase) {
      auto words = split_words(tok_.text);
      if (words.empty()) throw format_error("query parse: empty phrase");
      auto n = QueryNode::phrase(std::move(words));
      advance();
      return n;
    }
    if (tok_.kind == Token::Kind::lparen) {
      advance();
      QueryNodePtr e = parse_expr();
      expect(Token::Kind::rparen, "expected ')'");
      return e;
    }
    throw format_error("query parse: expected word, phrase or '('");
  }

  QueryNodePtr parse_expr() {
    bool first_not = tok_.kind == Token::Kind::kw_not;
    if (first_not) advance();
    QueryNodePtr first = parse_item();

    if (tok_.kind == Token::Kind::rparen || tok_.kind == Token::Kind::end) {
      // A lone parenthesized item reads back as a one-child Or; a lone
      // NOT item reads back as a Not node.
      if (first_not) return QueryNode::not_of(first);
      return QueryNode::or_of({first});
    }

    if (tok_.kind == Token::Kind::kw_or) {
      if (first_not)
        throw format_error("query parse: NOT is not allowed in an OR list");
      std::vector<QueryNodePtr> kids{first};
      while (tok_.kind == Token::Kind::kw_or) {
        advance();
        kids.push_back(parse_item());
      }
      return QueryNode::or_of(std::move(kids));
    }

    if (tok_.kind == Token::Kind::kw_and) {
      std::vector<QueryNodePtr> kids;
      kids.push_back(first_not ? QueryNode::not_of(first) : first);
      while (tok_.kind == Token::Kind::kw_and) {
        advance();
        bool neg = tok_.kind == Token::Kind::kw_not;
        if (neg) advance();
        QueryNodePtr item = parse_item();
        kids.push_back(neg ? QueryNode::not_of(item) : item);
      }
      return QueryNode::and_of(std::move(kids));
    }

    throw format_error("query parse: expected AND, OR or ')'");
  }

  Lexer lex_;
  Token tok_{Token::Kind::end, ""};
};

bool eval_node(const QueryNode& n,
               const std::vector<std::string>& lower_tokens) {
  switch (n.kind) {
    case QueryNode::Kind::phrase: {
      const std::size_t m = n.words.size();
      if (m > lower_tokens.size()) return false;
      std::vector<std::string> lw;
      lw.reserve(m);
      for (const std::string& w : n.words) lw.push_back(ascii_lower(w));
      for (std::size_t i = 0; i + m <= lower_tokens.size(); ++i) {
        bool hit = true;
        for (std::size_t k = 0; k < m; ++k)
          if (lower_tokens[i + k] != lw[k]) { hit = false; break; }
        if (hit) return true;
      }
      return false;
    }
    case QueryNode::Kind::and_:
      for (const auto& c : n.children)
        if (!eval_node(*c, lower_tokens)) return false;
      return true;
    case QueryNode::Kind::or_:
      for (const auto& c : n.children)
        if (eval_node(*c, lower_tokens)) return true;
      return false;
    case QueryNode::Kind::not_:
      return !eval_node(*n.children[0], lower_tokens);
  }
  return false;
}

}  // namespace

std::string render_query(const BooleanQuery& q) {
  if (!q.root) throw error("cannot render empty query");
  return render_node(*q.root);
}

BooleanQuery parse_query(std::string_view text) {
  BooleanQuery q;
  q.root = Parser(text).parse();
  return q;
}

bool eval_query(const BooleanQuery& q,
                std::span<const std::string> doc_tokens) {
  if (!q.root) throw error("cannot evaluate empty query");
  std::vector<std::string> lower;
  lower.reserve(doc_tokens.size());
  for (const std::string& t : doc_tokens) lower.push_back(ascii_lower(t));
  return eval_node(*q.root, lower);
}

}  // namespace topicsig

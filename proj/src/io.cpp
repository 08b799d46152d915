#include "eqc/io.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>

namespace eqc {

ParseError::ParseError(std::size_t line, std::size_t column, const std::string& message,
                       const std::string& source)
    : std::runtime_error((source.empty() ? "" : source + ":") + "line " + std::to_string(line) + ", column " +
                         std::to_string(column) + ": " + message),
      line_(line),
      column_(column),
      message_(message) {}

namespace {

struct Token {
  std::string text;
  std::size_t column;  // 1-based
};

struct Line {
  std::size_t number;  // 1-based
  std::vector<Token> tokens;
};

std::vector<Line> tokenize(std::string_view text) {
  std::vector<Line> lines;
  std::size_t number = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view raw = text.substr(pos, end - pos);
    ++number;
    if (auto hash = raw.find('#'); hash != std::string_view::npos) raw = raw.substr(0, hash);
    Line line{number, {}};
    std::size_t i = 0;
    while (i < raw.size()) {
      while (i < raw.size() && std::isspace(static_cast<unsigned char>(raw[i]))) ++i;
      std::size_t start = i;
      while (i < raw.size() && !std::isspace(static_cast<unsigned char>(raw[i]))) ++i;
      if (i > start) line.tokens.push_back(Token{std::string(raw.substr(start, i - start)), start + 1});
    }
    if (!line.tokens.empty()) lines.push_back(std::move(line));
    if (end == text.size()) break;
    pos = end + 1;
  }
  return lines;
}

Rational number(const Token& t, std::size_t line) {
  try {
    return Rational::parse(t.text);
  } catch (const std::exception&) {
    throw ParseError(line, t.column, "malformed number '" + t.text + "'");
  }
}

class Parser {
 public:
  explicit Parser(std::string_view text) : lines_(tokenize(text)) {}

  GameFile run() {
    GameFile f;
    std::optional<std::size_t> m, n;
    std::map<std::string, std::size_t> seen;  // key -> line
    bool header = false;
    std::size_t header_line = 0;

    auto require_dims = [&](const Line& l) {
      if (!m || !n) throw ParseError(l.number, 1, "payoff block before 'rows:' and 'cols:'");
    };

    while (at_ < lines_.size()) {
      const Line& l = lines_[at_++];
      const Token& head = l.tokens.front();
      if (head.text.back() != ':')
        throw ParseError(l.number, head.column, "expected a 'key:' line, found '" + head.text + "'");
      const std::string key = head.text.substr(0, head.text.size() - 1);
      if (key != "removed") {
        if (auto it = seen.find(key); it != seen.end())
          throw ParseError(l.number, head.column,
                           "duplicate block '" + key + "' (first at line " + std::to_string(it->second) + ")");
        seen[key] = l.number;
      }

      if (key == "game" || key == "costed") {
        if (header) throw ParseError(l.number, head.column, "second game header");
        header = true;
        header_line = l.number;
        f.kind = key == "game" ? GameKind::Normal : GameKind::Costed;
        f.name = rest_of_line(l);
        if (f.name.empty()) throw ParseError(l.number, head.column, "missing game name");
      } else if (key == "rows" || key == "cols") {
        auto labels = labels_of(l);
        (key == "rows" ? m : n) = labels.size();
        (key == "rows" ? f.row_actions : f.col_actions) = std::move(labels);
      } else if (key == "u1" || key == "u2" || key == "base1" || key == "base2") {
        check_kind(l, f, key.starts_with("u") ? GameKind::Normal : GameKind::Costed, header);
        require_dims(l);
        Matrix mat = matrix_block(l, *m, *n);
        (key.back() == '1' ? f.u1 : f.u2) = std::move(mat);
      } else if (key == "cost1" || key == "cost2") {
        check_kind(l, f, GameKind::Costed, header);
        require_dims(l);
        const std::size_t want = key == "cost1" ? *m : *n;
        if (l.tokens.size() - 1 != want)
          throw ParseError(l.number, l.tokens.size() > 1 ? l.tokens[1].column : head.column,
                           key + " has " + std::to_string(l.tokens.size() - 1) + " entries, expected " +
                               std::to_string(want));
        std::vector<Rational> v;
        for (std::size_t i = 1; i < l.tokens.size(); ++i) v.push_back(number(l.tokens[i], l.number));
        (key == "cost1" ? f.cost1 : f.cost2) = std::move(v);
      } else if (key == "removed") {
        check_kind(l, f, GameKind::Normal, header);
        if (l.tokens.size() < 3) throw ParseError(l.number, head.column, "expected 'removed: PLAYER LABEL ...'");
        std::string p = l.tokens[1].text;
        if (p == "P1" || p == "p1") p = "1";
        if (p == "P2" || p == "p2") p = "2";
        if (p != "1" && p != "2") throw ParseError(l.number, l.tokens[1].column, "player must be 1 or 2");
        for (std::size_t i = 2; i < l.tokens.size(); ++i)
          (p == "1" ? f.removed_rows : f.removed_cols).push_back(l.tokens[i].text);
        removed_lines_.push_back(&l);
      } else {
        throw ParseError(l.number, head.column, "unknown key '" + key + "'");
      }
    }

    if (!header) throw ParseError(lines_.empty() ? 1 : lines_.front().number, 1, "missing 'game:' or 'costed:' header");
    const bool costed = f.kind == GameKind::Costed;
    for (const char* key : costed ? std::vector<const char*>{"rows", "cols", "base1", "base2", "cost1", "cost2"}
                                  : std::vector<const char*>{"rows", "cols", "u1", "u2"})
      if (!seen.count(key)) throw ParseError(header_line, 1, std::string("missing block '") + key + ":'");

    validate_removed(f);
    if (costed) {
      try {
        (void)f.costed();
      } catch (const NotConstantSum& e) {
        throw ParseError(seen["base1"], 1, e.what());
      }
    }
    return f;
  }

 private:
  static std::string rest_of_line(const Line& l) {
    std::string s;
    for (std::size_t i = 1; i < l.tokens.size(); ++i) {
      if (i > 1) s += ' ';
      s += l.tokens[i].text;
    }
    return s;
  }

  static std::vector<std::string> labels_of(const Line& l) {
    if (l.tokens.size() < 2) throw ParseError(l.number, l.tokens[0].column, "at least one action label required");
    std::vector<std::string> labels;
    for (std::size_t i = 1; i < l.tokens.size(); ++i) {
      if (std::find(labels.begin(), labels.end(), l.tokens[i].text) != labels.end())
        throw ParseError(l.number, l.tokens[i].column, "duplicate action label '" + l.tokens[i].text + "'");
      labels.push_back(l.tokens[i].text);
    }
    return labels;
  }

  static void check_kind(const Line& l, const GameFile& f, GameKind want, bool header) {
    if (!header) throw ParseError(l.number, 1, "block before the 'game:'/'costed:' header");
    if (f.kind != want)
      throw ParseError(l.number, 1,
                       "block '" + l.tokens[0].text + "' not allowed in a " +
                           (f.kind == GameKind::Normal ? "normal" : "costed") + " game file");
  }

  Matrix matrix_block(const Line& key_line, std::size_t m, std::size_t n) {
    if (key_line.tokens.size() > 1)
      throw ParseError(key_line.number, key_line.tokens[1].column, "matrix rows start on the next line");
    Matrix mat(m, n);
    for (std::size_t r = 0; r < m; ++r) {
      if (at_ >= lines_.size() || lines_[at_].tokens.front().text.back() == ':')
        throw ParseError(at_ < lines_.size() ? lines_[at_].number : key_line.number, 1,
                         "block '" + key_line.tokens[0].text + "' has " + std::to_string(r) +
                             " rows, expected " + std::to_string(m));
      const Line& l = lines_[at_++];
      if (l.tokens.size() != n)
        throw ParseError(l.number, l.tokens.size() > n ? l.tokens[n].column : l.tokens.back().column,
                         "row has " + std::to_string(l.tokens.size()) + " entries, expected " + std::to_string(n));
      for (std::size_t c = 0; c < n; ++c) mat(r, c) = number(l.tokens[c], l.number);
    }
    return mat;
  }

  void validate_removed(const GameFile& f) const {
    for (const Line* l : removed_lines_) {
      const auto& labels = l->tokens[1].text.back() == '1' ? f.row_actions : f.col_actions;
      for (std::size_t i = 2; i < l->tokens.size(); ++i)
        if (std::find(labels.begin(), labels.end(), l->tokens[i].text) == labels.end())
          throw ParseError(l->number, l->tokens[i].column, "unknown action '" + l->tokens[i].text + "'");
    }
    if (f.removed_rows.size() >= f.row_actions.size() && !f.row_actions.empty() && !f.removed_rows.empty())
      throw ParseError(removed_lines_.front()->number, 1, "every row action removed");
    if (f.removed_cols.size() >= f.col_actions.size() && !f.col_actions.empty() && !f.removed_cols.empty())
      throw ParseError(removed_lines_.front()->number, 1, "every column action removed");
  }

  std::vector<Line> lines_;
  std::size_t at_ = 0;
  std::vector<const Line*> removed_lines_;
};

void write_labels(std::ostringstream& os, const char* key, const std::vector<std::string>& labels) {
  os << key << ':';
  for (const auto& l : labels) os << ' ' << l;
  os << '\n';
}

void write_matrix(std::ostringstream& os, const char* key, const Matrix& m) {
  os << key << ":\n";
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) os << (c ? " " : "") << m(r, c).str();
    os << '\n';
  }
}

void write_vector(std::ostringstream& os, const char* key, const std::vector<Rational>& v) {
  os << key << ':';
  for (const auto& x : v) os << ' ' << x.str();
  os << '\n';
}

}  // namespace

BimatrixGame GameFile::game() const {
  if (kind == GameKind::Costed) return realize(costed());
  std::vector<std::size_t> rows, cols;
  for (std::size_t r = 0; r < row_actions.size(); ++r)
    if (std::find(removed_rows.begin(), removed_rows.end(), row_actions[r]) == removed_rows.end()) rows.push_back(r);
  for (std::size_t c = 0; c < col_actions.size(); ++c)
    if (std::find(removed_cols.begin(), removed_cols.end(), col_actions[c]) == removed_cols.end()) cols.push_back(c);
  return BimatrixGame(name, row_actions, col_actions, u1, u2).restricted(rows, cols);
}

CostedGame GameFile::costed() const {
  if (kind != GameKind::Costed) throw std::invalid_argument("'" + name + "' is not a costed game file");
  return CostedGame(BimatrixGame(name, row_actions, col_actions, u1, u2), cost1, cost2);
}

GameFile parse_game_file(std::string_view text) { return Parser(text).run(); }

GameFile load_game_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open '" + path.string() + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  try {
    return parse_game_file(ss.str());
  } catch (const ParseError& e) {
    throw ParseError(e.line(), e.column(), e.message(), path.string());
  }
}

std::string serialize_game(const BimatrixGame& game) {
  std::ostringstream os;
  os << "game: " << game.name() << '\n';
  write_labels(os, "rows", game.row_actions());
  write_labels(os, "cols", game.col_actions());
  write_matrix(os, "u1", game.u1());
  write_matrix(os, "u2", game.u2());
  return os.str();
}

std::string serialize_game(const CostedGame& game) {
  std::ostringstream os;
  os << "costed: " << game.base().name() << '\n';
  write_labels(os, "rows", game.base().row_actions());
  write_labels(os, "cols", game.base().col_actions());
  write_matrix(os, "base1", game.base().u1());
  write_matrix(os, "base2", game.base().u2());
  write_vector(os, "cost1", game.cost1());
  write_vector(os, "cost2", game.cost2());
  return os.str();
}

}  // namespace eqc

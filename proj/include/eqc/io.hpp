#pragma once

#include <filesystem>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "eqc/game.hpp"
#include "eqc/perturbation.hpp"

namespace eqc {

/// Parse failure with 1-based source position.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, std::size_t column, const std::string& message,
             const std::string& source = "");
  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }
  /// The message without the position prefix.
  const std::string& message() const { return message_; }

 private:
  std::size_t line_;
  std::size_t column_;
  std::string message_;
};

enum class GameKind { Normal, Costed };

/// Parsed contents of a game file.
///
/// Normal files:
///   game: NAME
///   rows: L1 L2 ...
///   cols: L1 L2 ...
///   u1:            followed by one line of numbers per row
///   u2:            likewise
///   removed: P LABEL ...   (optional; P is 1 or 2)
///
/// Costed files use `costed: NAME`, `base1:`/`base2:` blocks and single-line
/// `cost1:`/`cost2:` vectors. Numbers are integers, p/q fractions or finite
/// decimals; `#` starts a comment.
struct GameFile {
  GameKind kind = GameKind::Normal;
  std::string name;
  std::vector<std::string> row_actions;
  std::vector<std::string> col_actions;
  Matrix u1;  // base1 for costed files
  Matrix u2;  // base2 for costed files
  std::vector<Rational> cost1;
  std::vector<Rational> cost2;
  std::vector<std::string> removed_rows;
  std::vector<std::string> removed_cols;

  /// The playable game: removed actions dropped, costs subtracted.
  BimatrixGame game() const;
  /// Throws std::invalid_argument for normal files.
  CostedGame costed() const;
};

GameFile parse_game_file(std::string_view text);

/// Reads and parses; throws std::runtime_error when the file cannot be read.
GameFile load_game_file(const std::filesystem::path& path);

std::string serialize_game(const BimatrixGame& game);
std::string serialize_game(const CostedGame& game);

}  // namespace eqc

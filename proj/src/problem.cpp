#include "shannonfd/problem.hpp"

#include <algorithm>
#include <cctype>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "shannonfd/error.hpp"

namespace shannonfd {

namespace {

bool is_name_start(char ch) {
  return std::isalpha(static_cast<unsigned char>(ch)) || ch == '_';
}

bool is_name_char(char ch) {
  return std::isalnum(static_cast<unsigned char>(ch)) || ch == '_';
}

struct Token {
  std::string text;
  int column;  // 1-based
};

std::vector<Token> split_words(std::string_view line) {
  std::vector<Token> words;
  std::size_t i = 0;
  while (i < line.size()) {
    if (std::isspace(static_cast<unsigned char>(line[i]))) {
      ++i;
      continue;
    }
    const std::size_t start = i;
    while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    words.push_back({std::string(line.substr(start, i - start)),
                     static_cast<int>(start) + 1});
  }
  return words;
}

bool valid_name(std::string_view s) {
  if (s.empty() || !is_name_start(s.front())) return false;
  return std::all_of(s.begin(), s.end(), is_name_char);
}

std::string_view strip_comment(std::string_view line) {
  const auto hash = line.find('#');
  return hash == std::string_view::npos ? line : line.substr(0, hash);
}

// Recursive-descent parser over a single expression line. Columns reported
// in errors are 1-based offsets into the expression plus `column_offset`.
class ExpressionParser {
 public:
  ExpressionParser(std::string_view text, const ProblemFile& problem, int line,
                   int column_offset)
      : text_(normalize_unicode(text)),
        problem_(problem),
        line_(line),
        column_offset_(column_offset) {}

  LinForm parse() {
    LinForm form(problem_.n());
    skip_space();
    bool first = true;
    while (true) {
      skip_space();
      Rational sign = 1;
      if (peek('+') || peek('-')) {
        sign = text_[pos_] == '-' ? -1 : 1;
        ++pos_;
        skip_space();
      } else if (!first) {
        break;
      }
      first = false;
      Rational coeff = sign * parse_coefficient();
      form += coeff * parse_term();
      skip_space();
      if (peek('>')) break;
      if (!peek('+') && !peek('-')) fail("expected '+', '-' or '>= 0'");
    }
    expect(">=");
    skip_space();
    expect("0");
    skip_space();
    if (pos_ != text_.size()) fail("unexpected trailing input");
    return form;
  }

 private:
  // Accept the typographic minus and greater-or-equal signs.
  static std::string normalize_unicode(std::string_view in) {
    std::string out(in);
    const std::pair<std::string, std::string> swaps[] = {
        {"\xE2\x88\x92", "-"}, {"\xE2\x89\xA5", ">="}};
    for (const auto& [from, to] : swaps) {
      for (auto at = out.find(from); at != std::string::npos; at = out.find(from, at)) {
        out.replace(at, from.size(), to);
        at += to.size();
      }
    }
    return out;
  }

  [[noreturn]] void fail(const std::string& message) const {
    throw ParseError(line_, column_offset_ + static_cast<int>(pos_) + 1, message);
  }

  bool peek(char ch) const { return pos_ < text_.size() && text_[pos_] == ch; }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) {
      ++pos_;
    }
  }

  void expect(std::string_view what) {
    if (text_.compare(pos_, what.size(), what) != 0) {
      fail("expected '" + std::string(what) + "'");
    }
    pos_ += what.size();
  }

  Rational parse_coefficient() {
    if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      return 1;
    }
    const std::size_t start = pos_;
    while (pos_ < text_.size() &&
           (std::isdigit(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '/')) {
      ++pos_;
    }
    Rational value;
    try {
      value = parse_rational(std::string_view(text_).substr(start, pos_ - start));
    } catch (const std::invalid_argument& e) {
      pos_ = start;
      fail(e.what());
    }
    skip_space();
    if (peek('*')) {
      ++pos_;
      skip_space();
    }
    return value;
  }

  VarSet parse_name_list() {
    VarSet set;
    while (true) {
      skip_space();
      const std::size_t start = pos_;
      while (pos_ < text_.size() && is_name_char(text_[pos_])) ++pos_;
      const std::string name = text_.substr(start, pos_ - start);
      if (name.empty() || !is_name_start(name.front())) {
        pos_ = start;
        fail("expected a variable name");
      }
      const auto it =
          std::find(problem_.variables.begin(), problem_.variables.end(), name);
      if (it == problem_.variables.end()) {
        pos_ = start;
        fail("unknown name '" + name + "'");
      }
      set = set.with(static_cast<int>(it - problem_.variables.begin()));
      skip_space();
      if (!peek(',')) return set;
      ++pos_;
    }
  }

  LinForm parse_term() {
    const int n = problem_.n();
    if (peek('H')) {
      ++pos_;
      skip_space();
      expect("(");
      const VarSet a = parse_name_list();
      VarSet c;
      if (peek('|')) {
        ++pos_;
        c = parse_name_list();
      }
      expect(")");
      // H(L|M) = h(L u M) - h(M); overlapping lists are fine.
      LinForm form(n);
      form.add(a | c, 1);
      form.add(c, -1);
      return form;
    }
    if (peek('I')) {
      ++pos_;
      skip_space();
      expect("(");
      const VarSet a = parse_name_list();
      expect(";");
      const VarSet b = parse_name_list();
      VarSet c;
      if (peek('|')) {
        ++pos_;
        c = parse_name_list();
      }
      expect(")");
      LinForm form(n);
      form.add(a | c, 1);
      form.add(b | c, 1);
      form.add(a | b | c, -1);
      form.add(c, -1);
      return form;
    }
    fail("expected a term H(...) or I(...)");
  }

  std::string text_;
  const ProblemFile& problem_;
  int line_;
  int column_offset_;
  std::size_t pos_ = 0;
};

}  // namespace

int ProblemFile::index_of(std::string_view name) const {
  const auto it = std::find(variables.begin(), variables.end(), name);
  if (it == variables.end()) {
    throw Error(ErrorKind::kInvalidArgument,
                "unknown name '" + std::string(name) + "'");
  }
  return static_cast<int>(it - variables.begin());
}

VarSet ProblemFile::set_of(const std::vector<std::string>& names) const {
  VarSet s;
  for (const std::string& name : names) s = s.with(index_of(name));
  return s;
}

FdSystem ProblemFile::fd_system() const {
  FdSystem raw{n(), {}};
  for (const FdDeclaration& fd : fds) {
    raw.deps.push_back({set_of(fd.target), set_of(fd.source)});
  }
  return normalize(raw);
}

ProblemFile parse_problem(std::string_view text) {
  ProblemFile problem;
  bool declared = false;
  int line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t end = std::min(text.find('\n', pos), text.size());
    std::string_view raw = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;
    if (!raw.empty() && raw.back() == '\r') raw.remove_suffix(1);

    const std::vector<Token> words = split_words(strip_comment(raw));
    if (words.empty()) continue;

    if (words[0].text == "vars") {
      if (declared) throw ParseError(line_no, words[0].column, "second 'vars' line");
      if (words.size() == 1) {
        throw ParseError(line_no, words[0].column, "'vars' needs at least one name");
      }
      for (std::size_t i = 1; i < words.size(); ++i) {
        const Token& w = words[i];
        if (!valid_name(w.text)) {
          throw ParseError(line_no, w.column, "invalid name '" + w.text + "'");
        }
        if (std::find(problem.variables.begin(), problem.variables.end(), w.text) !=
            problem.variables.end()) {
          throw ParseError(line_no, w.column, "duplicate declaration of '" + w.text + "'");
        }
        problem.variables.push_back(w.text);
      }
      if (problem.n() > kMaxVariables) {
        throw ParseError(line_no, words[0].column,
                         "at most " + std::to_string(kMaxVariables) + " variables");
      }
      declared = true;
      continue;
    }
    if (!declared) {
      throw ParseError(line_no, words[0].column, "expected 'vars' declaration first");
    }

    if (words[0].text == "query") {
      const std::string_view body = strip_comment(raw);
      const std::size_t start = body.find("query") + 5;
      std::string expr(body.substr(start));
      const auto first = expr.find_first_not_of(" \t");
      const int offset = static_cast<int>(start + (first == std::string::npos ? 0 : first));
      expr = first == std::string::npos ? std::string() : expr.substr(first);
      while (!expr.empty() && std::isspace(static_cast<unsigned char>(expr.back()))) {
        expr.pop_back();
      }
      ExpressionParser(expr, problem, line_no, offset).parse();
      problem.queries.push_back(expr);
      continue;
    }

    FdDeclaration fd;
    bool arrow = false;
    for (const Token& w : words) {
      if (w.text == "->") {
        if (arrow) throw ParseError(line_no, w.column, "second '->' on one line");
        arrow = true;
        continue;
      }
      if (std::find(problem.variables.begin(), problem.variables.end(), w.text) ==
          problem.variables.end()) {
        throw ParseError(line_no, w.column,
                         valid_name(w.text) ? "unknown name '" + w.text + "'"
                                            : "malformed token '" + w.text + "'");
      }
      (arrow ? fd.target : fd.source).push_back(w.text);
    }
    if (!arrow) throw ParseError(line_no, words[0].column, "expected '->'");
    if (fd.target.empty()) {
      throw ParseError(line_no, words.back().column, "'->' needs at least one target");
    }
    problem.fds.push_back(std::move(fd));
  }
  if (!declared) throw ParseError(line_no, 1, "missing 'vars' declaration");
  return problem;
}

std::string render_problem(const ProblemFile& problem) {
  std::ostringstream out;
  out << "vars";
  for (const std::string& v : problem.variables) out << ' ' << v;
  out << '\n';
  for (const FdDeclaration& fd : problem.fds) {
    for (const std::string& s : fd.source) out << s << ' ';
    out << "->";
    for (const std::string& t : fd.target) out << ' ' << t;
    out << '\n';
  }
  for (const std::string& q : problem.queries) out << "query " << q << '\n';
  return out.str();
}

LinForm parse_expression(std::string_view text, const ProblemFile& problem) {
  return ExpressionParser(text, problem, 1, 0).parse();
}

std::string subset_name(VarSet s, const std::vector<std::string>& names) {
  if (s.empty()) return "{}";
  return format_set(s, names);
}

void write_matrix(std::ostream& out, const ConstraintMatrix& matrix,
                  const std::vector<std::string>& names, OutputFormat format) {
  auto relation = [](Relation r) {
    return r == Relation::kNonNegative ? "ge0" : "eq0";
  };
  if (format == OutputFormat::kJson) {
    nlohmann::ordered_json doc;
    doc["cols"] = nlohmann::json::array();
    for (VarSet col : matrix.columns) {
      nlohmann::ordered_json members = nlohmann::ordered_json::array();
      for (int v : col.members()) members.push_back(names.at(v));
      doc["cols"].push_back(members);
    }
    doc["rows"] = nlohmann::json::array();
    for (const ConstraintRow& row : matrix.rows) {
      nlohmann::ordered_json entry;
      entry["relation"] = relation(row.relation);
      entry["entries"] = nlohmann::json::array();
      for (VarSet col : matrix.columns) {
        entry["entries"].push_back(to_string(row.form.coefficient(col)));
      }
      doc["rows"].push_back(entry);
    }
    out << doc.dump(2) << '\n';
    return;
  }
  out << "cols: ";
  for (std::size_t i = 0; i < matrix.columns.size(); ++i) {
    if (i > 0) out << '|';
    out << subset_name(matrix.columns[i], names);
  }
  out << '\n';
  for (const ConstraintRow& row : matrix.rows) {
    out << relation(row.relation);
    for (VarSet col : matrix.columns) out << ' ' << to_string(row.form.coefficient(col));
    out << '\n';
  }
}

}  // namespace shannonfd

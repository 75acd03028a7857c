#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "pif/errors.hpp"
#include "pif/scheme.hpp"
#include "pif/surface_map.hpp"

namespace pif {

// Line-oriented text format:
//   # comment
//   name <id>
//   face <id> : <±label> ...
//   pair <idA> <idB> offset <k>
struct PifDocument {
  std::string name;
  std::vector<FaceWord> faces;
  std::vector<FacePairing> pairings;
  std::vector<int> pairing_lines;  // source line per pairing, for diagnostics
};

namespace detail {

struct Token {
  std::string text;
  int column = 0;
};

inline std::vector<Token> tokenize_line(const std::string& line) {
  std::vector<Token> out;
  size_t i = 0;
  while (i < line.size()) {
    if (std::isspace(static_cast<unsigned char>(line[i]))) {
      ++i;
      continue;
    }
    if (line[i] == '#') break;
    size_t j = i;
    while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j]))) ++j;
    out.push_back({line.substr(i, j - i), static_cast<int>(i) + 1});
    i = j;
  }
  return out;
}

inline SignedLabel parse_signed_label(const Token& t, int line_no) {
  std::string s = t.text;
  bool positive = true;
  if (!s.empty() && (s[0] == '-' || s[0] == '+')) {
    positive = (s[0] == '+');
    s = s.substr(1);
  }
  if (s.empty()) throw SyntaxError("empty edge label", line_no, t.column);
  return {s, positive};
}

}  // namespace detail

inline PifDocument parse_document(const std::string& text) {
  PifDocument doc;
  std::istringstream in(text);
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    auto tokens = detail::tokenize_line(line);
    if (tokens.empty()) continue;
    const std::string& head = tokens[0].text;
    if (head == "name") {
      if (tokens.size() != 2) throw SyntaxError("expected: name <id>", line_no, tokens[0].column);
      doc.name = tokens[1].text;
    } else if (head == "face") {
      if (tokens.size() < 4 || tokens[2].text != ":")
        throw SyntaxError("expected: face <id> : <labels...>", line_no, tokens[0].column);
      FaceWord fw{tokens[1].text, {}};
      for (size_t i = 3; i < tokens.size(); ++i) fw.word.push_back(detail::parse_signed_label(tokens[i], line_no));
      doc.faces.push_back(std::move(fw));
    } else if (head == "pair") {
      if (tokens.size() != 5 || tokens[3].text != "offset")
        throw SyntaxError("expected: pair <idA> <idB> offset <k>", line_no, tokens[0].column);
      int k = 0;
      try {
        size_t pos = 0;
        k = std::stoi(tokens[4].text, &pos);
        if (pos != tokens[4].text.size()) throw std::invalid_argument("");
      } catch (const std::exception&) {
        throw SyntaxError("offset must be an integer", line_no, tokens[4].column);
      }
      doc.pairings.push_back({tokens[1].text, tokens[2].text, k});
      doc.pairing_lines.push_back(line_no);
    } else {
      throw SyntaxError("unknown directive '" + head + "'", line_no, tokens[0].column);
    }
  }
  return doc;
}

inline CellDividedBall ball_from_document(const PifDocument& doc) {
  return CellDividedBall::build(doc.faces);
}

inline Polyhedron polyhedron_from_document(const PifDocument& doc) {
  CellDividedBall ball = ball_from_document(doc);
  // located pre-checks for pairing lines; the Polyhedron constructor
  // revalidates the same conditions
  for (size_t i = 0; i < doc.pairings.size(); ++i) {
    const auto& pr = doc.pairings[i];
    std::string at = "line " + std::to_string(doc.pairing_lines[i]) + ": ";
    if (pr.face_a == pr.face_b) throw PairingError(at + "face " + pr.face_a + " paired with itself");
    if (!ball.has_face(pr.face_a)) throw PairingError(at + "unknown face " + pr.face_a);
    if (!ball.has_face(pr.face_b)) throw PairingError(at + "unknown face " + pr.face_b);
    int ma = ball.face_sides(ball.face_index(pr.face_a));
    int mb = ball.face_sides(ball.face_index(pr.face_b));
    if (ma != mb) throw PairingError(at + "side counts differ (" + std::to_string(ma) + " vs " + std::to_string(mb) + ")");
    if (pr.offset < 0 || pr.offset >= ma)
      throw PairingError(at + "offset " + std::to_string(pr.offset) + " out of range 0.." + std::to_string(ma - 1));
  }
  return Polyhedron(std::move(ball), doc.pairings, doc.name);
}

inline Polyhedron parse(const std::string& text) { return polyhedron_from_document(parse_document(text)); }

namespace detail {

// rotation that brings the lexicographically smallest signed label to front
inline int min_rotation(const std::vector<SignedLabel>& word) {
  int best = 0;
  for (int r = 1; r < static_cast<int>(word.size()); ++r)
    if (word[r].str() < word[best].str()) best = r;
  return best;
}

}  // namespace detail

// Deterministic text: faces in name order, each word rotated to start at its
// smallest signed label, pairings sorted; offsets adjusted to the rotations.
inline std::string serialize(const Polyhedron& p) {
  const CellDividedBall& ball = p.ball();
  std::map<FaceName, int> rot;
  std::ostringstream out;
  if (!p.name().empty()) out << "name " << p.name() << "\n";
  for (const auto& fw : ball.faces()) {
    int r = detail::min_rotation(fw.word);
    rot[fw.name] = r;
    out << "face " << fw.name << " :";
    for (size_t j = 0; j < fw.word.size(); ++j) out << " " << fw.word[(r + j) % fw.word.size()].str();
    out << "\n";
  }
  for (const auto& pr : p.pairings()) {
    int m = ball.face_sides(ball.face_index(pr.face_a));
    int k = ((pr.offset - rot[pr.face_a] - rot[pr.face_b]) % m + m) % m;
    out << "pair " << pr.face_a << " " << pr.face_b << " offset " << k << "\n";
  }
  return out.str();
}

inline std::string serialize_ball(const CellDividedBall& ball, const std::string& name = "") {
  std::ostringstream out;
  if (!name.empty()) out << "name " << name << "\n";
  for (const auto& fw : ball.faces()) {
    int r = detail::min_rotation(fw.word);
    out << "face " << fw.name << " :";
    for (size_t j = 0; j < fw.word.size(); ++j) out << " " << fw.word[(r + j) % fw.word.size()].str();
    out << "\n";
  }
  return out.str();
}

}  // namespace pif

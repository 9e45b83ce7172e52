#include <fstream>
#include <sstream>

#include "ddsynth/automata.hpp"

namespace ddsynth {

namespace {

struct Header {
  std::string kind;
  Alphabet props;
  std::size_t states = 0;
  State initial = 0;
  std::vector<State> marked;
  std::map<State, std::string> names;
  struct Trans {
    State q;
    std::string letter;
    std::string rhs;
    std::size_t line;
  };
  std::vector<Trans> trans;
};

std::string strip_comment(const std::string& line) {
  auto h = line.find('#');
  return trim(h == std::string::npos ? line : line.substr(0, h));
}

State parse_state(const std::string& s, std::size_t states, std::size_t line) {
  try {
    std::size_t used = 0;
    unsigned long v = std::stoul(s, &used);
    if (used != s.size() || v >= states) throw Error("");
    return static_cast<State>(v);
  } catch (...) {
    throw ParseError("bad state '" + s + "' on line " + std::to_string(line), line);
  }
}

Header read_header(const std::string& text, const std::string& expect_kind) {
  Header h;
  std::istringstream in(text);
  std::string raw;
  std::size_t lineno = 0;
  bool have_props = false, have_states = false;
  while (std::getline(in, raw)) {
    ++lineno;
    std::string line = strip_comment(raw);
    if (line.empty()) continue;
    if (h.kind.empty()) {
      h.kind = line;
      if (h.kind != expect_kind)
        throw ParseError("expected '" + expect_kind + "' header, got '" + line + "'", lineno);
      continue;
    }
    auto colon = line.find(':');
    std::string key = trim(line.substr(0, line.find_first_of(" :")));
    if (key == "trans") {
      if (!have_props || !have_states) throw ParseError("trans before props/states", lineno);
      if (colon == std::string::npos) throw ParseError("trans line needs ':'", lineno);
      std::string lhs = trim(line.substr(5, colon - 5));
      auto sp = lhs.find_first_of(" \t");
      if (sp == std::string::npos) throw ParseError("trans line needs a state and a letter", lineno);
      State q = parse_state(trim(lhs.substr(0, sp)), h.states, lineno);
      h.trans.push_back({q, trim(lhs.substr(sp)), trim(line.substr(colon + 1)), lineno});
    } else if (key == "name") {
      std::string rest = trim(line.substr(4));
      auto sp = rest.find_first_of(" \t");
      if (sp == std::string::npos) throw ParseError("name line needs a state and a name", lineno);
      h.names[parse_state(rest.substr(0, sp), h.states, lineno)] = trim(rest.substr(sp));
    } else if (colon != std::string::npos) {
      std::string val = trim(line.substr(colon + 1));
      if (key == "props") {
        h.props = Alphabet(split_list(val));
        have_props = true;
      } else if (key == "states") {
        h.states = parse_state(val, SIZE_MAX, lineno);
        if (h.states == 0) throw ParseError("automaton needs at least one state", lineno);
        have_states = true;
      } else if (key == "initial") {
        h.initial = parse_state(val, h.states, lineno);
      } else if (key == "rejecting" || key == "accepting") {
        for (const auto& s : split_list(val)) h.marked.push_back(parse_state(s, h.states, lineno));
      } else {
        throw ParseError("unknown key '" + key + "'", lineno);
      }
    } else {
      throw ParseError("cannot parse line '" + line + "'", lineno);
    }
  }
  if (h.kind.empty()) throw ParseError("empty automaton file", 0);
  if (!have_props || !have_states) throw ParseError("missing props or states", lineno);
  return h;
}

std::vector<Letter> letters_of(const Header& h, const std::string& text, std::size_t line) {
  if (text == "*") {
    std::vector<Letter> all;
    for (Letter l = 0; l < h.props.num_letters(); ++l) all.push_back(l);
    return all;
  }
  try {
    return {h.props.parse_letter(text)};
  } catch (const Error& e) {
    throw ParseError(std::string(e.what()) + " on line " + std::to_string(line), line);
  }
}

StateSet parse_set(const std::string& text, std::size_t states, std::size_t line) {
  std::string t = trim(text);
  if (t.size() < 2 || t.front() != '{' || t.back() != '}')
    throw ParseError("expected {..} on line " + std::to_string(line), line);
  StateSet s;
  for (const auto& x : split_list(t.substr(1, t.size() - 2))) set_insert(s, parse_state(x, states, line));
  return s;
}

Dnf parse_dnf(const std::string& text, std::size_t states, std::size_t line) {
  std::string t = trim(text);
  if (t == "true") return dnf_true();
  if (t == "false") return dnf_false();
  Dnf d;
  std::size_t start = 0;
  while (true) {
    auto bar = t.find('|', start);
    d.push_back(parse_set(t.substr(start, bar == std::string::npos ? std::string::npos : bar - start), states, line));
    if (bar == std::string::npos) break;
    start = bar + 1;
  }
  return canonicalize(std::move(d));
}

std::string format_set(const StateSet& s) {
  std::string out = "{";
  for (std::size_t i = 0; i < s.size(); ++i) out += (i ? "," : "") + std::to_string(s[i]);
  return out + "}";
}

std::string format_dnf(const Dnf& d) {
  if (is_false(d)) return "false";
  if (is_true(d)) return "true";
  std::string out;
  for (std::size_t i = 0; i < d.size(); ++i) out += (i ? " | " : "") + format_set(d[i]);
  return out;
}

void write_common(std::ostringstream& out, const std::string& kind, const Alphabet& props,
                  const std::vector<std::string>& names, State initial, const std::vector<char>& marked) {
  out << kind << "\nprops:";
  for (const auto& n : props.names()) out << ' ' << n;
  out << "\nstates: " << names.size() << "\ninitial: " << initial << "\nrejecting:";
  for (State q = 0; q < marked.size(); ++q)
    if (marked[q]) out << ' ' << q;
  out << '\n';
  for (State q = 0; q < names.size(); ++q)
    if (names[q] != std::to_string(q)) out << "name " << q << ' ' << names[q] << '\n';
}

std::string dot_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out;
}

}  // namespace

std::string write_aca(const Aca& a) {
  std::ostringstream out;
  write_common(out, "aca", a.props, a.names, a.initial, a.marked);
  for (State q = 0; q < a.num_states(); ++q)
    for (Letter l = 0; l < a.props.num_letters(); ++l)
      out << "trans " << q << ' ' << a.props.format_letter(l) << " : " << format_dnf(a.delta[q][l]) << '\n';
  return out.str();
}

Aca read_aca(const std::string& text) {
  Header h = read_header(text, "aca");
  Aca a;
  a.props = h.props;
  for (State q = 0; q < h.states; ++q) a.add_state(h.names.count(q) ? h.names[q] : std::to_string(q), false);
  for (State q : h.marked) a.marked[q] = 1;
  a.initial = h.initial;
  for (const auto& t : h.trans) {
    Dnf d = parse_dnf(t.rhs, h.states, t.line);
    for (Letter l : letters_of(h, t.letter, t.line)) a.delta[t.q][l] = dnf_or(a.delta[t.q][l], d);
  }
  return a;
}

std::string write_uca(const Uca& u) {
  std::ostringstream out;
  write_common(out, "uca", u.props, u.names, u.initial, u.rejecting);
  for (State q = 0; q < u.num_states(); ++q)
    for (Letter l = 0; l < u.props.num_letters(); ++l)
      out << "trans " << q << ' ' << u.props.format_letter(l) << " : " << format_set(u.succ[q][l]) << '\n';
  return out.str();
}

Uca read_uca(const std::string& text) {
  Header h = read_header(text, "uca");
  Uca u;
  u.props = h.props;
  for (State q = 0; q < h.states; ++q) u.add_state(h.names.count(q) ? h.names[q] : std::to_string(q), false);
  for (State q : h.marked) u.rejecting[q] = 1;
  u.initial = h.initial;
  std::vector<std::vector<char>> given(h.states, std::vector<char>(u.props.num_letters(), 0));
  for (const auto& t : h.trans) {
    StateSet s = parse_set(t.rhs, h.states, t.line);
    for (Letter l : letters_of(h, t.letter, t.line)) {
      u.succ[t.q][l] = set_union(u.succ[t.q][l], s);
      given[t.q][l] = 1;
    }
  }
  std::optional<State> sink;
  for (State q = 0; q < h.states; ++q)
    for (Letter l = 0; l < u.props.num_letters(); ++l)
      if (!given[q][l]) {
        if (!sink) {
          sink = u.add_state("sink", false);
          for (auto& s : u.succ[*sink]) s = {*sink};
        }
        u.succ[q][l] = {*sink};
      }
  return u;
}

std::string aca_to_dot(const Aca& a) {
  std::ostringstream out;
  out << "digraph aca {\n  rankdir=LR;\n  init [shape=point];\n";
  for (State q = 0; q < a.num_states(); ++q)
    out << "  s" << q << " [label=\"" << dot_escape(a.names[q]) << "\", shape="
        << (a.marked[q] ? "doublecircle" : "circle") << "];\n";
  out << "  init -> s" << a.initial << ";\n";
  int hub = 0;
  for (State q = 0; q < a.num_states(); ++q)
    for (Letter l = 0; l < a.props.num_letters(); ++l) {
      std::string label = dot_escape(a.props.format_letter(l));
      for (const auto& c : a.delta[q][l]) {
        if (c.size() == 1) {
          out << "  s" << q << " -> s" << c[0] << " [label=\"" << label << "\"];\n";
          continue;
        }
        out << "  h" << hub << " [shape=point];\n  s" << q << " -> h" << hub << " [label=\"" << label
            << "\"];\n";
        for (State r : c) out << "  h" << hub << " -> s" << r << ";\n";
        ++hub;
      }
    }
  out << "}\n";
  return out.str();
}

std::string uca_to_dot(const Uca& u) {
  std::ostringstream out;
  out << "digraph uca {\n  rankdir=LR;\n  init [shape=point];\n";
  for (State q = 0; q < u.num_states(); ++q)
    out << "  s" << q << " [label=\"" << dot_escape(u.names[q]) << "\", shape="
        << (u.rejecting[q] ? "doublecircle" : "circle") << "];\n";
  out << "  init -> s" << u.initial << ";\n";
  for (State q = 0; q < u.num_states(); ++q)
    for (Letter l = 0; l < u.props.num_letters(); ++l)
      for (State r : u.succ[q][l])
        out << "  s" << q << " -> s" << r << " [label=\"" << dot_escape(u.props.format_letter(l)) << "\"];\n";
  out << "}\n";
  return out.str();
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open '" + path + "'");
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write '" + path + "'");
  out << text;
}

}  // namespace ddsynth

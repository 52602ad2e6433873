#include "zsm/io.hpp"

#include <istream>
#include <ostream>
#include <sstream>

namespace zsm {

namespace {

std::string next_line(std::istream& in, const char* what) {
  std::string line;
  if (!std::getline(in, line)) {
    throw InputError(Errc::parse_error,
                     std::string("unexpected end of input, expected ") + what);
  }
  if (!line.empty() && line.back() == '\r') line.pop_back();
  return line;
}

// Splits "<key> <rest>" and checks the key.
std::string expect_key(const std::string& line, const std::string& key) {
  if (line.size() <= key.size() || line.compare(0, key.size(), key) != 0 ||
      line[key.size()] != ' ') {
    throw InputError(Errc::parse_error,
                     "expected line starting with '" + key + "', got '" +
                         line + "'");
  }
  return line.substr(key.size() + 1);
}

int parse_int(const std::string& s, const char* what) {
  try {
    std::size_t pos = 0;
    int value = std::stoi(s, &pos);
    if (pos != s.size()) throw std::invalid_argument(s);
    return value;
  } catch (const std::exception&) {
    throw InputError(Errc::parse_error,
                     std::string("invalid ") + what + ": '" + s + "'");
  }
}

}  // namespace

ColouredGraph read_instance(std::istream& in) {
  if (next_line(in, "header") != "zsm v1") {
    throw InputError(Errc::parse_error, "missing 'zsm v1' header");
  }
  int order = parse_int(expect_key(next_line(in, "order"), "order"), "order");
  std::string colours = expect_key(next_line(in, "colours"), "colours");
  return ColouredGraph::from_colour_string(order, colours);
}

void write_instance(std::ostream& out, const ColouredGraph& g) {
  out << "zsm v1\n"
      << "order " << g.order() << "\n"
      << "colours " << g.colour_string() << "\n";
}

KColouredGraph read_k_instance(std::istream& in) {
  if (next_line(in, "header") != "zsm-k v1") {
    throw InputError(Errc::parse_error, "missing 'zsm-k v1' header");
  }
  int order = parse_int(expect_key(next_line(in, "order"), "order"), "order");
  int k = parse_int(expect_key(next_line(in, "k"), "k"), "k");
  std::string digits = expect_key(next_line(in, "colours"), "colours");
  std::vector<std::uint8_t> colours;
  colours.reserve(digits.size());
  for (char ch : digits) {
    if (ch < '0' || ch > '9') {
      throw InputError(Errc::parse_error,
                       std::string("invalid colour digit '") + ch + "'");
    }
    colours.push_back(static_cast<std::uint8_t>(ch - '0'));
  }
  return KColouredGraph(order, k, std::move(colours));
}

void write_k_instance(std::ostream& out, const KColouredGraph& g) {
  out << "zsm-k v1\n"
      << "order " << g.order() << "\n"
      << "k " << g.k() << "\n"
      << "colours " << g.colour_string() << "\n";
}

std::string format_matching(const Matching& m) {
  std::ostringstream os;
  os << "matching";
  for (const auto& [u, v] : m.edges()) os << " " << u << "-" << v;
  return os.str();
}

Matching parse_matching_line(const std::string& line, int order) {
  std::istringstream is(expect_key(line, "matching"));
  std::vector<Edge> pairs;
  std::string token;
  while (is >> token) {
    auto dash = token.find('-');
    if (dash == std::string::npos) {
      throw InputError(Errc::parse_error,
                       "invalid matching pair '" + token + "'");
    }
    Vertex u = parse_int(token.substr(0, dash), "vertex");
    Vertex v = parse_int(token.substr(dash + 1), "vertex");
    pairs.emplace_back(u, v);
  }
  return Matching::from_pairs(order, pairs);
}

Matching read_matching(std::istream& in, int order) {
  return parse_matching_line(next_line(in, "matching"), order);
}

namespace {

std::string format_quad(const SwapQuad& q) {
  std::ostringstream os;
  os << "(" << q.u << "," << q.v << "," << q.x << "," << q.y << ")";
  return os.str();
}

SwapQuad parse_quad(const std::string& s) {
  if (s.size() < 9 || s.front() != '(' || s.back() != ')') {
    throw InputError(Errc::parse_error, "invalid swap quadruple '" + s + "'");
  }
  std::istringstream is(s.substr(1, s.size() - 2));
  SwapQuad q{};
  char c1 = 0, c2 = 0, c3 = 0, extra = 0;
  if (!(is >> q.u >> c1 >> q.v >> c2 >> q.x >> c3 >> q.y) || c1 != ',' ||
      c2 != ',' || c3 != ',' || (is >> extra)) {
    throw InputError(Errc::parse_error, "invalid swap quadruple '" + s + "'");
  }
  return q;
}

}  // namespace

void write_trace(std::ostream& out, const Trace& trace) {
  out << "init " << format_matching(trace.initial) << "\n";
  for (const auto& rec : trace.steps) {
    out << "step " << rec.index << " case " << rec.case_label << " flip "
        << (rec.colour_flip ? 1 : 0) << " d " << rec.discrepancy_before
        << "->" << rec.discrepancy_after << " swaps ";
    for (std::size_t i = 0; i < rec.swaps.size(); ++i) {
      if (i > 0) out << ";";
      out << format_quad(rec.swaps[i]);
    }
    out << "\n";
  }
  out << "final " << format_matching(trace.final_matching) << "\n";
}

Trace read_trace(std::istream& in, int order) {
  Matching initial =
      parse_matching_line(expect_key(next_line(in, "init"), "init"), order);
  std::vector<StepRecord> steps;
  std::string line;
  for (;;) {
    line = next_line(in, "step or final");
    if (line.rfind("final ", 0) == 0) break;
    std::istringstream is(line);
    std::string kw_step, kw_case, kw_flip, kw_d, kw_swaps, label, d_spec,
        swaps_spec;
    int index = 0, flip = 0;
    if (!(is >> kw_step >> index >> kw_case >> label >> kw_flip >> flip >>
          kw_d >> d_spec >> kw_swaps >> swaps_spec) ||
        kw_step != "step" || kw_case != "case" || kw_flip != "flip" ||
        kw_d != "d" || kw_swaps != "swaps" || (flip != 0 && flip != 1)) {
      throw InputError(Errc::parse_error, "invalid step line '" + line + "'");
    }
    auto arrow = d_spec.find("->");
    if (arrow == std::string::npos) {
      throw InputError(Errc::parse_error,
                       "invalid discrepancy spec '" + d_spec + "'");
    }
    StepRecord rec;
    rec.index = index;
    rec.case_label = label;
    rec.colour_flip = flip == 1;
    rec.discrepancy_before =
        parse_int(d_spec.substr(0, arrow), "discrepancy");
    rec.discrepancy_after =
        parse_int(d_spec.substr(arrow + 2), "discrepancy");
    std::size_t pos = 0;
    while (pos < swaps_spec.size()) {
      auto next = swaps_spec.find(';', pos);
      if (next == std::string::npos) next = swaps_spec.size();
      rec.swaps.push_back(parse_quad(swaps_spec.substr(pos, next - pos)));
      pos = next + 1;
    }
    steps.push_back(std::move(rec));
  }
  Matching final_m = parse_matching_line(expect_key(line, "final"), order);
  return Trace{std::move(initial), std::move(steps), std::move(final_m)};
}

}  // namespace zsm

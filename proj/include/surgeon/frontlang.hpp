#pragma once

// A small text format for Legendrian front projections.
//
//   # comment
//   surgery A coeff -1/2          role lines, assigned to traced components
//   companion K legendrian        in the order their first left cusp appears;
//   companion T transverse positive
//   surgery B coeff +1 reversed   `reversed` flips the default orientation
//   events: L1 L3 X2 X2 X2 R1 R1
//
// Events are read left to right. Strand positions are numbered from the top,
// starting at 1. `L<p>` opens a left cusp whose two branches occupy positions
// p and p+1; `R<p>` closes the strands at p and p+1 with a right cusp; `X<p>`
// crosses the strands at p and p+1. At a crossing the strand travelling from
// upper-left to lower-right (smaller slope) is in front.
//
// By default a component is oriented so that the upper branch of its first
// left cusp points to the right.

#include "surgeon/model.hpp"

#include <cstddef>
#include <cstdint>
#include <optional>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace surgeon {

class FrontError : public std::runtime_error {
 public:
  FrontError(int line, int column, const std::string& what)
      : std::runtime_error(std::to_string(line) + ":" + std::to_string(column) + ": " + what),
        line_(line),
        column_(column) {}
  int line() const { return line_; }
  int column() const { return column_; }

 private:
  int line_;
  int column_;
};

enum class EventKind { left_cusp, right_cusp, crossing };

struct FrontEvent {
  EventKind kind;
  int position;
  int line = 0;
  int column = 0;

  friend bool operator==(const FrontEvent& a, const FrontEvent& b) {
    return a.kind == b.kind && a.position == b.position;
  }
};

enum class RoleKind { surgery, legendrian_companion, transverse_companion };

struct ComponentRole {
  std::string name;
  RoleKind kind = RoleKind::surgery;
  std::optional<ContactCoefficient> coeff;  // surgery only
  Sign transverse_sign = Sign::positive;    // transverse only
  bool reversed = false;
  int line = 0;

  friend bool operator==(const ComponentRole& a, const ComponentRole& b) {
    return a.name == b.name && a.kind == b.kind && a.coeff == b.coeff && a.transverse_sign == b.transverse_sign &&
           a.reversed == b.reversed;
  }
};

struct FrontDocument {
  std::vector<FrontEvent> events;
  /// roles[i] belongs to the i-th traced component; may be shorter than the
  /// component list.
  std::vector<ComponentRole> roles;

  friend bool operator==(const FrontDocument&, const FrontDocument&) = default;
};

/// Strands, crossings and components of a valid event sequence.
struct FrontTrace {
  struct Strand {
    std::size_t left_cusp = 0;
    bool left_upper = false;
    std::size_t right_cusp = 0;
    bool right_upper = false;
    std::size_t component = 0;
    int direction = 0;  // +1 rightward, -1 leftward
  };
  struct Crossing {
    std::size_t over;
    std::size_t under;
  };
  struct Component {
    std::int64_t down_cusps = 0;
    std::int64_t up_cusps = 0;
  };

  std::vector<Strand> strands;
  std::vector<Crossing> crossings;
  std::vector<Component> components;

  /// +1 iff both strands run in the same horizontal direction.
  int crossing_sign(const Crossing& c) const {
    return strands[c.over].direction == strands[c.under].direction ? 1 : -1;
  }
};

namespace detail {

inline FrontTrace trace_events(const std::vector<FrontEvent>& events) {
  FrontTrace t;
  std::vector<std::pair<std::size_t, std::size_t>> left, right;  // (upper, lower) strand ids
  std::vector<std::size_t> at;
  for (const auto& e : events) {
    const auto p = static_cast<std::size_t>(e.position - 1);
    switch (e.kind) {
      case EventKind::left_cusp: {
        const std::size_t cusp = left.size();
        const std::size_t upper = t.strands.size();
        t.strands.push_back({cusp, true});
        t.strands.push_back({cusp, false});
        left.emplace_back(upper, upper + 1);
        at.insert(at.begin() + static_cast<std::ptrdiff_t>(p), {upper, upper + 1});
        break;
      }
      case EventKind::crossing:
        t.crossings.push_back({at[p], at[p + 1]});
        std::swap(at[p], at[p + 1]);
        break;
      case EventKind::right_cusp: {
        const std::size_t cusp = right.size();
        t.strands[at[p]].right_cusp = cusp;
        t.strands[at[p]].right_upper = true;
        t.strands[at[p + 1]].right_cusp = cusp;
        t.strands[at[p + 1]].right_upper = false;
        right.emplace_back(at[p], at[p + 1]);
        at.erase(at.begin() + static_cast<std::ptrdiff_t>(p), at.begin() + static_cast<std::ptrdiff_t>(p + 2));
        break;
      }
    }
  }

  auto other = [](const std::pair<std::size_t, std::size_t>& cusp, std::size_t s) {
    return cusp.first == s ? cusp.second : cusp.first;
  };
  for (const auto& cusp : left) {
    const std::size_t start = cusp.first;
    if (t.strands[start].direction != 0) continue;
    const std::size_t id = t.components.size();
    FrontTrace::Component comp;
    std::size_t s = start;
    int dir = 1;
    do {
      auto& strand = t.strands[s];
      strand.component = id;
      strand.direction = dir;
      if (dir == 1) {
        // Right cusp entered on its upper branch turns downward.
        (strand.right_upper ? comp.down_cusps : comp.up_cusps) += 1;
        s = other(right[strand.right_cusp], s);
      } else {
        (strand.left_upper ? comp.down_cusps : comp.up_cusps) += 1;
        s = other(left[strand.left_cusp], s);
      }
      dir = -dir;
    } while (s != start);
    t.components.push_back(comp);
  }
  return t;
}

inline std::vector<std::string> split_tokens(std::string_view line, std::vector<int>& columns) {
  std::vector<std::string> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    if (i >= line.size()) break;
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') ++j;
    out.emplace_back(line.substr(i, j - i));
    columns.push_back(static_cast<int>(i) + 1);
    i = j;
  }
  return out;
}

inline ComponentRole parse_role(const std::vector<std::string>& tok, const std::vector<int>& col, int line) {
  ComponentRole role;
  role.line = line;
  std::size_t next = 2;
  auto fail = [&](std::size_t idx, const std::string& what) -> FrontError {
    return FrontError(line, idx < col.size() ? col[idx] : col.back(), what);
  };
  if (tok.size() < 2) throw fail(0, "role line needs a component name");
  role.name = tok[1];
  if (tok[0] == "surgery") {
    role.kind = RoleKind::surgery;
    if (tok.size() < 4 || tok[2] != "coeff") throw fail(2, "expected 'surgery <name> coeff <s>/<m>'");
    try {
      role.coeff = ContactCoefficient::parse(tok[3]);
    } catch (const std::invalid_argument& e) {
      throw fail(3, e.what());
    }
    next = 4;
  } else if (tok[0] == "companion") {
    if (tok.size() < 3) throw fail(1, "expected 'companion <name> legendrian|transverse'");
    if (tok[2] == "legendrian") {
      role.kind = RoleKind::legendrian_companion;
      next = 3;
    } else if (tok[2] == "transverse") {
      role.kind = RoleKind::transverse_companion;
      if (tok.size() < 4 || (tok[3] != "positive" && tok[3] != "negative"))
        throw fail(3, "transverse companion needs 'positive' or 'negative'");
      role.transverse_sign = tok[3] == "positive" ? Sign::positive : Sign::negative;
      next = 4;
    } else {
      throw fail(2, "unknown companion kind '" + tok[2] + "'");
    }
  } else {
    throw fail(0, "unknown header directive '" + tok[0] + "'");
  }
  if (next < tok.size() && tok[next] == "reversed") {
    role.reversed = true;
    ++next;
  }
  if (next < tok.size()) throw fail(next, "unexpected token '" + tok[next] + "'");
  return role;
}

}  // namespace detail

inline FrontDocument parse_front(std::string_view text) {
  FrontDocument doc;
  bool in_events = false;
  int line_no = 0;
  int strands = 0;
  int last_line = 1, last_col = 1;
  std::set<std::string> names;

  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);

    std::vector<int> cols;
    std::vector<std::string> tok = detail::split_tokens(line, cols);
    if (tok.empty()) {
      if (end == text.size()) break;
      continue;
    }
    std::size_t first = 0;
    if (!in_events) {
      if (tok[0] == "events:") {
        in_events = true;
        first = 1;
      } else {
        ComponentRole role = detail::parse_role(tok, cols, line_no);
        if (!names.insert(role.name).second) throw FrontError(line_no, cols[1], "duplicate name '" + role.name + "'");
        doc.roles.push_back(std::move(role));
        continue;
      }
    }
    for (std::size_t i = first; i < tok.size(); ++i) {
      const std::string& t = tok[i];
      const int col = cols[i];
      if (t.size() < 2 || (t[0] != 'L' && t[0] != 'R' && t[0] != 'X') ||
          t.find_first_not_of("0123456789", 1) != std::string::npos || t.size() > 7)
        throw FrontError(line_no, col, "bad event token '" + t + "' (expected L<p>, R<p> or X<p>)");
      const int p = std::stoi(t.substr(1));
      FrontEvent e{t[0] == 'L' ? EventKind::left_cusp : t[0] == 'R' ? EventKind::right_cusp : EventKind::crossing, p,
                   line_no, col};
      if (e.kind == EventKind::left_cusp) {
        if (p < 1 || p > strands + 1)
          throw FrontError(line_no, col, t + ": left cusp position must be in 1.." + std::to_string(strands + 1));
        strands += 2;
      } else {
        if (p < 1 || p > strands - 1)
          throw FrontError(line_no, col,
                           t + ": position must be in 1.." + std::to_string(strands - 1) + " with " +
                               std::to_string(strands) + " strands");
        if (e.kind == EventKind::right_cusp) strands -= 2;
      }
      doc.events.push_back(e);
      last_line = line_no;
      last_col = col + static_cast<int>(t.size());
    }
    if (end == text.size()) break;
  }
  if (!in_events) throw FrontError(line_no, 1, "missing 'events:' line");
  if (strands != 0)
    throw FrontError(last_line, last_col, "front is not closed: " + std::to_string(strands) + " strands remain open");

  const std::size_t n = detail::trace_events(doc.events).components.size();
  if (doc.roles.size() > n)
    throw FrontError(doc.roles[n].line, 1,
                     "role line for '" + doc.roles[n].name + "' but the front has only " + std::to_string(n) +
                         " component(s)");
  return doc;
}

struct FrontComponentInvariants {
  std::string name;
  std::int64_t writhe = 0;
  std::int64_t cusps = 0;
  std::int64_t tb = 0;
  std::int64_t rot = 0;
};

struct FrontInvariants {
  std::vector<FrontComponentInvariants> components;
  std::vector<std::vector<std::int64_t>> lk;
};

/// tb = writhe - cusps/2, rot = (down cusps - up cusps)/2, lk = half the
/// signed count of mutual crossings.
inline FrontInvariants classical_invariants(const FrontDocument& doc) {
  FrontTrace t = detail::trace_events(doc.events);
  const std::size_t n = t.components.size();
  for (std::size_t c = 0; c < doc.roles.size() && c < n; ++c) {
    if (!doc.roles[c].reversed) continue;
    for (auto& s : t.strands)
      if (s.component == c) s.direction = -s.direction;
    std::swap(t.components[c].down_cusps, t.components[c].up_cusps);
  }

  FrontInvariants out;
  out.lk.assign(n, std::vector<std::int64_t>(n, 0));
  out.components.resize(n);
  for (const auto& x : t.crossings) {
    const std::size_t a = t.strands[x.over].component, b = t.strands[x.under].component;
    const int sign = t.crossing_sign(x);
    if (a == b) {
      out.components[a].writhe += sign;
    } else {
      out.lk[a][b] += sign;
      out.lk[b][a] += sign;
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    auto& c = out.components[i];
    c.name = i < doc.roles.size() ? doc.roles[i].name : "K" + std::to_string(i + 1);
    c.cusps = t.components[i].down_cusps + t.components[i].up_cusps;
    c.tb = c.writhe - c.cusps / 2;
    c.rot = (t.components[i].down_cusps - t.components[i].up_cusps) / 2;
    for (std::size_t j = 0; j < n; ++j) out.lk[i][j] /= 2;
  }
  return out;
}

/// Surgery components become the link, in trace order; Legendrian
/// companions become knots. Transverse companions have no front and are
/// rejected.
inline SurgeryDiagram to_diagram(const FrontDocument& doc) {
  const FrontInvariants inv = classical_invariants(doc);
  const std::size_t n = inv.components.size();
  if (doc.roles.size() < n)
    throw std::invalid_argument("component " + std::to_string(doc.roles.size() + 1) +
                                " has no role line (surgery or companion)");
  std::vector<std::size_t> link;
  for (std::size_t i = 0; i < n; ++i) {
    const auto& role = doc.roles[i];
    if (role.kind == RoleKind::transverse_companion)
      throw std::invalid_argument("transverse companion '" + role.name +
                                  "' cannot be drawn as a front; enter it numerically in a diagram file");
    if (role.kind == RoleKind::surgery) {
      if (!role.coeff) throw std::invalid_argument("surgery component '" + role.name + "' has no coefficient");
      link.push_back(i);
    }
  }
  SurgeryDiagram d;
  for (std::size_t i : link)
    d.components.push_back({inv.components[i].name, inv.components[i].tb, inv.components[i].rot, *doc.roles[i].coeff});
  d.linking.assign(link.size(), std::vector<std::int64_t>(link.size(), 0));
  for (std::size_t a = 0; a < link.size(); ++a)
    for (std::size_t b = 0; b < link.size(); ++b) d.linking[a][b] = a == b ? 0 : inv.lk[link[a]][link[b]];
  for (std::size_t i = 0; i < n; ++i) {
    if (doc.roles[i].kind != RoleKind::legendrian_companion) continue;
    CompanionKnot knot{inv.components[i].name, LegendrianKnotData{inv.components[i].tb, inv.components[i].rot}, {}};
    for (std::size_t j : link) knot.lk.push_back(inv.lk[i][j]);
    d.knots.push_back(std::move(knot));
  }
  return d;
}

inline std::string render_front(const FrontDocument& doc) {
  std::ostringstream os;
  for (const auto& r : doc.roles) {
    switch (r.kind) {
      case RoleKind::surgery:
        os << "surgery " << r.name << " coeff " << (r.coeff ? r.coeff->str() : "+1");
        break;
      case RoleKind::legendrian_companion:
        os << "companion " << r.name << " legendrian";
        break;
      case RoleKind::transverse_companion:
        os << "companion " << r.name << " transverse " << (r.transverse_sign == Sign::positive ? "positive" : "negative");
        break;
    }
    if (r.reversed) os << " reversed";
    os << '\n';
  }
  os << "events:";
  for (std::size_t i = 0; i < doc.events.size(); ++i) {
    if (i > 0 && i % 16 == 0) os << '\n';
    const auto& e = doc.events[i];
    os << ' ' << (e.kind == EventKind::left_cusp ? 'L' : e.kind == EventKind::right_cusp ? 'R' : 'X') << e.position;
  }
  os << '\n';
  return os.str();
}

}  // namespace surgeon

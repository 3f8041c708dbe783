#include "tdm/formats.hpp"

#include "tdm/errors.hpp"

#include <json.hpp>

#include <fstream>
#include <map>
#include <sstream>
#include <vector>

namespace tdm {

namespace {

// Non-comment lines split into tokens.
std::vector<std::vector<std::string>> tokenize(std::istream& in) {
  std::vector<std::vector<std::string>> lines;
  std::string line;
  while (std::getline(in, line)) {
    if (auto p = line.find('#'); p != std::string::npos) line.erase(p);
    std::istringstream ss(line);
    std::vector<std::string> toks;
    std::string t;
    while (ss >> t) toks.push_back(t);
    if (!toks.empty()) lines.push_back(std::move(toks));
  }
  return lines;
}

Rational rat(const std::string& s) {
  try {
    return parse_rational(s);
  } catch (const std::exception&) {
    throw InputError("bad number '" + s + "'");
  }
}

int integer(const std::string& s) {
  std::size_t used = 0;
  int v = 0;
  try {
    v = std::stoi(s, &used);
  } catch (const std::exception&) {
    throw InputError("bad integer '" + s + "'");
  }
  if (used != s.size()) throw InputError("bad integer '" + s + "'");
  return v;
}

std::string strip_colon(std::string s) {
  if (!s.empty() && s.back() == ':') s.pop_back();
  return s;
}

std::string fmt(const Rational& q) {
  return is_integral(q) ? to_string(num(q)) : to_string(q);
}

}  // namespace

IPInstance parse_ip(std::istream& in) {
  auto lines = tokenize(in);
  if (lines.empty() || lines[0].size() != 3 || lines[0][0] != "IP") throw InputError("IP: header 'IP m n' expected");
  const int m = integer(lines[0][1]), n = integer(lines[0][2]);
  if (m < 0 || n < 1) throw InputError("IP: bad dimensions");
  if (static_cast<int>(lines.size()) < m + 3) throw InputError("IP: truncated file");
  std::vector<RVec> rows;
  for (int i = 0; i < m; ++i) {
    const auto& l = lines[1 + i];
    if (static_cast<int>(l.size()) != n) throw InputError("IP: row " + std::to_string(i) + " needs " + std::to_string(n) + " entries");
    RVec r;
    for (const auto& t : l) r.push_back(rat(t));
    rows.push_back(r);
  }
  IPInstance ip;
  ip.A = RationalMatrix::from_rows(rows, n);
  auto vec = [&](const std::vector<std::string>& l, const char* tag, int len) {
    if (l[0] != tag || static_cast<int>(l.size()) != len + 1)
      throw InputError(std::string("IP: line '") + tag + "' with " + std::to_string(len) + " entries expected");
    return std::vector<std::string>(l.begin() + 1, l.end());
  };
  for (const auto& t : vec(lines[1 + m], "RHS", m)) ip.b.push_back(rat(t));
  for (const auto& t : vec(lines[2 + m], "OBJ", n)) ip.w.push_back(rat(t));
  for (std::size_t k = m + 3; k < lines.size(); ++k) {
    const auto& l = lines[k];
    if (l[0] != "LB" && l[0] != "UB") throw InputError("IP: unexpected line '" + l[0] + "'");
    auto& dst = l[0] == "LB" ? ip.lower : ip.upper;
    if (!dst.empty()) throw InputError("IP: duplicate " + l[0] + " line");
    for (const auto& t : vec(l, l[0].c_str(), n)) {
      if (t == "inf" || t == "-inf" || t == "+inf") dst.emplace_back();
      else dst.emplace_back(rat(t));
    }
  }
  try {
    ip.validate();
  } catch (const std::exception& e) {
    throw InputError(std::string("IP: ") + e.what());
  }
  return ip;
}

std::string write_ip(const IPInstance& ip) {
  std::ostringstream os;
  os << "IP " << ip.m() << ' ' << ip.n() << '\n';
  for (std::size_t i = 0; i < ip.m(); ++i) {
    for (std::size_t j = 0; j < ip.n(); ++j) os << (j ? " " : "") << fmt(ip.A(i, j));
    os << '\n';
  }
  os << "RHS";
  for (const auto& q : ip.b) os << ' ' << fmt(q);
  os << "\nOBJ";
  for (const auto& q : ip.w) os << ' ' << fmt(q);
  os << '\n';
  auto bounds = [&](const char* tag, const std::vector<OptQ>& v, const char* inf) {
    if (v.empty()) return;
    os << tag;
    for (const auto& q : v) os << ' ' << (q ? fmt(*q) : inf);
    os << '\n';
  };
  bounds("LB", ip.lower, "-inf");
  bounds("UB", ip.upper, "inf");
  return os.str();
}

GraphFile parse_graph(std::istream& in) {
  auto lines = tokenize(in);
  if (lines.empty() || lines[0].size() != 3 || lines[0][0] != "GRAPH") throw InputError("GRAPH: header 'GRAPH n m' expected");
  const int n = integer(lines[0][1]), m = integer(lines[0][2]);
  if (n < 0 || m < 0) throw InputError("GRAPH: bad dimensions");
  GraphFile gf;
  gf.g = Graph(n);
  for (std::size_t k = 1; k < lines.size(); ++k) {
    const auto& l = lines[k];
    if (l[0] == "E") {
      if (l.size() != 3 && l.size() != 4) throw InputError("GRAPH: 'E u v [cost]' expected");
      int u = integer(l[1]), v = integer(l[2]);
      if (u < 0 || v < 0 || u >= n || v >= n) throw InputError("GRAPH: vertex out of range");
      try {
        gf.g.add_edge(u, v);
      } catch (const std::exception& e) {
        throw InputError(std::string("GRAPH: ") + e.what());
      }
      gf.cost.push_back(l.size() == 4 ? rat(l[3]) : Rational(0));
      if (l.size() == 4) gf.has_cost = true;
    } else if (l[0] == "VW") {
      if (l.size() != 3) throw InputError("GRAPH: 'VW v w' expected");
      int v = integer(l[1]);
      if (v < 0 || v >= n) throw InputError("GRAPH: vertex out of range");
      if (gf.vweight.empty()) gf.vweight.assign(n, 0);
      gf.vweight[v] = rat(l[2]);
    } else {
      throw InputError("GRAPH: unexpected line '" + l[0] + "'");
    }
  }
  if (gf.g.m() != m) throw InputError("GRAPH: header announces " + std::to_string(m) + " edges");
  return gf;
}

std::string write_graph(const GraphFile& gf) {
  std::ostringstream os;
  os << "GRAPH " << gf.g.n() << ' ' << gf.g.m() << '\n';
  for (int e = 0; e < gf.g.m(); ++e) {
    os << "E " << gf.g.edge(e).first << ' ' << gf.g.edge(e).second;
    if (gf.has_cost) os << ' ' << fmt(gf.cost[e]);
    os << '\n';
  }
  for (std::size_t v = 0; v < gf.vweight.size(); ++v) os << "VW " << v << ' ' << fmt(gf.vweight[v]) << '\n';
  return os.str();
}

std::string write_graph(const Graph& g) {
  GraphFile gf;
  gf.g = g;
  return write_graph(gf);
}

EmbeddedGraph parse_embed(std::istream& in) {
  auto lines = tokenize(in);
  if (lines.empty() || lines[0].size() != 3 || lines[0][0] != "EMBED") throw InputError("EMBED: header 'EMBED n m' expected");
  const int n = integer(lines[0][1]), m = integer(lines[0][2]);
  if (n < 1 || m < 0) throw InputError("EMBED: bad dimensions");
  std::vector<std::vector<int>> rot(n);
  std::vector<char> have_rot(n, 0);
  std::vector<int> sig(m, 0);
  std::vector<std::vector<int>> ends(m);
  for (std::size_t k = 1; k < lines.size(); ++k) {
    const auto& l = lines[k];
    if (l.size() < 2) throw InputError("EMBED: short line");
    if (l[0] == "ROT") {
      int v = integer(strip_colon(l[1]));
      if (v < 0 || v >= n || have_rot[v]) throw InputError("EMBED: bad or repeated ROT vertex");
      have_rot[v] = 1;
      for (std::size_t t = 2; t < l.size(); ++t) {
        int e = integer(l[t]);
        if (e < 0 || e >= m) throw InputError("EMBED: edge id out of range");
        rot[v].push_back(e);
        ends[e].push_back(v);
      }
    } else if (l[0] == "SIG") {
      if (l.size() != 3) throw InputError("EMBED: 'SIG e: +1|-1' expected");
      int e = integer(strip_colon(l[1]));
      if (e < 0 || e >= m) throw InputError("EMBED: edge id out of range");
      if (l[2] == "+1" || l[2] == "1") sig[e] = 1;
      else if (l[2] == "-1") sig[e] = -1;
      else throw InputError("EMBED: signature must be +1 or -1");
    } else {
      throw InputError("EMBED: unexpected line '" + l[0] + "'");
    }
  }
  EmbeddedGraph eg;
  eg.g = Graph(n);
  for (int e = 0; e < m; ++e) {
    if (ends[e].size() != 2) throw InputError("EMBED: edge " + std::to_string(e) + " must appear in two rotations");
    if (sig[e] == 0) throw InputError("EMBED: edge " + std::to_string(e) + " has no signature");
    try {
      eg.g.add_edge(ends[e][0], ends[e][1]);
    } catch (const std::exception& ex) {
      throw InputError(std::string("EMBED: ") + ex.what());
    }
  }
  eg.rotation = rot;
  eg.signature = sig;
  eg.validate();
  return eg;
}

std::string write_embed(const EmbeddedGraph& eg) {
  std::ostringstream os;
  os << "EMBED " << eg.g.n() << ' ' << eg.g.m() << '\n';
  for (int v = 0; v < eg.g.n(); ++v) {
    os << "ROT " << v << ':';
    for (int e : eg.rotation[v]) os << ' ' << e;
    os << '\n';
  }
  for (int e = 0; e < eg.g.m(); ++e) os << "SIG " << e << ": " << (eg.signature[e] > 0 ? "+1" : "-1") << '\n';
  return os.str();
}

namespace {

std::ifstream open(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw InputError("cannot open '" + path + "'");
  return f;
}

}  // namespace

IPInstance load_ip(const std::string& path) {
  auto f = open(path);
  return parse_ip(f);
}

GraphFile load_graph(const std::string& path) {
  auto f = open(path);
  return parse_graph(f);
}

EmbeddedGraph load_embed(const std::string& path) {
  auto f = open(path);
  return parse_embed(f);
}

std::string ip_result_to_json(const IPResult& r, int indent) {
  nlohmann::ordered_json j;
  j["status"] = to_string(r.status);
  if (r.status == IPStatus::optimal) j["objective"] = to_string(r.objective);
  else j["objective"] = nullptr;
  auto sol = nlohmann::ordered_json::array();
  for (const auto& x : r.x) sol.push_back(to_string(Rational(x)));
  j["solution"] = sol;
  j["guesses_explored"] = r.guesses_explored;
  return j.dump(indent);
}

IPResult ip_result_from_json(const std::string& text) {
  IPResult r;
  try {
    auto j = nlohmann::json::parse(text);
    const auto st = j.at("status").get<std::string>();
    if (st == "optimal") r.status = IPStatus::optimal;
    else if (st == "infeasible") r.status = IPStatus::infeasible;
    else if (st == "unbounded") r.status = IPStatus::unbounded;
    else throw InputError("unknown status '" + st + "'");
    if (!j.at("objective").is_null()) r.objective = parse_rational(j["objective"].get<std::string>());
    for (const auto& s : j.at("solution")) {
      Rational q = parse_rational(s.get<std::string>());
      if (!is_integral(q)) throw InputError("fractional solution entry");
      r.x.push_back(num(q));
    }
    r.guesses_explored = j.at("guesses_explored").get<std::size_t>();
  } catch (const nlohmann::json::exception& e) {
    throw InputError(std::string("json: ") + e.what());
  }
  return r;
}

}  // namespace tdm

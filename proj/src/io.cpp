#include "vpfix/io.hpp"

#include <cerrno>
#include <cstdio>
#include <cstring>
#include <fstream>
#include <sstream>
#include <vector>

#include "vpfix/errors.hpp"

namespace vpfix {

namespace {

std::string at_line(int line, const std::string& what) {
  return "line " + std::to_string(line) + ": " + what;
}

// Comment-stripped nonblank lines with their 1-based source numbers.
struct Line {
  int number;
  std::vector<long long> fields;
};

std::vector<Line> tokenize(const std::string& text) {
  std::vector<Line> lines;
  std::istringstream in(text);
  std::string raw;
  int number = 0;
  while (std::getline(in, raw)) {
    ++number;
    size_t hash = raw.find('#');
    if (hash != std::string::npos) raw.erase(hash);
    std::istringstream ls(raw);
    Line line{number, {}};
    std::string tok;
    while (ls >> tok) {
      try {
        size_t used = 0;
        line.fields.push_back(std::stoll(tok, &used));
        if (used != tok.size()) throw std::invalid_argument(tok);
      } catch (const std::exception&) {
        throw ParseError(at_line(number, "expected an integer, got '" + tok + "'"));
      }
    }
    if (!line.fields.empty()) lines.push_back(line);
  }
  return lines;
}

// Header "word a b ..." with a fixed keyword and field count.
std::vector<long long> header(const std::string& text, const char* keyword,
                              int fields, std::vector<Line>& body) {
  std::istringstream in(text);
  std::string raw;
  int number = 0;
  while (std::getline(in, raw)) {
    ++number;
    size_t hash = raw.find('#');
    if (hash != std::string::npos) raw.erase(hash);
    std::istringstream ls(raw);
    std::string word;
    if (!(ls >> word)) continue;
    if (word != keyword)
      throw ParseError(at_line(number, std::string("expected header '") +
                                           keyword + "', got '" + word + "'"));
    std::vector<long long> vals;
    long long v;
    while (ls >> v) vals.push_back(v);
    if (static_cast<int>(vals.size()) != fields || !ls.eof())
      throw ParseError(at_line(number, std::string("header '") + keyword +
                                           "' needs exactly " +
                                           std::to_string(fields) + " fields"));
    // the remainder of the text is the body
    std::string rest, chunk;
    while (std::getline(in, chunk)) rest += chunk + "\n";
    body = tokenize(rest);
    for (auto& b : body) b.number += number;
    return vals;
  }
  throw ParseError(std::string("missing header line '") + keyword + "'");
}

}  // namespace

std::string format_digraph(const Digraph& g) {
  std::string out = "digraph " + std::to_string(g.vertex_count()) + "\n";
  for (const auto& [u, v] : g.arcs())
    out += std::to_string(u) + " " + std::to_string(v) + "\n";
  return out;
}

Digraph parse_digraph(const std::string& text) {
  std::vector<Line> body;
  std::vector<long long> h = header(text, "digraph", 1, body);
  if (h[0] < 0 || h[0] > 1'000'000)
    throw ParseError("vertex count out of range");
  const int n = static_cast<int>(h[0]);
  Digraph g(n);
  for (const auto& line : body) {
    if (line.fields.size() != 2)
      throw ParseError(at_line(line.number, "arc lines are 'u v'"));
    long long u = line.fields[0], v = line.fields[1];
    if (u < 0 || u >= n || v < 0 || v >= n)
      throw ParseError(at_line(line.number, "arc endpoint out of range"));
    if (g.arc(static_cast<int>(u), static_cast<int>(v)))
      throw ParseError(at_line(line.number, "duplicate arc"));
    g.set_arc(static_cast<int>(u), static_cast<int>(v));
  }
  return g;
}

std::string format_perm_group(const PermutationGroup& g) {
  std::string out = "permgroup " + std::to_string(g.degree()) + " " +
                    std::to_string(g.generators().size()) + "\n";
  for (const auto& p : g.generators()) {
    for (int i = 0; i < p.degree(); ++i) {
      if (i) out += " ";
      out += std::to_string(p[i]);
    }
    out += "\n";
  }
  return out;
}

PermutationGroup parse_perm_group(const std::string& text,
                                  unsigned long long element_cap) {
  std::vector<Line> body;
  std::vector<long long> h = header(text, "permgroup", 2, body);
  if (h[0] < 1 || h[0] > 1'000'000)
    throw ParseError("permutation degree out of range");
  if (h[1] < 0 || h[1] != static_cast<long long>(body.size()))
    throw ParseError("generator count does not match the generator lines");
  const int degree = static_cast<int>(h[0]);
  std::vector<Permutation> gens;
  for (const auto& line : body) {
    if (static_cast<int>(line.fields.size()) != degree)
      throw ParseError(at_line(line.number, "generator needs one image per point"));
    std::vector<int> images;
    for (long long v : line.fields) {
      if (v < 0 || v >= degree)
        throw ParseError(at_line(line.number, "image out of range"));
      images.push_back(static_cast<int>(v));
    }
    try {
      gens.push_back(Permutation::from_images(std::move(images)));
    } catch (const DomainError& e) {
      throw ParseError(at_line(line.number, e.what()));
    }
  }
  return PermutationGroup(degree, std::move(gens), element_cap);
}

std::string format_jset(const JSet& j) {
  std::string out =
      "jset " + std::to_string(j.r()) + " " + std::to_string(j.k()) + "\n";
  for (const auto& t : j.tuples()) {
    for (size_t i = 0; i < t.size(); ++i) {
      if (i) out += " ";
      out += std::to_string(t[i]);
    }
    out += "\n";
  }
  return out;
}

JSet parse_jset(const std::string& text) {
  std::vector<Line> body;
  std::vector<long long> h = header(text, "jset", 2, body);
  if (h[0] < 1 || h[0] > 64 || h[1] < 0 || h[1] > 1'000'000)
    throw ParseError("jset arity or alphabet bound out of range");
  const int r = static_cast<int>(h[0]), k = static_cast<int>(h[1]);
  std::vector<std::vector<int>> tuples;
  for (const auto& line : body) {
    if (static_cast<int>(line.fields.size()) != r)
      throw ParseError(at_line(line.number, "tuple needs exactly r entries"));
    std::vector<int> t;
    for (long long v : line.fields) {
      if (v < 0 || v > k)
        throw ParseError(at_line(line.number, "tuple entry out of range"));
      t.push_back(static_cast<int>(v));
    }
    tuples.push_back(std::move(t));
  }
  try {
    return JSet(r, k, std::move(tuples));
  } catch (const DomainError& e) {
    throw ParseError(e.what());
  }
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open '" + path + "' for reading");
  std::ostringstream buf;
  buf << in.rdbuf();
  if (in.bad()) throw ParseError("read error on '" + path + "'");
  return buf.str();
}

void write_text_file_atomic(const std::string& path, const std::string& text) {
  const std::string tmp = path + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw Error("cannot open '" + tmp + "' for writing");
    out << text;
    out.flush();
    if (!out) throw Error("write error on '" + tmp + "'");
  }
  if (std::rename(tmp.c_str(), path.c_str()) != 0) {
    std::remove(tmp.c_str());
    throw Error("cannot move '" + tmp + "' to '" + path +
                "': " + std::strerror(errno));
  }
}

Digraph read_digraph(const std::string& path) {
  return parse_digraph(read_text_file(path));
}

void write_digraph(const std::string& path, const Digraph& g) {
  write_text_file_atomic(path, format_digraph(g));
}

PermutationGroup read_perm_group(const std::string& path,
                                 unsigned long long element_cap) {
  return parse_perm_group(read_text_file(path), element_cap);
}

void write_perm_group(const std::string& path, const PermutationGroup& g) {
  write_text_file_atomic(path, format_perm_group(g));
}

JSet read_jset(const std::string& path) {
  return parse_jset(read_text_file(path));
}

void write_jset(const std::string& path, const JSet& j) {
  write_text_file_atomic(path, format_jset(j));
}

}  // namespace vpfix

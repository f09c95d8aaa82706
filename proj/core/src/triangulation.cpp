#include "kneser/triangulation.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <queue>
#include <sstream>

#include "kneser/error.hpp"

namespace kneser {

namespace {

std::string where(int tet, int face) {
  return "(tet " + std::to_string(tet) + ", face " + std::to_string(face) + ")";
}

class UnionFind {
 public:
  explicit UnionFind(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }
  std::size_t find(std::size_t x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }
  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a < b) std::swap(a, b);
    parent_[a] = b;
  }

 private:
  std::vector<std::size_t> parent_;
};

// Sign of the sequence (x, y, z) of distinct integers relative to sorted order.
int order_sign(int x, int y, int z) {
  int inv = (x > y) + (x > z) + (y > z);
  return inv % 2 == 0 ? 1 : -1;
}

std::array<int, 3> face_vertices(int f) {
  std::array<int, 3> out{};
  int k = 0;
  for (int v = 0; v < 4; ++v)
    if (v != f) out[static_cast<std::size_t>(k++)] = v;
  return out;
}

}  // namespace

SkeletonTable compute_skeleton(const GluingTable& table) {
  const int n = table.size();
  SkeletonTable sk;
  sk.num_tetrahedra = n;
  const auto un = static_cast<std::size_t>(n);
  sk.vertex_of.assign(un, {});
  sk.edge_of.assign(un, {});
  sk.edge_sign.assign(un, {});
  sk.face_of.assign(un, {});
  sk.face_sign.assign(un, {});

  // Vertices: plain union-find; orbits are numbered by least member.
  UnionFind uf(un * 4);
  for (int t = 0; t < n; ++t)
    for (int f = 0; f < 4; ++f)
      if (const auto& g = table.at(t, f))
        for (int v = 0; v < 4; ++v)
          if (v != f)
            uf.unite(static_cast<std::size_t>(t * 4 + v),
                     static_cast<std::size_t>(g->tet * 4 + g->perm[v]));
  {
    std::vector<int> id(un * 4, -1);
    for (int t = 0; t < n; ++t)
      for (int v = 0; v < 4; ++v) {
        auto root = uf.find(static_cast<std::size_t>(t * 4 + v));
        if (id[root] < 0) {
          id[root] = sk.num_vertices++;
          sk.vertex_members.emplace_back();
        }
        sk.vertex_of[static_cast<std::size_t>(t)][static_cast<std::size_t>(v)] = id[root];
        sk.vertex_members[static_cast<std::size_t>(id[root])].emplace_back(t, v);
      }
  }

  // Edges: breadth-first propagation carrying relative direction.
  {
    std::vector<std::vector<std::pair<int, int>>> adj(un * 6);  // (node, sign)
    for (int t = 0; t < n; ++t)
      for (int f = 0; f < 4; ++f) {
        const auto& g = table.at(t, f);
        if (!g) continue;
        for (int e = 0; e < 6; ++e) {
          const int a = kEdgeVertices[static_cast<std::size_t>(e)][0];
          const int b = kEdgeVertices[static_cast<std::size_t>(e)][1];
          if (a == f || b == f) continue;
          const int pa = g->perm[a];
          const int pb = g->perm[b];
          adj[static_cast<std::size_t>(t * 6 + e)].emplace_back(g->tet * 6 + edge_index(pa, pb),
                                                                 pa < pb ? 1 : -1);
        }
      }
    std::vector<int> orbit(un * 6, -1);
    std::vector<int> sign(un * 6, 0);
    for (int start = 0; start < n * 6; ++start) {
      if (orbit[static_cast<std::size_t>(start)] >= 0) continue;
      const int id = sk.num_edges++;
      sk.edge_members.emplace_back();
      std::queue<int> q;
      orbit[static_cast<std::size_t>(start)] = id;
      sign[static_cast<std::size_t>(start)] = 1;
      q.push(start);
      while (!q.empty()) {
        int x = q.front();
        q.pop();
        for (auto [y, s] : adj[static_cast<std::size_t>(x)]) {
          const int want = sign[static_cast<std::size_t>(x)] * s;
          if (orbit[static_cast<std::size_t>(y)] < 0) {
            orbit[static_cast<std::size_t>(y)] = id;
            sign[static_cast<std::size_t>(y)] = want;
            q.push(y);
          } else if (sign[static_cast<std::size_t>(y)] != want) {
            sk.edges_valid = false;
          }
        }
      }
    }
    std::vector<std::vector<std::pair<int, int>>> members(static_cast<std::size_t>(sk.num_edges));
    for (int t = 0; t < n; ++t)
      for (int e = 0; e < 6; ++e) {
        const auto node = static_cast<std::size_t>(t * 6 + e);
        sk.edge_of[static_cast<std::size_t>(t)][static_cast<std::size_t>(e)] = orbit[node];
        sk.edge_sign[static_cast<std::size_t>(t)][static_cast<std::size_t>(e)] =
            static_cast<std::int8_t>(sign[node]);
        members[static_cast<std::size_t>(orbit[node])].emplace_back(t, e);
      }
    sk.edge_members = std::move(members);
    sk.edge_degree.resize(static_cast<std::size_t>(sk.num_edges));
    for (int e = 0; e < sk.num_edges; ++e)
      sk.edge_degree[static_cast<std::size_t>(e)] =
          static_cast<int>(sk.edge_members[static_cast<std::size_t>(e)].size());
  }

  // Faces: each orbit has one or two members.
  {
    std::vector<std::array<bool, 4>> done(un, {false, false, false, false});
    for (int t = 0; t < n; ++t)
      for (int f = 0; f < 4; ++f) {
        if (done[static_cast<std::size_t>(t)][static_cast<std::size_t>(f)]) continue;
        const int id = sk.num_faces++;
        sk.face_members.push_back({{t, f}});
        done[static_cast<std::size_t>(t)][static_cast<std::size_t>(f)] = true;
        sk.face_of[static_cast<std::size_t>(t)][static_cast<std::size_t>(f)] = id;
        sk.face_sign[static_cast<std::size_t>(t)][static_cast<std::size_t>(f)] = 1;
        const auto& g = table.at(t, f);
        if (!g || (g->tet == t && g->face == f)) continue;
        const auto fv = face_vertices(f);
        const int s = order_sign(g->perm[fv[0]], g->perm[fv[1]], g->perm[fv[2]]);
        done[static_cast<std::size_t>(g->tet)][static_cast<std::size_t>(g->face)] = true;
        sk.face_of[static_cast<std::size_t>(g->tet)][static_cast<std::size_t>(g->face)] = id;
        sk.face_sign[static_cast<std::size_t>(g->tet)][static_cast<std::size_t>(g->face)] =
            static_cast<std::int8_t>(s);
        sk.face_members.back().emplace_back(g->tet, g->face);
      }
  }
  return sk;
}

Triangulation validate(const GluingTable& table, Requirements req, std::vector<std::string> labels) {
  const int n = table.size();
  for (int t = 0; t < n; ++t)
    for (int f = 0; f < 4; ++f) {
      const auto& g = table.at(t, f);
      if (!g) continue;
      if (g->tet < 0 || g->tet >= n || g->face < 0 || g->face > 3 || !g->perm.is_permutation())
        throw Error(ErrorCode::NonInvolutiveGluing, "gluing target out of range at " + where(t, f));
      if (g->tet == t && g->face == f)
        throw Error(ErrorCode::SelfGluedFace, "face glued to itself at " + where(t, f));
      if (g->perm[f] != g->face)
        throw Error(ErrorCode::NonInvolutiveGluing,
                    "permutation does not carry the face to its partner at " + where(t, f));
      const auto& back = table.at(g->tet, g->face);
      if (!back || back->tet != t || back->face != f || !(back->perm == g->perm.inverse()))
        throw Error(ErrorCode::NonInvolutiveGluing, "gluing is not involutive at " + where(t, f));
    }

  Triangulation tri;
  tri.table_ = table;
  tri.labels_ = std::move(labels);
  tri.labels_.resize(static_cast<std::size_t>(n));

  tri.closed_ = true;
  int first_open_tet = -1;
  int first_open_face = -1;
  for (int t = 0; t < n && tri.closed_; ++t)
    for (int f = 0; f < 4; ++f)
      if (!table.at(t, f)) {
        tri.closed_ = false;
        first_open_tet = t;
        first_open_face = f;
        break;
      }

  // Orientation by breadth-first search over the dual graph; a coherent
  // assignment makes every gluing permutation odd relative to it.
  std::vector<std::int8_t> orient(static_cast<std::size_t>(n), 0);
  tri.orientable_ = true;
  int bad_tet = -1;
  int bad_face = -1;
  for (int start = 0; start < n; ++start) {
    if (orient[static_cast<std::size_t>(start)] != 0) continue;
    ++tri.num_components_;
    orient[static_cast<std::size_t>(start)] = 1;
    std::queue<int> q;
    q.push(start);
    while (!q.empty()) {
      int t = q.front();
      q.pop();
      for (int f = 0; f < 4; ++f) {
        const auto& g = table.at(t, f);
        if (!g) continue;
        const int want = -orient[static_cast<std::size_t>(t)] * g->perm.sign();
        auto& o = orient[static_cast<std::size_t>(g->tet)];
        if (o == 0) {
          o = static_cast<std::int8_t>(want);
          q.push(g->tet);
        } else if (o != want && tri.orientable_) {
          tri.orientable_ = false;
          bad_tet = t;
          bad_face = f;
        }
      }
    }
  }
  if (tri.orientable_) tri.orientation_ = std::move(orient);

  if (req.orientable && !tri.orientable_)
    throw Error(ErrorCode::NonOrientable, "orientation conflict at " + where(bad_tet, bad_face));
  if (req.closed && !tri.closed_)
    throw Error(ErrorCode::NotClosed, "boundary face at " + where(first_open_tet, first_open_face));

  tri.skeleton_ = compute_skeleton(table);
  return tri;
}

std::vector<long long> vertex_link_euler(const Triangulation& tri) {
  const auto& sk = tri.skeleton();
  std::vector<long long> chi(static_cast<std::size_t>(sk.num_vertices), 0);
  for (const auto& members : sk.edge_members) {
    auto [t, e] = members.front();
    for (int end : kEdgeVertices[static_cast<std::size_t>(e)])
      ++chi[static_cast<std::size_t>(sk.vertex_of[static_cast<std::size_t>(t)][static_cast<std::size_t>(end)])];
  }
  for (const auto& members : sk.face_members) {
    auto [t, f] = members.front();
    for (int v : face_vertices(f))
      --chi[static_cast<std::size_t>(sk.vertex_of[static_cast<std::size_t>(t)][static_cast<std::size_t>(v)])];
  }
  for (int t = 0; t < tri.size(); ++t)
    for (int v = 0; v < 4; ++v)
      ++chi[static_cast<std::size_t>(sk.vertex_of[static_cast<std::size_t>(t)][static_cast<std::size_t>(v)])];
  return chi;
}

bool is_closed_manifold(const Triangulation& tri) {
  if (!tri.is_closed() || !tri.skeleton().edges_valid) return false;
  for (long long c : vertex_link_euler(tri))
    if (c != 2) return false;
  return true;
}

std::vector<int> component_labels(const Triangulation& tri) {
  const int n = tri.size();
  std::vector<int> comp(static_cast<std::size_t>(n), -1);
  int next = 0;
  for (int s = 0; s < n; ++s) {
    if (comp[static_cast<std::size_t>(s)] >= 0) continue;
    std::queue<int> q;
    q.push(s);
    comp[static_cast<std::size_t>(s)] = next;
    while (!q.empty()) {
      int t = q.front();
      q.pop();
      for (int f = 0; f < 4; ++f)
        if (const auto& g = tri.gluing(t, f); g && comp[static_cast<std::size_t>(g->tet)] < 0) {
          comp[static_cast<std::size_t>(g->tet)] = next;
          q.push(g->tet);
        }
    }
    ++next;
  }
  return comp;
}

GluingTable restrict_table(const GluingTable& table, const std::vector<int>& keep) {
  std::vector<int> remap(static_cast<std::size_t>(table.size()), -1);
  for (std::size_t i = 0; i < keep.size(); ++i) remap[static_cast<std::size_t>(keep[i])] = static_cast<int>(i);
  GluingTable out(static_cast<int>(keep.size()));
  for (std::size_t i = 0; i < keep.size(); ++i)
    for (int f = 0; f < 4; ++f) {
      const auto& g = table.at(keep[i], f);
      if (!g || remap[static_cast<std::size_t>(g->tet)] < 0) continue;
      out.set(static_cast<int>(i), f, Gluing{remap[static_cast<std::size_t>(g->tet)], g->face, g->perm});
    }
  return out;
}

std::vector<Triangulation> split_components(const Triangulation& tri, Requirements req) {
  const auto comp = component_labels(tri);
  const int ncomp = comp.empty() ? 0 : *std::max_element(comp.begin(), comp.end()) + 1;
  std::vector<std::vector<int>> members(static_cast<std::size_t>(ncomp));
  for (int t = 0; t < tri.size(); ++t) members[static_cast<std::size_t>(comp[static_cast<std::size_t>(t)])].push_back(t);
  std::vector<Triangulation> out;
  out.reserve(members.size());
  for (const auto& keep : members) {
    std::vector<std::string> labels;
    for (int t : keep) labels.push_back(tri.labels()[static_cast<std::size_t>(t)]);
    out.push_back(validate(restrict_table(tri.table(), keep), req, std::move(labels)));
  }
  return out;
}

Triangulation disjoint_union(const Triangulation& a, const Triangulation& b) {
  GluingTable out(a.size() + b.size());
  for (int t = 0; t < a.size(); ++t)
    for (int f = 0; f < 4; ++f) out.set(t, f, a.gluing(t, f));
  for (int t = 0; t < b.size(); ++t)
    for (int f = 0; f < 4; ++f)
      if (const auto& g = b.gluing(t, f))
        out.set(a.size() + t, f, Gluing{g->tet + a.size(), g->face, g->perm});
  std::vector<std::string> labels = a.labels();
  labels.insert(labels.end(), b.labels().begin(), b.labels().end());
  return validate(out, {}, std::move(labels));
}

// ---------------------------------------------------------------------------
// tri v1 text format

namespace {

std::vector<std::string_view> tokenize(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') ++j;
    if (j > i) out.push_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

int parse_int(std::string_view s, int line_no) {
  int value = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc() || ptr != s.data() + s.size() || s.empty())
    throw Error(ErrorCode::Parse, "line " + std::to_string(line_no) + ": expected integer, got '" +
                                      std::string(s) + "'");
  return value;
}

std::optional<Gluing> parse_token(std::string_view tok, int ntet, int line_no) {
  if (tok == "b") return std::nullopt;
  const auto bad = [&](const std::string& why) {
    return Error(ErrorCode::Parse,
                 "line " + std::to_string(line_no) + ": bad gluing token '" + std::string(tok) + "': " + why);
  };
  auto c1 = tok.find(':');
  if (c1 == std::string_view::npos) throw bad("missing ':'");
  auto c2 = tok.find(':', c1 + 1);
  if (c2 == std::string_view::npos) throw bad("missing second ':'");
  const int j = parse_int(tok.substr(0, c1), line_no);
  const int k = parse_int(tok.substr(c1 + 1, c2 - c1 - 1), line_no);
  auto ps = tok.substr(c2 + 1);
  if (ps.size() != 4) throw bad("permutation must have 4 digits");
  std::array<int, 4> p{};
  for (std::size_t i = 0; i < 4; ++i) {
    if (ps[i] < '0' || ps[i] > '3') throw bad("permutation digit out of range");
    p[i] = ps[i] - '0';
  }
  Perm4 perm(p[0], p[1], p[2], p[3]);
  if (!perm.is_permutation()) throw bad("not a permutation");
  if (j < 0 || j >= ntet) throw bad("target tetrahedron out of range");
  if (k < 0 || k > 3) throw bad("target face out of range");
  return Gluing{j, k, perm};
}

}  // namespace

GluingTable parse_tri(std::string_view text) {
  std::vector<std::pair<int, std::vector<std::string_view>>> lines;
  int line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    auto end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    ++line_no;
    auto line = text.substr(pos, end - pos);
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    auto toks = tokenize(line);
    if (!toks.empty()) lines.emplace_back(line_no, std::move(toks));
    if (end == text.size()) break;
    pos = end + 1;
  }
  if (lines.empty()) throw Error(ErrorCode::Parse, "empty input");
  if (lines[0].second.size() != 2 || lines[0].second[0] != "tri" || lines[0].second[1] != "1")
    throw Error(ErrorCode::Parse, "line " + std::to_string(lines[0].first) + ": expected header 'tri 1'");
  if (lines.size() < 2 || lines[1].second.size() != 2 || lines[1].second[0] != "ntet")
    throw Error(ErrorCode::Parse, "expected 'ntet <t>'");
  const int ntet = parse_int(lines[1].second[1], lines[1].first);
  if (ntet < 0) throw Error(ErrorCode::Parse, "negative tetrahedron count");
  if (static_cast<int>(lines.size()) - 2 < ntet)
    throw Error(ErrorCode::Parse, "expected " + std::to_string(ntet) + " tetrahedron lines");
  if (static_cast<int>(lines.size()) - 2 > ntet)
    throw Error(ErrorCode::Parse,
                "line " + std::to_string(lines[static_cast<std::size_t>(ntet) + 2].first) + ": trailing garbage");
  GluingTable table(ntet);
  for (int t = 0; t < ntet; ++t) {
    const auto& [no, toks] = lines[static_cast<std::size_t>(t) + 2];
    if (toks.size() != 4)
      throw Error(ErrorCode::Parse, "line " + std::to_string(no) + ": expected 4 face tokens");
    for (int f = 0; f < 4; ++f) table.set(t, f, parse_token(toks[static_cast<std::size_t>(f)], ntet, no));
  }
  return table;
}

std::string format_tri(const GluingTable& table) {
  std::ostringstream out;
  out << "tri 1\nntet " << table.size() << "\n";
  for (int t = 0; t < table.size(); ++t) {
    for (int f = 0; f < 4; ++f) {
      if (f) out << ' ';
      if (const auto& g = table.at(t, f))
        out << g->tet << ':' << g->face << ':' << g->perm.str();
      else
        out << 'b';
    }
    out << '\n';
  }
  return out.str();
}

}  // namespace kneser

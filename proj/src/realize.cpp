#include "tiling/realize.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <mutex>
#include <set>
#include <thread>

namespace tiling {

std::string to_string(Outcome o) {
  switch (o) {
  case Outcome::True:
    return "True";
  case Outcome::Counterexample:
    return "Counterexample";
  case Outcome::Vacuous:
    return "Vacuous";
  case Outcome::ResourceExceeded:
    return "ResourceExceeded";
  }
  return "?";
}

bool verify_configuration(const IncidenceMatrix &M, const Configuration &C) {
  if (static_cast<int>(C.points.size()) != M.rows() || static_cast<int>(C.lines.size()) != M.cols())
    throw Error("DimensionMismatch", "configuration has " + std::to_string(C.points.size()) + " points and " +
                                         std::to_string(C.lines.size()) + " lines, matrix is " +
                                         std::to_string(M.rows()) + "x" + std::to_string(M.cols()));
  GaloisField F(C.q);
  for (int r = 0; r < M.rows(); ++r)
    for (int c = 0; c < M.cols(); ++c) {
      Tri v = M.cell(r, c);
      if (v == Tri::Zero)
        continue;
      if (incident(F, C.points[r], C.lines[c]) != (v == Tri::PlusOne))
        return false;
    }
  return true;
}

bool conclusion_holds(const Configuration &C) {
  GaloisField F(C.q);
  return incident(F, C.points.at(0), C.lines.at(0));
}

namespace {

// Subsets of the (at most 91) projective triples.
struct Bits {
  uint64_t w[2] = {0, 0};
  bool empty() const { return !(w[0] | w[1]); }
  bool single() const {
    int c = __builtin_popcountll(w[0]) + __builtin_popcountll(w[1]);
    return c == 1;
  }
  void set(int i) { w[i >> 6] |= uint64_t(1) << (i & 63); }
  void reset(int i) { w[i >> 6] &= ~(uint64_t(1) << (i & 63)); }
  Bits operator&(const Bits &o) const { return {{w[0] & o.w[0], w[1] & o.w[1]}}; }
  Bits &operator&=(const Bits &o) {
    w[0] &= o.w[0];
    w[1] &= o.w[1];
    return *this;
  }
  template <class Fn> void each(Fn fn) const {
    for (int k = 0; k < 2; ++k) {
      uint64_t x = w[k];
      while (x) {
        int b = __builtin_ctzll(x);
        if (!fn(64 * k + b))
          return;
        x &= x - 1;
      }
    }
  }
  int first() const {
    if (w[0])
      return __builtin_ctzll(w[0]);
    if (w[1])
      return 64 + __builtin_ctzll(w[1]);
    return -1;
  }
};

struct Link {
  int other;
  bool plus;
};

// Points are variables 0..m-1, lines m..m+n-1; both range over the same
// index set of triples.
struct Problem {
  int q = 0, m = 0, n = 0, N = 0;
  std::vector<Coords> triples;
  std::vector<Bits> on, off; // on[x]: indices incident to triple x; off = complement
  Bits all;
  std::vector<std::vector<Link>> links; // per variable
  std::vector<int> order;               // search order
  std::vector<int> depth_of;

  Problem(const IncidenceMatrix &M, int q_, bool negate_conclusion) : q(q_), m(M.rows()), n(M.cols()) {
    GaloisField F(q);
    triples = projective_triples(F);
    N = static_cast<int>(triples.size());
    on.assign(N, Bits{});
    off.assign(N, Bits{});
    for (int x = 0; x < N; ++x) {
      all.set(x);
      for (int y = 0; y < N; ++y)
        if (dot(F, triples[x], triples[y]) == 0)
          on[x].set(y);
        else
          off[x].set(y);
    }
    int V = m + n;
    links.assign(V, {});
    for (int r = 0; r < m; ++r)
      for (int c = 0; c < n; ++c) {
        Tri v = M.cell(r, c);
        if (negate_conclusion && r == 0 && c == 0)
          v = Tri::MinusOne;
        if (v == Tri::Zero)
          continue;
        links[r].push_back({m + c, v == Tri::PlusOne});
        links[m + c].push_back({r, v == Tri::PlusOne});
      }
    build_order();
  }

  // Greedy static order: next is the variable with the most +1 links into
  // the ordered prefix, then most links of either sign into it, then the
  // largest degree. Points and lines interleave as the links dictate.
  void build_order() {
    int V = m + n;
    std::vector<int> plus_in(V, 0), any_in(V, 0);
    std::vector<char> used(V, 0);
    depth_of.assign(V, -1);
    for (int step = 0; step < V; ++step) {
      int best = -1;
      for (int v = 0; v < V; ++v) {
        if (used[v])
          continue;
        if (best < 0 || std::tuple(plus_in[v], any_in[v], links[v].size()) >
                            std::tuple(plus_in[best], any_in[best], links[best].size()))
          best = v;
      }
      used[best] = 1;
      depth_of[best] = step;
      order.push_back(best);
      for (const Link &l : links[best]) {
        ++any_in[l.other];
        if (l.plus)
          ++plus_in[l.other];
      }
    }
  }

  Configuration to_config(const std::vector<int> &val) const {
    Configuration C;
    C.q = q;
    for (int r = 0; r < m; ++r)
      C.points.push_back(ProjPoint{triples[val[r]]});
    for (int c = 0; c < n; ++c)
      C.lines.push_back(ProjLine{triples[val[m + c]]});
    return C;
  }
};

struct Shared {
  std::atomic<uint64_t> nodes{0}, forced{0};
  std::atomic<bool> budget_hit{false};
  std::atomic<int> best_task{1 << 30};
  uint64_t budget = 0;
};

enum class TaskResult { Exhausted, Found, Aborted };

class Worker {
public:
  Worker(const Problem &P, Shared &S) : P_(P), S_(S), V_(P.m + P.n) {
    dom_.assign(V_ + 1, std::vector<Bits>(V_));
    val_.assign(V_, -1);
  }

  TaskResult run(int task, int first_value) {
    task_ = task;
    std::vector<Bits> &d0 = dom_[0];
    for (int v = 0; v < V_; ++v)
      d0[v] = P_.all;
    d0[P_.order[0]] = Bits{};
    d0[P_.order[0]].set(first_value);
    TaskResult r = search(0);
    flush();
    return r;
  }

  std::vector<int> solution;

private:
  void flush() {
    S_.nodes += local_nodes_;
    S_.forced += local_forced_;
    local_nodes_ = local_forced_ = 0;
  }

  TaskResult search(int depth) {
    if (depth == V_) {
      solution = val_;
      return TaskResult::Found;
    }
    if (++local_nodes_ >= 4096) {
      flush();
      if (S_.nodes.load() > S_.budget) {
        S_.budget_hit = true;
        return TaskResult::Aborted;
      }
      if (S_.budget_hit.load() || S_.best_task.load() < task_)
        return TaskResult::Aborted;
    }
    const int var = P_.order[depth];
    const std::vector<Bits> &cur = dom_[depth];
    std::vector<Bits> &next = dom_[depth + 1];
    TaskResult out = TaskResult::Exhausted;
    cur[var].each([&](int x) {
      next = cur;
      bool dead = false;
      for (const Link &l : P_.links[var]) {
        if (P_.depth_of[l.other] <= depth)
          continue;
        Bits &d = next[l.other];
        bool was_single = d.single();
        d &= l.plus ? P_.on[x] : P_.off[x];
        if (d.empty()) {
          dead = true;
          break;
        }
        if (!was_single && d.single())
          ++local_forced_;
      }
      if (dead)
        return true;
      val_[var] = x;
      TaskResult r = search(depth + 1);
      if (r != TaskResult::Exhausted) {
        out = r;
        return false;
      }
      return true;
    });
    return out;
  }

  const Problem &P_;
  Shared &S_;
  int V_;
  int task_ = 0;
  std::vector<std::vector<Bits>> dom_;
  std::vector<int> val_;
  uint64_t local_nodes_ = 0, local_forced_ = 0;
};

SearchResult run_search(const Problem &P, const SearchOptions &opts) {
  auto t0 = std::chrono::steady_clock::now();
  SearchResult R;
  if (P.m + P.n == 0) {
    R.found = Configuration{P.q, {}, {}};
    return R;
  }
  std::vector<int> firsts;
  P.all.each([&](int x) {
    firsts.push_back(x);
    return !opts.fix_first;
  });

  Shared S;
  S.budget = opts.node_budget;
  const int T = static_cast<int>(firsts.size());
  std::vector<TaskResult> results(T, TaskResult::Aborted);
  std::vector<std::vector<int>> sols(T);
  std::atomic<int> next_task{0};

  auto work = [&]() {
    Worker W(P, S);
    for (;;) {
      int t = next_task++;
      if (t >= T || S.budget_hit.load() || S.best_task.load() < t)
        return;
      TaskResult r = W.run(t, firsts[t]);
      results[t] = r;
      if (r == TaskResult::Found) {
        sols[t] = W.solution;
        int cur = S.best_task.load();
        while (t < cur && !S.best_task.compare_exchange_weak(cur, t)) {
        }
      }
    }
  };
  int jobs = std::max(1, std::min(opts.jobs, T));
  if (jobs == 1) {
    work();
  } else {
    std::vector<std::thread> pool;
    for (int j = 0; j < jobs; ++j)
      pool.emplace_back(work);
    for (auto &th : pool)
      th.join();
  }

  R.exhausted = true;
  for (int t = 0; t < T; ++t) {
    if (results[t] == TaskResult::Found) {
      R.found = P.to_config(sols[t]);
      break;
    }
    if (results[t] == TaskResult::Aborted) {
      R.exhausted = false;
      break;
    }
  }
  R.stats.nodes_expanded = S.nodes.load();
  R.stats.propagations_forced = S.forced.load();
  R.stats.elapsed_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
  return R;
}

void add_stats(SearchStats &a, const SearchStats &b) {
  a.nodes_expanded += b.nodes_expanded;
  a.propagations_forced += b.propagations_forced;
  a.elapsed_ms += b.elapsed_ms;
}

} // namespace

SearchResult find_configuration(const IncidenceMatrix &M, int q, const SearchOptions &opts) {
  if (!GaloisField::supported(q))
    throw Error("UnsupportedField", "q = " + std::to_string(q) + " is not supported");
  Problem P(M, q, false);
  return run_search(P, opts);
}

Verdict check_theorem(const IncidenceMatrix &M, int q, const SearchOptions &opts) {
  if (!GaloisField::supported(q))
    throw Error("UnsupportedField", "q = " + std::to_string(q) + " is not supported");
  if (M.rows() == 0 || M.cols() == 0)
    throw Error("DimensionMismatch", "a theorem needs at least one point and one line");
  Verdict out;
  if (M.cell(0, 0) != Tri::PlusOne) {
    Problem P(M, q, true);
    SearchResult r = run_search(P, opts);
    add_stats(out.stats, r.stats);
    if (r.found) {
      out.outcome = Outcome::Counterexample;
      out.counterexample = r.found;
      return out;
    }
    if (!r.exhausted) {
      out.outcome = Outcome::ResourceExceeded;
      return out;
    }
  }
  SearchOptions rest = opts;
  rest.node_budget = opts.node_budget > out.stats.nodes_expanded ? opts.node_budget - out.stats.nodes_expanded : 0;
  Problem P(M, q, false);
  SearchResult r = run_search(P, rest);
  add_stats(out.stats, r.stats);
  if (r.found)
    out.outcome = Outcome::True;
  else if (r.exhausted)
    out.outcome = Outcome::Vacuous;
  else
    out.outcome = Outcome::ResourceExceeded;
  return out;
}

Elem primitive_element(const GaloisField &F) {
  const int q = F.order();
  for (int g = 1; g < q; ++g) {
    Elem x = 1;
    int ord = 0;
    do {
      x = F.mul(x, static_cast<Elem>(g));
      ++ord;
    } while (x != 1);
    if (ord == q - 1)
      return static_cast<Elem>(g);
  }
  throw Error("FieldAxiom", "no primitive element");
}

FieldCochain exponentiate_cochain(const Cochain &U, long n, const GaloisField &F) {
  const long q1 = F.order() - 1;
  if (n < 1 || q1 % n != 0)
    throw Error("BadModulus", std::to_string(n) + " does not divide " + std::to_string(q1));
  Elem g = primitive_element(F);
  FieldCochain out;
  for (auto [e, r] : U) {
    long k = ((r % n) + n) % n;
    out[e] = F.pow(g, static_cast<unsigned>(k * (q1 / n)));
  }
  return out;
}

namespace {

std::vector<ProjPoint> place_vertices(const GaloisField &F, int count) {
  std::vector<ProjPoint> affine;
  for (const Coords &c : projective_triples(F))
    if (c[2] != 0)
      affine.push_back(ProjPoint{c});
  std::vector<ProjPoint> chosen;
  std::vector<size_t> idx;
  size_t start = 0;
  // depth-first over increasing candidate indices
  while (static_cast<int>(chosen.size()) < count) {
    bool placed = false;
    for (size_t k = start; k < affine.size(); ++k) {
      const ProjPoint &P = affine[k];
      bool ok = true;
      for (size_t a = 0; a < chosen.size() && ok; ++a) {
        if (chosen[a] == P)
          ok = false;
        for (size_t b = a + 1; b < chosen.size() && ok; ++b)
          if (collinear(F, chosen[a], chosen[b], P))
            ok = false;
      }
      if (ok) {
        chosen.push_back(P);
        idx.push_back(k);
        start = 0;
        placed = true;
        break;
      }
    }
    if (placed)
      continue;
    if (chosen.empty())
      return {};
    start = idx.back() + 1;
    idx.pop_back();
    chosen.pop_back();
  }
  return chosen;
}

} // namespace

std::optional<Configuration> realize_from_cochain(const MarkedComplex &MC, const FieldCochain &U, int q) {
  if (!labeling_bijective(MC))
    throw Error("NotBijective", "p and l must be bijections onto 1..m and 1..n");
  GaloisField F(q);
  const DeltaComplex &K = MC.complex;
  const auto &E = K.edges();
  auto value = [&](int e) {
    auto it = U.find(e);
    if (it == U.end() || it->second == 0 || it->second >= q)
      throw Error("CochainViolatesF", "edge " + std::to_string(e + 1) + " has no nonzero field value");
    return it->second;
  };
  for (int f = 0; f < K.face_count(); ++f) {
    Elem prod = 1;
    for (const DirEdge &d : K.faces()[f].sides)
      prod = F.mul(prod, d.forward ? value(d.edge) : F.inv(value(d.edge)));
    if (f != MC.marked && prod != 1)
      throw Error("CochainViolatesF", "face " + std::to_string(f + 1) + " is not flat");
  }

  std::vector<ProjPoint> verts = place_vertices(F, K.vertex_count());
  if (static_cast<int>(verts.size()) != K.vertex_count())
    return std::nullopt;

  const int m = K.vertex_count() + K.edge_count();
  const int n = K.face_count() + K.edge_count();
  Configuration C;
  C.q = q;
  C.points.assign(m, ProjPoint{});
  C.lines.assign(n, ProjLine{});
  for (int v = 0; v < K.vertex_count(); ++v)
    C.points[MC.labels.p_vertex[v] - 1] = verts[v];
  for (int e = 0; e < K.edge_count(); ++e) {
    // affine coordinates of the endpoints (placed points are off z = 0)
    auto affine = [&](const Coords &c) {
      Elem iz = F.inv(c[2]);
      return Coords{F.mul(c[0], iz), F.mul(c[1], iz), 1};
    };
    const Coords a = affine(verts[E[e].tail].c), b = affine(verts[E[e].head].c);
    auto line = join(F, verts[E[e].tail], verts[E[e].head]);
    if (!line)
      throw Error("DegenerateFace", "edge " + std::to_string(e + 1) + " joins a vertex to itself");
    C.lines[MC.labels.l_edge[e] - 1] = *line;
    Elem u = value(e);
    Coords x;
    if (u == 1) {
      x = {F.sub(a[0], b[0]), F.sub(a[1], b[1]), 0};
    } else {
      Elem s = F.inv(F.sub(1, u));
      x = {F.mul(s, F.sub(a[0], F.mul(u, b[0]))), F.mul(s, F.sub(a[1], F.mul(u, b[1]))), 1};
    }
    C.points[MC.labels.p_edge[e] - 1] = make_point(F, x);
  }
  for (int f = 0; f < K.face_count(); ++f) {
    std::vector<ProjPoint> pts;
    for (const DirEdge &d : K.faces()[f].sides) {
      int lab = MC.labels.p_edge[d.edge];
      if (f == MC.marked && lab == 1)
        continue;
      pts.push_back(C.points[lab - 1]);
    }
    std::optional<ProjLine> L;
    for (size_t a = 0; a < pts.size() && !L; ++a)
      for (size_t b = a + 1; b < pts.size() && !L; ++b)
        L = join(F, pts[a], pts[b]);
    if (!L)
      throw Error("DegenerateFace", "face " + std::to_string(f + 1) + " has coincident edge points");
    C.lines[MC.labels.l_face[f] - 1] = *L;
  }
  return C;
}

} // namespace tiling

#include "heatgraph/families.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace heatgraph {

namespace {

void check_positive(double v, const char* what, long long at) {
  if (!(v > 0) || !std::isfinite(v)) {
    throw std::domain_error(std::string(what) + " not positive at " + std::to_string(at));
  }
}

}  // namespace

GraphOracle birth_death(std::function<double(int)> b_edge, std::function<double(int)> m,
                        std::string name) {
  auto neighbors = [b_edge](VertexId x) {
    const auto r = static_cast<std::int64_t>(x.value);
    std::vector<Neighbor> out;
    if (r > 0) {
      const double w = b_edge(static_cast<int>(r - 1));
      check_positive(w, "b", r - 1);
      out.push_back({VertexId{x.value - 1}, w});
    }
    const double w = b_edge(static_cast<int>(r));
    check_positive(w, "b", r);
    out.push_back({VertexId{x.value + 1}, w});
    return out;
  };
  auto measure = [m](VertexId x) {
    const double v = m(static_cast<int>(x.value));
    check_positive(v, "m", static_cast<long long>(x.value));
    return v;
  };
  return GraphOracle(std::move(name), VertexId{0}, neighbors, measure);
}

GraphOracle birth_death(const exprlang::Expr& b_edge, const exprlang::Expr& m) {
  return birth_death([b_edge](int r) { return b_edge.eval(r); },
                     [m](int r) { return m.eval(r); },
                     "birth_death(b=" + b_edge.print() + ",m=" + m.print() + ")");
}

GraphOracle cycle(int n) {
  return cycle(n, [](int) { return 1.0; }, [](int) { return 1.0; });
}

GraphOracle cycle(int n, std::function<double(int)> b_edge, std::function<double(int)> m) {
  if (n < 3) throw std::invalid_argument("cycle: n must be >= 3");
  auto neighbors = [n, b_edge](VertexId x) {
    const int j = static_cast<int>(x.value);
    if (j >= n) throw std::out_of_range("cycle: vertex out of range");
    const int prev = (j + n - 1) % n;
    const int next = (j + 1) % n;
    std::vector<Neighbor> out;
    out.push_back({VertexId{static_cast<std::uint64_t>(prev)}, b_edge(prev)});
    out.push_back({VertexId{static_cast<std::uint64_t>(next)}, b_edge(j)});
    return out;
  };
  auto measure = [n, m](VertexId x) {
    const int j = static_cast<int>(x.value);
    if (j >= n) throw std::out_of_range("cycle: vertex out of range");
    const double v = m(j);
    check_positive(v, "m", j);
    return v;
  };
  return GraphOracle("cycle" + std::to_string(n), VertexId{0}, neighbors, measure);
}

GraphOracle line() {
  return line([](int) { return 1.0; }, "line");
}

GraphOracle line(std::function<double(int)> m_radial, std::string name) {
  auto neighbors = [](VertexId x) {
    const std::int64_t z = zigzag_decode(x.value);
    return std::vector<Neighbor>{{VertexId{zigzag_encode(z - 1)}, 1.0},
                                 {VertexId{zigzag_encode(z + 1)}, 1.0}};
  };
  auto measure = [m_radial](VertexId x) {
    const std::int64_t z = zigzag_decode(x.value);
    const double v = m_radial(static_cast<int>(z < 0 ? -z : z));
    check_positive(v, "m", z);
    return v;
  };
  return GraphOracle(std::move(name), VertexId{zigzag_encode(0)}, neighbors, measure);
}

GraphOracle line_periodic(int k, std::function<double(int)> b_edge,
                          std::function<double(int)> m) {
  if (k < 1) throw std::invalid_argument("line_periodic: k must be >= 1");
  auto mod = [k](std::int64_t z) { return static_cast<int>(((z % k) + k) % k); };
  auto neighbors = [b_edge, mod](VertexId x) {
    const std::int64_t z = zigzag_decode(x.value);
    // edge (z, z+1) carries the weight of base edge (z mod k, z+1 mod k)
    return std::vector<Neighbor>{{VertexId{zigzag_encode(z - 1)}, b_edge(mod(z - 1))},
                                 {VertexId{zigzag_encode(z + 1)}, b_edge(mod(z))}};
  };
  auto measure = [m, mod](VertexId x) { return m(mod(zigzag_decode(x.value))); };
  return GraphOracle("line_periodic" + std::to_string(k), VertexId{zigzag_encode(0)},
                     neighbors, measure);
}

GraphOracle lattice(int dims) {
  if (dims < 1) throw std::invalid_argument("lattice: dims must be >= 1");
  if (dims == 1) return line();
  const auto arity = static_cast<std::size_t>(dims);
  auto neighbors = [arity](VertexId x) {
    auto coords = tuple_decode(x.value, arity);
    std::vector<Neighbor> out;
    out.reserve(2 * arity);
    for (std::size_t i = 0; i < arity; ++i) {
      const std::int64_t z = zigzag_decode(coords[i]);
      for (const std::int64_t nz : {z - 1, z + 1}) {
        auto c = coords;
        c[i] = zigzag_encode(nz);
        out.push_back({VertexId{tuple_encode(c)}, 1.0});
      }
    }
    return out;
  };
  auto measure = [](VertexId) { return 1.0; };
  std::vector<std::uint64_t> origin(arity, zigzag_encode(0));
  return GraphOracle("Z^" + std::to_string(dims), VertexId{tuple_encode(origin)},
                     neighbors, measure);
}

GraphOracle product(std::vector<GraphOracle> factors, std::string name) {
  if (factors.size() < 2) throw std::invalid_argument("product: need >= 2 factors");
  auto fs = std::make_shared<std::vector<GraphOracle>>(std::move(factors));
  const std::size_t arity = fs->size();
  auto measure = [fs, arity](VertexId x) {
    auto coords = tuple_decode(x.value, arity);
    double m = 1.0;
    for (std::size_t i = 0; i < arity; ++i) m *= (*fs)[i].measure(VertexId{coords[i]});
    return m;
  };
  auto neighbors = [fs, arity](VertexId x) {
    auto coords = tuple_decode(x.value, arity);
    std::vector<double> ms(arity);
    for (std::size_t i = 0; i < arity; ++i) ms[i] = (*fs)[i].measure(VertexId{coords[i]});
    std::vector<Neighbor> out;
    for (std::size_t i = 0; i < arity; ++i) {
      double other = 1.0;
      for (std::size_t j = 0; j < arity; ++j) {
        if (j != i) other *= ms[j];
      }
      for (const auto& n : (*fs)[i].neighbors(VertexId{coords[i]})) {
        auto c = coords;
        c[i] = n.to.value;
        out.push_back({VertexId{tuple_encode(c)}, n.weight * other});
      }
    }
    return out;
  };
  std::vector<std::uint64_t> roots(arity);
  for (std::size_t i = 0; i < arity; ++i) roots[i] = (*fs)[i].root().value;
  return GraphOracle(std::move(name), VertexId{tuple_encode(roots)}, neighbors, measure);
}

std::vector<std::uint64_t> product_coordinates(VertexId v, std::size_t arity) {
  return tuple_decode(v.value, arity);
}

// Tree vertices are encoded by their path from the root: the root is id 0 and
// a vertex with child-path (c_1,...,c_k), c_i in {1..degree}, has id
// sum c_i * base^{i-1} in base (degree+1). Parent = strip the top digit.
GraphOracle regular_tree(int degree) {
  if (degree < 2) throw std::invalid_argument("regular_tree: degree must be >= 2");
  const std::uint64_t base = static_cast<std::uint64_t>(degree) + 1;
  auto neighbors = [degree, base](VertexId x) {
    std::vector<Neighbor> out;
    // digits of x in the given base describe the path; root has no digits
    std::uint64_t v = x.value;
    if (v != 0) {
      // parent: remove the most significant digit
      std::uint64_t msd_place = 1;
      while (v / msd_place >= base) msd_place *= base;
      out.push_back({VertexId{v - (v / msd_place) * msd_place}, 1.0});
    }
    const int children = (v == 0) ? degree : degree - 1;
    std::uint64_t place = 1;
    std::uint64_t w = v;
    while (w != 0) {
      place *= base;
      w /= base;
    }
    for (int c = 1; c <= children; ++c) {
      out.push_back({VertexId{v + static_cast<std::uint64_t>(c) * place}, 1.0});
    }
    return out;
  };
  return GraphOracle("tree" + std::to_string(degree), VertexId{0}, neighbors,
                     [](VertexId) { return 1.0; });
}

// ---------------------------------------------------------------------------

double BirthDeathChain::deg_plus(int r) const {
  if (r < 0 || r >= static_cast<int>(m.size())) throw std::out_of_range("deg_plus");
  if (r >= static_cast<int>(b.size())) return 0.0;
  return b[r] / m[r];
}

double BirthDeathChain::deg_minus(int r) const {
  if (r < 0 || r >= static_cast<int>(m.size())) throw std::out_of_range("deg_minus");
  if (r == 0) return 0.0;
  return b[r - 1] / m[r];
}

GraphOracle BirthDeathChain::oracle() const {
  auto self = std::make_shared<BirthDeathChain>(*this);
  auto neighbors = [self](VertexId x) {
    const auto r = static_cast<std::size_t>(x.value);
    if (r >= self->m.size()) throw std::out_of_range("BirthDeathChain: vertex out of range");
    std::vector<Neighbor> out;
    if (r > 0) out.push_back({VertexId{x.value - 1}, self->b[r - 1]});
    if (r < self->b.size()) out.push_back({VertexId{x.value + 1}, self->b[r]});
    return out;
  };
  auto measure = [self](VertexId x) {
    const auto r = static_cast<std::size_t>(x.value);
    if (r >= self->m.size()) throw std::out_of_range("BirthDeathChain: vertex out of range");
    return self->m[r];
  };
  return GraphOracle("bd_chain", VertexId{0}, neighbors, measure);
}

}  // namespace heatgraph

#include <doctest.h>

#include <cmath>
#include <map>
#include <set>
#include <utility>

#include "cgsat/basis.hpp"
#include "cgsat/errors.hpp"
#include "cgsat/mesh.hpp"

using namespace cgsat;

namespace {

// counts distinct high-order node positions by hashing rounded coordinates
std::size_t distinct_nodes(const Mesh& mesh) {
  std::set<std::pair<long long, long long>> seen;
  for (std::size_t k = 0; k < mesh.num_elements(); ++k) {
    for (std::size_t d : mesh.element_dofs(k)) {
      const Vec2 c = mesh.dof_coordinates()[d];
      seen.insert({std::llround(c.x * 1e9), std::llround(c.y * 1e9)});
    }
  }
  return seen.size();
}

void check_invariants(const Mesh& mesh) {
  Vec2 closure{};
  for (const auto& f : mesh.boundary_faces()) {
    CHECK(std::abs(norm(f.normal) - 1.0) <= 1e-13);
    closure += f.length * f.normal;
  }
  CHECK(norm(closure) <= 1e-12);
  for (std::size_t k = 0; k < mesh.num_elements(); ++k) CHECK(mesh.geometry(k).area() > 0.0);
}

}  // namespace

TEST_CASE("square mesh counts") {
  const auto m11 = generate_square_mesh(1, 1);
  CHECK(m11.num_elements() == 2);
  CHECK(m11.num_dofs() == 4);
  const auto m21 = generate_square_mesh(2, 1);
  CHECK(m21.num_elements() == 8);
  CHECK(m21.num_dofs() == 9);
  for (int p = 1; p <= 4; ++p) {
    const auto m = generate_square_mesh(2, p);
    CHECK(m.num_dofs() == static_cast<std::size_t>((2 * p + 1) * (2 * p + 1)));
    CHECK(distinct_nodes(m) == m.num_dofs());
    check_invariants(m);
  }
}

TEST_CASE("square mesh rejects bad input") {
  CHECK_THROWS_AS(generate_square_mesh(2, 0), ConfigError);
  CHECK_THROWS_AS(generate_square_mesh(2, 5), ConfigError);
  CHECK_THROWS(generate_square_mesh(0, 1));
}

TEST_CASE("square boundary normals are axis aligned") {
  const auto m = generate_square_mesh(3, 2);
  CHECK(m.boundary_faces().size() == 12);
  for (const auto& f : m.boundary_faces()) {
    const bool axis = (std::abs(std::abs(f.normal.x) - 1.0) < 1e-14 && std::abs(f.normal.y) < 1e-14) ||
                      (std::abs(std::abs(f.normal.y) - 1.0) < 1e-14 && std::abs(f.normal.x) < 1e-14);
    CHECK(axis);
  }
}

TEST_CASE("shared edges carry the same dofs in reversed order") {
  for (int p = 1; p <= 4; ++p) {
    const auto m = generate_disk_mesh(3, p);
    check_invariants(m);
    CHECK(distinct_nodes(m) == m.num_dofs());
    // edge (a,b) -> element dofs along the edge, walking from local vertex e to e+1
    std::map<std::pair<std::size_t, std::size_t>, std::vector<std::size_t>> seen;
    const auto layout = reference_multi_indices(p);
    for (std::size_t k = 0; k < m.num_elements(); ++k) {
      const auto tri = m.triangles()[k];
      const auto dofs = m.element_dofs(k);
      for (int e = 0; e < 3; ++e) {
        const auto a = tri[static_cast<std::size_t>(e)];
        const auto b = tri[static_cast<std::size_t>((e + 1) % 3)];
        std::vector<std::size_t> along;
        for (int t = 0; t <= p; ++t) {
          MultiIndex mi{};
          mi[static_cast<std::size_t>(e)] = p - t;
          mi[static_cast<std::size_t>((e + 1) % 3)] = t;
          for (std::size_t s = 0; s < layout.size(); ++s) {
            if (layout[s] == mi) along.push_back(dofs[s]);
          }
        }
        REQUIRE(along.size() == static_cast<std::size_t>(p + 1));
        if (const auto it = seen.find({b, a}); it != seen.end()) {
          std::vector<std::size_t> reversed(along.rbegin(), along.rend());
          CHECK(it->second == reversed);
        }
        seen[{a, b}] = along;
      }
    }
  }
}

TEST_CASE("disk mesh boundary is near the unit circle and normals point outward") {
  const auto m = generate_disk_mesh(8, 2);
  CHECK(m.num_elements() == 6 * 8 * 8);
  double hmax = 0.0;
  for (const auto& f : m.boundary_faces()) hmax = std::max(hmax, f.length);
  for (const auto& f : m.boundary_faces()) {
    const Vec2 mid = m.geometry(f.element).edge_midpoint(f.local_edge);
    CHECK(dot(f.normal, mid) > 0.0);
    CHECK(std::abs(norm(mid) - 1.0) <= 2 * hmax);
  }
  CHECK(std::abs(m.area() - M_PI) < 0.05);
}

TEST_CASE("import reproduces the one-cell square") {
  const char* doc =
      "# unit square\n"
      "4 2\n"
      "0 0\n1 0\n1 1\n0 1\n"
      "0 1 2\n0 2 3\n";
  const auto m = import_mesh(doc, 1);
  const auto ref = generate_square_mesh(1, 1);
  CHECK(m.num_dofs() == ref.num_dofs());
  CHECK(m.num_elements() == ref.num_elements());
  CHECK(m.area() == doctest::Approx(1.0).epsilon(1e-15));
  check_invariants(m);
}

TEST_CASE("export and import round trip") {
  const auto m = generate_disk_mesh(4, 1);
  const auto back = import_mesh(export_mesh(m), 3);
  CHECK(back.num_elements() == m.num_elements());
  CHECK(back.num_vertices() == m.num_vertices());
  CHECK(back.area() == doctest::Approx(m.area()).epsilon(1e-14));
}

TEST_CASE("import errors") {
  SUBCASE("vertex index out of range") {
    CHECK_THROWS_AS(import_mesh("3 1\n0 0\n1 0\n0 1\n0 1 3\n", 1), ValidationError);
  }
  SUBCASE("malformed line reports its number") {
    try {
      import_mesh("3 1\n0 0\n1 zero\n0 1\n0 1 2\n", 1);
      FAIL("expected a parse error");
    } catch (const ParseError& e) {
      CHECK(e.line() == 3);
    }
  }
  SUBCASE("clockwise triangle") { CHECK_THROWS(import_mesh("3 1\n0 0\n0 1\n1 0\n0 1 2\n", 1)); }
  SUBCASE("edge shared by three triangles names the edge") {
    const char* doc = "5 3\n0 0\n1 0\n0.5 1\n0.5 -1\n0.5 2\n0 1 2\n1 0 3\n0 1 4\n";
    try {
      import_mesh(doc, 1);
      FAIL("expected a validation error");
    } catch (const ValidationError& e) {
      CHECK(std::string(e.what()).find("(0, 1)") != std::string::npos);
    }
  }
}

TEST_CASE("dof coordinates agree from both sides of an edge") {
  const auto m = generate_square_mesh(3, 3);
  const auto layout = reference_multi_indices(3);
  for (std::size_t k = 0; k < m.num_elements(); ++k) {
    const auto dofs = m.element_dofs(k);
    for (std::size_t s = 0; s < dofs.size(); ++s) {
      Barycentric l{};
      for (int i = 0; i < 3; ++i) l[static_cast<std::size_t>(i)] = layout[s][static_cast<std::size_t>(i)] / 3.0;
      CHECK(norm(m.geometry(k).map(l) - m.dof_coordinates()[dofs[s]]) <= 1e-12);
    }
  }
}

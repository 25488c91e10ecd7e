#include <doctest.h>

#include <vector>

#include "netjunction/errors.hpp"
#include "netjunction/mesh.hpp"
#include "netjunction/network.hpp"

using namespace netjunction;

namespace {

Network net_with_lengths(double in_len, double out_len) {
    std::vector<Arc> arcs{{ArcDirection::incoming, in_len, FluxModel::quadratic(1.0, 1.0)},
                          {ArcDirection::outgoing, out_len, FluxModel::quadratic(1.0, 1.0)}};
    return Network(std::move(arcs));
}

}  // namespace

TEST_CASE("with_dx divides commensurate arcs") {
    Network net = net_with_lengths(0.6, 0.6);
    Mesh mesh = Mesh::with_dx(net, 0.01);
    CHECK(mesh.dx() == 0.01);
    CHECK(mesh.cells(0) == 60);
    CHECK(mesh.cells(1) == 60);

    Mesh fine = Mesh::with_dx(net_with_lengths(0.5, 0.5), 1e-4);
    CHECK(fine.cells(0) == 5000);
}

TEST_CASE("with_dx supports mixed arc lengths") {
    Network net = net_with_lengths(0.5, 0.25);
    Mesh mesh = Mesh::with_dx(net, 0.05);
    CHECK(mesh.cells(0) == 10);
    CHECK(mesh.cells(1) == 5);
}

TEST_CASE("non-commensurate or degenerate meshes are rejected") {
    Network net = net_with_lengths(0.6, 0.6);
    CHECK_THROWS_AS(Mesh::with_dx(net, 0.007), config_error);
    CHECK_THROWS_AS(Mesh::with_dx(net, 0.6), config_error);  // one cell per arc
    CHECK_THROWS_AS(Mesh::with_dx(net, -0.01), config_error);
    CHECK_NOTHROW(Mesh::with_dx(net, 0.3));
}

TEST_CASE("with_cells_per_arc derives dx from equal lengths") {
    Network net = net_with_lengths(0.5, 0.5);
    Mesh mesh = Mesh::with_cells_per_arc(net, 5000);
    CHECK(mesh.dx() == doctest::Approx(1e-4).epsilon(1e-12));
    CHECK(mesh.cells(0) == 5000);
    CHECK_THROWS_AS(Mesh::with_cells_per_arc(net, 1), config_error);
    CHECK_THROWS_AS(Mesh::with_cells_per_arc(net_with_lengths(0.5, 0.25), 10), config_error);
}

TEST_CASE("cell geometry puts the junction at interface zero") {
    Network net = net_with_lengths(0.6, 0.6);
    Mesh mesh = Mesh::with_dx(net, 0.01);
    // Incoming arc: cell 0 starts at the outer end, the last cell touches 0.
    CHECK(mesh.cell_left_edge(net, 0, 0) == doctest::Approx(-0.6).epsilon(1e-14));
    CHECK(mesh.cell_center(net, 0, 0) == doctest::Approx(-0.595).epsilon(1e-12));
    CHECK(mesh.cell_center(net, 0, 59) == doctest::Approx(-0.005).epsilon(1e-12));
    // Outgoing arc: cell 0 touches the junction.
    CHECK(mesh.cell_left_edge(net, 1, 0) == 0.0);
    CHECK(mesh.cell_center(net, 1, 0) == doctest::Approx(0.005).epsilon(1e-12));
    CHECK(mesh.cell_center(net, 1, 59) == doctest::Approx(0.595).epsilon(1e-12));
}

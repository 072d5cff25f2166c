#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <map>
#include <set>

#include "diskspan/arrangement.hpp"
#include "diskspan/generators.hpp"
#include "diskspan/union_find.hpp"
#include "oracle_helpers.hpp"

using namespace diskspan;

namespace {

Disk disk(double x, double y, double r, int id) { return {{x, y}, r, id}; }

// Euler relation for a subdivision induced by circles: with V vertices,
// E arcs, F faces, z vertex-free circles and C connected components of
// the crossing graph, F = E - V - z + 1 + C.
void check_euler(const Arrangement& arr) {
    const std::size_t v = arr.vertices.size();
    const std::size_t e = arr.arcs.size();
    const std::size_t f = arr.faces.size();
    std::size_t z = 0;
    for (const Arc& a : arr.arcs)
        if (a.v_begin < 0) ++z;
    UnionFind uf(arr.disks.size());
    for (std::size_t i = 0; i < arr.disks.size(); ++i)
        for (std::size_t j = i + 1; j < arr.disks.size(); ++j)
            if (circles_cross(arr.disks[i], arr.disks[j])) uf.unite(i, j);
    const std::size_t c = uf.components();
    CHECK(f == e - v - z + 1 + c);
}

void check_structure(const Arrangement& arr) {
    // Exactly one unbounded face, depth 0.
    std::size_t unbounded = 0;
    for (const Face& f : arr.faces) {
        if (f.unbounded) {
            ++unbounded;
            CHECK(f.depth == 0);
            CHECK(f.id == arr.unbounded_face);
        }
    }
    CHECK(unbounded == 1);

    for (const Face& f : arr.faces) {
        if (f.hole) continue;
        // Stored depth matches the brute-force count at the representative.
        CHECK(f.depth == oracle::depth_loop(f.representative, arr.disks));
        CHECK(f.depth == static_cast<int>(f.cover.size()));
        // Adjacency is symmetric.
        for (int g : f.adjacent) {
            const auto& back = arr.faces[g].adjacent;
            CHECK(std::find(back.begin(), back.end(), f.id) != back.end());
        }
    }

    // Faces flanking an arc differ in depth by exactly one.
    for (std::size_t a = 0; a < arr.arcs.size(); ++a) {
        const auto& [f1, f2] = arr.arc_faces[a];
        if (arr.faces[f1].hole || arr.faces[f2].hole) continue;
        CHECK(std::abs(arr.faces[f1].depth - arr.faces[f2].depth) == 1);
    }

    check_euler(arr);
}

}  // namespace

TEST_CASE("no disks: a single unbounded face") {
    const Arrangement arr = build_arrangement({});
    CHECK(arr.faces.size() == 1);
    CHECK(arr.faces[0].unbounded);
}

TEST_CASE("one disk: two faces, no vertices, one full-circle arc") {
    const Arrangement arr = build_arrangement({disk(0, 0, 1, 0)});
    CHECK(arr.vertices.empty());
    REQUIRE(arr.arcs.size() == 1);
    CHECK(arr.arcs[0].v_begin == -1);
    REQUIRE(arr.faces.size() == 2);
    std::vector<int> depths{arr.faces[0].depth, arr.faces[1].depth};
    std::sort(depths.begin(), depths.end());
    CHECK(depths == std::vector<int>{0, 1});
    check_structure(arr);
}

TEST_CASE("two crossing unit disks: the classic lens figure") {
    const Arrangement arr =
        build_arrangement({disk(0, 0, 1, 0), disk(1, 0, 1, 1)});
    CHECK(arr.vertices.size() == 2);
    CHECK(arr.arcs.size() == 4);
    REQUIRE(arr.faces.size() == 4);
    std::vector<int> depths;
    for (const Face& f : arr.faces) depths.push_back(f.depth);
    std::sort(depths.begin(), depths.end());
    CHECK(depths == std::vector<int>{0, 1, 1, 2});
    check_structure(arr);

    // The lens face covers both disks; the moons exactly one each.
    for (const Face& f : arr.faces) {
        if (f.depth == 2) CHECK(f.cover == std::vector<int>{0, 1});
        // The unbounded face shares no arc with the lens.
        if (f.unbounded)
            CHECK(std::find(f.adjacent.begin(), f.adjacent.end(),
                            face_at({0.5, 0.0}, arr)) == f.adjacent.end());
    }

    CHECK(face_at({50.0, 40.0}, arr) == arr.unbounded_face);
    CHECK(arr.faces[face_at({0.5, 0.0}, arr)].depth == 2);
    CHECK_THROWS_AS(face_at({1.0, 0.0}, arr), std::invalid_argument);  // on circle 0
}

TEST_CASE("nested disks: annulus carries a hole boundary") {
    const Arrangement arr =
        build_arrangement({disk(0, 0, 2, 0), disk(0.1, 0, 0.5, 1)});
    REQUIRE(arr.faces.size() == 3);
    std::vector<int> depths;
    for (const Face& f : arr.faces) depths.push_back(f.depth);
    std::sort(depths.begin(), depths.end());
    CHECK(depths == std::vector<int>{0, 1, 2});
    check_structure(arr);
    // The annulus face is bounded by both circles.
    for (const Face& f : arr.faces)
        if (f.depth == 1) CHECK(f.arcs.size() == 2);
    CHECK(arr.faces[face_at({0.1, 0.0}, arr)].depth == 2);
    CHECK(arr.faces[face_at({1.5, 0.0}, arr)].depth == 1);
}

TEST_CASE("two disjoint disks share the unbounded face") {
    const Arrangement arr =
        build_arrangement({disk(0, 0, 1, 0), disk(5, 0, 1, 1)});
    REQUIRE(arr.faces.size() == 3);
    check_structure(arr);
    const auto& unb = arr.faces[arr.unbounded_face];
    CHECK(unb.adjacent.size() == 2);
}

TEST_CASE("random instances: depth oracle, adjacency, Euler, face count") {
    for (std::uint64_t seed = 1; seed <= 6; ++seed) {
        GeneratorOptions opts;
        opts.r_min = 0.1;
        opts.r_max = 0.35;  // dense enough for nontrivial nesting
        const std::size_t n = 12 + 3 * seed;
        const DiskInstance inst =
            generate_instance("uniform_unit", n, 1000 + seed, opts);
        const Arrangement arr = build_arrangement(inst.disks);
        check_structure(arr);
        CHECK(arr.faces.size() <= n * n - n + 2);

        // Representatives locate back to their own faces.
        for (const Face& f : arr.faces)
            CHECK(face_at(f.representative, arr) == f.id);
    }
}

TEST_CASE("face_at agrees with covering sets on random queries") {
    GeneratorOptions opts;
    opts.r_min = 0.1;
    opts.r_max = 0.3;
    const DiskInstance inst = generate_instance("uniform_unit", 25, 77, opts);
    const Arrangement arr = build_arrangement(inst.disks);
    Rng rng(5);
    int located = 0;
    for (int trial = 0; trial < 300; ++trial) {
        const Point p{rng.uniform_double(-0.1, 1.1), rng.uniform_double(-0.1, 1.1)};
        int face;
        try {
            face = face_at(p, arr);
        } catch (const std::invalid_argument&) {
            continue;  // boundary-proximate query
        }
        CHECK(arr.faces[face].cover == covering_set(p, inst.disks));
        ++located;
    }
    CHECK(located > 250);
}

TEST_CASE("capped arrangement keeps shallow faces exactly") {
    for (std::uint64_t seed : {3ULL, 4ULL}) {
        GeneratorOptions opts;
        opts.r_min = 0.12;
        opts.r_max = 0.4;
        const DiskInstance inst = generate_instance("uniform_unit", 24, seed, opts);
        const Arrangement full = build_arrangement(inst.disks);
        for (int cap : {1, 2, 4}) {
            const Arrangement capped = build_arrangement(inst.disks, cap);

            // Same multiset of (depth, cover) among depth <= cap faces.
            using Key = std::pair<int, std::vector<int>>;
            std::multiset<Key> want, got;
            for (const Face& f : full.faces)
                if (!f.unbounded && f.depth <= cap && f.depth > 0)
                    want.insert({f.depth, f.cover});
            for (const Face& f : capped.faces)
                if (!f.unbounded && !f.hole && f.depth > 0)
                    got.insert({f.depth, f.cover});
            CHECK(want == got);

            // Depth correctness and adjacency symmetry survive capping.
            for (const Face& f : capped.faces) {
                if (f.hole) continue;
                CHECK(f.depth == oracle::depth_loop(f.representative, capped.disks));
                CHECK(f.depth <= cap);
            }

            // Valid-valid adjacency pairs match the full arrangement's
            // adjacency among depth <= cap faces.
            auto adjacency_keys = [cap](const Arrangement& arr) {
                std::multiset<std::pair<Key, Key>> keys;
                for (const auto& [f1, f2] : arr.arc_faces) {
                    const Face& a = arr.faces[f1];
                    const Face& b = arr.faces[f2];
                    if (a.hole || b.hole || a.depth > cap || b.depth > cap) continue;
                    Key ka{a.depth, a.cover}, kb{b.depth, b.cover};
                    if (kb < ka) std::swap(ka, kb);
                    keys.insert({ka, kb});
                }
                return keys;
            };
            CHECK(adjacency_keys(full) == adjacency_keys(capped));
        }
    }
}

TEST_CASE("deep stack collapses into hole placeholders under a cap") {
    const DiskInstance inst = generate_instance("stacked", 40, 21);
    const Arrangement capped = build_arrangement(inst.disks, 5);
    bool has_hole = false;
    for (const Face& f : capped.faces) {
        if (f.hole) has_hole = true;
        else CHECK(f.depth <= 5);
    }
    CHECK(has_hole);

    // The full arrangement agrees on the shallow faces.
    const Arrangement full = build_arrangement(inst.disks);
    std::multiset<std::pair<int, std::vector<int>>> want, got;
    for (const Face& f : full.faces)
        if (!f.unbounded && f.depth > 0 && f.depth <= 5)
            want.insert({f.depth, f.cover});
    for (const Face& f : capped.faces)
        if (!f.unbounded && !f.hole && f.depth > 0)
            got.insert({f.depth, f.cover});
    CHECK(want == got);
}

TEST_CASE("a shallow pocket behind a deep moat survives capping") {
    // One big disk plus a ring of ten disks forming a depth>=2 moat
    // around a depth-1 pocket at the center. At cap 1 the whole moat
    // collapses into hole placeholders, yet the pocket must appear with
    // its exact cover, unconnected to the unbounded face.
    std::vector<Disk> disks;
    disks.push_back(disk(0.5, 0.5, 0.45, 0));
    for (int k = 0; k < 10; ++k) {
        const double ang = 0.6283185307179586 * k + 0.013 * k;  // break symmetry
        disks.push_back(disk(0.5 + 0.22 * std::cos(ang),
                             0.5 + 0.22 * std::sin(ang), 0.12 + 0.001 * k,
                             k + 1));
    }
    const DiskInstance inst = make_instance(std::move(disks), 1, "fixture");
    REQUIRE(validate_general_position(inst).ok);

    const Arrangement capped = build_arrangement(inst.disks, 1);
    int pocket = -1;
    bool saw_hole = false;
    for (const Face& f : capped.faces) {
        if (f.hole) saw_hole = true;
        if (!f.hole && !f.unbounded && f.depth == 1 &&
            f.cover == std::vector<int>{0} &&
            dist(f.representative, {0.5, 0.5}) < 0.1)
            pocket = f.id;
    }
    REQUIRE(saw_hole);
    REQUIRE(pocket >= 0);
    // The pocket touches only moat placeholders, never the outside.
    for (int g : capped.faces[pocket].adjacent) {
        CHECK(capped.faces[g].hole);
        CHECK_FALSE(capped.faces[g].unbounded);
    }
    CHECK(face_at({0.5, 0.5}, capped) == pocket);

    // The full arrangement agrees on the pocket's identity.
    const Arrangement full = build_arrangement(inst.disks);
    const int full_pocket = face_at({0.5, 0.5}, full);
    CHECK(full.faces[full_pocket].depth == 1);
    CHECK(full.faces[full_pocket].cover == std::vector<int>{0});
}

TEST_CASE("structure holds across generators (soak)") {
    for (const char* generator : {"uniform_unit", "clustered", "corridor"}) {
        for (std::uint64_t seed : {100ULL, 200ULL}) {
            const DiskInstance inst = generate_instance(generator, 28, seed);
            check_structure(build_arrangement(inst.disks));
        }
    }
    check_structure(build_arrangement(generate_instance("stacked", 35, 5).disks));
}

TEST_CASE("general-position violations abort construction") {
    CHECK_THROWS_AS(build_arrangement({disk(0, 0, 1, 0), disk(0, 0, 1, 1)}),
                    std::runtime_error);
    CHECK_THROWS_AS(build_arrangement({disk(0, 0, 1, 0), disk(2, 0, 1, 1)}),
                    std::runtime_error);
}
